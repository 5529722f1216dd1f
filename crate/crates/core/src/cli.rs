//! The `bohl` command-line front end.
//!
//! Expression arguments are either expression text or `@FILE`, where the
//! file holds expression text or a function in JSON. Results go to standard
//! output as JSON, diagnostics to standard error. Exit status is 0 on
//! success, 1 for domain errors (bad expressions, non-units, unbound
//! generators, unreadable files) and 2 for usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bohl::{BohlFunction, SymbolicBohl};
use crate::error::Error;
use crate::json;
use crate::laplace::{inverse_laplace, laplace, partial_fractions_symbolic, PartialFractions};
use crate::numerics::{self, BindingEnv, DEFAULT_DENSITY};
use crate::syntax::parse_function;
use crate::witness::{bezout_verify, bsr_witness, bsr_witness_inverse, tsr_witness, WitnessSpec};

/// Environment variable selecting default generator bindings: `primes`
/// (the default) or `none`.
pub const BINDINGS_VAR: &str = "BOHL_DEFAULT_BINDINGS";

#[derive(Debug, Parser)]
#[command(name = "bohl", version, about = "Exact arithmetic for Bohl functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ArithOp {
    Add,
    Mul,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum WitnessKind {
    Bsr,
    Tsr,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate at a point.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        /// Generator binding `name=value`; repeatable.
        #[arg(long = "bind", value_parser = parse_binding)]
        bind: Vec<(String, f64)>,
    },
    /// Sum or product of two functions.
    Arith {
        op: ArithOp,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Derivative in t.
    Diff {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Partial-fraction form of the Laplace transform.
    Laplace {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Inverse transform of partial fractions or a factored rational function.
    Invlaplace { file: PathBuf },
    /// Almost-periodic projection.
    Psi {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    IsUnit {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    IsBounded {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Unimodular witness tuple on generators w1, w2, ...
    Witness {
        kind: WitnessKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: Option<u32>,
        /// Emit the Bézout inverse instead (bsr only).
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Whether two tuple files satisfy Σ f_j·g_j = 1.
    BezoutCheck {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: PathBuf,
    },
    /// Equispaced samples, as CSV with --out.
    Sample {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_negative_numbers = true)]
        t0: f64,
        #[arg(long, allow_negative_numbers = true)]
        t1: f64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long = "bind", value_parser = parse_binding)]
        bind: Vec<(String, f64)>,
    },
    /// Sup estimates on [0, T] for growing horizons T.
    Probe {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_delimiter = ',', required = true)]
        horizons: Vec<f64>,
        /// Grid points per unit length.
        #[arg(long, default_value_t = DEFAULT_DENSITY)]
        density: f64,
        #[arg(long = "bind", value_parser = parse_binding)]
        bind: Vec<(String, f64)>,
    },
}

fn parse_binding(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s.split_once('=').ok_or("expected name=value")?;
    let value: f64 = value
        .trim()
        .parse()
        .map_err(|e| format!("bad value: {e}"))?;
    Ok((name.trim().to_string(), value))
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = std::result::Result<Option<Value>, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> std::result::Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn function_arg(arg: &str) -> std::result::Result<BohlFunction, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => read(Path::new(path))?,
        None => arg.to_string(),
    };
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        Ok(json::function_from_json(&json::parse_json(trimmed)?)?)
    } else {
        Ok(parse_function(&text)?)
    }
}

fn function_report(f: &BohlFunction) -> Value {
    json!({"text": f.to_string(), "function": json::function_to_json(f)})
}

fn symbolic_report(f: &SymbolicBohl) -> Value {
    match f.to_exact() {
        Some(exact) => function_report(&exact),
        None => json!({"text": f.to_string(), "function": json::symbolic_to_json(f)}),
    }
}

fn bindings(
    explicit: &[(String, f64)],
    f: &BohlFunction,
) -> std::result::Result<BindingEnv<f64>, Failure> {
    let mut env = BindingEnv::new();
    for (name, value) in explicit {
        env.bind(name.clone(), *value)?;
    }
    match std::env::var(BINDINGS_VAR).as_deref() {
        Err(_) | Ok("primes") => env.fill_primes(f),
        Ok("none") => {}
        Ok(other) => {
            return Err(Failure::Usage(format!(
                "{BINDINGS_VAR} must be `primes` or `none`, got `{other}`"
            )))
        }
    }
    Ok(env)
}

fn inverse_from_file(path: &Path) -> Outcome {
    let value = json::parse_json(&read(path)?)?;
    let pf: PartialFractions<crate::scalar::GenPoly> = match &value {
        Value::Object(map) if map.contains_key("numerator") => {
            partial_fractions_symbolic(&json::rational_function_from_json(&value)?)?
        }
        Value::Object(map) if map.contains_key("partial_fractions") => {
            lift_pf(&json::pf_from_json(&map["partial_fractions"])?)
        }
        _ => lift_pf(&json::pf_from_json(&value)?),
    };
    Ok(Some(symbolic_report(&inverse_laplace(&pf))))
}

fn lift_pf(pf: &crate::laplace::PartialFractionForm) -> PartialFractions<crate::scalar::GenPoly> {
    use crate::scalar::Coefficient;
    PartialFractions::from_terms(
        pf.terms()
            .iter()
            .map(|(k, r)| (k.pole.clone(), k.order, r.to_genpoly())),
    )
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Eval { expr, t, bind } => {
            let f = function_arg(&expr)?;
            let v = numerics::evaluate(&f, t, &bindings(&bind, &f)?)?;
            Ok(Some(json!({"re": v.re, "im": v.im})))
        }
        Command::Arith { op, left, right } => {
            let (a, b) = (function_arg(&left)?, function_arg(&right)?);
            let r = match op {
                ArithOp::Add => &a + &b,
                ArithOp::Mul => &a * &b,
            };
            Ok(Some(function_report(&r)))
        }
        Command::Diff { expr } => Ok(Some(symbolic_report(&function_arg(&expr)?.differentiate()))),
        Command::Laplace { expr } => {
            let pf = laplace(&function_arg(&expr)?);
            Ok(Some(
                json!({"partial_fractions": json::pf_to_json(&pf), "text": pf.to_string()}),
            ))
        }
        Command::Invlaplace { file } => inverse_from_file(&file),
        Command::Psi { expr } => Ok(Some(function_report(&function_arg(&expr)?.psi()))),
        Command::IsUnit { expr } => {
            let f = function_arg(&expr)?;
            Ok(Some(match f.unit_inverse() {
                Ok(inv) => json!({"unit": true, "inverse": inv.to_string()}),
                Err(_) => json!({"unit": false}),
            }))
        }
        Command::IsBounded { expr } => {
            Ok(Some(json!({"bounded": function_arg(&expr)?.is_bounded()})))
        }
        Command::Witness {
            kind,
            n,
            s,
            inverse,
            out,
        } => {
            let tuple = match kind {
                WitnessKind::Bsr => {
                    let spec = WitnessSpec::new(n, s.unwrap_or(1))
                        .map_err(|e| Failure::Usage(e.to_string()))?;
                    if inverse {
                        bsr_witness_inverse(&spec)
                    } else {
                        bsr_witness(&spec)
                    }
                }
                WitnessKind::Tsr => {
                    if inverse || s.is_some_and(|s| s != 1) {
                        return Err(Failure::Usage("tsr takes neither --inverse nor --s".into()));
                    }
                    if n == 0 {
                        return Err(Failure::Usage("N must be positive".into()));
                    }
                    let names: Vec<String> = (1..=2 * n).map(|k| format!("w{k}")).collect();
                    tsr_witness(n, &names)?
                }
            };
            let value = json::tuple_to_json(&tuple);
            match out {
                Some(path) => {
                    write(&path, &format!("{value}\n"))?;
                    Ok(None)
                }
                None => Ok(Some(value)),
            }
        }
        Command::BezoutCheck { f, g } => {
            let f = json::tuple_from_json(&json::parse_json(&read(&f)?)?)?;
            let g = json::tuple_from_json(&json::parse_json(&read(&g)?)?)?;
            Ok(Some(json!({"bezout": bezout_verify(&f, &g)?})))
        }
        Command::Sample {
            expr,
            t0,
            t1,
            n,
            out,
            bind,
        } => {
            let f = function_arg(&expr)?;
            let series = numerics::sample(&f, t0, t1, n, &bindings(&bind, &f)?)?;
            match out {
                Some(path) => {
                    write(&path, &series.to_csv())?;
                    Ok(None)
                }
                None => Ok(Some(Value::Array(
                    series
                        .points
                        .iter()
                        .map(|(t, v)| json!({"t": t, "re": v.re, "im": v.im}))
                        .collect(),
                ))),
            }
        }
        Command::Probe {
            expr,
            horizons,
            density,
            bind,
        } => {
            let f = function_arg(&expr)?;
            let probe =
                numerics::unboundedness_probe(&f, &horizons, density, &bindings(&bind, &f)?)?;
            Ok(Some(Value::Array(
                probe
                    .iter()
                    .map(|p| json!({"horizon": p.horizon, "sup": p.sup}))
                    .collect(),
            )))
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(cli.command) {
        Ok(Some(value)) => {
            let _ = writeln!(out, "{value}");
            0
        }
        Ok(None) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("bohl").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap())
    }

    fn value(args: &[&str]) -> Value {
        let (code, out) = call(args);
        assert_eq!(code, 0, "{args:?}");
        serde_json::from_str(&out).unwrap()
    }

    #[test]
    fn unit_report() {
        assert_eq!(
            value(&["is-unit", "2*exp(3*t)"]),
            json!({"unit": true, "inverse": "1/2*exp(-3*t)"})
        );
        assert_eq!(value(&["is-unit", "1 + t"]), json!({"unit": false}));
    }

    #[test]
    fn laplace_report() {
        let v = value(&["laplace", "t^2*exp(3*t)"]);
        assert_eq!(v["text"], "2/(s - 3)^3");
        assert_eq!(v["partial_fractions"][0]["order"], 3);
        assert_eq!(v["partial_fractions"][0]["residue"]["re"], "2/1");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["psi", "exp(t^2)"]).0, 1);
        assert_eq!(call(&["psi", "3 +"]).0, 1);
        assert_eq!(call(&["nonsense"]).0, 2);
        assert_eq!(call(&["eval", "t"]).0, 2);
        assert_eq!(call(&["witness", "bsr", "--n", "0"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn simple_commands() {
        assert_eq!(
            value(&["eval", "1 + t", "--t", "2"]),
            json!({"re": 3.0, "im": 0.0})
        );
        assert_eq!(
            value(&["eval", "-t", "--t", "-2"]),
            json!({"re": 2.0, "im": 0.0})
        );
        assert_eq!(value(&["arith", "mul", "t", "exp(t)"])["text"], "t*exp(t)");
        assert_eq!(value(&["diff", "t^2"])["text"], "2*t");
        assert_eq!(value(&["diff", "exp(i*w1*t)"])["text"], "i*w1*exp(i*w1*t)");
        assert_eq!(
            value(&["is-bounded", "t*exp(i*t)"]),
            json!({"bounded": false})
        );
        assert_eq!(value(&["psi", "t*exp((1+i)*t)"])["text"], "exp(i*t)");
        let p = value(&["probe", "t", "--horizons", "1,2", "--density", "4"]);
        assert_eq!(
            p,
            json!([{"horizon": 1.0, "sup": 1.0}, {"horizon": 2.0, "sup": 2.0}])
        );
    }
}
