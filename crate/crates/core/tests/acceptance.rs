//! Acceptance run: one line per criterion with its timing and limit.
//! Exits nonzero when any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use bohl::laplace::{
    inverse_laplace, laplace, pf_to_rational, PartialFractions, RationalFunction, SPoly,
};
use bohl::numerics::{
    evaluate, lower_bound_sequence, unboundedness_probe, BindingEnv, LowerBoundSearch,
};
use bohl::scalar::{GaussianRational, GenPoly, Rational};
use bohl::syntax::{lower, parse, parse_function};
use bohl::witness::{bezout_verify, bsr_witness, bsr_witness_inverse, WitnessSpec};
use bohl::{json, BohlFunction};
use common::*;
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn factorial(k: u32) -> i64 {
    let mut out = 1i64;
    for j in 2..=k as i64 {
        out *= j;
    }
    out
}

fn laplace_pairs() -> Check {
    let mut r = rng(1);
    for k in 0..=6u32 {
        for _ in 0..100 {
            let lambda = exponent(&mut r, true);
            let c = gaussian_coeff(&mut r);
            let f = BohlFunction::monomial(c.clone(), k, lambda.clone());
            let expected = PartialFractions::from_terms([(
                lambda,
                k + 1,
                c * GaussianRational::from(Rational::from_integer(BigInt::from(factorial(k)))),
            )]);
            ensure(laplace(&f) == expected, || {
                format!("L({f}) = {}", laplace(&f))
            })?;
        }
    }
    for _ in 0..1000 {
        let f = function(&mut r, 8);
        ensure(inverse_laplace(&laplace(&f)) == f, || {
            format!("round trip failed for {f}")
        })?;
    }
    Ok(())
}

fn annihilators() -> Check {
    let mut r = rng(2);
    for _ in 0..500 {
        let k = r.gen_range(0..=6);
        let lambda = exponent(&mut r, true);
        let f = BohlFunction::monomial(gaussian_coeff(&mut r), k, lambda.clone());
        ensure(f.apply_annihilator(&lambda, k + 1).is_zero(), || {
            format!("(D - λ)^{} {f} ≠ 0", k + 1)
        })?;
    }
    Ok(())
}

fn psi_homomorphism() -> Check {
    let mut r = rng(3);
    let mut merged = 0;
    for _ in 0..1000 {
        let (f, g) = colliding_pair(&mut r);
        if f.psi().len() < f.len() || (&f * &g).psi().len() < (&f * &g).len() {
            merged += 1;
        }
        ensure((&f + &g).psi() == &f.psi() + &g.psi(), || {
            format!("Ψ(f+g) for f = {f}, g = {g}")
        })?;
        ensure((&f * &g).psi() == &f.psi() * &g.psi(), || {
            format!("Ψ(f·g) for f = {f}, g = {g}")
        })?;
    }
    ensure(merged >= 500, || {
        format!("only {merged} pairs exercised merging keys")
    })
}

fn witness_unimodularity() -> Check {
    for n in 1..=25 {
        for s in [1, 2, 5] {
            let spec = WitnessSpec::new(n, s).unwrap();
            let ok = bezout_verify(&bsr_witness(&spec), &bsr_witness_inverse(&spec)).unwrap();
            ensure(ok, || format!("N = {n}, s = {s}"))?;
        }
    }
    let start = Instant::now();
    let spec = WitnessSpec::new(100, 1).unwrap();
    let ok = bezout_verify(&bsr_witness(&spec), &bsr_witness_inverse(&spec)).unwrap();
    let elapsed = start.elapsed();
    ensure(ok, || "N = 100".into())?;
    ensure(elapsed < Duration::from_secs(10), || {
        format!("N = 100 took {elapsed:?}")
    })
}

fn units() -> Check {
    let mut r = rng(5);
    let mut corpus: Vec<(BohlFunction, bool)> = Vec::new();
    for _ in 0..100 {
        let e = exponent(&mut r, true);
        corpus.push((BohlFunction::monomial(gaussian_coeff(&mut r), 0, e), true));
    }
    corpus.push((BohlFunction::zero(), false));
    corpus.push((BohlFunction::t(), false));
    while corpus.len() < 200 {
        let f = function(&mut r, 6);
        let single_exp = f.len() == 1 && f.terms().all(|t| t.power == 0);
        if !single_exp {
            corpus.push((f, false));
        }
    }
    for (f, unit) in &corpus {
        ensure(f.is_unit() == *unit, || {
            format!("is_unit({f}) should be {unit}")
        })?;
        if *unit {
            let inv = f.unit_inverse().map_err(|e| e.to_string())?;
            ensure((f * &inv).is_one(), || format!("{f} · {inv} ≠ 1"))?;
        } else {
            ensure(f.unit_inverse().is_err(), || format!("{f} has an inverse"))?;
        }
    }
    Ok(())
}

fn coefficient_mass(f: &BohlFunction) -> f64 {
    f.terms()
        .map(|t| {
            t.coeff
                .re
                .to_f64()
                .unwrap()
                .hypot(t.coeff.im.to_f64().unwrap())
        })
        .sum()
}

fn boundedness() -> Check {
    const HORIZONS: [f64; 4] = [10.0, 100.0, 1000.0, 10_000.0];
    const DENSITY: f64 = 100.0;
    let ap = [
        "exp(i*w1*t) + exp(i*w2*t) - 1",
        "1",
        "2*exp(i*t) - 3/2*exp(-i*w1*t)",
        "(1 + i)*exp(i*w3*t) + 1/2 - exp(i*(w1 - w2)*t)",
        "1/4 - (exp(i*w1*t) + exp(i*w2*t) - 1)*(exp(i*w3*t) + exp(i*w4*t) - 1)",
    ];
    for text in ap {
        let f = parse_function(text).unwrap();
        ensure(f.is_bounded(), || format!("{text} should be bounded"))?;
        let env = BindingEnv::primes_for(&f);
        let bound = coefficient_mass(&f) + 1e-9;
        for p in unboundedness_probe(&f, &HORIZONS, DENSITY, &env).unwrap() {
            ensure(p.sup <= bound, || {
                format!("{text}: sup {} > {bound} at {}", p.sup, p.horizon)
            })?;
        }
    }
    let growing = ["t", "t*exp(i*t)", "exp(1/10*t)", "t^2*exp(i*w1*t)"];
    for text in growing {
        let f = parse_function(text).unwrap();
        ensure(!f.is_bounded(), || format!("{text} should be unbounded"))?;
        let env = BindingEnv::primes_for(&f);
        let sups: Vec<f64> = unboundedness_probe(&f, &HORIZONS, DENSITY, &env)
            .unwrap()
            .iter()
            .map(|p| p.sup)
            .collect();
        ensure(sups.windows(2).all(|w| w[0] < w[1]), || {
            format!("{text}: {sups:?} not increasing")
        })?;
        ensure(sups[3] > 10.0 * sups[0], || {
            format!("{text}: {sups:?} grows too slowly")
        })?;
    }
    Ok(())
}

fn lower_bounds() -> Check {
    let f = parse_function("exp(i*w1*t) + exp(i*w2*t) - 1").unwrap();
    let env = BindingEnv::primes_for(&f);
    let lb = lower_bound_sequence(&f, 10, &LowerBoundSearch::default(), &env)
        .map_err(|e| e.to_string())?;
    let (a, b) = (2f64.sqrt(), 3f64.sqrt());
    let direct =
        |t: f64| (Complex::from_polar(1.0, a * t) + Complex::from_polar(1.0, b * t) - 1.0).norm();
    ensure((lb.eps - direct(lb.t_star) / 2.0).abs() < 1e-12, || {
        "eps is not |f(t_*)|/2".into()
    })?;
    ensure(lb.points.len() == 10, || {
        format!("{} points", lb.points.len())
    })?;
    ensure(lb.points.windows(2).all(|w| w[0] < w[1]), || {
        "points not increasing".into()
    })?;
    for &t in &lb.points {
        ensure(direct(t) >= lb.eps, || {
            format!("|f({t})| = {} < {}", direct(t), lb.eps)
        })?;
        let v = evaluate(&f, t, &env).unwrap().norm();
        ensure(v >= lb.eps, || format!("evaluate at {t} gives {v}"))?;
    }
    Ok(())
}

fn derivative_rule() -> Check {
    let mut r = rng(8);
    for _ in 0..300 {
        let f = function(&mut r, 6);
        let lhs = pf_to_rational(&laplace(&f.differentiate()));
        let lf = pf_to_rational(&laplace(&f));
        let f0 = GenPoly::constant(f.eval_at_zero());
        let numerator = &(&SPoly::s() * lf.numerator()) - &lf.expanded_denominator().scale(&f0);
        let rhs = RationalFunction::new(numerator, lf.denominator().clone());
        ensure(lhs.equals(&rhs), || {
            format!("L(f') ≠ sL(f) - f(0) for f = {f}")
        })?;
    }
    Ok(())
}

fn run_cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_bohl"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.success() {
        Ok(String::from_utf8_lossy(&out.stdout).into_owned())
    } else {
        Err(format!(
            "{args:?} exited with {}: {}",
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ))
    }
}

fn write(path: &Path, text: &str) -> Check {
    std::fs::write(path, text).map_err(|e| e.to_string())
}

fn round_trip_and_cli() -> Check {
    let mut r = rng(9);
    for _ in 0..1000 {
        let f = function(&mut r, 8);
        let back =
            lower(&parse(&f.to_string()).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(back == f, || format!("{f} came back as {back}"))?;
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let p = |name: &str| dir.path().join(name);
    let s = |path: &Path| path.to_str().unwrap().to_string();
    let (f_path, g_path, tsr_path) = (p("f.json"), p("g.json"), p("tsr.json"));

    run_cli(&["witness", "bsr", "--n", "2", "--out", &s(&f_path)])?;
    run_cli(&[
        "witness",
        "bsr",
        "--n",
        "2",
        "--inverse",
        "--out",
        &s(&g_path),
    ])?;
    run_cli(&["witness", "tsr", "--n", "2", "--out", &s(&tsr_path)])?;
    let verdict = run_cli(&["bezout-check", "--f", &s(&f_path), "--g", &s(&g_path)])?;
    ensure(verdict.trim() == r#"{"bezout":true}"#, || verdict.clone())?;

    let tuple = json::tuple_from_json(
        &json::parse_json(&std::fs::read_to_string(&f_path).unwrap()).unwrap(),
    )
    .map_err(|e| e.to_string())?;
    ensure(
        tuple == bsr_witness(&WitnessSpec::new(2, 1).unwrap()),
        || "witness file differs".into(),
    )?;
    let g = tuple.entries().last().unwrap();
    let entry = p("entry.json");
    write(&entry, &json::function_to_json(g).to_string())?;
    let text = p("entry.txt");
    write(&text, &tuple[0].to_string())?;
    let (e, t) = (format!("@{}", s(&entry)), format!("@{}", s(&text)));

    run_cli(&["eval", &e, "--t", "1.5"])?;
    run_cli(&["eval", &t, "--t", "0", "--bind", "w1=2"])?;
    let sum = run_cli(&["arith", "add", &e, &t])?;
    run_cli(&["arith", "mul", &e, &t])?;
    run_cli(&["diff", &e])?;
    let pf = run_cli(&["laplace", &e])?;
    let pf_path = p("pf.json");
    write(&pf_path, &pf)?;
    let inv = run_cli(&["invlaplace", &s(&pf_path)])?;
    let inv: serde_json::Value = serde_json::from_str(&inv).map_err(|e| e.to_string())?;
    ensure(
        json::function_from_json(&inv["function"]).as_ref() == Ok(g),
        || "invlaplace mismatch".into(),
    )?;
    let psi = run_cli(&["psi", &e])?;
    let unit = run_cli(&["is-unit", &e])?;
    ensure(unit.trim() == r#"{"unit":false}"#, || unit.clone())?;
    let bounded = run_cli(&["is-bounded", &e])?;
    ensure(bounded.trim() == r#"{"bounded":true}"#, || bounded.clone())?;
    let csv = p("samples.csv");
    run_cli(&[
        "sample",
        &e,
        "--t0",
        "0",
        "--t1",
        "10",
        "--n",
        "100",
        "--out",
        &s(&csv),
    ])?;
    let rows = std::fs::read_to_string(&csv).map_err(|e| e.to_string())?;
    ensure(
        rows.starts_with("t,re,im\n") && rows.lines().count() == 102,
        || "bad csv".into(),
    )?;
    run_cli(&["probe", &e, "--horizons", "10,100,1000", "--density", "50"])?;
    ensure(!sum.is_empty() && !psi.is_empty(), || "empty output".into())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            name: "laplace pairs and inverse round trip",
            limit: Duration::from_secs(5),
            run: laplace_pairs,
        },
        Criterion {
            id: 2,
            name: "annihilator identity",
            limit: Duration::from_secs(2),
            run: annihilators,
        },
        Criterion {
            id: 3,
            name: "AP projection is a ring homomorphism",
            limit: Duration::from_secs(5),
            run: psi_homomorphism,
        },
        Criterion {
            id: 4,
            name: "witness unimodularity, N up to 25 and N = 100",
            limit: Duration::from_secs(60),
            run: witness_unimodularity,
        },
        Criterion {
            id: 5,
            name: "unit classification and inverses",
            limit: Duration::from_secs(5),
            run: units,
        },
        Criterion {
            id: 6,
            name: "boundedness agrees with growth probes",
            limit: Duration::from_secs(30),
            run: boundedness,
        },
        Criterion {
            id: 7,
            name: "lower-bound sequence for a two-tone AP function",
            limit: Duration::from_secs(10),
            run: lower_bounds,
        },
        Criterion {
            id: 8,
            name: "derivative rule in the Laplace domain",
            limit: Duration::from_secs(10),
            run: derivative_rule,
        },
        Criterion {
            id: 9,
            name: "text round trip and CLI on the N = 2 witness",
            limit: Duration::from_secs(60),
            run: round_trip_and_cli,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result =
            catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            ensure(elapsed <= c.limit, || {
                format!("took longer than {:?}", c.limit)
            })
        });
        let secs = elapsed.as_secs_f64();
        match result {
            Ok(()) => println!(
                "PASS  {} {} ({secs:.2} s, limit {} s)",
                c.id,
                c.name,
                c.limit.as_secs()
            ),
            Err(msg) => {
                failed += 1;
                println!(
                    "FAIL  {} {} ({secs:.2} s, limit {} s): {msg}",
                    c.id,
                    c.name,
                    c.limit.as_secs()
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
