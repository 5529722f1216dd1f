use num_traits::{One, Zero};

use super::{parse, Expr};
use crate::bohl::{BohlFunction, SymbolicBohl};
use crate::error::{Error, Result};
use crate::scalar::{imag_unit, real, Exponent, FreqVector, GenPoly};

/// Lowers to a Bohl function whose coefficients may mention generators.
pub fn lower_symbolic(ast: &Expr) -> Result<SymbolicBohl> {
    Ok(match ast {
        Expr::Num(q) => SymbolicBohl::constant(GenPoly::constant(real(q.clone()))),
        Expr::I => SymbolicBohl::constant(GenPoly::constant(imag_unit())),
        Expr::T => SymbolicBohl::t(),
        Expr::Gen(name) => SymbolicBohl::constant(GenPoly::var(name.clone())),
        Expr::Exp(arg) => SymbolicBohl::exp(linear_exponent(&lower_symbolic(arg)?, arg)?),
        Expr::Neg(inner) => -lower_symbolic(inner)?,
        Expr::Sum(items) => {
            let mut acc = SymbolicBohl::zero();
            for (neg, e) in items {
                let v = lower_symbolic(e)?;
                acc = if *neg { &acc - &v } else { &acc + &v };
            }
            acc
        }
        Expr::Product(items) => {
            let mut acc = SymbolicBohl::one();
            for e in items {
                acc = &acc * &lower_symbolic(e)?;
            }
            acc
        }
        Expr::Pow(base, n) => lower_symbolic(base)?.pow(*n),
    })
}

/// Reads `λ` off an argument of the form `λ·t`.
fn linear_exponent(arg: &SymbolicBohl, src: &Expr) -> Result<Exponent> {
    let mut out = Exponent::zero();
    for term in arg.terms() {
        if !term.exponent.is_zero() || term.power > 1 {
            return Err(Error::NonLinearExponent(src.to_string()));
        }
        if term.power == 0 {
            return Err(Error::ExponentOffset(src.to_string()));
        }
        for (mono, c) in term.coeff.terms() {
            let mut powers = mono.powers().iter();
            match (powers.next(), powers.next()) {
                (None, _) => {
                    out = &out + &Exponent::new(c.re.clone(), FreqVector::rational(c.im.clone()));
                }
                (Some((name, 1)), None) => {
                    if !c.re.is_zero() {
                        return Err(Error::RealGeneratorCoefficient(name.clone()));
                    }
                    out = &out
                        + &Exponent::new(
                            Zero::zero(),
                            FreqVector::generator(name.clone(), c.im.clone()),
                        );
                }
                _ => return Err(Error::NonLinearExponent(src.to_string())),
            }
        }
    }
    Ok(out)
}

/// Lowers to an exact Bohl function; generators may appear only inside `exp`.
pub fn lower(ast: &Expr) -> Result<BohlFunction> {
    lower_symbolic(ast)?
        .to_exact()
        .ok_or_else(|| Error::GeneratorOutsideExponent(ast.to_string()))
}

pub fn parse_function(text: &str) -> Result<BohlFunction> {
    lower(&parse(text)?)
}

pub fn parse_symbolic(text: &str) -> Result<SymbolicBohl> {
    lower_symbolic(&parse(text)?)
}
