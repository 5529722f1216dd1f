use std::fmt;

use crate::scalar::{fmt_rational, Rational};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(Rational),
    I,
    T,
    Gen(String),
    Exp(Box<Expr>),
    Neg(Box<Expr>),
    /// Summands with a flag marking subtraction.
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, u32),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => write!(f, "{}", fmt_rational(q)),
            Expr::I => write!(f, "i"),
            Expr::T => write!(f, "t"),
            Expr::Gen(name) => write!(f, "{name}"),
            Expr::Exp(arg) => write!(f, "exp({arg})"),
            Expr::Neg(inner) => write!(f, "-{inner}"),
            Expr::Sum(items) => {
                write!(f, "(")?;
                for (idx, (neg, e)) in items.iter().enumerate() {
                    match (idx, neg) {
                        (0, false) => {}
                        (0, true) => write!(f, "-")?,
                        (_, false) => write!(f, " + ")?,
                        (_, true) => write!(f, " - ")?,
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
            Expr::Product(items) => {
                for (idx, e) in items.iter().enumerate() {
                    if idx > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "{e}")?;
                }
                Ok(())
            }
            Expr::Pow(base, n) => write!(f, "{base}^{n}"),
        }
    }
}
