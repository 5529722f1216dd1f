//! Exact scalars: rationals, Gaussian rationals, frequency vectors over
//! formal generators, exponents and generator polynomials.
//!
//! Rationals are `num_rational::BigRational` and Gaussian rationals are
//! `num_complex::Complex<BigRational>`; this module adds the checked
//! operations, rendering and the [`Coefficient`] trait that lets the rest of
//! the crate stay generic over the coefficient ring.

mod exponent;
mod genpoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use exponent::{is_valid_generator_name, Exponent, FreqVector};
pub use genpoly::{GenPoly, Monomial};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Exact complex number with rational real and imaginary parts.
pub type GaussianRational = Complex<Rational>;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn gaussian(re: Rational, im: Rational) -> GaussianRational {
    Complex::new(re, im)
}

pub fn gaussian_int(re: i64, im: i64) -> GaussianRational {
    Complex::new(int(re), int(im))
}

pub fn real(re: Rational) -> GaussianRational {
    Complex::new(re, Rational::zero())
}

pub fn imag_unit() -> GaussianRational {
    Complex::new(Rational::zero(), Rational::one())
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaussianOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic on Gaussian rationals. Division by zero is an error
/// rather than a panic.
pub fn gaussian_arith(
    a: &GaussianRational,
    b: &GaussianRational,
    op: GaussianOp,
) -> Result<GaussianRational> {
    Ok(match op {
        GaussianOp::Add => a + b,
        GaussianOp::Sub => a - b,
        GaussianOp::Mul => a * b,
        GaussianOp::Div => a * &checked_inv(b)?,
    })
}

pub fn checked_inv(a: &GaussianRational) -> Result<GaussianRational> {
    let norm = &a.re * &a.re + &a.im * &a.im;
    if norm.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Complex::new(&a.re / &norm, -&a.im / &norm))
}

/// Parses `p`, `p/q`, or a terminating decimal such as `-0.25`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let n: BigInt = digits.parse().ok()?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let q = Rational::new(n, d);
        return Some(if negative { -q } else { q });
    }
    text.parse::<BigInt>().ok().map(Rational::from_integer)
}

/// `p` for integers, `p/q` otherwise.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Always `p/q`, the interchange form used in JSON.
pub fn rational_to_json(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Renders a Gaussian rational as an expression: `3`, `-1/2*i`, `(1 + 2*i)`.
pub fn fmt_gaussian(c: &GaussianRational) -> String {
    match (c.re.is_zero(), c.im.is_zero()) {
        (_, true) => fmt_rational(&c.re),
        (true, false) => fmt_imag(&c.im),
        (false, false) => {
            let sign = if c.im.is_negative() { '-' } else { '+' };
            format!(
                "({} {} {})",
                fmt_rational(&c.re),
                sign,
                fmt_imag(&c.im.abs())
            )
        }
    }
}

/// Splits off the sign of a purely real or purely imaginary value; mixed
/// values come back parenthesised and unsigned.
pub fn signed_gaussian(c: &GaussianRational) -> (bool, String) {
    match (c.re.is_zero(), c.im.is_zero()) {
        (_, true) => (c.re.is_negative(), fmt_rational(&c.re.abs())),
        (true, false) => (c.im.is_negative(), fmt_imag(&c.im.abs())),
        (false, false) => (false, fmt_gaussian(c)),
    }
}

/// Joins signed items as `a - b + c`, with a leading `-` when the first item
/// is negative.
///
/// Unary minus binds to the atom, so `-t^2` would read back as `(-t)^2`; a
/// leading negative item whose first factor carries a power is written
/// `-1*t^2` instead.
pub fn join_signed(items: &[(bool, String)]) -> String {
    if items.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (neg, body)) in items.iter().enumerate() {
        match (idx, neg) {
            (0, true) => {
                let first = body.split('*').next().unwrap_or_default();
                if !first.starts_with('(') && first.contains('^') {
                    out.push_str("-1*");
                } else {
                    out.push('-');
                }
            }
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(body);
    }
    out
}

fn fmt_imag(q: &Rational) -> String {
    if q.is_one() {
        "i".to_string()
    } else if (-q).is_one() {
        "-i".to_string()
    } else {
        format!("{}*i", fmt_rational(q))
    }
}

/// A commutative ring usable as the coefficient type of a Bohl function.
///
/// Implemented by [`GaussianRational`] (the constants `Q(i)`) and by
/// [`GenPoly`] (polynomials over `Q(i)` in the frequency generators, which is
/// the smallest ring closed under differentiation of generator frequencies).
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_gaussian(c: GaussianRational) -> Self;

    fn to_genpoly(&self) -> GenPoly;

    /// The value as a constant of `Q(i)`, when it is one.
    fn as_gaussian(&self) -> Option<GaussianRational>;

    /// Names of the frequency generators occurring in the coefficient.
    fn generator_names(&self) -> Vec<&str>;

    /// Sign and magnitude as a multiplicative factor, e.g. `(true, "3/2*i")`
    /// for `-3/2·i`. Sums are parenthesised and reported as positive.
    fn signed_factor(&self) -> (bool, String);
}

impl Coefficient for GaussianRational {
    fn from_gaussian(c: GaussianRational) -> Self {
        c
    }

    fn to_genpoly(&self) -> GenPoly {
        GenPoly::constant(self.clone())
    }

    fn as_gaussian(&self) -> Option<GaussianRational> {
        Some(self.clone())
    }

    fn generator_names(&self) -> Vec<&str> {
        Vec::new()
    }

    fn signed_factor(&self) -> (bool, String) {
        signed_gaussian(self)
    }
}
