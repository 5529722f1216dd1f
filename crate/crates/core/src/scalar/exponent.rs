use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use super::{fmt_rational, int, Rational};

const RESERVED: [&str; 3] = ["i", "t", "exp"];

/// `[a-zA-Z][a-zA-Z0-9_]*`, excluding the reserved words `i`, `t` and `exp`.
pub fn is_valid_generator_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !RESERVED.contains(&name)
}

/// A real frequency `r + Σ c_g·g` in the free Q-module spanned by `1` and
/// formal generators `g`. Distinct generators are Q-linearly independent by
/// construction.
///
/// Zero coordinates are never stored, so the derived equality and ordering
/// compare the rational part first and then the generator coordinates in
/// name order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreqVector {
    rational: Rational,
    gens: BTreeMap<String, Rational>,
}

impl FreqVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(q: Rational) -> Self {
        Self {
            rational: q,
            gens: BTreeMap::new(),
        }
    }

    /// `coeff·name`.
    pub fn generator(name: impl Into<String>, coeff: Rational) -> Self {
        let mut v = Self::zero();
        v.add_coord(name.into(), coeff);
        v
    }

    pub fn from_parts(
        rational: Rational,
        gens: impl IntoIterator<Item = (String, Rational)>,
    ) -> Self {
        let mut v = Self::rational(rational);
        for (name, c) in gens {
            v.add_coord(name, c);
        }
        v
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn generator_coords(&self) -> &BTreeMap<String, Rational> {
        &self.gens
    }

    pub fn coord(&self, name: &str) -> Rational {
        self.gens.get(name).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.gens.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.gens.is_empty()
    }

    fn add_coord(&mut self, name: String, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.gens.entry(name) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            rational: &self.rational * k,
            gens: self.gens.iter().map(|(n, c)| (n.clone(), c * k)).collect(),
        }
    }
}

impl Add for &FreqVector {
    type Output = FreqVector;

    fn add(self, rhs: &FreqVector) -> FreqVector {
        let mut out = self.clone();
        out.rational += &rhs.rational;
        for (n, c) in &rhs.gens {
            out.add_coord(n.clone(), c.clone());
        }
        out
    }
}

impl Neg for &FreqVector {
    type Output = FreqVector;

    fn neg(self) -> FreqVector {
        FreqVector {
            rational: -&self.rational,
            gens: self.gens.iter().map(|(n, c)| (n.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for FreqVector {
    /// `3*w1 - 1/2*w2 + 1`; the rational part comes last.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<(Rational, Option<&str>)> = self
            .gens
            .iter()
            .map(|(n, c)| (c.clone(), Some(n.as_str())))
            .collect();
        if !self.rational.is_zero() {
            items.push((self.rational.clone(), None));
        }
        if items.is_empty() {
            return write!(f, "0");
        }
        for (idx, (c, name)) in items.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            match name {
                Some(n) if mag == int(1) => write!(f, "{n}")?,
                Some(n) => write!(f, "{}*{n}", fmt_rational(&mag))?,
                None => write!(f, "{}", fmt_rational(&mag))?,
            }
        }
        Ok(())
    }
}

/// An exponent `λ = growth + i·frequency` with rational growth.
///
/// The derived ordering is the canonical term order: growth first, then the
/// rational frequency part, then the generator coordinates by name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponent {
    pub growth: Rational,
    pub freq: FreqVector,
}

impl Exponent {
    pub fn new(growth: Rational, freq: FreqVector) -> Self {
        Self { growth, freq }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn real(growth: Rational) -> Self {
        Self::new(growth, FreqVector::zero())
    }

    /// `i·q`.
    pub fn imaginary(q: Rational) -> Self {
        Self::new(Rational::zero(), FreqVector::rational(q))
    }

    /// `i·name`.
    pub fn generator(name: impl Into<String>) -> Self {
        Self::new(Rational::zero(), FreqVector::generator(name, int(1)))
    }

    pub fn is_zero(&self) -> bool {
        self.growth.is_zero() && self.freq.is_zero()
    }

    /// `i·Im(λ)`: growth dropped, frequency kept.
    pub fn imaginary_part(&self) -> Self {
        Self::new(Rational::zero(), self.freq.clone())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.growth * k, self.freq.scale(k))
    }
}

impl Add for &Exponent {
    type Output = Exponent;

    fn add(self, rhs: &Exponent) -> Exponent {
        Exponent::new(&self.growth + &rhs.growth, &self.freq + &rhs.freq)
    }
}

impl Sub for &Exponent {
    type Output = Exponent;

    fn sub(self, rhs: &Exponent) -> Exponent {
        self + &-rhs
    }
}

impl Neg for &Exponent {
    type Output = Exponent;

    fn neg(self) -> Exponent {
        Exponent::new(-&self.growth, -&self.freq)
    }
}

impl fmt::Display for Exponent {
    /// `(1/2 + (3*w1 + 1)i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + ({})i)", fmt_rational(&self.growth), self.freq)
    }
}
