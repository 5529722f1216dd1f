use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{Exponent, GenPoly};

/// Dense polynomial in `s` with generator-polynomial coefficients, stored in
/// ascending degree with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SPoly {
    coeffs: Vec<GenPoly>,
}

impl SPoly {
    pub fn from_coeffs(coeffs: Vec<GenPoly>) -> Self {
        let mut p = Self { coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn constant(c: GenPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn s() -> Self {
        Self::from_coeffs(vec![GenPoly::zero(), GenPoly::one()])
    }

    /// `s - λ`.
    pub fn linear_factor(pole: &Exponent) -> Self {
        Self::from_coeffs(vec![-GenPoly::from_exponent(pole), GenPoly::one()])
    }

    pub fn coeffs(&self) -> &[GenPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GenPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &GenPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn one() -> Self {
        Self::constant(GenPoly::one())
    }

    /// Coefficients of `p(λ + u)` as a polynomial in `u`.
    pub fn taylor_shift(&self, pole: &Exponent) -> Self {
        let step = Self::from_coeffs(vec![GenPoly::from_exponent(pole), GenPoly::one()]);
        self.coeffs.iter().rev().fold(Self::default(), |acc, c| {
            &(&acc * &step) + &Self::constant(c.clone())
        })
    }
}

impl Add for &SPoly {
    type Output = SPoly;

    fn add(self, rhs: &SPoly) -> SPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        SPoly::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &SPoly {
    type Output = SPoly;

    fn sub(self, rhs: &SPoly) -> SPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        SPoly::from_coeffs((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Neg for &SPoly {
    type Output = SPoly;

    fn neg(self) -> SPoly {
        SPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &SPoly {
    type Output = SPoly;

    fn mul(self, rhs: &SPoly) -> SPoly {
        if self.is_zero() || rhs.is_zero() {
            return SPoly::default();
        }
        let mut out = vec![GenPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_product(a, b);
            }
        }
        SPoly::from_coeffs(out)
    }
}
