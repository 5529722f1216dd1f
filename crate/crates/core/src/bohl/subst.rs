use std::collections::BTreeMap;

use num_traits::Zero;

use super::{BohlFunction, Term};
use crate::error::{Error, Result};
use crate::scalar::{Exponent, GaussianRational, Rational};

/// Polynomial in `z_0, …, z_{n-1}` with Gaussian-rational coefficients,
/// keyed by exponent vectors of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, GaussianRational>,
}

impl MultiPoly {
    pub fn new(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Adds `c·∏ z_j^{powers[j]}`; missing trailing powers are zero.
    pub fn add_term(&mut self, powers: &[u32], c: GaussianRational) -> Result<()> {
        if powers.len() > self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: powers.len(),
            });
        }
        let mut key = powers.to_vec();
        key.resize(self.nvars, 0);
        let sum = self
            .terms
            .remove(&key)
            .unwrap_or_else(GaussianRational::zero)
            + c;
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
        Ok(())
    }

    pub fn with_term(mut self, powers: &[u32], c: GaussianRational) -> Result<Self> {
        self.add_term(powers, c)?;
        Ok(self)
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, GaussianRational> {
        &self.terms
    }
}

/// Substitutes `z_0 ↦ t` and `z_k ↦ e^{λ_k t}`, so the monomial
/// `t^a ∏ z_k^{b_k}` becomes `t^a e^{(Σ b_k λ_k) t}`.
///
/// Applying the same substitution to every member of a polynomial Bézout
/// identity `Σ p_j q_j = 1` yields a Bézout identity in the Bohl algebra.
pub fn from_polynomial_substitution(p: &MultiPoly, exps: &[Exponent]) -> Result<BohlFunction> {
    if p.nvars == 0 || exps.len() != p.nvars - 1 {
        return Err(Error::ArityMismatch {
            expected: p.nvars.saturating_sub(1),
            got: exps.len(),
        });
    }
    Ok(BohlFunction::normalize(p.terms.iter().map(
        |(powers, c)| {
            let exponent = powers[1..]
                .iter()
                .zip(exps)
                .filter(|(b, _)| **b > 0)
                .fold(Exponent::zero(), |acc, (b, e)| {
                    &acc + &e.scale(&Rational::from_integer((*b).into()))
                });
            Term::new(c.clone(), powers[0], exponent)
        },
    )))
}
