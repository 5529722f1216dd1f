//! The Laplace-domain bridge.
//!
//! `t^k e^{λt}` transforms to `k!/(s-λ)^{k+1}`, so a Bohl function maps to a
//! finite sum of residue terms `r/(s-λ)^m` and back. [`RationalFunction`]
//! holds the same object as a numerator polynomial over a factored
//! denominator.

mod poly;
mod rational;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::bohl::{Bohl, Term};
use crate::scalar::{
    factorial, join_signed, real, Coefficient, Exponent, GaussianRational, Rational,
};
use crate::syntax::exponent_items;

pub use poly::SPoly;
pub use rational::{
    partial_fractions, partial_fractions_symbolic, pf_to_rational, RationalFunction,
};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PoleKey {
    pub pole: Exponent,
    pub order: u32,
}

/// `Σ r/(s-λ)^m` keyed by `(λ, m)` with nonzero residues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFractions<C> {
    terms: BTreeMap<PoleKey, C>,
}

pub type PartialFractionForm = PartialFractions<GaussianRational>;

impl<C: Coefficient> Default for PartialFractions<C> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Coefficient> PartialFractions<C> {
    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, u32, C)>) -> Self {
        let mut out = Self::default();
        for (pole, order, r) in terms {
            out.add_term(pole, order, r);
        }
        out
    }

    /// Adds `r/(s-λ)^m`. Order zero terms are polynomial, not strictly
    /// proper, and are ignored.
    pub fn add_term(&mut self, pole: Exponent, order: u32, r: C) {
        if r.is_zero() || order == 0 {
            return;
        }
        match self.terms.entry(PoleKey { pole, order }) {
            Entry::Vacant(e) => {
                e.insert(r);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + r;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<PoleKey, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Residue-wise sum.
    pub fn merge(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, r) in &other.terms {
            out.add_term(k.pole.clone(), k.order, r.clone());
        }
        out
    }

    pub fn to_exact(&self) -> Option<PartialFractionForm> {
        let mut out = PartialFractionForm::default();
        for (k, r) in &self.terms {
            out.add_term(k.pole.clone(), k.order, r.as_gaussian()?);
        }
        Some(out)
    }
}

fn integer(n: BigInt) -> GaussianRational {
    real(Rational::from_integer(n))
}

/// `c·t^k·e^{λt} ↦ c·k!/(s-λ)^{k+1}`.
pub fn laplace<C: Coefficient>(f: &Bohl<C>) -> PartialFractions<C> {
    PartialFractions::from_terms(f.terms().map(|term| {
        let r = term.coeff.clone() * C::from_gaussian(integer(factorial(term.power)));
        (term.exponent, term.power + 1, r)
    }))
}

/// `r/(s-λ)^m ↦ r/(m-1)!·t^{m-1}·e^{λt}`.
pub fn inverse_laplace<C: Coefficient>(pf: &PartialFractions<C>) -> Bohl<C> {
    Bohl::normalize(pf.terms.iter().map(|(k, r)| {
        let scale = real(Rational::new(BigInt::one(), factorial(k.order - 1)));
        Term::new(
            r.clone() * C::from_gaussian(scale),
            k.order - 1,
            k.pole.clone(),
        )
    }))
}

/// `s - 3`, `s + i`, `s - (1 + 2*i)`.
pub(crate) fn fmt_linear_factor(pole: &Exponent) -> String {
    let items = exponent_items(pole);
    match items.as_slice() {
        [] => "s".to_string(),
        [(neg, body)] => format!("s {} {body}", if *neg { '+' } else { '-' }),
        _ => format!("s - ({})", join_signed(&items)),
    }
}

impl<C: Coefficient> fmt::Display for PartialFractions<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<(bool, String)> = self
            .terms
            .iter()
            .map(|(k, r)| {
                let (neg, mag) = r.signed_factor();
                let power = if k.order == 1 {
                    String::new()
                } else {
                    format!("^{}", k.order)
                };
                (
                    neg,
                    format!("{mag}/({}){power}", fmt_linear_factor(&k.pole)),
                )
            })
            .collect();
        write!(f, "{}", join_signed(&items))
    }
}
