//! The Bohl algebra: finite sums `Σ c·t^k·e^{λt}` in canonical form.
//!
//! A [`Bohl`] value is a sparse map from `(λ, k)` to a nonzero coefficient,
//! kept in the canonical order of [`TermKey`]. Because the functions
//! `t^k e^{λt}` are linearly independent, two values are equal as functions
//! exactly when their maps are equal, so the derived `PartialEq` is
//! semantic equality.

mod subst;
mod tuple;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{
    checked_inv, real, Coefficient, Exponent, GaussianRational, GenPoly, Rational,
};

pub use subst::{from_polynomial_substitution, MultiPoly};
pub use tuple::BohlTuple;

/// Canonical key of a term: exponent first, then the power of `t`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey {
    pub exponent: Exponent,
    pub power: u32,
}

impl TermKey {
    pub fn new(power: u32, exponent: Exponent) -> Self {
        Self { exponent, power }
    }
}

/// A single `c·t^k·e^{λt}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Term<C> {
    pub coeff: C,
    pub power: u32,
    pub exponent: Exponent,
}

impl<C> Term<C> {
    pub fn new(coeff: C, power: u32, exponent: Exponent) -> Self {
        Self {
            coeff,
            power,
            exponent,
        }
    }
}

/// A Bohl function with coefficients in `C`.
///
/// The empty map is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bohl<C> {
    terms: BTreeMap<TermKey, C>,
}

impl<C: Coefficient> Default for Bohl<C> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Coefficient> Bohl<C> {
    /// Merges like terms, drops zero coefficients and establishes the
    /// canonical order.
    pub fn normalize(terms: impl IntoIterator<Item = Term<C>>) -> Self {
        let mut out = Self::default();
        for t in terms {
            out.accumulate(TermKey::new(t.power, t.exponent), t.coeff);
        }
        out
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0, Exponent::zero())
    }

    /// `c·t^k·e^{λt}`.
    pub fn monomial(coeff: C, power: u32, exponent: Exponent) -> Self {
        Self::normalize([Term::new(coeff, power, exponent)])
    }

    /// `e^{λt}`.
    pub fn exp(exponent: Exponent) -> Self {
        Self::monomial(C::one(), 0, exponent)
    }

    /// `t`.
    pub fn t() -> Self {
        Self::monomial(C::one(), 1, Exponent::zero())
    }

    fn accumulate(&mut self, key: TermKey, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_map(&self) -> &BTreeMap<TermKey, C> {
        &self.terms
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = Term<&C>> + '_ {
        self.terms
            .iter()
            .map(|(k, c)| Term::new(c, k.power, k.exponent.clone()))
    }

    pub fn coeff(&self, power: u32, exponent: &Exponent) -> Option<&C> {
        self.terms.get(&TermKey::new(power, exponent.clone()))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        // Coefficient rings here are integral domains, so no product vanishes.
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Maps every coefficient into another ring.
    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Bohl<D> {
        Bohl::normalize(
            self.terms
                .iter()
                .map(|(k, c)| Term::new(f(c), k.power, k.exponent.clone())),
        )
    }

    /// The same function with polynomial coefficients.
    pub fn lift(&self) -> SymbolicBohl {
        self.map_coeffs(C::to_genpoly)
    }

    /// Exact version when every coefficient is a constant.
    pub fn to_exact(&self) -> Option<BohlFunction> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            terms.insert(k.clone(), c.as_gaussian()?);
        }
        Some(Bohl { terms })
    }

    /// Ψ: drops the power of `t` and the growth, keeping the frequency.
    /// Distinct terms may merge (and cancel) afterwards.
    pub fn psi(&self) -> Self {
        Self::normalize(
            self.terms
                .iter()
                .map(|(k, c)| Term::new(c.clone(), 0, k.exponent.imaginary_part())),
        )
    }

    /// A generalized trigonometric polynomial: every power and growth is zero.
    pub fn is_ap_form(&self) -> bool {
        self.terms
            .keys()
            .all(|k| k.power == 0 && k.exponent.growth.is_zero())
    }

    /// Boundedness on the real line.
    ///
    /// A bounded Bohl function has vanishing growths and constant polynomial
    /// factors, and an AP-form function is bounded by the sum of its
    /// coefficient moduli, so the syntactic test decides it exactly.
    pub fn is_bounded(&self) -> bool {
        self.is_ap_form()
    }

    /// `f(0)`: the sum of the power-0 coefficients.
    pub fn eval_at_zero(&self) -> C {
        self.terms
            .iter()
            .filter(|(k, _)| k.power == 0)
            .fold(C::zero(), |acc, (_, c)| acc + c.clone())
    }

    /// `d/dt`, with coefficients lifted to generator polynomials so that
    /// `λ·c` is representable for every exponent.
    pub fn differentiate(&self) -> SymbolicBohl {
        differentiate_symbolic(&self.lift())
    }

    /// `(d/dt - λ)^m f`.
    pub fn apply_annihilator(&self, lambda: &Exponent, m: u32) -> SymbolicBohl {
        let lam = GenPoly::from_exponent(lambda);
        let mut f = self.lift();
        for _ in 0..m {
            let d = differentiate_symbolic(&f);
            f = &d - &f.scale(&lam);
        }
        f
    }

    /// Generator names occurring in exponents or coefficients.
    pub fn generators(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for (k, c) in &self.terms {
            out.extend(k.exponent.freq.generator_coords().keys().cloned());
            out.extend(c.generator_names().into_iter().map(str::to_string));
        }
        out
    }
}

fn differentiate_symbolic(f: &SymbolicBohl) -> SymbolicBohl {
    let mut out = SymbolicBohl::default();
    for (k, c) in &f.terms {
        if k.power > 0 {
            let factor = GenPoly::constant(real(Rational::from_integer(k.power.into())));
            out.accumulate(TermKey::new(k.power - 1, k.exponent.clone()), c * &factor);
        }
        let lam = GenPoly::from_exponent(&k.exponent);
        out.accumulate(k.clone(), c * &lam);
    }
    out
}

/// Exact Bohl function with Gaussian-rational coefficients.
pub type BohlFunction = Bohl<GaussianRational>;

/// Bohl function whose coefficients are polynomials in the frequency
/// generators; closed under differentiation.
pub type SymbolicBohl = Bohl<GenPoly>;

impl BohlFunction {
    /// Units of the algebra are exactly the single exponentials `c·e^{λt}`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().all(|k| k.power == 0)
    }

    /// `(c·e^{λt})⁻¹ = c⁻¹·e^{-λt}`.
    pub fn unit_inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let (k, c) = self.terms.iter().next().expect("one term");
        Ok(Self::monomial(checked_inv(c)?, 0, -&k.exponent))
    }
}

impl<C: Coefficient> Zero for Bohl<C> {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for Bohl<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Coefficient> Add for &Bohl<C> {
    type Output = Bohl<C>;

    fn add(self, rhs: &Bohl<C>) -> Bohl<C> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.accumulate(k.clone(), c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &Bohl<C> {
    type Output = Bohl<C>;

    fn sub(self, rhs: &Bohl<C>) -> Bohl<C> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.accumulate(k.clone(), -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Neg for &Bohl<C> {
    type Output = Bohl<C>;

    fn neg(self) -> Bohl<C> {
        Bohl {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<C: Coefficient> Mul for &Bohl<C> {
    type Output = Bohl<C>;

    /// Term-by-term product collected through the ordered map: coefficients
    /// multiply, powers and exponents add.
    fn mul(self, rhs: &Bohl<C>) -> Bohl<C> {
        let mut out = Bohl::default();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let key = TermKey::new(ka.power + kb.power, &ka.exponent + &kb.exponent);
                out.accumulate(key, ca.clone() * cb.clone());
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl<C: Coefficient> $tr for Bohl<C> {
            type Output = Bohl<C>;
            fn $f(self, rhs: Bohl<C>) -> Bohl<C> {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<C: Coefficient> Neg for Bohl<C> {
    type Output = Bohl<C>;

    fn neg(self) -> Bohl<C> {
        -&self
    }
}

impl<C: Coefficient> std::iter::Sum for Bohl<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::default(), |acc, f| &acc + &f)
    }
}
