use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::poly::SPoly;
use super::{fmt_linear_factor, PartialFractionForm, PartialFractions};
use crate::error::{Error, Result};
use crate::scalar::{Coefficient, Exponent, GenPoly};

/// `N(s) / ∏ (s-λ)^{m_λ}` with the denominator kept factored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: SPoly,
    denominator: BTreeMap<Exponent, u32>,
}

impl RationalFunction {
    /// Zero multiplicities are dropped; repeated poles accumulate.
    pub fn new(numerator: SPoly, factors: impl IntoIterator<Item = (Exponent, u32)>) -> Self {
        let mut denominator = BTreeMap::new();
        for (pole, m) in factors {
            if m > 0 {
                *denominator.entry(pole).or_insert(0) += m;
            }
        }
        Self {
            numerator,
            denominator,
        }
    }

    pub fn numerator(&self) -> &SPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BTreeMap<Exponent, u32> {
        &self.denominator
    }

    pub fn denominator_degree(&self) -> usize {
        self.denominator.values().map(|&m| m as usize).sum()
    }

    pub fn expanded_denominator(&self) -> SPoly {
        expand(&self.denominator)
    }

    /// `deg N < deg D`; the zero function counts as strictly proper.
    pub fn is_strictly_proper(&self) -> bool {
        match self.numerator.degree() {
            None => true,
            Some(d) => d < self.denominator_degree(),
        }
    }

    /// Equality as functions of `s`, by cross-multiplying after cancelling
    /// the shared factors.
    pub fn equals(&self, other: &Self) -> bool {
        let mut left = BTreeMap::new();
        let mut right = BTreeMap::new();
        for (pole, &m) in &self.denominator {
            let shared = m.min(other.denominator.get(pole).copied().unwrap_or(0));
            right.insert(pole.clone(), m - shared);
        }
        for (pole, &m) in &other.denominator {
            let shared = m.min(self.denominator.get(pole).copied().unwrap_or(0));
            left.insert(pole.clone(), m - shared);
        }
        &self.numerator * &expand(&left) == &other.numerator * &expand(&right)
    }
}

fn expand(factors: &BTreeMap<Exponent, u32>) -> SPoly {
    factors.iter().fold(SPoly::one(), |acc, (pole, &m)| {
        &acc * &SPoly::linear_factor(pole).pow(m)
    })
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num: Vec<String> = self
            .numerator
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*s"),
                _ => format!("({c})*s^{k}"),
            })
            .collect();
        let num = if num.is_empty() {
            "0".to_string()
        } else {
            num.join(" + ")
        };
        let den: Vec<String> = self
            .denominator
            .iter()
            .map(|(pole, &m)| match m {
                1 => format!("({})", fmt_linear_factor(pole)),
                _ => format!("({})^{m}", fmt_linear_factor(pole)),
            })
            .collect();
        if den.is_empty() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({})", den.join("*"))
        }
    }
}

/// Collects `Σ r/(s-λ)^m` over the common denominator `∏ (s-λ)^{max m}`.
pub fn pf_to_rational<C: Coefficient>(pf: &PartialFractions<C>) -> RationalFunction {
    let mut denominator: BTreeMap<Exponent, u32> = BTreeMap::new();
    for key in pf.terms().keys() {
        let m = denominator.entry(key.pole.clone()).or_insert(0);
        *m = (*m).max(key.order);
    }
    let powers: BTreeMap<&Exponent, SPoly> = denominator
        .iter()
        .map(|(pole, &m)| (pole, SPoly::linear_factor(pole).pow(m)))
        .collect();
    let mut numerator = SPoly::default();
    for (pole, &top) in &denominator {
        // Σ_m r_m·(s-λ)^{M-m} by Horner in (s-λ), then the other poles.
        let factor = SPoly::linear_factor(pole);
        let mut local = SPoly::default();
        for order in 1..=top {
            local = &local * &factor;
            if let Some(r) = pf.terms().get(&super::PoleKey {
                pole: pole.clone(),
                order,
            }) {
                local = &local + &SPoly::constant(r.to_genpoly());
            }
        }
        let rest = powers
            .iter()
            .filter(|(other, _)| **other != pole)
            .fold(local, |acc, (_, p)| &acc * p);
        numerator = &numerator + &rest;
    }
    RationalFunction::new(numerator, denominator)
}

/// Partial fractions with generator-polynomial residues.
///
/// At each pole `λ` of multiplicity `m`, write `u = s - λ` and
/// `N(λ+u) = Q(u)·Σ_j S_j u^j` with `Q(u) = ∏_{μ≠λ} (u + λ - μ)^{m_μ}`; then
/// `S_j` is the residue of `1/(s-λ)^{m-j}`. The `S_j` follow from the
/// recurrence `Q_0·S_j = N_j - Σ_{i≥1} Q_i·S_{j-i}`, where dividing by
/// `Q_0 = ∏ (λ-μ)^{m_μ}` must be exact in the coefficient ring.
pub fn partial_fractions_symbolic(rf: &RationalFunction) -> Result<PartialFractions<GenPoly>> {
    if rf.numerator.is_zero() {
        return Ok(PartialFractions::default());
    }
    if rf.denominator.is_empty() {
        return Err(Error::EmptyDenominator);
    }
    if !rf.is_strictly_proper() {
        return Err(Error::NotStrictlyProper {
            numerator_degree: rf.numerator.degree().unwrap_or(0),
            denominator_degree: rf.denominator_degree(),
        });
    }
    let mut out = PartialFractions::default();
    for (pole, &m) in &rf.denominator {
        let shifted = rf.numerator.taylor_shift(pole);
        let mut q = SPoly::one();
        let mut gaps = Vec::new();
        for (other, &mu) in &rf.denominator {
            if other == pole {
                continue;
            }
            let gap = GenPoly::from_exponent(&(pole - other));
            let factor = SPoly::from_coeffs(vec![gap.clone(), GenPoly::one()]);
            q = &q * &factor.pow(mu);
            gaps.extend(std::iter::repeat_n(gap, mu as usize));
        }
        let mut s: Vec<GenPoly> = Vec::with_capacity(m as usize);
        for j in 0..m as usize {
            let mut acc = shifted.coeff(j);
            for i in 1..=j {
                acc = &acc - &(&q.coeff(i) * &s[j - i]);
            }
            let order = m - j as u32;
            for gap in &gaps {
                acc = acc
                    .exact_div(gap)
                    .ok_or_else(|| Error::ResidueOutsideRing {
                        pole: pole.to_string(),
                        order,
                    })?;
            }
            out.add_term(pole.clone(), order, acc.clone());
            s.push(acc);
        }
    }
    Ok(out)
}

/// Partial fractions with Gaussian-rational residues.
pub fn partial_fractions(rf: &RationalFunction) -> Result<PartialFractionForm> {
    let symbolic = partial_fractions_symbolic(rf)?;
    let mut out = PartialFractionForm::default();
    for (key, r) in symbolic.terms() {
        let r = r.as_gaussian().ok_or_else(|| Error::ResidueOutsideRing {
            pole: key.pole.to_string(),
            order: key.order,
        })?;
        out.add_term(key.pole.clone(), key.order, r);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gaussian_int, int};

    fn c(n: i64) -> GenPoly {
        GenPoly::constant(gaussian_int(n, 0))
    }

    fn re(n: i64) -> Exponent {
        Exponent::real(int(n))
    }

    #[test]
    fn distinct_simple_poles() {
        // 1/((s-1)(s-2)) = -1/(s-1) + 1/(s-2)
        let rf = RationalFunction::new(SPoly::constant(c(1)), [(re(1), 1), (re(2), 1)]);
        let pf = partial_fractions(&rf).unwrap();
        assert_eq!(
            pf,
            PartialFractionForm::from_terms([
                (re(1), 1, gaussian_int(-1, 0)),
                (re(2), 1, gaussian_int(1, 0))
            ])
        );
        assert!(pf_to_rational(&pf).equals(&rf));
    }

    #[test]
    fn repeated_pole() {
        // s/(s-1)^2 = 1/(s-1) + 1/(s-1)^2
        let rf = RationalFunction::new(SPoly::s(), [(re(1), 2)]);
        let pf = partial_fractions(&rf).unwrap();
        assert_eq!(
            pf,
            PartialFractionForm::from_terms([
                (re(1), 1, gaussian_int(1, 0)),
                (re(1), 2, gaussian_int(1, 0))
            ])
        );
        assert_eq!(pf.to_string(), "1/(s - 1) + 1/(s - 1)^2");
    }

    #[test]
    fn improper_and_empty_inputs() {
        let rf = RationalFunction::new(SPoly::s(), [(re(1), 1)]);
        assert!(matches!(
            partial_fractions(&rf),
            Err(Error::NotStrictlyProper { .. })
        ));
        let rf = RationalFunction::new(SPoly::constant(c(1)), []);
        assert_eq!(partial_fractions(&rf), Err(Error::EmptyDenominator));
        let rf = RationalFunction::new(SPoly::default(), []);
        assert!(partial_fractions(&rf).unwrap().is_empty());
    }

    #[test]
    fn generator_gap_leaves_the_constants() {
        // 1/((s - i·w1)·s) has residues ±1/(i·w1).
        let rf = RationalFunction::new(
            SPoly::constant(c(1)),
            [(Exponent::generator("w1"), 1), (Exponent::zero(), 1)],
        );
        assert!(matches!(
            partial_fractions_symbolic(&rf),
            Err(Error::ResidueOutsideRing { .. })
        ));

        // (s - i·w1)/((s - i·w1)·s) = 1/s divides exactly.
        let w = Exponent::generator("w1");
        let num =
            &SPoly::linear_factor(&Exponent::zero()) - &SPoly::constant(GenPoly::from_exponent(&w));
        let rf = RationalFunction::new(num, [(w.clone(), 1), (Exponent::zero(), 1)]);
        let pf = partial_fractions_symbolic(&rf).unwrap();
        assert!(pf_to_rational(&pf).equals(&rf));
    }

    #[test]
    fn equality_up_to_common_factors() {
        let a = RationalFunction::new(SPoly::constant(c(1)), [(re(1), 1)]);
        let b = RationalFunction::new(SPoly::linear_factor(&re(2)), [(re(1), 1), (re(2), 1)]);
        assert!(a.equals(&b));
        let c2 = RationalFunction::new(SPoly::constant(c(2)), [(re(1), 1)]);
        assert!(!a.equals(&c2));
    }
}
