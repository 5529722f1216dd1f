use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{
    checked_inv, imag_unit, join_signed, real, signed_gaussian, Coefficient, Exponent,
    GaussianRational,
};

/// A monomial `∏ g^e` over generator names, with no zero exponents stored.
///
/// Ordered graded-lexicographically (total degree, then exponents in
/// generator-name order), which is a monomial order and so gives a well
/// defined leading term for exact division.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(BTreeMap<String, u32>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(name: impl Into<String>) -> Self {
        Self::from_powers([(name.into(), 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (String, u32)>) -> Self {
        let mut m = BTreeMap::new();
        for (n, e) in powers {
            if e > 0 {
                *m.entry(n).or_insert(0) += e;
            }
        }
        Self(m)
    }

    pub fn powers(&self) -> &BTreeMap<String, u32> {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (n, e) in &other.0 {
            *out.entry(n.clone()).or_insert(0) += e;
        }
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.0.clone();
        for (n, e) in &other.0 {
            let have = out.get_mut(n)?;
            match (*have).cmp(e) {
                Ordering::Less => return None,
                Ordering::Equal => {
                    out.remove(n);
                }
                Ordering::Greater => *have -= e,
            }
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let mut a = self.0.iter().peekable();
            let mut b = other.0.iter().peekable();
            loop {
                match (a.peek(), b.peek()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some((na, ea)), Some((nb, eb))) => match na.cmp(nb) {
                        // `a` has a variable earlier in name order that `b` lacks.
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match ea.cmp(eb) {
                            Ordering::Equal => {
                                a.next();
                                b.next();
                            }
                            ord => return ord,
                        },
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(n, e)| {
                if *e == 1 {
                    n.clone()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Polynomial over `Q(i)` in the formal frequency generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GenPoly {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl GenPoly {
    pub fn constant(c: GaussianRational) -> Self {
        let mut p = Self::default();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(name: impl Into<String>) -> Self {
        Self::monomial(Monomial::var(name), GaussianRational::one())
    }

    pub fn monomial(m: Monomial, c: GaussianRational) -> Self {
        let mut p = Self::default();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, GaussianRational)>) -> Self {
        let mut p = Self::default();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, GaussianRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> GaussianRational {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    /// `self += a·b` without building the product separately.
    pub fn add_product(&mut self, a: &GenPoly, b: &GenPoly) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), ca * cb);
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &GenPoly) -> Option<GenPoly> {
        let (lead_m, lead_c) = divisor.leading_term()?;
        let lead_inv = checked_inv(lead_c).ok()?;
        let mut rem = self.clone();
        let mut quot = GenPoly::default();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lead_m)?;
            let qc = c * &lead_inv;
            let step = GenPoly::monomial(qm, qc);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Some(quot)
    }
}

impl Zero for GenPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for GenPoly {
    fn one() -> Self {
        Self::constant(GaussianRational::one())
    }
}

impl Add for &GenPoly {
    type Output = GenPoly;

    fn add(self, rhs: &GenPoly) -> GenPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GenPoly {
    type Output = GenPoly;

    fn sub(self, rhs: &GenPoly) -> GenPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &GenPoly {
    type Output = GenPoly;

    fn mul(self, rhs: &GenPoly) -> GenPoly {
        let mut out = GenPoly::default();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &GenPoly {
    type Output = GenPoly;

    fn neg(self) -> GenPoly {
        GenPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for GenPoly {
            type Output = GenPoly;
            fn $f(self, rhs: GenPoly) -> GenPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for GenPoly {
    type Output = GenPoly;

    fn neg(self) -> GenPoly {
        -&self
    }
}

impl GenPoly {
    /// Signed items, highest monomial first: `(false, "3*w1^2")`, `(true, "i*w2")`.
    fn signed_items(&self) -> Vec<(bool, String)> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let (neg, mag) = signed_gaussian(c);
                if m.is_one() {
                    (neg, mag)
                } else if mag == "1" {
                    (neg, m.to_string())
                } else {
                    (neg, format!("{mag}*{m}"))
                }
            })
            .collect()
    }
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_signed(&self.signed_items()))
    }
}

impl Coefficient for GenPoly {
    fn from_gaussian(c: GaussianRational) -> Self {
        GenPoly::constant(c)
    }

    fn to_genpoly(&self) -> GenPoly {
        self.clone()
    }

    fn as_gaussian(&self) -> Option<GaussianRational> {
        self.is_constant().then(|| self.constant_term())
    }

    fn generator_names(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self
            .terms
            .keys()
            .flat_map(|m| m.0.keys().map(String::as_str))
            .collect();
        names.sort_unstable();
        names.dedup();
        names
    }

    fn signed_factor(&self) -> (bool, String) {
        let items = self.signed_items();
        match items.len() {
            0 => (false, "0".to_string()),
            1 => items.into_iter().next().unwrap(),
            _ => (false, format!("({})", join_signed(&items))),
        }
    }
}

impl GenPoly {
    /// `λ = growth + i·(r + Σ c_g g)` as the polynomial `growth + i·r + Σ i·c_g·g`.
    pub fn from_exponent(e: &Exponent) -> Self {
        let mut p = GenPoly::constant(GaussianRational::new(
            e.growth.clone(),
            e.freq.rational_part().clone(),
        ));
        for (name, c) in e.freq.generator_coords() {
            p.add_term(Monomial::var(name.clone()), imag_unit() * real(c.clone()));
        }
        p
    }
}
