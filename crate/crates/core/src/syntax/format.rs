use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::bohl::Bohl;
use crate::scalar::{
    fmt_rational, join_signed, signed_gaussian, Coefficient, Exponent, GaussianRational,
};

/// Signed summands of `λ`: growth, rational frequency, then generators.
pub fn exponent_items(e: &Exponent) -> Vec<(bool, String)> {
    let mut items = Vec::new();
    if !e.growth.is_zero() {
        items.push((e.growth.is_negative(), fmt_rational(&e.growth.abs())));
    }
    let r = e.freq.rational_part();
    if !r.is_zero() {
        items.push(signed_gaussian(&GaussianRational::new(
            Zero::zero(),
            r.clone(),
        )));
    }
    for (name, c) in e.freq.generator_coords() {
        let body = if c.abs().is_one() {
            format!("i*{name}")
        } else {
            format!("{}*i*{name}", fmt_rational(&c.abs()))
        };
        items.push((c.is_negative(), body));
    }
    items
}

/// `exp(...)` argument for `λ`, including the trailing `*t`; `None` for `λ = 0`.
pub fn exponent_expr(e: &Exponent) -> Option<String> {
    let items = exponent_items(e);
    match items.as_slice() {
        [] => None,
        [(neg, body)] => {
            let sign = if *neg { "-" } else { "" };
            Some(if body == "1" {
                format!("{sign}t")
            } else {
                format!("{sign}{body}*t")
            })
        }
        _ => Some(format!("({})*t", join_signed(&items))),
    }
}

impl<C: Coefficient> fmt::Display for Bohl<C> {
    /// Canonical rendering in term order, e.g. `1/2*exp((-1 + 3/2*i)*t)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<(bool, String)> = self
            .terms()
            .map(|term| {
                let (neg, mag) = term.coeff.signed_factor();
                let mut factors = Vec::new();
                match term.power {
                    0 => {}
                    1 => factors.push("t".to_string()),
                    k => factors.push(format!("t^{k}")),
                }
                if let Some(arg) = exponent_expr(&term.exponent) {
                    factors.push(format!("exp({arg})"));
                }
                let body = if factors.is_empty() {
                    mag
                } else if mag == "1" {
                    factors.join("*")
                } else {
                    format!("{mag}*{}", factors.join("*"))
                };
                (neg, body)
            })
            .collect();
        write!(f, "{}", join_signed(&items))
    }
}
