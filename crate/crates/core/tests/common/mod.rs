//! Random inputs shared by the integration tests.
//!
//! Exponents are drawn from small pools over the generators `w1`, `w2`,
//! `w3` so that sums and products of random functions hit the same keys
//! often, including keys that only collide after dropping the growth.

#![allow(dead_code)]

use bohl::bohl::Term;
use bohl::scalar::{gaussian, rational, Exponent, FreqVector, GaussianRational, Rational};
use bohl::BohlFunction;
use num_traits::Zero;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const GENERATORS: [&str; 3] = ["w1", "w2", "w3"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut impl Rng) -> Rational {
    rational(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

pub fn gaussian_coeff(rng: &mut impl Rng) -> GaussianRational {
    loop {
        let c = gaussian(small_rational(rng), small_rational(rng));
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn frequency(rng: &mut impl Rng, with_generators: bool) -> FreqVector {
    let rat = rational(rng.gen_range(-2..=2), rng.gen_range(1..=2));
    let mut gens = Vec::new();
    if with_generators {
        for name in GENERATORS {
            if rng.gen_bool(0.3) {
                let c = *[-2, -1, 1, 2].choose(rng).unwrap();
                gens.push((name.to_string(), rational(c, *[1, 2].choose(rng).unwrap())));
            }
        }
    }
    FreqVector::from_parts(rat, gens)
}

pub fn exponent(rng: &mut impl Rng, with_generators: bool) -> Exponent {
    let growth = *[-1, 0, 0, 1, 2].choose(rng).unwrap();
    Exponent::new(
        rational(growth, *[1, 2].choose(rng).unwrap()),
        frequency(rng, with_generators),
    )
}

/// A pool of `size` exponents; terms drawn from it collide by construction.
pub fn exponent_pool(rng: &mut impl Rng, size: usize, with_generators: bool) -> Vec<Exponent> {
    (0..size).map(|_| exponent(rng, with_generators)).collect()
}

pub fn function_from_pool(
    rng: &mut impl Rng,
    pool: &[Exponent],
    max_terms: usize,
    max_power: u32,
) -> BohlFunction {
    let n = rng.gen_range(0..=max_terms);
    BohlFunction::normalize((0..n).map(|_| {
        let e = pool.choose(rng).unwrap().clone();
        Term::new(gaussian_coeff(rng), rng.gen_range(0..=max_power), e)
    }))
}

pub fn function(rng: &mut impl Rng, max_terms: usize) -> BohlFunction {
    let pool = exponent_pool(rng, 4, true);
    function_from_pool(rng, &pool, max_terms, 3)
}

/// Same, with rational frequencies only.
pub fn rational_function(rng: &mut impl Rng, max_terms: usize) -> BohlFunction {
    let pool = exponent_pool(rng, 4, false);
    function_from_pool(rng, &pool, max_terms, 3)
}

pub fn ap_function(rng: &mut impl Rng, max_terms: usize) -> BohlFunction {
    let n = rng.gen_range(1..=max_terms);
    BohlFunction::normalize((0..n).map(|_| {
        Term::new(
            gaussian_coeff(rng),
            0,
            Exponent::new(Rational::zero(), frequency(rng, true)),
        )
    }))
}

/// A pair whose terms share frequencies but differ in growth and power, so
/// that distinct keys merge under the AP projection.
pub fn colliding_pair(rng: &mut impl Rng) -> (BohlFunction, BohlFunction) {
    let freqs: Vec<FreqVector> = (0..3).map(|_| frequency(rng, true)).collect();
    let mut side = || {
        let n = rng.gen_range(1..=5);
        BohlFunction::normalize((0..n).map(|_| {
            let growth = rational(rng.gen_range(-2..=2), 2);
            let freq = freqs.choose(rng).unwrap().clone();
            Term::new(
                gaussian_coeff(rng),
                rng.gen_range(0..=2),
                Exponent::new(growth, freq),
            )
        }))
    };
    let f = side();
    let g = side();
    (f, g)
}

/// Proptest strategy wrapping the seeded generators.
pub fn arb<T: std::fmt::Debug>(make: fn(&mut ChaCha8Rng) -> T) -> impl Strategy<Value = T> {
    any::<u64>().prop_map(move |seed| make(&mut rng(seed)))
}

pub fn arb_function() -> impl Strategy<Value = BohlFunction> {
    arb(|r| function(r, 6))
}

pub fn arb_ap_function() -> impl Strategy<Value = BohlFunction> {
    arb(|r| ap_function(r, 5))
}

pub fn arb_pair() -> impl Strategy<Value = (BohlFunction, BohlFunction)> {
    arb(colliding_pair)
}

/// `Σ |c|·|t|^k·e^{σt}` with generators bound, a scale for float error.
pub fn magnitude(f: &BohlFunction, t: f64) -> f64 {
    use num_traits::ToPrimitive;
    f.terms()
        .map(|term| {
            let c = term.coeff;
            let re = c.re.to_f64().unwrap();
            let im = c.im.to_f64().unwrap();
            re.hypot(im)
                * t.abs().powi(term.power as i32)
                * (term.exponent.growth.to_f64().unwrap() * t).exp()
        })
        .sum()
}
