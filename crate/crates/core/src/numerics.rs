//! Floating-point evaluation and grid probes: sampling, sup-norm estimates,
//! ε-translation search, lower-bound sequences for AP functions and growth
//! probes for unbounded ones.
//!
//! Everything is generic over [`Float`]. Generators have to be bound to
//! positive reals first; [`BindingEnv::primes`] binds them to square roots
//! of distinct primes, which are Q-linearly independent. Grid estimates are
//! lower bounds only; [`Bohl::is_bounded`] is the exact test.

// Negated comparisons below are meant to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::{Float, ToPrimitive};

use crate::bohl::Bohl;
use crate::error::{Error, Result};
use crate::scalar::{Coefficient, Rational};

/// Default grid density, in points per unit length.
pub const DEFAULT_DENSITY: f64 = 1000.0;

fn cast<T: Float>(x: f64) -> T {
    T::from(x).expect("f64 fits every float type")
}

fn rational_to<T: Float>(q: &Rational) -> T {
    cast(q.to_f64().unwrap_or(f64::NAN))
}

/// Numeric values for frequency generators.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BindingEnv<T> {
    values: BTreeMap<String, T>,
}

impl<T: Float> BindingEnv<T> {
    pub fn new() -> Self {
        Self {
            values: BTreeMap::new(),
        }
    }

    pub fn bind(&mut self, name: impl Into<String>, value: T) -> Result<()> {
        let name = name.into();
        if !(value > T::zero()) {
            return Err(Error::NonPositiveBinding {
                value: value
                    .to_f64()
                    .map_or_else(|| "NaN".into(), |v| v.to_string()),
                name,
            });
        }
        self.values.insert(name, value);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<T> {
        self.values.get(name).copied()
    }

    pub fn values(&self) -> &BTreeMap<String, T> {
        &self.values
    }

    /// Binds the k-th name, in natural order (`w2` before `w10`), to the
    /// square root of the k-th prime.
    pub fn primes<'a>(names: impl IntoIterator<Item = &'a str>) -> Self {
        let mut names: Vec<&str> = names.into_iter().collect();
        names.sort_by_key(|n| natural_key(n));
        names.dedup();
        let values = names
            .iter()
            .zip(primes(names.len()))
            .map(|(n, p)| (n.to_string(), cast::<T>(p as f64).sqrt()))
            .collect();
        Self { values }
    }

    /// [`BindingEnv::primes`] over the generators of `f`.
    pub fn primes_for<C: Coefficient>(f: &Bohl<C>) -> Self {
        let gens = f.generators();
        Self::primes(gens.iter().map(String::as_str))
    }

    /// Adds prime bindings for generators of `f` that are still unbound,
    /// continuing the prime sequence after the explicit bindings.
    pub fn fill_primes<C: Coefficient>(&mut self, f: &Bohl<C>) {
        let defaults = Self::primes_for(f);
        for (name, value) in defaults.values {
            self.values.entry(name).or_insert(value);
        }
    }
}

fn natural_key(name: &str) -> (String, u128, String) {
    let digits = name.len() - name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (prefix, suffix) = name.split_at(name.len() - digits);
    (
        prefix.to_string(),
        suffix.parse().unwrap_or(0),
        name.to_string(),
    )
}

fn primes(count: usize) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::with_capacity(count);
    let mut candidate = 2;
    while out.len() < count {
        if out
            .iter()
            .take_while(|&&p| p * p <= candidate)
            .all(|p| candidate % p != 0)
        {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

/// A Bohl function with every coefficient and exponent reduced to floats,
/// in canonical term order.
#[derive(Debug, Clone)]
pub struct Compiled<T> {
    terms: Vec<(Complex<T>, i32, T, T)>,
}

impl<T: Float> Compiled<T> {
    pub fn new<C: Coefficient>(f: &Bohl<C>, env: &BindingEnv<T>) -> Result<Self> {
        let lookup = |name: &str| {
            env.get(name)
                .ok_or_else(|| Error::UnboundGenerator(name.to_string()))
        };
        let mut terms = Vec::with_capacity(f.len());
        for term in f.terms() {
            let mut coeff = Complex::new(T::zero(), T::zero());
            for (mono, c) in term.coeff.to_genpoly().terms() {
                let mut x = Complex::new(rational_to::<T>(&c.re), rational_to::<T>(&c.im));
                for (name, &p) in mono.powers() {
                    x = x * lookup(name)?.powi(p as i32);
                }
                coeff = coeff + x;
            }
            let mut omega = rational_to::<T>(term.exponent.freq.rational_part());
            for (name, c) in term.exponent.freq.generator_coords() {
                omega = omega + rational_to::<T>(c) * lookup(name)?;
            }
            let growth = rational_to::<T>(&term.exponent.growth);
            terms.push((coeff, term.power as i32, growth, omega));
        }
        Ok(Self { terms })
    }

    pub fn eval(&self, t: T) -> Complex<T> {
        self.terms.iter().fold(
            Complex::new(T::zero(), T::zero()),
            |acc, (c, k, sigma, omega)| {
                acc + *c * Complex::from_polar((*sigma * t).exp() * t.powi(*k), *omega * t)
            },
        )
    }
}

/// `f(t)` in floating point.
pub fn evaluate<T: Float, C: Coefficient>(
    f: &Bohl<C>,
    t: T,
    env: &BindingEnv<T>,
) -> Result<Complex<T>> {
    Ok(Compiled::new(f, env)?.eval(t))
}

/// Evaluations at strictly increasing `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSeries<T> {
    pub points: Vec<(T, Complex<T>)>,
}

impl<T: Float + std::fmt::Display> SampleSeries<T> {
    /// `t,re,im` with one row per point.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,re,im\n");
        for (t, v) in &self.points {
            out.push_str(&format!("{t},{},{}\n", v.re, v.im));
        }
        out
    }
}

/// `n + 1` equispaced points of `[t0, t1]`, endpoints exact.
fn grid<T: Float>(t0: T, t1: T, n: usize) -> Result<impl Iterator<Item = T>> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "grid needs at least one interval".into(),
        ));
    }
    if !(t0 < t1) {
        return Err(Error::InvalidArgument(
            "interval must satisfy t0 < t1".into(),
        ));
    }
    let nf: T = cast(n as f64);
    Ok((0..=n).map(move |k| {
        if k == n {
            t1
        } else {
            t0 + (t1 - t0) * cast::<T>(k as f64) / nf
        }
    }))
}

pub fn sample<T: Float, C: Coefficient>(
    f: &Bohl<C>,
    t0: T,
    t1: T,
    n: usize,
    env: &BindingEnv<T>,
) -> Result<SampleSeries<T>> {
    let compiled = Compiled::new(f, env)?;
    let points = grid(t0, t1, n)?.map(|t| (t, compiled.eval(t))).collect();
    Ok(SampleSeries { points })
}

/// `max |f|` over the grid of [`sample`]; a lower bound for the sup on `[t0, t1]`.
pub fn sup_norm_estimate<T: Float, C: Coefficient>(
    f: &Bohl<C>,
    t0: T,
    t1: T,
    n: usize,
    env: &BindingEnv<T>,
) -> Result<T> {
    let compiled = Compiled::new(f, env)?;
    Ok(grid(t0, t1, n)?.fold(T::zero(), |m, t| m.max(compiled.eval(t).norm())))
}

fn require_ap<C: Coefficient>(f: &Bohl<C>) -> Result<()> {
    if f.is_ap_form() {
        Ok(())
    } else {
        Err(Error::NotApForm(f.to_string()))
    }
}

/// Parameters of [`translation_number_search`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TranslationSearch<T> {
    pub eps: T,
    /// Candidate range `[a, b]`.
    pub window: (T, T),
    /// Number of intervals in the candidate grid.
    pub grid: usize,
    /// Probes are taken on `[-probe_range, probe_range]`.
    pub probe_range: T,
    /// Number of intervals in the probe grid.
    pub probe_points: usize,
}

/// Candidate `τ` in the window with `max_t |f(t) - f(t+τ)| < eps` over the
/// probe grid.
pub fn translation_number_search<T: Float, C: Coefficient>(
    f: &Bohl<C>,
    params: &TranslationSearch<T>,
    env: &BindingEnv<T>,
) -> Result<Vec<T>> {
    require_ap(f)?;
    if !(params.eps > T::zero()) {
        return Err(Error::InvalidArgument("eps must be positive".into()));
    }
    let (a, b) = params.window;
    if !(a <= b) || !(params.probe_range > T::zero()) {
        return Err(Error::InvalidArgument("empty window or probe range".into()));
    }
    let compiled = Compiled::new(f, env)?;
    let probes: Vec<(T, Complex<T>)> =
        grid(-params.probe_range, params.probe_range, params.probe_points)?
            .map(|t| (t, compiled.eval(t)))
            .collect();
    let candidates: Vec<T> = if a == b {
        vec![a]
    } else {
        grid(a, b, params.grid)?.collect()
    };
    Ok(candidates
        .into_iter()
        .filter(|&tau| {
            probes
                .iter()
                .all(|&(t, v)| (v - compiled.eval(t + tau)).norm() < params.eps)
        })
        .collect())
}

/// Parameters of [`lower_bound_sequence`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowerBoundSearch<T> {
    /// `t_*` is the grid maximiser of `|f|` on `[0, star_range]`.
    pub star_range: T,
    /// Points per unit length for every grid.
    pub density: T,
    /// First window length tried.
    pub window: T,
    /// How often the window length may double before giving up.
    pub max_doublings: u32,
}

impl<T: Float> Default for LowerBoundSearch<T> {
    fn default() -> Self {
        Self {
            star_range: cast(100.0),
            density: cast(DEFAULT_DENSITY),
            window: cast(10.0),
            max_doublings: 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LowerBound<T> {
    pub t_star: T,
    pub eps: T,
    /// The window length `T` that succeeded.
    pub window: T,
    /// `t_k = t_* + τ_k` with `τ_k ∈ [kT, (k+1)T)`.
    pub points: Vec<T>,
}

/// A sequence along which an AP function stays away from zero.
///
/// Takes `t_*` maximising `|f|` on a coarse grid and `eps = |f(t_*)|/2`; in
/// each window `[kT, (k+1)T)` the first grid `τ` with
/// `|f(t_*) - f(t_* + τ)| < eps` gives `t_k = t_* + τ`, where then
/// `|f(t_k)| > eps`. Every point is checked by direct evaluation. The window
/// doubles when some window has no such `τ`.
pub fn lower_bound_sequence<T: Float, C: Coefficient>(
    f: &Bohl<C>,
    k: usize,
    params: &LowerBoundSearch<T>,
    env: &BindingEnv<T>,
) -> Result<LowerBound<T>> {
    require_ap(f)?;
    if f.is_empty() {
        return Err(Error::InvalidArgument(
            "the zero function has no lower bound".into(),
        ));
    }
    if k == 0
        || !(params.density > T::zero())
        || !(params.window > T::zero())
        || !(params.star_range > T::zero())
    {
        return Err(Error::InvalidArgument(
            "K, density, window and star range must be positive".into(),
        ));
    }
    let compiled = Compiled::new(f, env)?;
    let steps = |len: T| {
        (len * params.density)
            .ceil()
            .to_usize()
            .unwrap_or(usize::MAX)
            .max(1)
    };

    let (t_star, peak) = grid(T::zero(), params.star_range, steps(params.star_range))?
        .map(|t| (t, compiled.eval(t)))
        .fold(
            (T::zero(), Complex::new(T::zero(), T::zero())),
            |best, cur| {
                if cur.1.norm() > best.1.norm() {
                    cur
                } else {
                    best
                }
            },
        );
    let eps = peak.norm() / cast(2.0);
    if !(eps > T::zero()) {
        return Err(Error::SearchResolution(
            "|f| vanishes on the whole coarse grid".into(),
        ));
    }

    let mut window = params.window;
    'outer: for _ in 0..=params.max_doublings {
        let m = steps(window);
        let h = window / cast(m as f64);
        let mut points = Vec::with_capacity(k);
        for idx in 0..k {
            let start = window * cast(idx as f64);
            let hit = (0..m)
                .map(|j| t_star + start + h * cast(j as f64))
                .find(|&t| {
                    let v = compiled.eval(t);
                    (peak - v).norm() < eps && v.norm() >= eps
                });
            match hit {
                Some(t) => points.push(t),
                None => {
                    window = window * cast(2.0);
                    continue 'outer;
                }
            }
        }
        return Ok(LowerBound {
            t_star,
            eps,
            window,
            points,
        });
    }
    Err(Error::SearchResolution(format!(
        "no admissible point in some window up to length {}",
        window.to_f64().unwrap_or(f64::NAN) / 2.0
    )))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbePoint<T> {
    pub horizon: T,
    pub sup: T,
}

/// Sup estimates on `[0, T]` for each horizon, `density` grid points per unit.
pub fn unboundedness_probe<T: Float, C: Coefficient>(
    f: &Bohl<C>,
    horizons: &[T],
    density: T,
    env: &BindingEnv<T>,
) -> Result<Vec<ProbePoint<T>>> {
    if horizons.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidArgument(
            "horizons must be strictly increasing".into(),
        ));
    }
    if !(density > T::zero()) {
        return Err(Error::InvalidArgument("density must be positive".into()));
    }
    let compiled = Compiled::new(f, env)?;
    horizons
        .iter()
        .map(|&horizon| {
            let n = (horizon * density)
                .ceil()
                .to_usize()
                .unwrap_or(usize::MAX)
                .max(1);
            let sup =
                grid(T::zero(), horizon, n)?.fold(T::zero(), |m, t| m.max(compiled.eval(t).norm()));
            Ok(ProbePoint { horizon, sup })
        })
        .collect()
}
