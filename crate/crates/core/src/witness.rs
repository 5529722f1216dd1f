//! Explicit unimodular tuples built from Q-independent frequencies, their
//! Bézout inverses, and the Ψ-transfer step that carries a reduction of an
//! AP-form tuple back into AP form.
//!
//! With `f_j = e^{is·λ_{2j-1}t} + e^{is·λ_{2j}t} - 1` for `j = 1..2N` and
//! `g = 1/4 - Σ_{j≤N} f_j·f_{N+j}`, the tuple `(f_1, …, f_N, g)` satisfies
//! `Σ f_j·(4f_{N+j}) + g·4 = 1`.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::One;

use crate::bohl::{BohlFunction, BohlTuple};
use crate::error::{Error, Result};
use crate::scalar::{
    gaussian_int, int, is_valid_generator_name, rational, real, Exponent, FreqVector,
};

static FRESH: AtomicU64 = AtomicU64::new(0);

/// Parameters of the witness family: the tuple size `N`, the power `s`, and
/// `4N` pairwise distinct generator names standing for Q-independent
/// positive frequencies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSpec {
    n: usize,
    s: u32,
    generators: Vec<String>,
}

impl WitnessSpec {
    /// Generators `w1..w{4N}`.
    pub fn new(n: usize, s: u32) -> Result<Self> {
        check_params(n, s)?;
        Self::with_generators(n, s, (1..=4 * n).map(|k| format!("w{k}")).collect())
    }

    /// Generators never handed out before in this process, so witnesses from
    /// separate calls share no frequency.
    pub fn fresh(n: usize, s: u32) -> Result<Self> {
        check_params(n, s)?;
        Self::with_generators(n, s, fresh_names(4 * n))
    }

    pub fn with_generators(n: usize, s: u32, generators: Vec<String>) -> Result<Self> {
        check_params(n, s)?;
        check_names(&generators, 4 * n)?;
        Ok(Self { n, s, generators })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    /// `f_1, …, f_{2N}`.
    fn factors(&self) -> Vec<BohlFunction> {
        self.generators
            .chunks(2)
            .map(|pair| two_tone(&pair[0], &pair[1], self.s))
            .collect()
    }
}

fn check_params(n: usize, s: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    if s == 0 {
        return Err(Error::InvalidArgument("s must be positive".into()));
    }
    Ok(())
}

fn check_names(names: &[String], expected: usize) -> Result<()> {
    if names.len() != expected {
        return Err(Error::ArityMismatch {
            expected,
            got: names.len(),
        });
    }
    let mut seen = BTreeSet::new();
    for name in names {
        if !is_valid_generator_name(name) {
            return Err(Error::InvalidGeneratorName(name.clone()));
        }
        if !seen.insert(name) {
            return Err(Error::DuplicateGenerator(name.clone()));
        }
    }
    Ok(())
}

/// `count` names of the form `lam{k}` from a process-wide counter.
pub fn fresh_names(count: usize) -> Vec<String> {
    let start = FRESH.fetch_add(count as u64, Ordering::Relaxed);
    (start..start + count as u64)
        .map(|k| format!("lam{k}"))
        .collect()
}

/// `e^{is·a·t} + e^{is·b·t} - 1`.
fn two_tone(a: &str, b: &str, s: u32) -> BohlFunction {
    let tone = |name: &str| {
        let freq = FreqVector::generator(name, int(i64::from(s)));
        BohlFunction::exp(Exponent::new(int(0), freq))
    };
    &(&tone(a) + &tone(b)) - &BohlFunction::one()
}

/// `(f_1, …, f_N, g)`.
pub fn bsr_witness(spec: &WitnessSpec) -> BohlTuple {
    let f = spec.factors();
    let n = spec.n;
    let quarter = BohlFunction::constant(real(rational(1, 4)));
    let products: BohlFunction = (0..n).map(|j| &f[j] * &f[n + j]).sum();
    let mut entries: Vec<BohlFunction> = f[..n].to_vec();
    entries.push(&quarter - &products);
    BohlTuple::new(entries).expect("N > 0")
}

/// `(4f_{N+1}, …, 4f_{2N}, 4)`.
pub fn bsr_witness_inverse(spec: &WitnessSpec) -> BohlTuple {
    let f = spec.factors();
    let four = gaussian_int(4, 0);
    let mut entries: Vec<BohlFunction> = f[spec.n..].iter().map(|fj| fj.scale(&four)).collect();
    entries.push(BohlFunction::constant(four));
    BohlTuple::new(entries).expect("N > 0")
}

/// `(f_1, …, f_n)` with `f_j = e^{iλ_{2j-1}t} + e^{iλ_{2j}t} - 1`.
pub fn tsr_witness(n: usize, generators: &[String]) -> Result<BohlTuple> {
    check_params(n, 1)?;
    check_names(generators, 2 * n)?;
    let entries = generators
        .chunks(2)
        .map(|pair| two_tone(&pair[0], &pair[1], 1))
        .collect();
    BohlTuple::new(entries)
}

/// [`tsr_witness`] on fresh generators.
pub fn tsr_witness_fresh(n: usize) -> Result<BohlTuple> {
    tsr_witness(n, &fresh_names(2 * n))
}

/// Whether `Σ f_j·g_j = 1` exactly.
pub fn bezout_verify(f: &BohlTuple, g: &BohlTuple) -> Result<bool> {
    Ok(f.dot(g)?.is_one())
}

fn check_reduction_shape(f: &BohlTuple, h: &BohlTuple, x: &BohlTuple) -> Result<()> {
    for entry in f.iter() {
        if !entry.is_ap_form() {
            return Err(Error::NotApForm(entry.to_string()));
        }
    }
    if f.len() != h.len() + 1 {
        return Err(Error::LengthMismatch {
            left: f.len() - 1,
            right: h.len(),
        });
    }
    if h.len() != x.len() {
        return Err(Error::LengthMismatch {
            left: h.len(),
            right: x.len(),
        });
    }
    Ok(())
}

/// `Σ (f_j + h_j·g)·x_j` for `F = (f_1, …, f_N, g)`.
pub fn reduction_sum(f: &BohlTuple, h: &BohlTuple, x: &BohlTuple) -> Result<BohlFunction> {
    check_reduction_shape(f, h, x)?;
    let g = &f[f.len() - 1];
    Ok((0..h.len()).map(|j| &(&f[j] + &(&h[j] * g)) * &x[j]).sum())
}

/// Projects a reduction `(H, X)` of the AP-form tuple `F = (f_1, …, f_N, g)`
/// through Ψ.
///
/// Returns `(Ψ(H), Ψ(X), check)` where `check` holds when the hypothesis
/// `Σ (f_j + h_j·g)·x_j = 1` and the projected identity
/// `Σ (f_j + Ψ(h_j)·g)·Ψ(x_j) = 1` are both true.
pub fn push_reduction_through_psi(
    f: &BohlTuple,
    h: &BohlTuple,
    x: &BohlTuple,
) -> Result<(BohlTuple, BohlTuple, bool)> {
    let hypothesis = reduction_sum(f, h, x)?.is_one();
    let ph = h.map(BohlFunction::psi);
    let px = x.map(BohlFunction::psi);
    let projected = reduction_sum(f, &ph, &px)?.is_one();
    Ok((ph, px, hypothesis && projected))
}

/// `Ψ(Σ (f_j + h_j·g)·x_j) = Σ (f_j + Ψ(h_j)·g)·Ψ(x_j)`, which holds for any
/// `H`, `X` because Ψ is a ring homomorphism fixing AP-form `F`.
pub fn psi_transfer_holds(f: &BohlTuple, h: &BohlTuple, x: &BohlTuple) -> Result<bool> {
    let lhs = reduction_sum(f, h, x)?.psi();
    let rhs = reduction_sum(f, &h.map(BohlFunction::psi), &x.map(BohlFunction::psi))?;
    Ok(lhs == rhs)
}
