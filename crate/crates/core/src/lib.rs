//! Exact arithmetic for Bohl functions, finite sums `Σ c·t^k·e^{λt}` with
//! rational growth and frequencies in a free Q-module over named generators,
//! together with their Laplace transforms, Bézout witness families and
//! floating-point diagnostics.

mod error;

pub mod bohl;
pub mod cli;
pub mod json;
pub mod laplace;
pub mod numerics;
pub mod scalar;
pub mod syntax;
pub mod witness;

pub use bohl::{Bohl, BohlFunction, BohlTuple, SymbolicBohl, Term};
pub use error::{Error, Result};
pub use laplace::{PartialFractionForm, PartialFractions, RationalFunction};
pub use scalar::{Coefficient, Exponent, FreqVector, GaussianRational, GenPoly, Rational};
