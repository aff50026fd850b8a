//! Sampling, interpolation and inverse-problem formulas for one-parameter
//! groups of isometries `e^{tD}`, evaluated on exact finite group models.
//!
//! A vector `f` whose spectrum lies in `[-σ, σ]` has a trajectory `e^{tD}f`
//! that is an entire function of exponential type `σ`, bounded on the real
//! line. Classical sampling theorems for such functions then lift to
//! vector-valued identities:
//!
//! * [`boas`]: `D^r f` as a weighted series of samples `e^{sD}f`.
//! * [`regular`]: the trajectory and `f` itself from equally spaced samples,
//!   the Valiron–Tschakaloff series and derivative sampling.
//! * [`irregular`]: perturbed nodes `t_n` with `sup|t_n - n| < 1/4`, the
//!   truncated canonical product and its Lagrange-type series.
//! * [`schrodinger`]: recovery of a bandlimited initial state from time
//!   samples of `u(t) = e^{itA}f`.
//! * [`diagnostics`]: spectral type, Stein–Kolmogorov, modulus of continuity
//!   and Jackson-type ratios.
//!
//! The backends in [`models`] make every identity checkable against an exact
//! oracle.

// `!(x > 0.0)` guards reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod boas;
pub mod coefficients;
pub mod convergence;
pub mod diagnostics;
pub mod error;
pub mod irregular;
pub mod linear;
pub mod models;
pub mod random;
pub mod regular;
pub mod report;
pub mod schrodinger;
pub mod sinc;
pub mod summation;
pub mod trajectory;

pub use error::{Error, Result};
pub use linear::Linear;
pub use models::{DualFunctional, ExpSumSignal, GroupVector, SpectralState, Spectrum};
pub use num_complex::Complex64;
