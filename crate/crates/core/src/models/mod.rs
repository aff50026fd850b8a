//! Exact finite realizations of a one-parameter isometry group.
//!
//! Both backends store a vector as a finite list of coefficients attached to
//! real frequencies. The generator `D` acts as multiplication by `iλ_j`, so the
//! group is `e^{tD}: c_j ↦ e^{iλ_j t} c_j` and `‖D^k f‖` is computed exactly.
//! Read with its self-adjoint part `λ_j`, the same model is the Hilbert-space
//! setting `e^{itA}` with `A` self-adjoint; no separate convention is needed.
//!
//! * [`SpectralState`]: ℓ² norm over a finite real spectrum.
//! * [`ExpSumSignal`]: a bandlimited exponential sum under translation with a
//!   bracketed sup norm (grid lower bound, coefficient-sum upper bound).
//!
//! Only these two norms are realized; other Banach norms are not modelled.

mod expsum;
mod functional;
mod spectral;

pub use expsum::{ExpSumSignal, ExpSumSignalFile, NormBracket};
pub use functional::DualFunctional;
pub use spectral::{SpectralState, SpectralStateFile, Spectrum};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linear::Linear;

/// Default overflow guard for complexified evolution is `GUARD_SCALE / σ_f`.
pub const GUARD_SCALE: f64 = 50.0;

/// `i^k` for a nonnegative power.
pub(crate) fn i_pow(k: u32) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// A vector of an exact group model.
///
/// Implementors supply the frequency list, the norm and the pairing; the group
/// action, its complexification and the generator are shared.
pub trait GroupVector: Linear + Send + Sync {
    /// Short backend name used in diagnostics.
    const BACKEND: &'static str;

    /// Frequencies `λ_j` (spectral) or `ω_j` (translation), aligned with
    /// [`Linear::components`].
    fn frequencies(&self) -> &[f64];

    fn norm(&self) -> f64;

    /// `⟨f, g*⟩`.
    fn pair(&self, functional: &DualFunctional) -> Result<Complex64>;

    /// `e^{tD} f`.
    fn evolve(&self, t: f64) -> Self {
        let coeffs = self
            .components()
            .iter()
            .zip(self.frequencies())
            .map(|(c, &lambda)| c * Complex64::from_polar(1.0, lambda * t))
            .collect();
        self.with_components(coeffs)
    }

    /// `e^{zD} f` for complex `z`, guarded by the default `50/σ_f`.
    fn evolve_complex(&self, z: Complex64) -> Result<Self> {
        self.evolve_complex_guarded(z, self.default_guard())
    }

    /// `e^{zD} f` with an explicit bound on `|Im z|`.
    fn evolve_complex_guarded(&self, z: Complex64, guard: f64) -> Result<Self> {
        if !(z.im.abs() <= guard) {
            return Err(Error::OverflowGuard {
                im: z.im.abs(),
                guard,
            });
        }
        let coeffs = self
            .components()
            .iter()
            .zip(self.frequencies())
            .map(|(c, &lambda)| c * Complex64::from_polar((-lambda * z.im).exp(), lambda * z.re))
            .collect();
        Ok(self.with_components(coeffs))
    }

    fn default_guard(&self) -> f64 {
        let sigma = self.spectral_type();
        if sigma > 0.0 {
            GUARD_SCALE / sigma
        } else {
            f64::INFINITY
        }
    }

    /// `D^k f`: coefficients multiplied by `(iλ_j)^k`.
    fn apply_generator(&self, k: u32) -> Self {
        let phase = i_pow(k);
        let coeffs = self
            .components()
            .iter()
            .zip(self.frequencies())
            .map(|(c, &lambda)| c * phase * lambda.powi(k as i32))
            .collect();
        self.with_components(coeffs)
    }

    /// `σ_f`: the largest `|λ_j|` carrying a nonzero coefficient, 0 for `f = 0`.
    fn spectral_type(&self) -> f64 {
        self.components()
            .iter()
            .zip(self.frequencies())
            .filter(|(c, _)| **c != Complex64::new(0.0, 0.0))
            .map(|(_, l)| l.abs())
            .fold(0.0, f64::max)
    }

    /// Whether `f ∈ B_σ(D)`, i.e. the support lies in `[-σ, σ]`.
    fn bernstein_membership(&self, sigma: f64) -> bool {
        self.components()
            .iter()
            .zip(self.frequencies())
            .all(|(c, l)| *c == Complex64::new(0.0, 0.0) || l.abs() <= sigma)
    }
}
