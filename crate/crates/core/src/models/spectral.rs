use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{DualFunctional, GroupVector};
use crate::error::{Error, Result};
use crate::linear::Linear;

/// Finite, strictly increasing list of real eigen-frequencies.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum(Arc<[f64]>);

impl Spectrum {
    pub fn new(lambdas: Vec<f64>) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::EmptySpectrum);
        }
        if let Some(index) = lambdas.iter().position(|l| !l.is_finite()) {
            return Err(Error::UnorderedSpectrum { index });
        }
        if let Some(i) = lambdas.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::UnorderedSpectrum { index: i + 1 });
        }
        Ok(Self(lambdas.into()))
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A vector of the spectral backend: one complex coefficient per eigenvalue,
/// ℓ² norm.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralState {
    spectrum: Spectrum,
    coeffs: Vec<Complex64>,
}

impl SpectralState {
    pub fn new(spectrum: Spectrum, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != spectrum.len() {
            return Err(Error::LengthMismatch {
                what: "coefficients",
                expected: spectrum.len(),
                actual: coeffs.len(),
            });
        }
        if coeffs
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::param("coeffs", "coefficients must be finite"));
        }
        Ok(Self { spectrum, coeffs })
    }

    pub fn from_parts(lambdas: Vec<f64>, coeffs: Vec<Complex64>) -> Result<Self> {
        Self::new(Spectrum::new(lambdas)?, coeffs)
    }

    /// Unit eigenvector for `λ_j`.
    pub fn eigenvector(spectrum: Spectrum, j: usize) -> Result<Self> {
        if j >= spectrum.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: spectrum.len(),
            });
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); spectrum.len()];
        coeffs[j] = Complex64::new(1.0, 0.0);
        Ok(Self { spectrum, coeffs })
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `ln ‖D^k f‖`, evaluated without forming `λ^{2k}` so large `k` cannot
    /// overflow. Returns `-∞` for `f = 0`.
    pub fn generator_log_norm(&self, k: u32) -> f64 {
        let sigma = self.spectral_type();
        if sigma == 0.0 {
            return if k == 0 {
                self.norm().ln()
            } else {
                f64::NEG_INFINITY
            };
        }
        let scaled: f64 = self
            .coeffs
            .iter()
            .zip(self.spectrum.lambdas())
            .filter(|(c, _)| c.norm_sqr() > 0.0)
            .map(|(c, l)| (l.abs() / sigma).powi(2 * k as i32) * c.norm_sqr())
            .sum();
        k as f64 * sigma.ln() + 0.5 * scaled.ln()
    }

    /// `‖D^k f‖^{1/k}` for `k ≥ 1`, computed as `σ_f · (Σ (|λ_j|/σ_f)^{2k} |c_j|²)^{1/(2k)}`.
    pub fn generator_norm_root(&self, k: u32) -> f64 {
        assert!(k >= 1, "root of order zero is undefined");
        let sigma = self.spectral_type();
        if sigma == 0.0 {
            return 0.0;
        }
        let scaled: f64 = self
            .coeffs
            .iter()
            .zip(self.spectrum.lambdas())
            .filter(|(c, _)| c.norm_sqr() > 0.0)
            .map(|(c, l)| (l.abs() / sigma).powi(2 * k as i32) * c.norm_sqr())
            .sum();
        sigma * scaled.powf(1.0 / (2.0 * k as f64))
    }

    /// Best approximation from `B_σ(D)` in the Hilbert norm: coefficients with
    /// `|λ_j| > σ` are zeroed.
    pub fn band_truncate(&self, sigma: f64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(self.spectrum.lambdas())
            .map(|(c, l)| {
                if l.abs() <= sigma {
                    *c
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        self.with_components(coeffs)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.minus(other).norm()
    }
}

impl Linear for SpectralState {
    fn components(&self) -> &[Complex64] {
        &self.coeffs
    }

    fn with_components(&self, components: Vec<Complex64>) -> Self {
        debug_assert_eq!(components.len(), self.spectrum.len());
        Self {
            spectrum: self.spectrum.clone(),
            coeffs: components,
        }
    }
}

impl GroupVector for SpectralState {
    const BACKEND: &'static str = "spectral";

    fn frequencies(&self) -> &[f64] {
        self.spectrum.lambdas()
    }

    fn norm(&self) -> f64 {
        let scale = self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if scale == 0.0 || !scale.is_finite() {
            return scale;
        }
        let s: f64 = self.coeffs.iter().map(|c| (c / scale).norm_sqr()).sum();
        scale * s.sqrt()
    }

    fn pair(&self, functional: &DualFunctional) -> Result<Complex64> {
        match functional {
            DualFunctional::CoefficientProjection { index } => self
                .coeffs
                .get(*index)
                .copied()
                .ok_or(Error::IndexOutOfRange {
                    index: *index,
                    len: self.coeffs.len(),
                }),
            DualFunctional::Vector { weights } => {
                if weights.len() != self.coeffs.len() {
                    return Err(Error::LengthMismatch {
                        what: "functional weights",
                        expected: self.coeffs.len(),
                        actual: weights.len(),
                    });
                }
                Ok(self
                    .coeffs
                    .iter()
                    .zip(weights)
                    .map(|(c, w)| c * w.conj())
                    .sum())
            }
            DualFunctional::PointEvaluation { .. } => Err(Error::BackendMismatch {
                functional: functional.kind(),
                backend: Self::BACKEND,
            }),
        }
    }
}

/// On-disk form: `{"spectrum": [λ...], "coeffs": [[re, im]...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectralStateFile {
    pub spectrum: Vec<f64>,
    pub coeffs: Vec<[f64; 2]>,
}

impl From<&SpectralState> for SpectralStateFile {
    fn from(s: &SpectralState) -> Self {
        Self {
            spectrum: s.spectrum.lambdas().to_vec(),
            coeffs: s.coeffs.iter().map(|c| [c.re, c.im]).collect(),
        }
    }
}

impl TryFrom<SpectralStateFile> for SpectralState {
    type Error = Error;

    fn try_from(file: SpectralStateFile) -> Result<Self> {
        let coeffs = file
            .coeffs
            .iter()
            .map(|[re, im]| Complex64::new(*re, *im))
            .collect();
        SpectralState::from_parts(file.spectrum, coeffs)
    }
}

impl Serialize for SpectralState {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        SpectralStateFile::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SpectralState {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let file = SpectralStateFile::deserialize(deserializer)?;
        SpectralState::try_from(file).map_err(serde::de::Error::custom)
    }
}
