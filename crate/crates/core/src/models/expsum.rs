use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{DualFunctional, GroupVector};
use crate::error::{Error, Result};
use crate::linear::Linear;

/// Two-sided estimate of a sup norm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormBracket {
    /// Maximum of `|f|` over the sampling grid on `[-L, L]`.
    pub lower: f64,
    /// `Σ |c_j|`.
    pub upper: f64,
}

/// `f(x) = Σ c_j e^{iω_j x}` under the translation group `(e^{tD}f)(x) = f(x + t)`.
///
/// The sup norm is not exactly computable; [`GroupVector::norm`] returns the
/// grid supremum over `[-window, window]` and [`ExpSumSignal::norm_bracket`]
/// adds the coefficient-sum upper bound.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpSumSignal {
    freqs: Arc<[f64]>,
    coeffs: Vec<Complex64>,
    window: f64,
    grid_density: f64,
}

impl ExpSumSignal {
    /// Grid density defaults to `max(64, 64·max|ω|/π)` points per unit length.
    pub fn new(freqs: Vec<f64>, coeffs: Vec<Complex64>, window: f64) -> Result<Self> {
        let top = freqs.iter().fold(0.0f64, |m, w| m.max(w.abs()));
        let density = (64.0 * top / PI).ceil().max(64.0);
        Self::with_grid_density(freqs, coeffs, window, density)
    }

    pub fn with_grid_density(
        freqs: Vec<f64>,
        coeffs: Vec<Complex64>,
        window: f64,
        grid_density: f64,
    ) -> Result<Self> {
        if freqs.is_empty() {
            return Err(Error::EmptySpectrum);
        }
        if let Some(index) = freqs.iter().position(|w| !w.is_finite()) {
            return Err(Error::DuplicateFrequency { index });
        }
        for (i, w) in freqs.iter().enumerate() {
            if freqs[..i].contains(w) {
                return Err(Error::DuplicateFrequency { index: i });
            }
        }
        if coeffs.len() != freqs.len() {
            return Err(Error::LengthMismatch {
                what: "coefficients",
                expected: freqs.len(),
                actual: coeffs.len(),
            });
        }
        if !(window > 0.0 && window.is_finite()) {
            return Err(Error::param("window", "must be positive and finite"));
        }
        if !(grid_density > 0.0 && grid_density.is_finite()) {
            return Err(Error::param("grid_density", "must be positive and finite"));
        }
        Ok(Self {
            freqs: freqs.into(),
            coeffs,
            window,
            grid_density,
        })
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn window(&self) -> f64 {
        self.window
    }

    pub fn grid_density(&self) -> f64 {
        self.grid_density
    }

    /// `f(x)`.
    pub fn value_at(&self, x: f64) -> Complex64 {
        self.coeffs
            .iter()
            .zip(self.freqs.iter())
            .map(|(c, &w)| c * Complex64::from_polar(1.0, w * x))
            .sum()
    }

    /// Grid points `-L + i/density`, `i = 0..=2L·density`.
    pub fn grid(&self) -> impl Iterator<Item = f64> + '_ {
        let count = (2.0 * self.window * self.grid_density).ceil() as usize;
        let step = 2.0 * self.window / count as f64;
        (0..=count).map(move |i| -self.window + i as f64 * step)
    }

    pub fn norm_bracket(&self) -> NormBracket {
        NormBracket {
            lower: self.grid_sup(),
            upper: self.coeffs.iter().map(|c| c.norm()).sum(),
        }
    }

    fn grid_sup(&self) -> f64 {
        self.grid()
            .map(|x| self.value_at(x).norm())
            .fold(0.0, f64::max)
    }
}

impl Linear for ExpSumSignal {
    fn components(&self) -> &[Complex64] {
        &self.coeffs
    }

    fn with_components(&self, components: Vec<Complex64>) -> Self {
        debug_assert_eq!(components.len(), self.freqs.len());
        Self {
            freqs: self.freqs.clone(),
            coeffs: components,
            window: self.window,
            grid_density: self.grid_density,
        }
    }
}

impl GroupVector for ExpSumSignal {
    const BACKEND: &'static str = "translation";

    fn frequencies(&self) -> &[f64] {
        &self.freqs
    }

    fn norm(&self) -> f64 {
        self.grid_sup()
    }

    fn pair(&self, functional: &DualFunctional) -> Result<Complex64> {
        match functional {
            DualFunctional::PointEvaluation { x0 } => Ok(self.value_at(*x0)),
            other => Err(Error::BackendMismatch {
                functional: other.kind(),
                backend: Self::BACKEND,
            }),
        }
    }
}

/// On-disk form: `{"freqs": [...], "coeffs": [[re, im]...], "window": L}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExpSumSignalFile {
    pub freqs: Vec<f64>,
    pub coeffs: Vec<[f64; 2]>,
    pub window: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_density: Option<f64>,
}

impl TryFrom<ExpSumSignalFile> for ExpSumSignal {
    type Error = Error;

    fn try_from(file: ExpSumSignalFile) -> Result<Self> {
        let coeffs = file
            .coeffs
            .iter()
            .map(|[re, im]| Complex64::new(*re, *im))
            .collect();
        match file.grid_density {
            Some(d) => ExpSumSignal::with_grid_density(file.freqs, coeffs, file.window, d),
            None => ExpSumSignal::new(file.freqs, coeffs, file.window),
        }
    }
}

impl Serialize for ExpSumSignal {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        ExpSumSignalFile {
            freqs: self.freqs.to_vec(),
            coeffs: self.coeffs.iter().map(|c| [c.re, c.im]).collect(),
            window: self.window,
            grid_density: Some(self.grid_density),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExpSumSignal {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let file = ExpSumSignalFile::deserialize(deserializer)?;
        ExpSumSignal::try_from(file).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn signal() -> ExpSumSignal {
        ExpSumSignal::new(
            vec![-2.5, -0.4, 1.0, 2.8],
            vec![c(0.3, 0.1), c(-0.5, 0.2), c(0.25, -0.6), c(0.1, 0.1)],
            12.0,
        )
        .unwrap()
    }

    #[test]
    fn rejects_duplicates_and_bad_window() {
        assert!(matches!(
            ExpSumSignal::new(vec![1.0, 1.0], vec![c(1.0, 0.0); 2], 1.0),
            Err(Error::DuplicateFrequency { index: 1 })
        ));
        assert!(ExpSumSignal::new(vec![1.0], vec![c(1.0, 0.0)], 0.0).is_err());
    }

    #[test]
    fn default_density_covers_band() {
        let s = signal();
        assert!(s.grid_density() >= 64.0 * 2.8 / PI);
    }

    #[test]
    fn point_evaluation_at_origin_sums_coefficients() {
        let s = signal();
        let expected: Complex64 = s.coeffs().iter().sum();
        let got = s
            .pair(&DualFunctional::PointEvaluation { x0: 0.0 })
            .unwrap();
        assert!((got - expected).norm() < 1e-15);
        assert!(s
            .pair(&DualFunctional::CoefficientProjection { index: 0 })
            .is_err());
    }

    #[test]
    fn translation_shifts_argument() {
        let s = signal();
        let shifted = s.evolve(0.75);
        for x in [-3.0, 0.0, 1.1, 4.2] {
            assert!((shifted.value_at(x) - s.value_at(x + 0.75)).norm() < 1e-14);
        }
    }

    #[test]
    fn norm_bracket_is_ordered_and_nearly_invariant() {
        let s = signal();
        let b = s.norm_bracket();
        assert!(b.lower <= b.upper);
        for t in [0.3, -1.7, 5.0] {
            let moved = s.evolve(t).norm_bracket();
            assert!((moved.upper - b.upper).abs() < 1e-14);
            // shifted window: the sup estimate moves by at most a grid/edge effect
            assert!((moved.lower - b.lower).abs() <= 0.05 * b.upper, "t={t}");
        }
    }
}
