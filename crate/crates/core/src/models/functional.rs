use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A bounded linear functional `g*` used to turn vectors into scalars.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DualFunctional {
    /// `f ↦ c_index` in the spectral backend. Norm 1.
    CoefficientProjection { index: usize },
    /// `f ↦ f(x0)` in the translation backend. Norm 1 in the sup norm.
    PointEvaluation { x0: f64 },
    /// `f ↦ Σ c_j conj(w_j)` in the spectral backend. Norm `‖w‖₂`.
    Vector { weights: Vec<Complex64> },
}

impl DualFunctional {
    pub fn norm(&self) -> f64 {
        match self {
            DualFunctional::CoefficientProjection { .. }
            | DualFunctional::PointEvaluation { .. } => 1.0,
            DualFunctional::Vector { weights } => {
                weights.iter().map(|w| w.norm_sqr()).sum::<f64>().sqrt()
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            DualFunctional::CoefficientProjection { .. } => "coefficient-projection",
            DualFunctional::PointEvaluation { .. } => "point-evaluation",
            DualFunctional::Vector { .. } => "vector",
        }
    }

    /// All coefficient projections of a spectrum of length `n`; complete for
    /// the spectral backend.
    pub fn projection_battery(n: usize) -> Vec<Self> {
        (0..n)
            .map(|index| DualFunctional::CoefficientProjection { index })
            .collect()
    }
}
