//! The abstract Cauchy problem `du/dt = iDu`, `u(0) = f`, for self-adjoint
//! `D` with finite spectrum, and recovery of `f` from time samples of `u`.
//!
//! In the spectral model the group generator has spectrum `iλ_j`, so `u(t)`
//! is the group trajectory of `f`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::irregular::{measurement_recovery, shifted_recovery, CanonicalProduct, SamplingNodes};
use crate::linear::Linear;
use crate::models::{DualFunctional, GroupVector, SpectralState};
use crate::regular::{recover_state, ShiftedSamples};

#[derive(Debug, Clone)]
pub struct CauchyProblem {
    initial: SpectralState,
    sigma: f64,
}

impl CauchyProblem {
    /// `f` must lie in `B_σ(D)`.
    pub fn new(initial: SpectralState, sigma: f64) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(Error::param("sigma", "must be positive and finite"));
        }
        if !initial.bernstein_membership(sigma) {
            return Err(Error::param(
                "sigma",
                format!(
                    "initial state has spectral type {} > {sigma}",
                    initial.spectral_type()
                ),
            ));
        }
        Ok(Self { initial, sigma })
    }

    pub fn initial(&self) -> &SpectralState {
        &self.initial
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// `u(t)`.
    pub fn solve(&self, t: f64) -> SpectralState {
        self.initial.evolve(t)
    }

    /// `u'(t) = iD u(t)`.
    pub fn velocity(&self, t: f64) -> SpectralState {
        self.solve(t).apply_generator(1)
    }
}

/// Which sampling identity turns solution samples back into `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Via {
    /// Irregular samples `u(t_n)`.
    L2,
    /// Regular samples `u(kπ/σ + τ)` and `u'(τ)`.
    L1,
    /// Irregular shifted samples `u(t_n + τ)` and `u(τ)`.
    L3,
}

impl fmt::Display for Via {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Via::L2 => "l2",
            Via::L1 => "l1",
            Via::L3 => "l3",
        })
    }
}

impl FromStr for Via {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "l2" => Ok(Via::L2),
            "l1" => Ok(Via::L1),
            "l3" => Ok(Via::L3),
            _ => Err(Error::Parse(format!(
                "unknown recovery path `{s}` (expected l2, l1 or l3)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InversionOptions {
    pub via: Via,
    /// Band margin: `f ∈ B_{π-δ}(D)` is required for the irregular paths.
    pub delta: f64,
    /// Time shift for `l1` and `l3`.
    pub tau: f64,
}

impl Default for InversionOptions {
    fn default() -> Self {
        Self {
            via: Via::L2,
            delta: PI / 4.0,
            tau: 0.4,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InversionReport {
    pub via: Via,
    pub half_width: usize,
    /// Recovered `⟨f, g*_j⟩` for each functional of the battery.
    pub per_functional: Vec<Complex64>,
    pub true_coeffs: Vec<Complex64>,
    pub recovered_coeffs: Vec<Complex64>,
    /// `|ĉ_j - c_j|`.
    pub per_coeff_error: Vec<f64>,
    /// `|ĉ_j - c_j| / |c_j|`, or relative to `‖f‖` where `c_j = 0`.
    pub relative_error: Vec<f64>,
    /// `f ∈ B_{π-δ}(D)`; otherwise the recovery is computed but unsupported.
    pub in_band: bool,
    #[serde(skip)]
    pub recovered: SpectralState,
}

impl InversionReport {
    pub fn max_relative_error(&self) -> f64 {
        self.relative_error.iter().copied().fold(0.0, f64::max)
    }
}

fn pair_all(samples: &[SpectralState], g: &DualFunctional) -> Result<Vec<Complex64>> {
    samples.iter().map(|s| s.pair(g)).collect()
}

/// `⟨f, g*_j⟩` for each functional from irregular samples `u(t_n)`.
pub fn invert_samples(
    samples: &[SpectralState],
    product: &CanonicalProduct,
    battery: &[DualFunctional],
) -> Result<Vec<Complex64>> {
    product.nodes().require_nonzero_anchor()?;
    battery
        .par_iter()
        .map(|g| measurement_recovery(product, &pair_all(samples, g)?))
        .collect()
}

/// Samples the solution, recovers every coefficient of `f` through the chosen
/// identity, and compares with the true initial state.
pub fn invert(
    problem: &CauchyProblem,
    nodes: &SamplingNodes,
    options: InversionOptions,
) -> Result<InversionReport> {
    if !(options.delta > 0.0 && options.delta < PI) {
        return Err(Error::param("delta", "must lie in (0, π)"));
    }
    let f = problem.initial();
    let battery = DualFunctional::projection_battery(f.coeffs().len());
    let half_width = nodes.half_width();
    let per_functional: Vec<Complex64> = match options.via {
        Via::L2 => {
            let product = CanonicalProduct::new(nodes.clone());
            let samples: Vec<SpectralState> = nodes
                .as_slice()
                .par_iter()
                .map(|&t| problem.solve(t))
                .collect();
            invert_samples(&samples, &product, &battery)?
        }
        Via::L3 => {
            nodes.require_nonzero_anchor()?;
            let product = CanonicalProduct::new(nodes.clone());
            let tau = options.tau;
            if nodes.as_slice().iter().any(|&t| t == -tau) {
                return Err(Error::param("tau", "-tau must not be a node"));
            }
            let samples: Vec<SpectralState> = nodes
                .as_slice()
                .par_iter()
                .map(|&t| problem.solve(t + tau))
                .collect();
            let anchor = problem.solve(tau);
            battery
                .par_iter()
                .map(|g| shifted_recovery(&product, &pair_all(&samples, g)?, &anchor.pair(g)?, tau))
                .collect::<Result<_>>()?
        }
        Via::L1 => {
            let sigma = problem.sigma();
            let h = PI / sigma;
            let k = half_width as i64;
            let tau = options.tau;
            let states: Vec<SpectralState> = (-k..=k)
                .into_par_iter()
                .map(|i| problem.solve(i as f64 * h + tau))
                .collect();
            let velocity = problem.velocity(tau);
            battery
                .par_iter()
                .map(|g| {
                    let samples = ShiftedSamples {
                        shift: tau,
                        sigma,
                        samples: (-k..=k).zip(pair_all(&states, g)?).collect(),
                        derivative: velocity.pair(g)?,
                    };
                    recover_state(&samples, half_width)
                })
                .collect::<Result<_>>()?
        }
    };
    let recovered = f.with_components(per_functional.clone());
    let norm = f.norm();
    let per_coeff_error: Vec<f64> = recovered
        .coeffs()
        .iter()
        .zip(f.coeffs())
        .map(|(a, b)| (a - b).norm())
        .collect();
    let relative_error = per_coeff_error
        .iter()
        .zip(f.coeffs())
        .map(|(e, c)| {
            if c.norm() > 0.0 {
                e / c.norm()
            } else {
                e / norm
            }
        })
        .collect();
    Ok(InversionReport {
        via: options.via,
        half_width,
        per_functional,
        true_coeffs: f.coeffs().to_vec(),
        recovered_coeffs: recovered.coeffs().to_vec(),
        per_coeff_error,
        relative_error,
        in_band: f.bernstein_membership(PI - options.delta),
        recovered,
    })
}
