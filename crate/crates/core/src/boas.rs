//! Boas-type operators `B_D^{(r)}(σ)`.
//!
//! For odd `r = 2m-1`
//! `B f = (σ/π)^r Σ_k (-1)^{k+1} A_{m,k} e^{(k-1/2)(π/σ)D} f`,
//! for even `r = 2m`
//! `B f = (σ/π)^r Σ_k (-1)^{k+1} B_{m,k} e^{k(π/σ)D} f`.
//! On `B_σ(D)` the operator reproduces `D^r f`; for every `f` its norm is at
//! most `σ^r ‖f‖`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::coefficients::{symmetric_indices, CoefficientTable, Family};
use crate::error::{Error, Result};
use crate::models::GroupVector;
use crate::summation::LinearAccumulator;
use crate::trajectory::{StateTrajectory, Trajectory};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoasConfig {
    pub sigma: f64,
    pub order: u32,
    /// Truncation half-width `K`: indices `|k| ≤ K`.
    pub half_width: usize,
}

impl BoasConfig {
    pub fn new(sigma: f64, order: u32, half_width: usize) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(Error::param("sigma", "must be positive and finite"));
        }
        if order == 0 {
            return Err(Error::param("order", "must be at least 1"));
        }
        if half_width == 0 {
            return Err(Error::param("terms", "must be at least 1"));
        }
        Ok(Self {
            sigma,
            order,
            half_width,
        })
    }

    fn family(&self) -> (Family, u32) {
        Family::for_order(self.order)
    }

    /// Sample time for index `k`.
    pub fn node(&self, k: i64) -> f64 {
        let h = PI / self.sigma;
        match self.family().0 {
            Family::Odd => (k as f64 - 0.5) * h,
            Family::Even => k as f64 * h,
        }
    }

    /// `Σ_{|k|>K} |coeff| · (σ/π)^r`, the factor multiplying `‖f‖` in the
    /// truncation bound, plus a rounding allowance.
    pub fn tail_factor(&self) -> f64 {
        let (family, m) = self.family();
        let table = CoefficientTable::new(family, m, self.half_width);
        let scale = (self.sigma / PI).powi(self.order as i32);
        let full = self.sigma.powi(self.order as i32);
        scale * table.abs_tail() + 64.0 * f64::EPSILON * full
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoasOutput<V> {
    pub value: V,
    /// Certified bound on `‖B_K f - B f‖`.
    pub tail_bound: f64,
    /// `f ∈ B_σ(D)`; when false the output need not approximate `D^r f`.
    pub in_bernstein: bool,
}

/// Truncated series over any trajectory.
pub fn boas_series<T: Trajectory>(trajectory: &T, cfg: &BoasConfig) -> T::Value {
    let (family, m) = cfg.family();
    let scale = (cfg.sigma / PI).powi(cfg.order as i32);
    let first = trajectory.at(cfg.node(0));
    let mut acc = LinearAccumulator::new(&first);
    for k in symmetric_indices(cfg.half_width) {
        let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
        let w = Complex64::new(scale * sign * family.coeff(m, k), 0.0);
        if k == 0 {
            acc.add(w, &first);
        } else {
            acc.add(w, &trajectory.at(cfg.node(k)));
        }
    }
    acc.finish()
}

/// `B_D^{(r)}(σ) f` truncated at `|k| ≤ K`, with its certified tail bound.
pub fn boas_apply<S: GroupVector>(f: &S, cfg: &BoasConfig) -> BoasOutput<S> {
    let value = boas_series(&StateTrajectory(f), cfg);
    BoasOutput {
        value,
        tail_bound: f.norm() * cfg.tail_factor(),
        in_bernstein: f.bernstein_membership(cfg.sigma),
    }
}

/// Comparison of the truncated operators at two bandwidths against `D^r f`.
#[derive(Debug, Clone, Serialize)]
pub struct SigmaInvarianceReport {
    pub sigma1: f64,
    pub sigma2: f64,
    pub order: u32,
    pub half_width: usize,
    /// Both bandwidths are at least `σ_f`; otherwise nothing is asserted.
    pub applicable: bool,
    pub error1: f64,
    pub tail1: f64,
    pub error2: f64,
    pub tail2: f64,
    /// `‖B(σ1)f - B(σ2)f‖`.
    pub difference: f64,
}

impl SigmaInvarianceReport {
    pub fn within_tails(&self) -> bool {
        self.error1 <= self.tail1 && self.error2 <= self.tail2
    }
}

pub fn boas_sigma_invariance<S: GroupVector>(
    f: &S,
    sigma1: f64,
    sigma2: f64,
    order: u32,
    half_width: usize,
) -> Result<SigmaInvarianceReport> {
    let c1 = BoasConfig::new(sigma1, order, half_width)?;
    let c2 = BoasConfig::new(sigma2, order, half_width)?;
    let exact = f.apply_generator(order);
    let o1 = boas_apply(f, &c1);
    let o2 = boas_apply(f, &c2);
    Ok(SigmaInvarianceReport {
        sigma1,
        sigma2,
        order,
        half_width,
        applicable: o1.in_bernstein && o2.in_bernstein,
        error1: o1.value.minus(&exact).norm(),
        tail1: o1.tail_bound,
        error2: o2.value.minus(&exact).norm(),
        tail2: o2.tail_bound,
        difference: o1.value.minus(&o2.value).norm(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::Linear;
    use crate::models::SpectralState;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn config_validation() {
        assert!(BoasConfig::new(0.0, 1, 10).is_err());
        assert!(BoasConfig::new(1.0, 0, 10).is_err());
        assert!(BoasConfig::new(1.0, 1, 0).is_err());
    }

    #[test]
    fn zero_vector_maps_to_zero() {
        let f = SpectralState::from_parts(vec![-1.0, 2.0], vec![c(0.0, 0.0); 2]).unwrap();
        let out = boas_apply(&f, &BoasConfig::new(3.0, 2, 50).unwrap());
        assert_eq!(out.value.norm(), 0.0);
        assert_eq!(out.tail_bound, 0.0);
    }

    #[test]
    fn single_eigenvector_first_order() {
        let lambda = 1.7;
        let f = SpectralState::from_parts(vec![lambda], vec![c(0.6, -0.8)]).unwrap();
        let cfg = BoasConfig::new(2.0, 1, 10_000).unwrap();
        let out = boas_apply(&f, &cfg);
        let exact = f.apply_generator(1);
        let err = out.value.minus(&exact).norm();
        assert!(out.in_bernstein);
        assert!(err <= out.tail_bound, "err {err} tail {}", out.tail_bound);
    }

    #[test]
    fn boundary_frequency_reproduced() {
        // λ = σ is still inside B_σ
        let f = SpectralState::from_parts(vec![-PI, PI], vec![c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        for r in 1..=4 {
            let cfg = BoasConfig::new(PI, r, 5_000).unwrap();
            let out = boas_apply(&f, &cfg);
            let err = out.value.minus(&f.apply_generator(r)).norm();
            assert!(
                err <= out.tail_bound,
                "r={r} err {err} tail {}",
                out.tail_bound
            );
        }
    }

    #[test]
    fn sigma_invariance_identical_when_equal() {
        let f = SpectralState::from_parts(vec![-1.0, 0.5], vec![c(1.0, 0.0), c(0.3, 0.2)]).unwrap();
        let rep = boas_sigma_invariance(&f, 1.5, 1.5, 3, 200).unwrap();
        assert_eq!(rep.difference, 0.0);
        assert!(rep.applicable);
    }

    #[test]
    fn sigma_invariance_outside_band_is_flagged() {
        let f = SpectralState::from_parts(vec![-1.0, 5.0], vec![c(1.0, 0.0), c(0.3, 0.2)]).unwrap();
        let rep = boas_sigma_invariance(&f, 1.5, 3.0, 1, 200).unwrap();
        assert!(!rep.applicable);
    }
}
