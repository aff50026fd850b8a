//! Sampling formulas on the regular grid `kπ/σ`.
//!
//! With `h = π/σ`, `x = t/h` and the difference quotients
//! `F₁_k = (e^{khD}f - f)/(kh)` (and `F₁_0 = Df`):
//!
//! * trajectory: `e^{tD}f = f + t Σ_k F₁_k sinc(x - k)`
//! * inverse: `f = e^{tD}f - t e^{tD}Df sinc(x) - t Σ_{k≠0} (e^{(kh+t)D}f - e^{tD}f)/(kh) sinc(x + k)`
//! * Valiron–Tschakaloff: `e^{zD}f = z sinc(z/h) Df + sinc(z/h) f + Σ_{k≠0} (z/(kh)) sinc(z/h - k) e^{khD}f`
//! * derivatives: `e^{tD}D^n f = h^{1-n} Σ_k F₁_k [n sinc^{(n-1)}(x - k) + x sinc^{(n)}(x - k)]`
//!
//! All series are truncated symmetrically at `|k| ≤ K` and summed in the
//! order `0, 1, -1, 2, -2, …` with compensated accumulation.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coefficients::symmetric_indices;
use crate::error::{Error, Result};
use crate::linear::Linear;
use crate::models::GroupVector;
use crate::sinc::{sinc, sinc_complex, sinc_derivative};
use crate::summation::LinearAccumulator;
use crate::trajectory::{StateTrajectory, Trajectory};

/// The nodes `kπ/σ`, `|k| ≤ K`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegularGrid {
    pub sigma: f64,
    pub half_width: usize,
}

impl RegularGrid {
    pub fn new(sigma: f64, half_width: usize) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(Error::param("sigma", "must be positive and finite"));
        }
        if half_width == 0 {
            return Err(Error::param("terms", "must be at least 1"));
        }
        Ok(Self { sigma, half_width })
    }

    /// Node spacing `π/σ`.
    pub fn spacing(&self) -> f64 {
        PI / self.sigma
    }

    pub fn node(&self, k: i64) -> f64 {
        k as f64 * self.spacing()
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        let k = self.half_width as i64;
        (-k..=k).map(|i| self.node(i))
    }
}

/// A formula result together with the applicability flag.
#[derive(Debug, Clone, Serialize)]
pub struct Flagged<V> {
    pub value: V,
    /// `f ∈ B_σ(D)`; when false the identity is not guaranteed.
    pub in_bernstein: bool,
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Truncated trajectory series at time `t`.
pub fn s1_series<T: Trajectory>(trajectory: &T, grid: &RegularGrid, t: f64) -> T::Value {
    let h = grid.spacing();
    let x = t / h;
    let f = trajectory.at(0.0);
    let mut acc = LinearAccumulator::new(&f);
    acc.add(real(1.0), &f);
    for k in symmetric_indices(grid.half_width) {
        if k == 0 {
            acc.add(real(t * sinc(x)), &trajectory.derivative_at(0.0));
        } else {
            let kh = k as f64 * h;
            let w = t * sinc(x - k as f64) / kh;
            acc.add_difference(real(w), &trajectory.at(kh), &f);
        }
    }
    acc.finish()
}

/// `e^{tD} f` reconstructed from the regular samples of `f`'s trajectory.
pub fn recon_trajectory<S: GroupVector>(
    f: &S,
    sigma: f64,
    t: f64,
    half_width: usize,
) -> Result<Flagged<S>> {
    let grid = RegularGrid::new(sigma, half_width)?;
    Ok(Flagged {
        value: s1_series(&StateTrajectory(f), &grid, t),
        in_bernstein: f.bernstein_membership(sigma),
    })
}

/// Certified bound on the truncation error of the trajectory series, from
/// `‖F₁_k‖ ≤ 2‖f‖/|kh|` and `|sinc(y)| ≤ min(1, 1/(π|y|))`.
pub fn s1_tail_bound(norm: f64, sigma: f64, t: f64, half_width: usize) -> f64 {
    let h = PI / sigma;
    let a = (t / h).abs();
    let k = half_width as f64;
    if k <= a + 1.0 {
        return f64::INFINITY;
    }
    // Σ_{k>K} 1/(k(k-a)) ≤ ∫_K^∞ dx/(x(x-a))
    let tail = if a == 0.0 {
        1.0 / k
    } else {
        (k / (k - a)).ln() / a
    };
    t.abs() * 2.0 * norm / h * 2.0 * tail / PI
}

/// Samples `e^{(kπ/σ + t)D}f` for `|k| ≤ K` and `e^{tD}Df`; the input of the
/// inverse formula. Index 0 holds `e^{tD}f`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ShiftedSamples<V> {
    pub shift: f64,
    pub sigma: f64,
    /// `(k, e^{(kπ/σ + shift)D} f)`, any order.
    pub samples: Vec<(i64, V)>,
    /// `e^{shift·D} D f`.
    pub derivative: V,
}

impl<V: Linear> ShiftedSamples<V> {
    /// Draws the samples from a trajectory.
    pub fn from_trajectory<T: Trajectory<Value = V>>(
        trajectory: &T,
        sigma: f64,
        shift: f64,
        half_width: usize,
    ) -> Result<Self> {
        let grid = RegularGrid::new(sigma, half_width)?;
        let k = half_width as i64;
        let samples = (-k..=k)
            .map(|i| (i, trajectory.at(grid.node(i) + shift)))
            .collect();
        Ok(Self {
            shift,
            sigma,
            samples,
            derivative: trajectory.derivative_at(shift),
        })
    }

    fn lookup(&self, half_width: usize) -> Result<Vec<&V>> {
        let k = half_width as i64;
        let mut slots: Vec<Option<&V>> = vec![None; 2 * half_width + 1];
        for (i, v) in &self.samples {
            if i.abs() <= k {
                slots[(i + k) as usize] = Some(v);
            }
        }
        slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                s.ok_or(Error::MissingSample {
                    index: i as i64 - k,
                })
            })
            .collect()
    }
}

fn inverse_kernel<'a, V: Linear + 'a>(
    t: f64,
    grid: &RegularGrid,
    sample: impl Fn(i64) -> &'a V,
    derivative: &V,
) -> V {
    let h = grid.spacing();
    let x = t / h;
    let anchor = sample(0);
    let mut acc = LinearAccumulator::new(anchor);
    acc.add(real(1.0), anchor);
    for k in symmetric_indices(grid.half_width) {
        if k == 0 {
            acc.add(real(-t * sinc(x)), derivative);
        } else {
            let kh = k as f64 * h;
            let w = -t * sinc(x + k as f64) / kh;
            acc.add_difference(real(w), sample(k), anchor);
        }
    }
    acc.finish()
}

/// Recovers `f` from shifted samples alone; `f` itself never enters.
pub fn recover_state<V: Linear>(samples: &ShiftedSamples<V>, half_width: usize) -> Result<V> {
    let grid = RegularGrid::new(samples.sigma, half_width)?;
    let table = samples.lookup(half_width)?;
    let k = half_width as i64;
    Ok(inverse_kernel(
        samples.shift,
        &grid,
        |i| table[(i + k) as usize],
        &samples.derivative,
    ))
}

/// The inverse formula evaluated straight from a trajectory at shift `τ`.
pub fn inverse_from_trajectory<T: Trajectory>(
    trajectory: &T,
    grid: &RegularGrid,
    tau: f64,
) -> T::Value {
    let k = grid.half_width as i64;
    let samples: Vec<T::Value> = (-k..=k)
        .map(|i| trajectory.at(grid.node(i) + tau))
        .collect();
    let derivative = trajectory.derivative_at(tau);
    inverse_kernel(tau, grid, |i| &samples[(i + k) as usize], &derivative)
}

/// Truncated Valiron–Tschakaloff series at complex `z`.
pub fn vt_series<T: Trajectory>(trajectory: &T, grid: &RegularGrid, z: Complex64) -> T::Value {
    let h = grid.spacing();
    let w = z / h;
    let f = trajectory.at(0.0);
    let s0 = sinc_complex(w);
    let mut acc = LinearAccumulator::new(&f);
    acc.add(s0, &f);
    for k in symmetric_indices(grid.half_width) {
        if k == 0 {
            acc.add(z * s0, &trajectory.derivative_at(0.0));
        } else {
            let kf = k as f64;
            let weight = w / kf * sinc_complex(w - kf);
            acc.add(weight, &trajectory.at(grid.node(k)));
        }
    }
    acc.finish()
}

/// `e^{zD} f` from regular samples; `|Im z|` must respect the state's guard.
pub fn valiron_tschakaloff<S: GroupVector>(
    f: &S,
    sigma: f64,
    z: Complex64,
    half_width: usize,
) -> Result<Flagged<S>> {
    let grid = RegularGrid::new(sigma, half_width)?;
    let guard = f.default_guard();
    if !(z.im.abs() <= guard) {
        return Err(Error::OverflowGuard {
            im: z.im.abs(),
            guard,
        });
    }
    Ok(Flagged {
        value: vt_series(&StateTrajectory(f), &grid, z),
        in_bernstein: f.bernstein_membership(sigma),
    })
}

/// Truncated derivative-sampling series for `e^{tD} D^n f`.
pub fn s2_series<T: Trajectory>(trajectory: &T, grid: &RegularGrid, n: u32, t: f64) -> T::Value {
    assert!(n >= 1, "derivative order must be positive");
    let h = grid.spacing();
    let x = t / h;
    let scale = h.powi(1 - n as i32);
    let nf = n as f64;
    let kernel = |y: f64| nf * sinc_derivative(n - 1, y) + x * sinc_derivative(n, y);
    let f = trajectory.at(0.0);
    let mut acc = LinearAccumulator::new(&f);
    for k in symmetric_indices(grid.half_width) {
        if k == 0 {
            acc.add(real(scale * kernel(x)), &trajectory.derivative_at(0.0));
        } else {
            let kh = k as f64 * h;
            let w = scale * kernel(x - k as f64) / kh;
            acc.add_difference(real(w), &trajectory.at(kh), &f);
        }
    }
    acc.finish()
}

pub fn derivative_sampling<S: GroupVector>(
    f: &S,
    sigma: f64,
    n: u32,
    t: f64,
    half_width: usize,
) -> Result<Flagged<S>> {
    if n == 0 {
        return Err(Error::param("n", "must be at least 1"));
    }
    let grid = RegularGrid::new(sigma, half_width)?;
    Ok(Flagged {
        value: s2_series(&StateTrajectory(f), &grid, n, t),
        in_bernstein: f.bernstein_membership(sigma),
    })
}

/// `Q_D^n(σ) f`: the derivative-sampling series at `t = 0`.
pub fn q_operator<S: GroupVector>(
    f: &S,
    sigma: f64,
    n: u32,
    half_width: usize,
) -> Result<Flagged<S>> {
    derivative_sampling(f, sigma, n, 0.0, half_width)
}
