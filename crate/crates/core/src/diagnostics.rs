//! Measurable forms of the analytic characterizations: spectral type,
//! the Stein–Kolmogorov inequality, the modulus of continuity and the
//! Jackson-type approximation bound.

use rayon::prelude::*;
use serde::Serialize;

use crate::coefficients::FavardTable;
use crate::error::{Error, Result};
use crate::models::{GroupVector, SpectralState};

/// `‖D^k f‖^{1/k}` for `k = 1..=k_max` and its limit estimate.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralTypeReport {
    pub sequence: Vec<f64>,
    /// Last term of the sequence.
    pub last: f64,
    /// Fit of `ln s_k = ln d_f + a/k` over the last quartile of `k`.
    pub extrapolated: f64,
    /// `max |λ_j|` over the support.
    pub sigma_f: f64,
}

impl SpectralTypeReport {
    pub fn relative_gap(&self) -> f64 {
        (self.extrapolated - self.sigma_f).abs() / self.sigma_f
    }
}

pub fn spectral_type(f: &SpectralState, k_max: u32) -> Result<SpectralTypeReport> {
    if k_max < 2 {
        return Err(Error::param("k_max", "must be at least 2"));
    }
    let sigma_f = f.spectral_type();
    if f.norm() == 0.0 {
        return Err(Error::ZeroVector);
    }
    let sequence: Vec<f64> = (1..=k_max).map(|k| f.generator_norm_root(k)).collect();
    let last = *sequence.last().expect("k_max >= 2");
    let extrapolated = if sigma_f == 0.0 {
        0.0
    } else {
        let start = (3 * k_max as usize / 4).min(k_max as usize - 2);
        let pts: Vec<(f64, f64)> = (start..k_max as usize)
            .map(|i| (1.0 / (i + 1) as f64, sequence[i].ln()))
            .collect();
        fit_intercept(&pts).exp()
    };
    Ok(SpectralTypeReport {
        sequence,
        last,
        extrapolated,
        sigma_f,
    })
}

/// Least-squares intercept of `y = a + b x`.
fn fit_intercept(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return my;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    my - sxy / sxx * mx
}

/// Both sides of `‖D^k f‖^n ≤ C_{k,n} ‖D^n f‖^k ‖f‖^{n-k}`.
#[derive(Debug, Clone, Serialize)]
pub struct KolmogorovCheck {
    pub k: u32,
    pub n: u32,
    pub constant: f64,
    pub log_lhs: f64,
    pub log_rhs: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Relative slack in the log domain for rounding in the norms.
const KS_SLACK: f64 = 1e-12;

fn weighted(e: u32, log_norm: f64) -> f64 {
    if e == 0 {
        0.0
    } else {
        e as f64 * log_norm
    }
}

pub fn kolmogorov_check(
    f: &SpectralState,
    k: u32,
    n: u32,
    table: &FavardTable,
) -> Result<KolmogorovCheck> {
    if k > n {
        return Err(Error::param("k", "must not exceed n"));
    }
    if n > table.j_max() {
        return Err(Error::param("n", "exceeds the Favard table"));
    }
    if f.norm() == 0.0 {
        return Err(Error::ZeroVector);
    }
    let constant = table.kolmogorov_constant(k, n);
    let log_lhs = weighted(n, f.generator_log_norm(k));
    let log_rhs = constant.ln()
        + weighted(k, f.generator_log_norm(n))
        + weighted(n - k, f.generator_log_norm(0));
    let holds =
        log_lhs == f64::NEG_INFINITY || log_lhs <= log_rhs + KS_SLACK * (1.0 + log_rhs.abs());
    Ok(KolmogorovCheck {
        k,
        n,
        constant,
        log_lhs,
        log_rhs,
        lhs: log_lhs.exp(),
        rhs: log_rhs.exp(),
        holds,
    })
}

/// Every `0 ≤ k ≤ n ≤ n_max` for every state.
pub fn kolmogorov_battery(
    states: &[SpectralState],
    n_max: u32,
    table: &FavardTable,
) -> Result<Vec<KolmogorovCheck>> {
    states
        .par_iter()
        .map(|f| {
            let mut out = Vec::new();
            for n in 0..=n_max {
                for k in 0..=n {
                    out.push(kolmogorov_check(f, k, n, table)?);
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

/// `ln‖D^k f‖ ≤ k ln σ + ln‖f‖` for `k ≤ k_max`, the Bernstein inequality in
/// the spectral model. Returns the first violating `k`, if any.
pub fn bernstein_inequality(f: &SpectralState, sigma: f64, k_max: u32) -> Option<u32> {
    let base = f.generator_log_norm(0);
    (1..=k_max).find(|&k| {
        f.generator_log_norm(k) > k as f64 * sigma.ln() + base + KS_SLACK * (1.0 + base.abs())
    })
}

fn difference_power<S: GroupVector>(f: &S, m: u32, tau: f64) -> S {
    let mut g = f.clone();
    for _ in 0..m {
        g = g.minus(&g.evolve(tau));
    }
    g
}

/// Lower bound for `Ω_m(f, s) = sup_{|τ|≤s} ‖(I - e^{τD})^m f‖` from the
/// points `τ = i·s/resolution`. Negative `τ` give the same norms since
/// `(I - e^{-τD})^m = (-1)^m e^{-mτD}(I - e^{τD})^m`.
pub fn modulus_of_continuity<S: GroupVector>(
    f: &S,
    m: u32,
    s: f64,
    resolution: usize,
) -> Result<f64> {
    Ok(*modulus_profile(f, m, &[s], resolution)?
        .last()
        .expect("one value"))
}

/// `Ω_m(f, s_j)` for increasing `s_j`, each a sup over all grid points up to
/// `s_j` so the profile is nondecreasing.
pub fn modulus_profile<S: GroupVector>(
    f: &S,
    m: u32,
    s: &[f64],
    resolution: usize,
) -> Result<Vec<f64>> {
    if m == 0 {
        return Ok(vec![f.norm(); s.len()]);
    }
    if resolution == 0 {
        return Err(Error::param("resolution", "must be at least 1"));
    }
    if s.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
        return Err(Error::param("s", "must be finite and nonnegative"));
    }
    if s.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::param("s", "must be nondecreasing"));
    }
    let mut out = Vec::with_capacity(s.len());
    let mut running = 0.0f64;
    let mut prev = 0.0;
    for &sj in s {
        let points: Vec<f64> = (1..=resolution)
            .map(|i| prev + (sj - prev) * i as f64 / resolution as f64)
            .collect();
        let sup = points
            .par_iter()
            .map(|&tau| difference_power(f, m, tau).norm())
            .reduce(|| 0.0, f64::max);
        running = running.max(sup);
        out.push(running);
        prev = sj;
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct JacksonRow {
    pub sigma: f64,
    /// `‖f - P_σ f‖`, the distance to `B_σ(D)`.
    pub best_error: f64,
    /// `σ^{-k} Ω_{m-k}(D^k f, 1/σ)`.
    pub bound: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct JacksonTable {
    pub k: u32,
    pub m: u32,
    pub rows: Vec<JacksonRow>,
    pub max_ratio: f64,
}

impl JacksonTable {
    /// True when the ratios rise strictly at every step of the grid.
    pub fn grows_monotonically(&self) -> bool {
        self.rows.len() >= 2 && self.rows.windows(2).all(|w| w[1].ratio > w[0].ratio)
    }
}

pub fn jackson_ratio(
    f: &SpectralState,
    k: u32,
    m: u32,
    sigmas: &[f64],
    resolution: usize,
) -> Result<JacksonTable> {
    if k > m {
        return Err(Error::param("k", "must not exceed m"));
    }
    if sigmas.iter().any(|s| !(s.is_finite() && *s > 0.0)) {
        return Err(Error::param("sigma", "must be positive and finite"));
    }
    let dk = f.apply_generator(k);
    let rows = sigmas
        .iter()
        .map(|&sigma| {
            let best_error = f.distance(&f.band_truncate(sigma));
            let omega = modulus_of_continuity(&dk, m - k, 1.0 / sigma, resolution)?;
            let bound = sigma.powi(-(k as i32)) * omega;
            let ratio = if best_error == 0.0 {
                0.0
            } else if bound == 0.0 {
                return Err(Error::DegenerateModulus { error: best_error });
            } else {
                best_error / bound
            };
            Ok(JacksonRow {
                sigma,
                best_error,
                bound,
                ratio,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let max_ratio = rows.iter().map(|r| r.ratio).fold(0.0, f64::max);
    Ok(JacksonTable {
        k,
        m,
        rows,
        max_ratio,
    })
}
