//! Boas coefficients and Favard constants.
//!
//! `A_{m,k} = (-1)^{k+1} sinc^{(2m-1)}(1/2 - k)` and
//! `B_{m,k} = (-1)^{k+1} sinc^{(2m)}(-k)` are evaluated from their closed
//! forms. All `A_{m,·}` carry the sign `(-1)^{m-1}` and all `B_{m,·}` the sign
//! `(-1)^{m+1}`, and `Σ_k |A_{m,k}| = π^{2m-1}`, `Σ_k |B_{m,k}| = π^{2m}`.
//!
//! Double precision limits the useful range to `m ≤ 8`.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::summation::CompensatedSum;

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// `A_{m,k}` from the closed form
/// `(2m-1)!/(π y^{2m}) Σ_{j<m} (-1)^j (πy)^{2j}/(2j)!`, `y = k - 1/2`.
pub fn boas_coeff_a(m: u32, k: i64) -> f64 {
    assert!(m >= 1, "Boas order index m must be positive");
    let y = k as f64 - 0.5;
    let py2 = (PI * y).powi(2);
    let mut term = 1.0;
    let mut sum = CompensatedSum::new();
    for j in 0..m {
        if j > 0 {
            term *= -py2 / ((2 * j - 1) * (2 * j)) as f64;
        }
        sum.add(term);
    }
    factorial(2 * m - 1) / (PI * y.powi(2 * m as i32)) * sum.value()
}

/// `B_{m,k}`; the `k = 0` entry is `(-1)^{m+1} π^{2m}/(2m+1)`, otherwise the closed form
/// `(2m)!/(π k^{2m+1}) Σ_{j<m} (-1)^j (πk)^{2j+1}/(2j+1)!`.
pub fn boas_coeff_b(m: u32, k: i64) -> f64 {
    assert!(m >= 1, "Boas order index m must be positive");
    if k == 0 {
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        return sign * PI.powi(2 * m as i32) / (2 * m + 1) as f64;
    }
    let x = PI * k as f64;
    let mut term = x;
    let mut sum = CompensatedSum::new();
    for j in 0..m {
        if j > 0 {
            term *= -x * x / ((2 * j) * (2 * j + 1)) as f64;
        }
        sum.add(term);
    }
    factorial(2 * m) / (PI * (k as f64).powi(2 * m as i32 + 1)) * sum.value()
}

/// Which Boas family a derivative order belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Odd orders `2m-1`, coefficients `A_{m,k}`, nodes `(k - 1/2)π/σ`.
    Odd,
    /// Even orders `2m`, coefficients `B_{m,k}`, nodes `kπ/σ`.
    Even,
}

impl Family {
    /// `(family, m)` for derivative order `r ≥ 1`.
    pub fn for_order(r: u32) -> (Family, u32) {
        assert!(r >= 1, "derivative order must be positive");
        if r % 2 == 1 {
            (Family::Odd, r.div_ceil(2))
        } else {
            (Family::Even, r / 2)
        }
    }

    pub fn order(self, m: u32) -> u32 {
        match self {
            Family::Odd => 2 * m - 1,
            Family::Even => 2 * m,
        }
    }

    pub fn coeff(self, m: u32, k: i64) -> f64 {
        match self {
            Family::Odd => boas_coeff_a(m, k),
            Family::Even => boas_coeff_b(m, k),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Odd => "A",
            Family::Even => "B",
        }
    }
}

/// Indices `0, 1, -1, 2, -2, …, K, -K`: the fixed summation order.
pub fn symmetric_indices(half_width: usize) -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=half_width as i64).flat_map(|k| [k, -k]))
}

/// Coefficients of one family over the window `|k| ≤ K`.
#[derive(Debug, Clone, Serialize)]
pub struct CoefficientTable {
    family: Family,
    m: u32,
    half_width: usize,
    /// `values[k + K]`.
    values: Vec<f64>,
}

impl CoefficientTable {
    pub fn new(family: Family, m: u32, half_width: usize) -> Self {
        assert!(m >= 1, "Boas order index m must be positive");
        let k_max = half_width as i64;
        let values = (-k_max..=k_max)
            .into_par_iter()
            .map(|k| family.coeff(m, k))
            .collect();
        Self {
            family,
            m,
            half_width,
            values,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn half_width(&self) -> usize {
        self.half_width
    }

    pub fn value(&self, k: i64) -> f64 {
        self.values[(k + self.half_width as i64) as usize]
    }

    /// `(k, value)` pairs ordered by `k`.
    pub fn entries(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let k0 = -(self.half_width as i64);
        self.values
            .iter()
            .enumerate()
            .map(move |(i, v)| (k0 + i as i64, *v))
    }

    /// `Σ_{|k|≤K} |coeff|` in the fixed symmetric order.
    pub fn abs_partial_sum(&self) -> f64 {
        symmetric_indices(self.half_width)
            .map(|k| self.value(k).abs())
            .collect::<CompensatedSum>()
            .value()
    }

    /// `Σ_{k∈ℤ} |coeff| = π^r`.
    pub fn abs_total(&self) -> f64 {
        PI.powi(self.family.order(self.m) as i32)
    }

    /// `Σ_{|k|>K} |coeff|`, from the exact total minus the partial sum.
    pub fn abs_tail(&self) -> f64 {
        (self.abs_total() - self.abs_partial_sum()).max(0.0)
    }
}

/// A Favard constant with a certified bound on the truncation error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FavardValue {
    pub j: u32,
    pub value: f64,
    /// `|value - K_j|` is at most this (series tail plus rounding allowance).
    pub tail_bound: f64,
    /// Number of explicitly summed terms.
    pub terms: usize,
}

const FAVARD_TARGET: f64 = 1e-13;

/// `K_j = (4/π) Σ_{r≥0} (-1)^{r(j+1)} / (2r+1)^{j+1}`.
///
/// The series is summed until a certified tail bracket is narrower than
/// `1e-13`. For even `j` the series alternates with convex terms and the tail
/// `T_R` lies in `[a_R/2, a_R - a_{R+1}/2]`. For odd `j` the terms are positive
/// and convex, and the tail lies between the trapezoid and midpoint integral
/// bounds. The bracket midpoint is added to the partial sum.
pub fn favard(j: u32) -> FavardValue {
    let p = j as i32 + 1;
    let alternating = j.is_multiple_of(2);
    let term = |r: usize| (2.0 * r as f64 + 1.0).powi(-p);
    // ∫_a^∞ (2x+1)^{-p} dx for p ≥ 2
    let integral = |a: f64| (2.0 * a + 1.0).powi(1 - p) / (2.0 * (p - 1) as f64);

    let mut sum = CompensatedSum::new();
    let mut summed = 0usize;
    let mut target = 1024usize;
    loop {
        for r in summed..target {
            let t = term(r);
            sum.add(if alternating && r % 2 == 1 { -t } else { t });
        }
        summed = target;
        let a_r = term(target);
        let (tail_mid, half_width) = if alternating {
            let a_next = term(target + 1);
            let sign = if target % 2 == 1 { -1.0 } else { 1.0 };
            (sign * (3.0 * a_r - a_next) / 4.0, (a_r - a_next) / 4.0)
        } else {
            let lower = a_r / 2.0 + integral(target as f64);
            let upper = integral(target as f64 - 0.5);
            ((lower + upper) / 2.0, (upper - lower) / 2.0)
        };
        let scale = 4.0 / PI;
        let bound = scale * half_width;
        if bound <= FAVARD_TARGET || target >= 1 << 26 {
            let value = scale * (sum.value() + tail_mid);
            return FavardValue {
                j,
                value,
                tail_bound: bound + 4.0 * f64::EPSILON * value.abs(),
                terms: summed,
            };
        }
        target *= 4;
    }
}

/// `K_0 … K_{jmax}`.
#[derive(Debug, Clone, Serialize)]
pub struct FavardTable {
    entries: Vec<FavardValue>,
}

impl FavardTable {
    pub fn new(j_max: u32) -> Self {
        let entries = (0..=j_max).into_par_iter().map(favard).collect();
        Self { entries }
    }

    pub fn get(&self, j: u32) -> f64 {
        self.entries[j as usize].value
    }

    pub fn entries(&self) -> &[FavardValue] {
        &self.entries
    }

    pub fn j_max(&self) -> u32 {
        self.entries.len() as u32 - 1
    }

    /// Stein–Kolmogorov constant `C_{k,n} = K_{n-k}^n / K_n^{n-k}`.
    pub fn kolmogorov_constant(&self, k: u32, n: u32) -> f64 {
        assert!(k <= n && n <= self.j_max(), "need 0 ≤ k ≤ n ≤ j_max");
        if k == n {
            // K_0 = 1 exactly (Leibniz series)
            return 1.0;
        }
        self.get(n - k).powi(n as i32) / self.get(n).powi((n - k) as i32)
    }
}

/// Whether `K_j` respects `K_{2i} ∈ [1, 4/π)`, `K_{2i+1} ∈ (π/4, π/2]`, allowing
/// for the certified bound at the closed endpoints.
pub fn favard_in_range(v: &FavardValue) -> bool {
    let (lo, hi) = (v.value - v.tail_bound, v.value + v.tail_bound);
    if v.j.is_multiple_of(2) {
        hi >= 1.0 && v.value < 4.0 / PI
    } else {
        v.value > PI / 4.0 && lo <= PI / 2.0
    }
}
