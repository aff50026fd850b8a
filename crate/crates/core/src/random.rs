//! Seeded random test states.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::models::{ExpSumSignal, SpectralState};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coefficient(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn frequencies(rng: &mut impl Rng, points: usize, band: f64, with_edge: bool) -> Vec<f64> {
    assert!(points >= 1 && band > 0.0);
    let mut lambdas: Vec<f64> = Vec::with_capacity(points);
    if with_edge {
        lambdas.push(if rng.gen_bool(0.5) { band } else { -band });
    }
    while lambdas.len() < points {
        let l = rng.gen_range(-band..band);
        if lambdas.iter().all(|&m| (m - l).abs() > 1e-9) {
            lambdas.push(l);
        }
    }
    lambdas.sort_by(f64::total_cmp);
    lambdas
}

/// `points` frequencies uniform in `[-band, band]` with coefficients whose
/// parts are uniform in `[-1, 1]`. With `with_edge`, one frequency sits at
/// `±band` so the spectral type is exactly `band`.
pub fn spectral_state(
    rng: &mut impl Rng,
    points: usize,
    band: f64,
    with_edge: bool,
) -> SpectralState {
    let lambdas = frequencies(rng, points, band, with_edge);
    let coeffs = (0..points).map(|_| coefficient(rng)).collect();
    SpectralState::from_parts(lambdas, coeffs).expect("valid by construction")
}

pub fn spectral_battery(
    seed: u64,
    count: usize,
    points: usize,
    band: f64,
    with_edge: bool,
) -> Vec<SpectralState> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| spectral_state(&mut r, points, band, with_edge))
        .collect()
}

/// An exponential sum with `terms` frequencies in `[-band, band]`.
pub fn exp_sum(rng: &mut impl Rng, terms: usize, band: f64, window: f64) -> ExpSumSignal {
    let freqs = frequencies(rng, terms, band, false);
    let coeffs = (0..terms).map(|_| coefficient(rng)).collect();
    ExpSumSignal::new(freqs, coeffs, window).expect("valid by construction")
}
