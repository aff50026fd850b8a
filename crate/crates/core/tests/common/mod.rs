#![allow(dead_code)]

use group_sampler::{Complex64, GroupVector, SpectralState};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn single(lambda: f64, coeff: Complex64) -> SpectralState {
    SpectralState::from_parts(vec![lambda], vec![coeff]).unwrap()
}

pub fn dist<S: GroupVector>(a: &S, b: &S) -> f64 {
    a.minus(b).norm()
}

/// Uniform grid of `count` points on `[a, b]`.
pub fn linspace(a: f64, b: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![a];
    }
    (0..count)
        .map(|i| a + (b - a) * i as f64 / (count - 1) as f64)
        .collect()
}

pub fn max(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().fold(0.0, f64::max)
}
