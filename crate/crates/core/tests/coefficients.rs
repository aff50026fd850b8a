use std::f64::consts::PI;

use group_sampler::coefficients::{
    boas_coeff_a, boas_coeff_b, favard, favard_in_range, CoefficientTable, Family, FavardTable,
};
use group_sampler::random::rng;
use group_sampler::sinc::{sinc, sinc_derivative};
use rand::Rng;
use serde::Deserialize;

#[derive(Deserialize)]
struct Reference {
    n: u32,
    x: f64,
    value: f64,
}

fn reference() -> Vec<Reference> {
    let text = include_str!("fixtures/sinc_reference.json");
    serde_json::from_str(text).unwrap()
}

/// `δ^n f(x)/h^n` with the centred stencil, error `O(h²)`.
fn central(n: u32, x: f64, h: f64) -> f64 {
    let f = |y: f64| {
        if y == 0.0 {
            1.0
        } else {
            (PI * y).sin() / (PI * y)
        }
    };
    let mut binom = 1.0;
    let mut sum = 0.0;
    for j in 0..=n {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * binom * f(x + (n as f64 / 2.0 - j as f64) * h);
        binom = binom * (n - j) as f64 / (j + 1) as f64;
    }
    sum / h.powi(n as i32)
}

/// Two Richardson levels on the centred difference: error `O(h⁶)`.
fn finite_difference(n: u32, x: f64) -> f64 {
    let h = [0.0, 0.01, 0.04, 0.08, 0.12][n as usize];
    let r1 = |h: f64| (4.0 * central(n, x, h / 2.0) - central(n, x, h)) / 3.0;
    (16.0 * r1(h / 2.0) - r1(h)) / 15.0
}

#[test]
fn sinc_examples() {
    assert_eq!(sinc_derivative(0, 0.0), 1.0);
    assert_eq!(sinc_derivative(0, 3.0), 0.0);
    assert!((sinc_derivative(2, 0.0) + PI * PI / 3.0).abs() < 1e-14);
    assert!((finite_difference(2, 0.0) + PI * PI / 3.0).abs() < 1e-6);
}

#[test]
fn sinc_derivatives_match_high_precision_reference() {
    for r in reference() {
        let got = sinc_derivative(r.n, r.x);
        let scale = PI.powi(r.n as i32) / (r.n as f64 + 1.0);
        assert!(
            (got - r.value).abs() <= 1e-12 * scale,
            "n={} x={} got {got} want {}",
            r.n,
            r.x,
            r.value
        );
    }
}

#[test]
fn sinc_derivatives_match_finite_differences() {
    let mut r = rng(17);
    for n in 1..=4 {
        for _ in 0..100 {
            let mut x = 0.0;
            while x == 0.0 {
                x = r.gen_range(-5.0..5.0);
            }
            let fd = finite_difference(n, x);
            let got = sinc_derivative(n, x);
            assert!((got - fd).abs() <= 1e-6, "n={n} x={x} {got} vs {fd}");
        }
    }
}

#[test]
fn sinc_is_even_and_vanishes_at_integers() {
    for k in 1..40 {
        assert_eq!(sinc(k as f64), 0.0);
        assert_eq!(sinc(-(k as f64)), 0.0);
    }
    for &x in &[0.3, 1.7, 12.25] {
        assert_eq!(sinc(x), sinc(-x));
        assert!((sinc_derivative(1, x) + sinc_derivative(1, -x)).abs() < 1e-15);
    }
}

#[test]
fn first_order_coefficient_examples() {
    assert!((boas_coeff_a(1, 1) - 4.0 / PI).abs() < 1e-15);
    assert!((boas_coeff_a(1, 0) - 4.0 / PI).abs() < 1e-15);
    assert!((boas_coeff_b(1, 0) - PI * PI / 3.0).abs() < 1e-14);
    assert!((boas_coeff_b(1, 1) - 2.0).abs() < 1e-15);
    assert!((boas_coeff_b(1, -1) - 2.0).abs() < 1e-15);
}

#[test]
fn coefficients_symmetry() {
    for m in 1..=4 {
        for k in -30..=30 {
            assert_eq!(boas_coeff_a(m, k), boas_coeff_a(m, 1 - k));
            assert_eq!(boas_coeff_b(m, k), boas_coeff_b(m, -k));
        }
    }
}

#[test]
fn coefficients_are_signed_sinc_derivatives() {
    for m in 1..=3 {
        for k in -50i64..=50 {
            let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
            let a = sign * sinc_derivative(2 * m - 1, 0.5 - k as f64);
            let b = sign * sinc_derivative(2 * m, -(k as f64));
            assert!(
                (boas_coeff_a(m, k) - a).abs() <= 1e-10 * a.abs().max(1.0),
                "A m={m} k={k}"
            );
            assert!(
                (boas_coeff_b(m, k) - b).abs() <= 1e-10 * b.abs().max(1.0),
                "B m={m} k={k}"
            );
        }
    }
}

#[test]
fn coefficients_match_reference_values() {
    for r in reference() {
        if r.x.fract() == 0.0 && r.x.abs() <= 50.0 && r.n % 2 == 0 && r.n >= 2 {
            let k = -(r.x as i64);
            let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
            let want = sign * r.value;
            let got = boas_coeff_b(r.n / 2, k);
            assert!(
                (got - want).abs() <= 1e-12 * want.abs().max(1.0),
                "B n={} k={k}",
                r.n
            );
        }
        if (r.x - 0.5).fract() == 0.0 && r.n % 2 == 1 {
            let k = (0.5 - r.x) as i64;
            let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
            let want = sign * r.value;
            let got = boas_coeff_a(r.n.div_ceil(2), k);
            assert!(
                (got - want).abs() <= 1e-12 * want.abs().max(1.0),
                "A n={} k={k}",
                r.n
            );
        }
    }
}

/// `Σ_{|k|>K} |A_{m,k}|` bounded by integrating the majorant
/// `(2m-1)!/π Σ_j π^{2j} |y|^{2j-2m}/(2j)!` over `|y| ≥ K`.
fn analytic_tail_a(m: u32, half_width: usize) -> f64 {
    let k = half_width as f64;
    let fact = |n: u32| (1..=n).map(f64::from).product::<f64>();
    let mut sum = 0.0;
    for j in 0..m {
        let p = (2 * m - 2 * j) as f64;
        sum += PI.powi(2 * j as i32) / fact(2 * j) * k.powf(1.0 - p) / (p - 1.0);
    }
    2.0 * fact(2 * m - 1) / PI * sum
}

#[test]
fn first_identity_partial_sums_within_analytic_tail() {
    for m in 1..=3 {
        let r = 2 * m as i32 - 1;
        for &sigma in &[1.0, PI] {
            let mut previous = 0.0;
            for &half_width in &[10usize, 100, 1000, 10_000] {
                let table = CoefficientTable::new(Family::Odd, m, half_width);
                let partial = (sigma / PI).powi(r) * table.abs_partial_sum();
                let limit = sigma.powi(r);
                assert!(partial > previous, "not increasing at K={half_width}");
                assert!(partial <= limit * (1.0 + 1e-15));
                let gap = limit - partial;
                let tail = (sigma / PI).powi(r) * analytic_tail_a(m, half_width);
                assert!(
                    gap <= tail,
                    "m={m} σ={sigma} K={half_width} gap {gap} tail {tail}"
                );
                if m == 1 {
                    let first_order_tail = 2.0 * sigma / (PI * PI * (half_width as f64 - 0.5));
                    assert!(gap <= first_order_tail);
                }
                previous = partial;
            }
        }
    }
}

#[test]
fn second_identity_partial_sums_increase_to_limit() {
    for m in 1..=3 {
        let mut previous = 0.0;
        for &half_width in &[10usize, 100, 1000, 10_000] {
            let table = CoefficientTable::new(Family::Even, m, half_width);
            let partial = table.abs_partial_sum();
            assert!(partial > previous);
            assert!(partial <= table.abs_total() * (1.0 + 1e-15));
            previous = partial;
        }
        let table = CoefficientTable::new(Family::Even, m, 10_000);
        assert!(table.abs_tail() / table.abs_total() < 1e-3);
    }
}

#[test]
fn favard_leading_values() {
    assert!((favard(0).value - 1.0).abs() <= 1e-12);
    assert!((favard(1).value - PI / 2.0).abs() <= 1e-12);
}

#[test]
fn favard_closed_forms() {
    let closed = [
        1.0,
        PI / 2.0,
        PI.powi(2) / 8.0,
        PI.powi(3) / 24.0,
        5.0 * PI.powi(4) / 384.0,
        PI.powi(5) / 240.0,
        61.0 * PI.powi(6) / 46080.0,
        17.0 * PI.powi(7) / 40320.0,
    ];
    let table = FavardTable::new(7);
    for (j, want) in closed.iter().enumerate() {
        let v = table.entries()[j];
        assert!(
            (v.value - want).abs() <= 1e-12,
            "K_{j} = {} want {want}",
            v.value
        );
        assert!(
            (v.value - want).abs() <= v.tail_bound.max(1e-15),
            "K_{j} outside its certificate"
        );
    }
}

#[test]
fn favard_intervals_hold() {
    let table = FavardTable::new(12);
    for v in table.entries() {
        assert!(favard_in_range(v), "K_{} = {}", v.j, v.value);
        if v.j >= 2 && v.j % 2 == 0 {
            assert!(v.value > 1.0 && v.value < 4.0 / PI);
        }
        if v.j >= 3 && v.j % 2 == 1 {
            assert!(v.value > PI / 4.0 && v.value < PI / 2.0);
        }
    }
    // even constants increase to 4/π, odd ones decrease to it
    for j in (0..10).step_by(2) {
        assert!(table.get(j + 2) > table.get(j));
        assert!(table.get(j + 3) < table.get(j + 1));
    }
}

#[test]
fn kolmogorov_constants() {
    let table = FavardTable::new(6);
    assert!((table.kolmogorov_constant(1, 2) - 2.0).abs() < 1e-12);
    for n in 0..=6 {
        assert_eq!(table.kolmogorov_constant(n, n), 1.0);
    }
}
