mod common;

use std::f64::consts::PI;

use common::{c, single};
use group_sampler::random::{exp_sum, rng, spectral_state};
use group_sampler::{DualFunctional, ExpSumSignal, GroupVector, Linear, SpectralState, Spectrum};
use proptest::prelude::*;

fn state(seed: u64) -> SpectralState {
    let mut r = rng(seed);
    spectral_state(&mut r, 6, 3.2, true)
}

#[test]
fn evolve_single_frequency_half_turn() {
    let f = single(2.0, c(1.0, 0.0));
    let g = f.evolve(PI / 2.0);
    assert!((g.coeffs()[0] - c(-1.0, 0.0)).norm() < 1e-15);
}

#[test]
fn evolve_at_zero_is_identity() {
    let f = state(3);
    assert_eq!(f.evolve(0.0), f);
}

#[test]
fn complex_evolution_damps_by_exponential() {
    let f = single(1.0, c(1.0, 0.0));
    let g = f.evolve_complex(c(0.0, 1.0)).unwrap();
    assert!((g.coeffs()[0] - c((-1.0f64).exp(), 0.0)).norm() < 1e-15);
}

#[test]
fn complex_evolution_on_real_axis_matches_evolve() {
    let f = state(4);
    for &t in &[-2.5, 0.3, 7.0] {
        let a = f.evolve(t);
        let b = f.evolve_complex(c(t, 0.0)).unwrap();
        assert!(a.minus(&b).norm() <= 1e-15 * f.norm());
    }
}

#[test]
fn complex_evolution_guard() {
    let f = single(2.0, c(1.0, 0.0));
    assert_eq!(
        f.evolve_complex(c(0.0, 30.0)).unwrap_err().code(),
        "E_OVERFLOW_GUARD"
    );
    assert!(f.evolve_complex_guarded(c(0.0, 30.0), 40.0).is_ok());
}

#[test]
fn generator_squared_single_frequency() {
    let f = single(3.0, c(1.0, 0.0));
    let g = f.apply_generator(2);
    assert_eq!(g.coeffs()[0], c(-9.0, 0.0));
    assert_eq!(f.apply_generator(0), f);
}

#[test]
fn coefficient_projection_of_eigenvector() {
    let spectrum = Spectrum::new(vec![-1.0, 0.5, 2.0]).unwrap();
    for j in 0..3 {
        let e = SpectralState::eigenvector(spectrum.clone(), j).unwrap();
        let v = e
            .pair(&DualFunctional::CoefficientProjection { index: j })
            .unwrap();
        assert_eq!(v, c(1.0, 0.0));
    }
}

#[test]
fn point_evaluation_at_origin_sums_coefficients() {
    let coeffs = vec![c(1.0, 2.0), c(-0.5, 0.25), c(0.1, -0.7)];
    let f = ExpSumSignal::new(vec![-2.0, 0.3, 1.1], coeffs.clone(), 10.0).unwrap();
    let v = f
        .pair(&DualFunctional::PointEvaluation { x0: 0.0 })
        .unwrap();
    let sum: group_sampler::Complex64 = coeffs.iter().sum();
    assert!((v - sum).norm() < 1e-15);
}

#[test]
fn functional_backend_mismatch_is_an_error() {
    let f = state(1);
    assert!(f
        .pair(&DualFunctional::PointEvaluation { x0: 0.0 })
        .is_err());
    let s = exp_sum(&mut rng(1), 3, 2.0, 5.0);
    assert!(s
        .pair(&DualFunctional::CoefficientProjection { index: 0 })
        .is_err());
}

#[test]
fn membership_examples() {
    let all = SpectralState::from_parts(vec![-1.0, 0.0, 2.0], vec![c(1.0, 0.0); 3]).unwrap();
    assert!(all.bernstein_membership(2.0));
    assert!(!all.bernstein_membership(1.5));
    let cut = SpectralState::from_parts(
        vec![-1.0, 0.0, 2.0],
        vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
    )
    .unwrap();
    assert!(cut.bernstein_membership(1.5));
    assert_eq!(cut.spectral_type(), 1.0);
}

#[test]
fn translation_backend_shifts_the_argument() {
    let f = exp_sum(&mut rng(8), 5, 0.9 * PI, 20.0);
    let g = f.evolve(1.7);
    for &x in &[-3.0, 0.0, 2.2] {
        assert!((g.value_at(x) - f.value_at(x + 1.7)).norm() < 1e-13);
    }
}

#[test]
fn sup_norm_is_bracketed() {
    let f = exp_sum(&mut rng(9), 5, 0.9 * PI, 20.0);
    let b = f.norm_bracket();
    assert!(b.lower <= b.upper);
    assert_eq!(f.norm(), b.lower);
    for x in f.grid().step_by(97) {
        assert!(f.value_at(x).norm() <= b.lower);
    }
}

#[test]
fn state_file_round_trip() {
    let f = state(11);
    let text = serde_json::to_string(&f).unwrap();
    let g: SpectralState = serde_json::from_str(&text).unwrap();
    assert_eq!(f, g);
}

fn seeds() -> impl Strategy<Value = SpectralState> {
    (any::<u64>(), 1usize..10, 0.5f64..6.0).prop_map(|(seed, points, band)| {
        let mut r = rng(seed);
        spectral_state(&mut r, points, band, true)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn isometry(f in seeds(), t in -1e3f64..1e3) {
        let n = f.norm();
        prop_assert!((f.evolve(t).norm() - n).abs() <= 1e-12 * n);
    }

    #[test]
    fn group_law(f in seeds(), s in -50.0f64..50.0, t in -50.0f64..50.0) {
        let lhs = f.evolve(s).evolve(t);
        let rhs = f.evolve(s + t);
        prop_assert!(lhs.minus(&rhs).norm() <= 1e-12 * f.norm());
    }

    #[test]
    fn complex_growth_bound(f in seeds(), y in -2.0f64..2.0) {
        let g = f.evolve_complex(c(0.3, y)).unwrap();
        let bound = (f.spectral_type() * y.abs()).exp() * f.norm();
        prop_assert!(g.norm() <= bound * (1.0 + 1e-14));
    }

    #[test]
    fn bernstein_inequality_in_the_model(f in seeds()) {
        let sigma = f.spectral_type();
        for k in 0..=20u32 {
            let lhs = f.apply_generator(k).norm();
            prop_assert!(lhs <= sigma.powi(k as i32) * f.norm() * (1.0 + 1e-12));
        }
    }

    #[test]
    fn cauchy_schwarz(f in seeds(), w in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 10)) {
        let n = f.coeffs().len();
        let weights: Vec<_> = w[..n].iter().map(|&(a, b)| c(a, b)).collect();
        let g = DualFunctional::Vector { weights };
        let v = f.pair(&g).unwrap();
        prop_assert!(v.norm() <= f.norm() * g.norm() * (1.0 + 1e-14));
        for index in 0..n {
            let p = f.pair(&DualFunctional::CoefficientProjection { index }).unwrap();
            prop_assert!(p.norm() <= f.norm() * (1.0 + 1e-15));
        }
    }

    #[test]
    fn point_evaluation_below_coefficient_sum(seed in any::<u64>(), x0 in -20.0f64..20.0) {
        let f = exp_sum(&mut rng(seed), 5, 0.9 * PI, 20.0);
        let v = f.pair(&DualFunctional::PointEvaluation { x0 }).unwrap();
        prop_assert!(v.norm() <= f.norm_bracket().upper * (1.0 + 1e-14));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generator_is_the_derivative(f in seeds()) {
        let df = f.apply_generator(1);
        let quotient = |h: f64| f.evolve(h).minus(&f).scaled(c(1.0 / h, 0.0));
        let richardson = |h: f64| quotient(h / 2.0).scaled(c(2.0, 0.0)).minus(&quotient(h));
        let h = 0.02 / f.spectral_type();
        let e1 = quotient(h).minus(&df).norm();
        let e2 = quotient(h / 2.0).minus(&df).norm();
        let order = (e1 / e2).log2();
        prop_assert!((order - 1.0).abs() < 0.1, "forward order {order}");
        let r1 = richardson(h).minus(&df).norm();
        let r2 = richardson(h / 2.0).minus(&df).norm();
        let order = (r1 / r2).log2();
        prop_assert!((order - 2.0).abs() < 0.15, "extrapolated order {order}");
    }

    #[test]
    fn exponential_vectors_are_bernstein_vectors(f in seeds()) {
        let sigma = f.spectral_type();
        let c_max = (0..=30u32)
            .map(|k| f.apply_generator(k).norm() / sigma.powi(k as i32))
            .fold(0.0, f64::max);
        prop_assert!(c_max.is_finite());
        prop_assert!(f.bernstein_membership(sigma * (1.0 + 1e-9)));
        // Below σ_f the growth ratio is unbounded. It may dip first when the
        // top frequency carries a small coefficient, so compare far apart:
        // ratio(k) ≥ ln|c_top| + k ln(10/9) eventually dominates.
        let below = 0.9 * sigma;
        let ratio = |k: u32| f.generator_log_norm(k) - k as f64 * below.ln();
        prop_assert!(ratio(2000) > ratio(30) + 100.0);
    }
}
