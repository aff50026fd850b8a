mod common;

use std::f64::consts::PI;

use common::{c, linspace, max, single};
use group_sampler::convergence::{time_scale, S1};
use group_sampler::irregular::{
    irregular_recon_scalar, irregular_recon_vector, lagrange_series, make_nodes,
    measurement_recovery, mixed_lagrange_series, recover_from_state, s3_series, sample_state,
    sample_trajectory, shifted_recovery, CanonicalProduct, NodeEntry, NodeRule, SamplingNodes,
};
use group_sampler::random::{exp_sum, rng, spectral_battery, spectral_state};
use group_sampler::regular::{s1_series, RegularGrid};
use group_sampler::trajectory::ProjectedTrajectory;
use group_sampler::{DualFunctional, GroupVector, Linear, SpectralState, Spectrum};

fn product(half_width: usize, rule: NodeRule) -> CanonicalProduct {
    CanonicalProduct::new(make_nodes(half_width, rule).unwrap())
}

fn sin_nodes() -> NodeRule {
    NodeRule::Sinusoidal { amplitude: 0.2 }
}

fn offset_nodes() -> NodeRule {
    NodeRule::Constant { offset: 0.1 }
}

fn states(seed: u64, count: usize) -> Vec<SpectralState> {
    spectral_battery(seed, count, 6, 0.75 * PI, true)
}

#[test]
fn node_rule_examples() {
    let zero = make_nodes(100, NodeRule::Zero).unwrap();
    assert_eq!(zero.deviation(), 0.0);
    assert!(zero.iter().all(|(n, t)| t == n as f64));
    let sin = make_nodes(100, sin_nodes()).unwrap();
    assert!(sin.deviation() <= 0.2);
    let err = make_nodes(100, NodeRule::Constant { offset: 0.3 }).unwrap_err();
    assert_eq!(err.code(), "E_NODES");
    assert!(make_nodes(
        100,
        NodeRule::Uniform {
            amplitude: 0.25,
            seed: 1
        }
    )
    .is_err());
    let uniform = make_nodes(
        100,
        NodeRule::Uniform {
            amplitude: 0.24,
            seed: 1,
        },
    )
    .unwrap();
    assert!(uniform.deviation() < 0.24);
}

#[test]
fn node_rules_parse_and_nest() {
    for text in ["zero", "sin:0.2", "const:0.1", "rand:0.2:7"] {
        let rule: NodeRule = text.parse().unwrap();
        assert_eq!(rule.to_string(), text);
        let small = make_nodes(20, rule.clone()).unwrap();
        let large = make_nodes(40, rule).unwrap();
        assert!(small.is_prefix_of(&large));
    }
    assert!("sin".parse::<NodeRule>().is_err());
}

#[test]
fn product_vanishes_at_nodes() {
    let g = product(50, sin_nodes());
    for (_, t) in g.nodes().iter() {
        assert!(g.eval(c(t, 0.0)).is_zero());
    }
}

#[test]
fn product_at_origin_is_minus_first_node() {
    for rule in [
        offset_nodes(),
        NodeRule::Uniform {
            amplitude: 0.2,
            seed: 5,
        },
    ] {
        let g = product(300, rule);
        let t0 = g.nodes().node(0);
        assert_ne!(t0, 0.0);
        assert_eq!(g.eval_real(0.0), -t0);
    }
}

#[test]
fn unperturbed_product_is_the_sine() {
    let errors: Vec<f64> = [1000usize, 10_000]
        .iter()
        .map(|&n| {
            let g = product(n, NodeRule::Zero);
            let err = (g.eval_real(0.5) - 1.0 / PI).abs();
            assert!(err <= 1.0 / n as f64, "N={n} err {err}");
            err
        })
        .collect();
    // the slack is O(1/N): ten times the terms, a tenth of the error
    let ratio = errors[1] / errors[0];
    assert!((0.08..=0.12).contains(&ratio), "ratio {ratio}");
    let g = product(200, NodeRule::Zero);
    for &x in &[0.25, 1.7, -3.4] {
        let slack = (1.0 + x * x) / 200.0;
        assert!((g.eval_real(x) - (PI * x).sin() / PI).abs() <= slack);
    }
}

#[test]
fn unperturbed_derivatives_alternate() {
    for n in [1000usize, 10_000] {
        let g = product(n, NodeRule::Zero);
        for m in [-5i64, 0, 1, 4] {
            let expected = if m % 2 == 0 { 1.0 } else { -1.0 };
            let slack = 2.0 * (m * m + 1) as f64 / n as f64;
            assert!(
                (g.g_prime_at_node(m).unwrap() - expected).abs() <= slack,
                "N={n} m={m}"
            );
        }
    }
}

#[test]
fn derivative_matches_central_difference() {
    for rule in [
        sin_nodes(),
        NodeRule::Uniform {
            amplitude: 0.2,
            seed: 3,
        },
    ] {
        let g = product(200, rule);
        for m in [-7i64, -1, 0, 2, 9] {
            let t = g.nodes().node(m);
            let h = 1e-5;
            let fd = (g.eval_real(t + h) - g.eval_real(t - h)) / (2.0 * h);
            let d = g.g_prime_at_node(m).unwrap();
            assert!((fd - d).abs() <= 1e-6 * d.abs(), "m={m} fd {fd} d {d}");
        }
        assert!(g.derivatives().iter().all(|d| !d.is_zero()));
    }
}

#[test]
fn scalar_interpolation_collapses_at_nodes() {
    let f = exp_sum(&mut rng(51), 4, 0.7 * PI, 10.0);
    let g = DualFunctional::PointEvaluation { x0: 0.3 };
    let traj = ProjectedTrajectory::new(&f, &g).unwrap();
    let p = product(60, sin_nodes());
    let samples = sample_trajectory(&traj, p.nodes(), 0.0);
    for m in [-60i64, -3, 0, 17] {
        let t = p.nodes().node(m);
        assert_eq!(
            irregular_recon_scalar(&p, &samples, t).unwrap(),
            samples[p.nodes().slot(m)]
        );
    }
}

#[test]
fn anchored_series_collapses_and_needs_nonzero_anchor() {
    let f = spectral_state(&mut rng(52), 5, 0.75 * PI, true);
    let p = product(80, offset_nodes());
    let samples = sample_state(&f, p.nodes());
    for m in [-4i64, 1, 30] {
        let t = p.nodes().node(m);
        let out = s3_series(&p, &samples, &f, t).unwrap();
        assert!(out.minus(&f.evolve(t)).norm() <= 1e-13 * f.norm());
    }
    let zero = product(80, NodeRule::Zero);
    let samples = sample_state(&f, zero.nodes());
    assert_eq!(
        s3_series(&zero, &samples, &f, 0.3).unwrap_err().code(),
        "E_ANCHOR"
    );
}

#[test]
fn integer_nodes_agree_with_regular_sampling() {
    let half_width = 2000;
    let p = product(half_width, NodeRule::Zero);
    let grid = RegularGrid::new(PI, half_width).unwrap();
    let mut r = rng(53);
    for _ in 0..4 {
        let f = exp_sum(&mut r, 5, 0.9 * PI, 20.0);
        let g = DualFunctional::PointEvaluation { x0: -0.6 };
        let traj = ProjectedTrajectory::new(&f, &g).unwrap();
        let samples = sample_trajectory(&traj, p.nodes(), 0.0);
        for t in [-2.7, 0.45, 3.9] {
            let irregular = irregular_recon_scalar(&p, &samples, t).unwrap();
            let regular = s1_series(&traj, &grid, t);
            let exact = f.value_at(-0.6 + t);
            let tol = S1.tolerance(time_scale(f.norm(), t), half_width);
            assert!((regular - exact).norm() <= tol);
            assert!((irregular - exact).norm() <= tol);
            assert!((irregular - regular).norm() <= 2.0 * tol);
        }
    }
}

#[test]
fn shifted_recovery_of_pairings() {
    let tau = 0.37;
    let p = product(400, offset_nodes());
    for f in states(54, 5) {
        for index in 0..f.coeffs().len() {
            let g = DualFunctional::CoefficientProjection { index };
            let traj = ProjectedTrajectory::new(&f, &g).unwrap();
            let shifted = sample_trajectory(&traj, p.nodes(), tau);
            let anchor = f.evolve(tau).pair(&g).unwrap();
            let got = shifted_recovery(&p, &shifted, &anchor, tau).unwrap();
            let want = f.pair(&g).unwrap();
            assert!((got - want).norm() <= 1e-10 * f.norm(), "{got} vs {want}");
        }
    }
}

#[test]
fn vector_series_collapses_and_matches_recovery_at_origin() {
    let f = spectral_state(&mut rng(55), 6, 0.75 * PI, true);
    let p = product(150, offset_nodes());
    for m in [-150i64, -2, 0, 77] {
        let t = p.nodes().node(m);
        let out = irregular_recon_vector(&f, &p, c(t, 0.0), PI / 4.0).unwrap();
        assert!(out.in_bernstein);
        assert!(out.value.minus(&f.evolve(t)).norm() <= 1e-13 * f.norm());
    }
    let at_zero = irregular_recon_vector(&f, &p, c(0.0, 0.0), PI / 4.0)
        .unwrap()
        .value;
    let recovered = recover_from_state(&f, &p, PI / 4.0).unwrap().value;
    assert_eq!(at_zero, recovered);
}

#[test]
fn vector_series_outside_margin_is_flagged() {
    let f = single(0.9 * PI, c(1.0, 0.0));
    let p = product(20, sin_nodes());
    assert!(
        !irregular_recon_vector(&f, &p, c(0.3, 0.0), PI / 4.0)
            .unwrap()
            .in_bernstein
    );
}

fn max_error(f: &SpectralState, p: &CanonicalProduct, zs: &[f64]) -> f64 {
    let samples = sample_state(f, p.nodes());
    max(zs.iter().map(|&z| {
        let v = lagrange_series(p, &samples, c(z, 0.0)).unwrap();
        v.minus(&f.evolve(z)).norm() / f.norm()
    }))
}

#[test]
fn vector_series_errors_do_not_grow_with_terms() {
    let zs = linspace(-3.0, 3.0, 301);
    let fs = states(56, 3);
    let errors: Vec<f64> = [250usize, 500, 1000, 2000]
        .iter()
        .map(|&n| {
            let p = product(n, sin_nodes());
            max(fs.iter().map(|f| max_error(f, &p, &zs)))
        })
        .collect();
    for w in errors.windows(2) {
        assert!(w[0].is_finite() && w[1] <= 2.0 * w[0], "{errors:?}");
    }
    assert!(errors.iter().all(|&e| e < 1e-12), "{errors:?}");
}

#[test]
fn vector_series_converges_before_the_rounding_floor() {
    let zs = linspace(-3.0, 3.0, 61);
    let fs = states(57, 3);
    let errors: Vec<f64> = [25usize, 50, 100]
        .iter()
        .map(|&n| {
            let p = product(n, sin_nodes());
            max(fs.iter().map(|f| max_error(f, &p, &zs)))
        })
        .collect();
    for w in errors.windows(2) {
        assert!(w[1] <= 0.7 * w[0], "{errors:?}");
    }
}

#[test]
fn shared_truncation_beats_mixed_truncation() {
    let zs = linspace(-3.0, 3.0, 31);
    for f in states(58, 4) {
        for n in [40usize, 100] {
            let p = product(n, sin_nodes());
            let long = product(2 * n, sin_nodes());
            let samples = sample_state(&f, p.nodes());
            let consistent = max(zs.iter().map(|&z| {
                lagrange_series(&p, &samples, c(z, 0.0))
                    .unwrap()
                    .minus(&f.evolve(z))
                    .norm()
            }));
            let mixed = max(zs.iter().map(|&z| {
                mixed_lagrange_series(&p, &long, &samples, c(z, 0.0))
                    .unwrap()
                    .minus(&f.evolve(z))
                    .norm()
            }));
            assert!(consistent <= mixed, "N={n} {consistent} > {mixed}");
        }
    }
}

#[test]
fn mixed_series_rejects_unrelated_products() {
    let p = product(10, sin_nodes());
    let other = product(20, offset_nodes());
    let samples = vec![c(1.0, 0.0); 21];
    assert!(mixed_lagrange_series(&p, &other, &samples, c(0.5, 0.0)).is_err());
    assert!(lagrange_series(&p, &samples[..20], c(0.5, 0.0)).is_err());
}

#[test]
fn measurement_recovery_examples() {
    let spectrum = Spectrum::new(vec![-1.0, 1.0, 2.0]).unwrap();
    let e = SpectralState::eigenvector(spectrum.clone(), 1)
        .unwrap()
        .scaled(c(0.3, -0.4));
    let p = product(1000, offset_nodes());
    let samples = sample_state(&e, p.nodes());
    // projection onto an eigenvector absent from f: every sample is zero
    let g = DualFunctional::CoefficientProjection { index: 2 };
    let pairs: Vec<_> = samples.iter().map(|s| s.pair(&g).unwrap()).collect();
    assert_eq!(measurement_recovery(&p, &pairs).unwrap(), c(0.0, 0.0));
    // λ = 1: recovers the coefficient
    let g = DualFunctional::CoefficientProjection { index: 1 };
    let pairs: Vec<_> = samples.iter().map(|s| s.pair(&g).unwrap()).collect();
    let got = measurement_recovery(&p, &pairs).unwrap();
    assert!((got - c(0.3, -0.4)).norm() <= 1e-12, "{got}");
    let zero = product(10, NodeRule::Zero);
    assert!(measurement_recovery(&zero, &vec![c(1.0, 0.0); 21]).is_err());
}

#[test]
fn measurement_recovery_of_every_coefficient() {
    let p = product(1000, offset_nodes());
    for f in states(59, 5) {
        let samples = sample_state(&f, p.nodes());
        let vector = measurement_recovery(&p, &samples).unwrap();
        for (j, want) in f.coeffs().iter().enumerate() {
            let g = DualFunctional::CoefficientProjection { index: j };
            let pairs: Vec<_> = samples.iter().map(|s| s.pair(&g).unwrap()).collect();
            let got = measurement_recovery(&p, &pairs).unwrap();
            assert!((got - want).norm() <= 1e-2 * want.norm());
            assert!((got - vector.coeffs()[j]).norm() <= 1e-12 * f.norm());
        }
    }
}

#[test]
fn nodes_serialize() {
    let nodes = make_nodes(5, sin_nodes()).unwrap();
    let rule: NodeRule =
        serde_json::from_str(&serde_json::to_string(nodes.rule()).unwrap()).unwrap();
    assert_eq!(&rule, nodes.rule());
    let entries = nodes.iter().map(|(n, t_n)| NodeEntry { n, t_n }).collect();
    let explicit = NodeRule::Explicit { nodes: entries };
    let again: SamplingNodes = make_nodes(5, explicit).unwrap();
    assert_eq!(again.as_slice(), nodes.as_slice());
}
