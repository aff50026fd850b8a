//! Sampling on perturbed nodes `t_n`, `sup|t_n - n| < 1/4`.
//!
//! Every series here is `Σ_n s_n G(z)/(G'(t_n)(z - t_n))` for some samples
//! `s_n`, with one truncated product used for both `G` and `G'`.

mod nodes;
mod product;

pub use nodes::{make_nodes, NodeEntry, NodeRule, SamplingNodes, KADEC_BOUND};
pub use product::{Basis, CanonicalProduct, Scaled};

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::coefficients::symmetric_indices;
use crate::error::{Error, Result};
use crate::linear::Linear;
use crate::models::GroupVector;
use crate::regular::Flagged;
use crate::summation::LinearAccumulator;
use crate::trajectory::Trajectory;

fn check_len<V>(nodes: &SamplingNodes, samples: &[V]) -> Result<()> {
    let expected = 2 * nodes.half_width() + 1;
    if samples.len() != expected {
        return Err(Error::LengthMismatch {
            what: "node samples",
            expected,
            actual: samples.len(),
        });
    }
    Ok(())
}

fn combine<V: Linear>(
    basis: &Basis,
    nodes: &SamplingNodes,
    samples: &[V],
    mut acc: LinearAccumulator<V>,
    mut term: impl FnMut(i64, &V, Complex64, &mut LinearAccumulator<V>),
) -> V {
    match basis {
        Basis::Collapse(m) => term(
            *m,
            &samples[nodes.slot(*m)],
            Complex64::new(1.0, 0.0),
            &mut acc,
        ),
        Basis::Weights(w) => {
            for n in symmetric_indices(nodes.half_width()) {
                let i = nodes.slot(n);
                term(n, &samples[i], w[i], &mut acc);
            }
        }
    }
    acc.finish()
}

/// `Σ_n s_n G(z)/(G'(t_n)(z - t_n))` for samples `s_n` at the nodes, in
/// index order `-N..=N`.
pub fn lagrange_series<V: Linear>(
    product: &CanonicalProduct,
    samples: &[V],
    z: Complex64,
) -> Result<V> {
    mixed_lagrange_series(product, product, samples, z)
}

/// As [`lagrange_series`] but with `G'` taken from a longer product.
/// Only useful to measure what the shared truncation buys.
pub fn mixed_lagrange_series<V: Linear>(
    numerator: &CanonicalProduct,
    denominator: &CanonicalProduct,
    samples: &[V],
    z: Complex64,
) -> Result<V> {
    let nodes = numerator.nodes();
    check_len(nodes, samples)?;
    if !nodes.is_prefix_of(denominator.nodes()) {
        return Err(Error::param(
            "denominator",
            "must extend the numerator's nodes",
        ));
    }
    let basis = numerator.basis_with(denominator, z);
    Ok(combine(
        &basis,
        nodes,
        samples,
        LinearAccumulator::new(&samples[0]),
        |_, s, w, acc| acc.add(w, s),
    ))
}

/// Plain scalar interpolation `F(t)` from `F(t_n)`.
pub fn irregular_recon_scalar(
    product: &CanonicalProduct,
    samples: &[Complex64],
    t: f64,
) -> Result<Complex64> {
    lagrange_series(product, samples, Complex64::new(t, 0.0))
}

/// Difference-quotient form anchored at `F(0)`:
/// `F(t) = F(0) + t Σ_n (F(t_n) - F(0))/t_n · G(t)/(G'(t_n)(t - t_n))`.
pub fn s3_series<V: Linear>(
    product: &CanonicalProduct,
    samples: &[V],
    anchor: &V,
    t: f64,
) -> Result<V> {
    let nodes = product.nodes();
    nodes.require_nonzero_anchor()?;
    check_len(nodes, samples)?;
    let basis = product.basis(Complex64::new(t, 0.0));
    let mut acc = LinearAccumulator::new(anchor);
    acc.add(Complex64::new(1.0, 0.0), anchor);
    Ok(combine(&basis, nodes, samples, acc, |n, s, w, acc| {
        acc.add_difference(w * (t / nodes.node(n)), s, anchor)
    }))
}

/// Recovers `⟨f, g*⟩` from `⟨e^{τD}f, g*⟩` and `⟨e^{(t_n + τ)D}f, g*⟩`:
/// `F(0) = F(τ) + τ Σ_n (F(t_n + τ) - F(τ))/t_n · G(-τ)/(G'(t_n)(τ + t_n))`.
///
/// This is the anchored series applied to the trajectory of `e^{τD}f` at
/// time `-τ`.
pub fn shifted_recovery<V: Linear>(
    product: &CanonicalProduct,
    shifted: &[V],
    anchor: &V,
    tau: f64,
) -> Result<V> {
    if tau == 0.0 {
        return Err(Error::param("tau", "must be nonzero"));
    }
    s3_series(product, shifted, anchor, -tau)
}

/// `⟨f, g*⟩ = -Σ_n ⟨e^{t_n D}f, g*⟩ G(0)/(G'(t_n) t_n)`.
pub fn measurement_recovery<V: Linear>(product: &CanonicalProduct, samples: &[V]) -> Result<V> {
    product.nodes().require_nonzero_anchor()?;
    lagrange_series(product, samples, Complex64::new(0.0, 0.0))
}

/// Samples `e^{(t_n + shift)D}f` of a trajectory in index order.
pub fn sample_trajectory<T: Trajectory>(
    trajectory: &T,
    nodes: &SamplingNodes,
    shift: f64,
) -> Vec<T::Value> {
    nodes
        .as_slice()
        .par_iter()
        .map(|&t| trajectory.at(t + shift))
        .collect()
}

/// Samples `e^{t_n D}f` of a state in index order.
pub fn sample_state<S: GroupVector>(f: &S, nodes: &SamplingNodes) -> Vec<S> {
    nodes.as_slice().par_iter().map(|&t| f.evolve(t)).collect()
}

fn check_margin(delta: f64) -> Result<()> {
    if !(delta > 0.0 && delta < PI) {
        return Err(Error::param("delta", "must lie in (0, π)"));
    }
    Ok(())
}

/// `e^{zD}f ≈ Σ_n e^{t_n D}f · G(z)/(G'(t_n)(z - t_n))`; flagged unless
/// `f ∈ B_{π-δ}(D)`.
pub fn irregular_recon_vector<S: GroupVector>(
    f: &S,
    product: &CanonicalProduct,
    z: Complex64,
    delta: f64,
) -> Result<Flagged<S>> {
    check_margin(delta)?;
    let guard = f.default_guard();
    if !(z.im.abs() <= guard) {
        return Err(Error::OverflowGuard {
            im: z.im.abs(),
            guard,
        });
    }
    let samples = sample_state(f, product.nodes());
    Ok(Flagged {
        value: lagrange_series(product, &samples, z)?,
        in_bernstein: f.bernstein_membership(PI - delta),
    })
}

/// Vector form of [`measurement_recovery`] from a state's own trajectory.
pub fn recover_from_state<S: GroupVector>(
    f: &S,
    product: &CanonicalProduct,
    delta: f64,
) -> Result<Flagged<S>> {
    check_margin(delta)?;
    let samples = sample_state(f, product.nodes());
    Ok(Flagged {
        value: measurement_recovery(product, &samples)?,
        in_bernstein: f.bernstein_membership(PI - delta),
    })
}
