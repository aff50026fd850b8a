//! Sources of trajectory samples `e^{tD}f` and `e^{tD}Df`.

use num_complex::Complex64;

use crate::error::Result;
use crate::linear::Linear;
use crate::models::{DualFunctional, GroupVector};

/// Something that can be sampled along `t ↦ e^{tD}f`.
pub trait Trajectory: Sync {
    type Value: Linear + Send;

    /// `e^{tD} f`.
    fn at(&self, t: f64) -> Self::Value;

    /// `e^{tD} D f`.
    fn derivative_at(&self, t: f64) -> Self::Value;
}

/// The exact trajectory of a state.
#[derive(Debug, Clone, Copy)]
pub struct StateTrajectory<'a, S>(pub &'a S);

impl<S: GroupVector> Trajectory for StateTrajectory<'_, S> {
    type Value = S;

    fn at(&self, t: f64) -> S {
        self.0.evolve(t)
    }

    fn derivative_at(&self, t: f64) -> S {
        self.0.apply_generator(1).evolve(t)
    }
}

/// The scalar function `F(t) = ⟨e^{tD}f, g*⟩`.
#[derive(Debug, Clone)]
pub struct ProjectedTrajectory<'a, S> {
    state: &'a S,
    functional: &'a DualFunctional,
}

impl<'a, S: GroupVector> ProjectedTrajectory<'a, S> {
    /// Fails if `g*` cannot be paired with this backend.
    pub fn new(state: &'a S, functional: &'a DualFunctional) -> Result<Self> {
        state.pair(functional)?;
        Ok(Self { state, functional })
    }
}

impl<S: GroupVector> Trajectory for ProjectedTrajectory<'_, S> {
    type Value = Complex64;

    fn at(&self, t: f64) -> Complex64 {
        self.state
            .evolve(t)
            .pair(self.functional)
            .expect("pairing validated at construction")
    }

    fn derivative_at(&self, t: f64) -> Complex64 {
        self.state
            .apply_generator(1)
            .evolve(t)
            .pair(self.functional)
            .expect("pairing validated at construction")
    }
}

/// A scalar trajectory given by closures for `F` and `F'`.
pub struct FnTrajectory<F, G> {
    pub value: F,
    pub derivative: G,
}

impl<F, G> Trajectory for FnTrajectory<F, G>
where
    F: Fn(f64) -> Complex64 + Sync,
    G: Fn(f64) -> Complex64 + Sync,
{
    type Value = Complex64;

    fn at(&self, t: f64) -> Complex64 {
        (self.value)(t)
    }

    fn derivative_at(&self, t: f64) -> Complex64 {
        (self.derivative)(t)
    }
}
