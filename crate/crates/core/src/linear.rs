//! Minimal vector-space view shared by scalars and states.
//!
//! Every sampling formula is a weighted sum of trajectory samples. Writing the
//! formulas against [`Linear`] lets the same code run on whole states and on
//! scalar pairings `⟨e^{tD}f, g*⟩`, which is how scalar identities lift to
//! vector identities.

use num_complex::Complex64;

/// A value that is a finite complex coordinate vector in a fixed basis.
pub trait Linear: Clone {
    /// Coordinates in the value's basis.
    fn components(&self) -> &[Complex64];

    /// A value of the same shape (same basis) with new coordinates.
    fn with_components(&self, components: Vec<Complex64>) -> Self;

    fn zero_like(&self) -> Self {
        self.with_components(vec![Complex64::new(0.0, 0.0); self.components().len()])
    }

    fn scaled(&self, a: Complex64) -> Self {
        self.with_components(self.components().iter().map(|c| a * c).collect())
    }

    fn plus(&self, other: &Self) -> Self {
        self.with_components(
            self.components()
                .iter()
                .zip(other.components())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    fn minus(&self, other: &Self) -> Self {
        self.with_components(
            self.components()
                .iter()
                .zip(other.components())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Euclidean length of the coordinate vector.
    fn coordinate_norm(&self) -> f64 {
        self.components()
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

impl Linear for Complex64 {
    fn components(&self) -> &[Complex64] {
        std::slice::from_ref(self)
    }

    fn with_components(&self, components: Vec<Complex64>) -> Self {
        components[0]
    }
}
