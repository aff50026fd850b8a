//! Compensated accumulation.
//!
//! All series in this crate are reduced with Neumaier's variant of Kahan
//! summation in a fixed order, so results are reproducible bit-for-bit.

use num_complex::Complex64;

use crate::linear::Linear;

/// Neumaier-compensated sum of `f64` terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Compensated sum of complex terms, real and imaginary parts tracked separately.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexSum {
    re: CompensatedSum,
    im: CompensatedSum,
}

impl ComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: Complex64) {
        self.re.add(value.re);
        self.im.add(value.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// Accumulates `Σ w_i x_i` for any [`Linear`] value with compensated
/// component-wise sums.
#[derive(Debug, Clone)]
pub struct LinearAccumulator<V: Linear> {
    template: V,
    sums: Vec<ComplexSum>,
}

impl<V: Linear> LinearAccumulator<V> {
    /// Starts an empty accumulator shaped like `template`.
    pub fn new(template: &V) -> Self {
        Self {
            template: template.clone(),
            sums: vec![ComplexSum::new(); template.components().len()],
        }
    }

    /// Adds `weight * x`.
    #[inline]
    pub fn add(&mut self, weight: Complex64, x: &V) {
        for (s, c) in self.sums.iter_mut().zip(x.components()) {
            s.add(weight * c);
        }
    }

    /// Adds `weight * (x - y)`, forming the difference first.
    #[inline]
    pub fn add_difference(&mut self, weight: Complex64, x: &V, y: &V) {
        for ((s, a), b) in self.sums.iter_mut().zip(x.components()).zip(y.components()) {
            s.add(weight * (a - b));
        }
    }

    pub fn finish(self) -> V {
        let comps = self.sums.iter().map(ComplexSum::value).collect();
        self.template.with_components(comps)
    }
}
