//! The truncated canonical product
//! `G_N(z) = (z - t_0) ∏_{1≤n≤N} (1 - z/t_n)(1 - z/t_{-n})`.
//!
//! Products are carried as a complex mantissa with a separate binary
//! exponent, so long products neither overflow nor underflow and rescaling
//! never rounds.

use std::ops::{Div, Mul};
use std::sync::OnceLock;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::nodes::SamplingNodes;
use crate::coefficients::symmetric_indices;
use crate::error::{Error, Result};

/// `mantissa · 2^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Scaled {
    pub mantissa: Complex64,
    pub exponent: i64,
}

const RESCALE_ABOVE: f64 = 1.0e30;
const RESCALE_BELOW: f64 = 1.0e-30;

fn pow2(e: i64) -> f64 {
    debug_assert!((-1022..=1023).contains(&e));
    f64::from_bits(((e + 1023) as u64) << 52)
}

fn ldexp(x: f64, mut e: i64) -> f64 {
    let mut x = x;
    while e > 1000 {
        x *= pow2(1000);
        e -= 1000;
        if x.is_infinite() {
            return x;
        }
    }
    while e < -1000 {
        x *= pow2(-1000);
        e += 1000;
        if x == 0.0 {
            return x;
        }
    }
    x * pow2(e)
}

impl Scaled {
    pub fn one() -> Self {
        Self::from(Complex64::new(1.0, 0.0))
    }

    fn normalized(mut self) -> Self {
        let a = self.mantissa.re.abs().max(self.mantissa.im.abs());
        if a.is_finite() && a != 0.0 && !(RESCALE_BELOW..=RESCALE_ABOVE).contains(&a) {
            let e = ((a.to_bits() >> 52) & 0x7ff) as i64 - 1023;
            let s = pow2(-e.clamp(-1022, 1023));
            self.mantissa = Complex64::new(self.mantissa.re * s, self.mantissa.im * s);
            self.exponent += e;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == Complex64::new(0.0, 0.0)
    }

    /// Plain value; may overflow to infinity or underflow to zero.
    pub fn value(&self) -> Complex64 {
        Complex64::new(
            ldexp(self.mantissa.re, self.exponent),
            ldexp(self.mantissa.im, self.exponent),
        )
    }

    /// `ln|value|`, finite whenever the value is nonzero.
    pub fn ln_abs(&self) -> f64 {
        self.mantissa.norm().ln() + self.exponent as f64 * std::f64::consts::LN_2
    }
}

impl Mul<Complex64> for Scaled {
    type Output = Scaled;

    fn mul(self, factor: Complex64) -> Scaled {
        Scaled {
            mantissa: self.mantissa * factor,
            exponent: self.exponent,
        }
        .normalized()
    }
}

impl Div for Scaled {
    type Output = Scaled;

    fn div(self, other: Scaled) -> Scaled {
        Scaled {
            mantissa: self.mantissa / other.mantissa,
            exponent: self.exponent - other.exponent,
        }
        .normalized()
    }
}

impl From<Complex64> for Scaled {
    fn from(mantissa: Complex64) -> Self {
        Scaled {
            mantissa,
            exponent: 0,
        }
        .normalized()
    }
}

/// Interpolation weights at a point.
#[derive(Debug, Clone, PartialEq)]
pub enum Basis {
    /// The point is the node with this index; the series is that sample.
    Collapse(i64),
    /// `G(z)/(G'(t_n)(z - t_n))` in index order `-N..=N`.
    Weights(Vec<Complex64>),
}

/// `G_N` for a fixed node set, with `G'(t_n)` computed on demand and cached.
#[derive(Debug)]
pub struct CanonicalProduct {
    nodes: SamplingNodes,
    derivatives: OnceLock<Vec<Scaled>>,
}

impl Clone for CanonicalProduct {
    fn clone(&self) -> Self {
        let derivatives = OnceLock::new();
        if let Some(d) = self.derivatives.get() {
            let _ = derivatives.set(d.clone());
        }
        Self {
            nodes: self.nodes.clone(),
            derivatives,
        }
    }
}

impl CanonicalProduct {
    pub fn new(nodes: SamplingNodes) -> Self {
        Self {
            nodes,
            derivatives: OnceLock::new(),
        }
    }

    pub fn nodes(&self) -> &SamplingNodes {
        &self.nodes
    }

    /// `G_N(z)`. Factors are formed as `(t_n - z)/t_n`.
    pub fn eval(&self, z: Complex64) -> Scaled {
        let t0 = self.nodes.node(0);
        let mut acc = Scaled::from(z - t0);
        for n in symmetric_indices(self.nodes.half_width()).skip(1) {
            let t = self.nodes.node(n);
            acc = acc * ((t - z) / t);
        }
        acc
    }

    pub fn eval_real(&self, x: f64) -> f64 {
        self.eval(Complex64::new(x, 0.0)).value().re
    }

    /// `G_N'(t_m)`: the product of the other factors at `t_m` times the
    /// derivative of the vanishing one.
    pub fn derivative_scaled(&self, m: i64) -> Result<Scaled> {
        let half = self.nodes.half_width();
        if m.unsigned_abs() as usize > half {
            return Err(Error::IndexOutOfRange {
                index: m.unsigned_abs() as usize,
                len: half,
            });
        }
        let tm = self.nodes.node(m);
        let t0 = self.nodes.node(0);
        let mut acc = if m == 0 {
            Scaled::one()
        } else {
            Scaled::from(Complex64::new((tm - t0) * (-1.0 / tm), 0.0))
        };
        for n in symmetric_indices(half).skip(1) {
            if n != m {
                let t = self.nodes.node(n);
                acc = acc * Complex64::new((t - tm) / t, 0.0);
            }
        }
        Ok(acc)
    }

    pub fn g_prime_at_node(&self, m: i64) -> Result<f64> {
        Ok(self.derivative_scaled(m)?.value().re)
    }

    /// All `G'(t_n)` in index order, computed once in parallel.
    pub fn derivatives(&self) -> &[Scaled] {
        self.derivatives.get_or_init(|| {
            self.nodes
                .indices()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|m| self.derivative_scaled(m).expect("index in range"))
                .collect()
        })
    }

    /// Weights `G(z)/(G'(t_n)(z - t_n))`.
    pub fn basis(&self, z: Complex64) -> Basis {
        self.basis_with(self, z)
    }

    /// Weights with `G` from `self` and `G'` from `denominator`, which must
    /// contain `self`'s nodes.
    pub fn basis_with(&self, denominator: &CanonicalProduct, z: Complex64) -> Basis {
        debug_assert!(self.nodes.is_prefix_of(&denominator.nodes));
        if z.im == 0.0 {
            if let Some((n, _)) = self.nodes.iter().find(|&(_, t)| t == z.re) {
                return Basis::Collapse(n);
            }
        }
        let g = self.eval(z);
        let derivs = denominator.derivatives();
        let weights = self
            .nodes
            .iter()
            .map(|(n, t)| {
                let d = derivs[denominator.nodes.slot(n)];
                let denom = Scaled {
                    mantissa: d.mantissa * (z - t),
                    exponent: d.exponent,
                };
                (g / denom).value()
            })
            .collect();
        Basis::Weights(weights)
    }
}
