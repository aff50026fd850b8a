//! The cardinal sine `sinc(x) = sin(πx)/(πx)` and its derivatives.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::summation::CompensatedSum;

/// `sin(πx)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if n.rem_euclid(2.0) == 0.0 {
        s
    } else {
        -s
    }
}

/// `cos(πx)` with exact zeros at the half-integers.
pub fn cos_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let c = if r.abs() == 0.5 { 0.0 } else { (PI * r).cos() };
    if n.rem_euclid(2.0) == 0.0 {
        c
    } else {
        -c
    }
}

pub fn sinc(x: f64) -> f64 {
    let y = PI * x;
    if y.abs() < 1e-3 {
        let y2 = y * y;
        1.0 - y2 / 6.0 * (1.0 - y2 / 20.0 * (1.0 - y2 / 42.0))
    } else {
        sin_pi(x) / y
    }
}

/// `sinc(w)` for complex `w`.
pub fn sinc_complex(w: Complex64) -> Complex64 {
    if w.im == 0.0 {
        return Complex64::new(sinc(w.re), 0.0);
    }
    let y = w * PI;
    if y.norm() < 1e-3 {
        let y2 = y * y;
        return 1.0 - y2 / 6.0 * (1.0 - y2 / 20.0 * (1.0 - y2 / 42.0));
    }
    let b = PI * w.im;
    let s = Complex64::new(sin_pi(w.re) * b.cosh(), cos_pi(w.re) * b.sinh());
    s / y
}

/// Below this `|πx|` the n-th derivative is evaluated by its Taylor series.
///
/// The closed form loses about `(n+1)!/(π|x|)^{n+1}` ulps to cancellation;
/// the Taylor series loses about `e^{π|x|}` relative to its leading terms.
/// Switching at `max(1, (n+1)/2)` keeps both below ~1e-13 for `n ≤ 16`.
pub fn taylor_radius(n: u32) -> f64 {
    (0.5 * (n as f64 + 1.0)).max(1.0)
}

/// `sinc^{(n)}(x)`.
pub fn sinc_derivative(n: u32, x: f64) -> f64 {
    if n == 0 {
        return sinc(x);
    }
    if PI * x.abs() < taylor_radius(n) {
        sinc_derivative_taylor(n, x)
    } else {
        sinc_derivative_closed(n, x)
    }
}

/// `π^n Σ_{2m ≥ n} (-1)^m y^{2m-n} / ((2m+1)(2m-n)!)` with `y = πx`.
fn sinc_derivative_taylor(n: u32, x: f64) -> f64 {
    let y = PI * x;
    let n = n as i64;
    let first = (n + 1) / 2;
    let mut p = 2 * first - n;
    // y^p / p!
    let mut power = if p == 0 { 1.0 } else { y };
    let mut sum = CompensatedSum::new();
    for m in first..first + 400 {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let term = sign * power / (2 * m + 1) as f64;
        sum.add(term);
        if p as f64 > y.abs() && term.abs() <= 1e-18 * sum.value().abs() {
            break;
        }
        power *= y * y / (((p + 1) * (p + 2)) as f64);
        p += 2;
    }
    PI.powi(n as i32) * sum.value()
}

/// `Σ_j C(n,j) π^j sin(πx + jπ/2) · (1/π) (-1)^{n-j} (n-j)! x^{-(n-j+1)}`.
fn sinc_derivative_closed(n: u32, x: f64) -> f64 {
    let s = sin_pi(x);
    let c = cos_pi(x);
    let cycle = [s, c, -s, -c];
    let mut a = PI.powi(n as i32 - 1) / x;
    let mut sum = CompensatedSum::new();
    for j in (0..=n).rev() {
        sum.add(a * cycle[(j % 4) as usize]);
        a *= -(j as f64) / (PI * x);
    }
    sum.value()
}
