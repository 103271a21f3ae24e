//! Gamma, log-Gamma and the power kernels `g_gamma(t) = t^(gamma-1)/Gamma(gamma)`.

use crate::error::{Error, Result};
use crate::real::{c, Real};

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

// B_{2j} / (2j (2j-1)) for the Stirling tail.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

fn is_nonpositive_integer<T: Real>(x: T) -> bool {
    x <= T::zero() && x == x.floor()
}

fn lanczos_sum<T: Real>(x: T) -> T {
    // x here is the shifted argument (x - 1)
    let mut a = c::<T>(LANCZOS[0]);
    for (i, &coef) in LANCZOS.iter().enumerate().skip(1) {
        a = a + c::<T>(coef) / (x + T::from_usize_lossy(i));
    }
    a
}

/// Exact products for small positive integers and half-integers, where
/// callers expect textbook values to the last bit.
fn gamma_exact<T: Real>(x: T) -> Option<T> {
    let two_x = x + x;
    if x <= T::zero() || two_x != two_x.floor() || x > c(40.0) {
        return None;
    }
    let (mut acc, mut arg) = if x == x.floor() { (T::one(), T::one()) } else { (T::PI().sqrt(), c(0.5)) };
    while arg < x {
        acc = acc * arg;
        arg = arg + T::one();
    }
    Some(acc)
}

/// Gamma function for real arguments.
///
/// Fails with [`Error::Pole`] at `0, -1, -2, ...`.
pub fn gamma_fn<T: Real>(x: T) -> Result<T> {
    if x.is_nan() {
        return Err(Error::Domain("gamma of NaN".into()));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x.to_f64_lossy()));
    }
    Ok(gamma_unchecked(x))
}

pub(crate) fn gamma_unchecked<T: Real>(x: T) -> T {
    if let Some(v) = gamma_exact(x) {
        return v;
    }
    if x < c(0.5) {
        // reflection
        let pi = T::PI();
        return pi / ((pi * x).sin() * gamma_unchecked(T::one() - x));
    }
    if x > c(171.7) {
        return T::infinity();
    }
    let xm = x - T::one();
    let t = xm + c(LANCZOS_G + 0.5);
    (T::TAU()).sqrt() * t.powf(xm + c(0.5)) * (-t).exp() * lanczos_sum(xm)
}

/// `1 / Gamma(x)`, continuous through the poles where it vanishes.
pub fn rgamma<T: Real>(x: T) -> T {
    if is_nonpositive_integer(x) {
        return T::zero();
    }
    if x < c(0.5) {
        let pi = T::PI();
        return (pi * x).sin() * gamma_unchecked(T::one() - x) / pi;
    }
    if x > c(171.0) {
        return (-ln_gamma_pos(x)).exp();
    }
    T::one() / gamma_unchecked(x)
}

/// `ln Gamma(x)` for `x > 0`.
pub fn ln_gamma<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) {
        return Err(Error::Domain(format!("ln_gamma needs x > 0, got {x}")));
    }
    Ok(ln_gamma_pos(x))
}

pub(crate) fn ln_gamma_pos<T: Real>(x: T) -> T {
    if x < c(0.5) {
        return ln_gamma_pos(x + T::one()) - x.ln();
    }
    if x >= c(10.0) {
        return stirling_ln_gamma(x);
    }
    let xm = x - T::one();
    let t = xm + c(LANCZOS_G + 0.5);
    c::<T>(0.5) * T::TAU().ln() + (xm + c(0.5)) * t.ln() - t + lanczos_sum(xm).ln()
}

fn stirling_tail<T: Real>(x: T) -> T {
    let inv = x.recip();
    let inv2 = inv * inv;
    let mut acc = T::zero();
    for &b in STIRLING.iter().rev() {
        acc = acc * inv2 + c(b);
    }
    acc * inv
}

fn stirling_ln_gamma<T: Real>(x: T) -> T {
    (x - c(0.5)) * x.ln() - x + c::<T>(0.5) * T::TAU().ln() + stirling_tail(x)
}

/// `ln Gamma(a + d) - ln Gamma(a)` without the cancellation of two large
/// logarithms. Requires `a > 0` and `a + d > 0`.
pub fn ln_gamma_ratio<T: Real>(a: T, d: T) -> T {
    let b = a + d;
    if a >= c(10.0) && b >= c(10.0) {
        let lead = (a - c(0.5)) * (d / a).ln_1p() + d * b.ln() - d;
        lead + (stirling_tail(b) - stirling_tail(a))
    } else {
        ln_gamma_pos(b) - ln_gamma_pos(a)
    }
}

/// Power kernel `g_gamma(t) = t^(gamma-1) / Gamma(gamma)` for `t > 0`.
pub fn g_kernel<T: Real>(gamma: T, t: T) -> Result<T> {
    if !(gamma > T::zero()) {
        return Err(Error::Domain(format!("g_kernel order must be > 0, got {gamma}")));
    }
    if !(t > T::zero()) {
        return Err(Error::Domain(format!("g_kernel needs t > 0, got {t}")));
    }
    Ok(g_unchecked(gamma, t))
}

pub(crate) fn g_unchecked<T: Real>(gamma: T, t: T) -> T {
    if gamma == T::one() {
        return T::one();
    }
    t.powf(gamma - T::one()) * rgamma(gamma)
}
