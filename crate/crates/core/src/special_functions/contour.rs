//! Inverse-Laplace evaluation of `E_{alpha,beta}` and `E^2_{alpha,beta}` at
//! negative arguments, for `0 < alpha <= 1`.
//!
//! `E_{a,b}(z)` is the value at `t = 1` of the inverse transform of
//! `s^(a-b) / (s^a - z)`; the Prabhakar variant squares the denominator and
//! uses `s^(2a-b)`. Both are integrated along the parabola
//! `s(u) = mu (1 + iu)^2` with the trapezoidal rule.

use num_complex::Complex;

use crate::real::{c, Real};

use super::series::SeriesKind;

fn node_count<T: Real>() -> usize {
    // geometric convergence of roughly e^{-2.1 M}
    let digits = -T::epsilon().ln().to_f64_lossy();
    (digits / 2.1).ceil() as usize + 2
}

pub(crate) fn contour_value<T: Real>(kind: SeriesKind, alpha: T, beta: T, z: T) -> T {
    let m = node_count::<T>();
    let mf = T::from_usize_lossy(m);
    let h = c::<T>(3.0) / mf;
    let mu = T::PI() * mf / c(12.0);
    let zc = Complex::new(z, T::zero());
    let (num_pow, squared) = match kind {
        SeriesKind::Standard => (alpha - beta, false),
        SeriesKind::Prabhakar2 => (alpha + alpha - beta, true),
    };
    let mut acc = Complex::new(T::zero(), T::zero());
    for k in 0..=m {
        let u = T::from_usize_lossy(k) * h;
        let w = Complex::new(T::one(), u);
        let s = w * w * mu;
        let ds = w * Complex::new(T::zero(), mu + mu);
        let ln_s = s.ln();
        let sa = (ln_s * alpha).exp();
        let mut den = sa - zc;
        if squared {
            den = den * den;
        }
        let f = (ln_s * num_pow + s).exp() / den * ds;
        // the u < 0 half is the complex conjugate of the u > 0 half
        acc = acc + if k == 0 { f } else { f * c::<T>(2.0) };
    }
    // (1 / 2 pi i) * h * sum, real part
    acc.im * h / T::TAU()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_case() {
        let v: f64 = contour_value(SeriesKind::Standard, 1.0, 1.0, -5.0);
        assert!((v - (-5.0f64).exp()).abs() < 1e-13 * (-5.0f64).exp() * 100.0);
    }
}
