//! `(g_gamma * f)(t)` with the kernel integrated exactly against the
//! piecewise-linear interpolant of `f`.

use crate::error::{Error, Result};
use crate::real::{c, Real};
use crate::special_functions::{gamma_fn, rgamma};

/// Leading term `c s^p` of a singular operand, pinned at node 1, and the
/// regular remainder `f - c s^p` (zero on the first cell).
fn split_singular<T: Real>(f: &SampledFunction<T>) -> Option<(T, T, Vec<T>)> {
    let p = f.singular_exponent()?;
    let s = f.grid().nodes();
    let fv = f.values();
    let cst = fv[1] / s[1].powf(p);
    let mut r: Vec<T> = s.iter().zip(fv).map(|(&si, &v)| v - cst * si.powf(p)).collect();
    r[0] = T::zero();
    r[1] = T::zero();
    Some((p, cst, r))
}

/// `(g_gamma * c s^p)(t)`, exact.
fn power_term<T: Real>(gamma: T, p: T, cst: T, t: T) -> Result<T> {
    let one = T::one();
    Ok(cst * gamma_fn(p + one)? / gamma_fn(p + one + gamma)? * t.powf(p + gamma))
}

use super::{Origin, SampledFunction};

/// Product-integration weights of one cell `[s_i, s_{i+1}]` seen from a node
/// `t >= s_{i+1}`: returns the coefficients of `f_i` and `f_{i+1}`, without
/// the `1/Gamma(gamma)` factor. `a = t - s_{i+1}`, `h = s_{i+1} - s_i`.
pub(super) fn cell_weights<T: Real>(gamma: T, a: T, h: T) -> (T, T) {
    let one = T::one();
    if a == T::zero() {
        let hg = h.powf(gamma);
        return (hg / (gamma + one), hg / (gamma * (gamma + one)));
    }
    let x = h / a;
    if x <= c(0.5) {
        // (1 + y)^(gamma - 1) expanded, y = (tau - a)/a in [0, x]
        let eps = T::epsilon() * c(0.25);
        let mut coef = one; // binomial(gamma - 1, j)
        let mut xp = x; // x^(j+1)
        let (mut wl, mut wr) = (T::zero(), T::zero());
        let mut j = 0usize;
        loop {
            let jf = T::from_usize_lossy(j);
            let tl = coef * xp / (jf + c(2.0));
            let tr = tl / (jf + one);
            wl = wl + tl;
            wr = wr + tr;
            if tl.abs() <= eps * wl.abs() || j > 200 {
                break;
            }
            coef = coef * (gamma - one - jf) / (jf + one);
            xp = xp * x;
            j += 1;
        }
        let ag = a.powf(gamma);
        (ag * wl, ag * wr)
    } else {
        let b = a + h;
        let m0 = (b.powf(gamma) - a.powf(gamma)) / gamma;
        let m1 = (b.powf(gamma + one) - a.powf(gamma + one)) / (gamma + one);
        ((m1 - a * m0) / h, (b * m0 - m1) / h)
    }
}

fn check_gamma<T: Real>(gamma: T) -> Result<()> {
    if !(gamma > T::zero()) || gamma > c(2.0) {
        return Err(Error::Domain(format!("kernel order must lie in (0, 2], got {gamma}")));
    }
    Ok(())
}

/// `(g_gamma * f)` at every node, `0 < gamma <= 2`.
pub fn convolve_kernel_g<T: Real>(gamma: T, f: &SampledFunction<T>) -> Result<SampledFunction<T>> {
    check_gamma(gamma)?;
    f.require_defined()?;
    let n = f.len();
    let s = f.grid().nodes();
    let mut values = vec![T::zero(); n];
    if let Some(h) = f.grid().step() {
        // Toeplitz weights
        let mut wl = Vec::with_capacity(n - 1);
        let mut wr = Vec::with_capacity(n - 1);
        for j in 0..n - 1 {
            let (l, r) = cell_weights(gamma, h * T::from_usize_lossy(j), h);
            wl.push(l);
            wr.push(r);
        }
        let split = split_singular(f);
        let fv = split.as_ref().map_or(f.values(), |(_, _, r)| r.as_slice());
        for m in 1..n {
            let mut acc = T::zero();
            for i in 0..m {
                let j = m - 1 - i;
                acc = acc + wl[j] * fv[i] + wr[j] * fv[i + 1];
            }
            values[m] = acc * rgamma(gamma);
            if let Some((p, cst, _)) = split {
                values[m] = values[m] + power_term(gamma, p, cst, s[m])?;
            }
        }
    } else {
        for (m, v) in values.iter_mut().enumerate().skip(1) {
            *v = general_node(gamma, f, m)?;
        }
    }
    finish(gamma, f, values)
}

/// `(g_gamma * f)(t_m)` at one node.
pub fn kernel_g_at<T: Real>(gamma: T, f: &SampledFunction<T>, m: usize) -> Result<T> {
    check_gamma(gamma)?;
    f.require_defined()?;
    if m >= f.len() {
        return Err(Error::Domain(format!("node index {m} out of range")));
    }
    if m == 0 {
        return Ok(T::zero());
    }
    general_node(gamma, f, m)
}

fn general_node<T: Real>(gamma: T, f: &SampledFunction<T>, m: usize) -> Result<T> {
    let s = f.grid().nodes();
    let split = split_singular(f);
    let fv = split.as_ref().map_or(f.values(), |(_, _, r)| r.as_slice());
    let t = s[m];
    let mut acc = T::zero();
    for i in 0..m {
        let (l, r) = cell_weights(gamma, t - s[i + 1], s[i + 1] - s[i]);
        acc = acc + l * fv[i] + r * fv[i + 1];
    }
    acc = acc * rgamma(gamma);
    if let Some((p, cst, _)) = split {
        acc = acc + power_term(gamma, p, cst, t)?;
    }
    Ok(acc)
}

fn finish<T: Real>(gamma: T, f: &SampledFunction<T>, mut values: Vec<T>) -> Result<SampledFunction<T>> {
    let e = f.singular_exponent().unwrap_or(T::zero()) + gamma;
    let origin = if e < T::zero() && f.singular_exponent().is_some() {
        values[0] = T::nan();
        Origin::Singular(e)
    } else {
        if e == T::zero() && f.singular_exponent().is_some() {
            values[0] = values[1];
        }
        Origin::Regular
    };
    SampledFunction::with_origin(f.grid().clone(), values, origin)
}
