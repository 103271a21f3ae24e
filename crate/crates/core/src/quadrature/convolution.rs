//! `(f * g)(t) = int_0^t f(t - s) g(s) ds` by product integration of the
//! piecewise-linear interpolants.

use crate::error::{Error, Result};
use crate::real::{c, Real};
use crate::special_functions::gamma_fn;

use super::kernel::cell_weights;
use super::{Origin, SampledFunction};

/// Convolution of two sampled functions on a shared grid.
///
/// Exact for piecewise-linear data. At most one operand may carry a
/// singular origin, except at the first node where both may.
pub fn convolve<T: Real>(f: &SampledFunction<T>, g: &SampledFunction<T>) -> Result<SampledFunction<T>> {
    check(f, g)?;
    let n = f.len();
    let plan = Plan::new(f, g)?;
    let table = plan.split.as_ref().and_then(|sp| {
        f.grid().step().map(|h| {
            (0..n - 1).map(|j| cell_weights(sp.q + T::one(), h * T::from_usize_lossy(j), h)).collect::<Vec<_>>()
        })
    });
    let mut values = Vec::with_capacity(n);
    values.push(T::zero());
    for m in 1..n {
        values.push(plan.value(m, table.as_deref())?);
    }
    let p = f.singular_exponent().unwrap_or(T::zero());
    let q = g.singular_exponent().unwrap_or(T::zero());
    let e = p + q + T::one();
    let origin = if e < T::zero() {
        values[0] = T::nan();
        Origin::Singular(e)
    } else {
        if e == T::zero() {
            values[0] = values[1];
        }
        Origin::Regular
    };
    SampledFunction::with_origin(f.grid().clone(), values, origin)
}

/// `(f * g)(t_m)` at a single node.
pub fn convolve_at<T: Real>(f: &SampledFunction<T>, g: &SampledFunction<T>, m: usize) -> Result<T> {
    check(f, g)?;
    if m >= f.len() {
        return Err(Error::Domain(format!("node index {m} out of range")));
    }
    if m == 0 {
        return Ok(T::zero());
    }
    Plan::new(f, g)?.value(m, None)
}

/// When exactly one operand is singular, `g = c s^q + r` with `r` vanishing
/// on the first cell: `f * c s^q` is integrated exactly against the
/// interpolant of `f`, and `f * r` by the regular scheme.
struct Plan<'a, T> {
    f: &'a SampledFunction<T>,
    g: &'a SampledFunction<T>,
    split: Option<Split<T>>,
}

struct Split<T> {
    q: T,
    cst: T,
    rem: SampledFunction<T>,
}

impl<'a, T: Real> Plan<'a, T> {
    fn new(f: &'a SampledFunction<T>, g: &'a SampledFunction<T>) -> Result<Self> {
        let (f, g) = match (f.singular_exponent(), g.singular_exponent()) {
            (Some(_), None) => (g, f),
            _ => (f, g),
        };
        let split = match (f.singular_exponent(), g.singular_exponent()) {
            (None, Some(q)) => {
                let s = g.grid().nodes();
                let cst = g.values()[1] / s[1].powf(q);
                let mut r: Vec<T> = s.iter().zip(g.values()).map(|(&x, &v)| v - cst * x.powf(q)).collect();
                r[0] = T::zero();
                r[1] = T::zero();
                let rem = SampledFunction::with_origin(g.grid().clone(), r, Origin::Regular)?;
                Some(Split { q, cst, rem })
            }
            _ => None,
        };
        Ok(Self { f, g, split })
    }

    fn value(&self, m: usize, table: Option<&[(T, T)]>) -> Result<T> {
        let Some(sp) = &self.split else {
            return node_value(self.f, self.g, m);
        };
        let s = self.f.grid().nodes();
        let fv = self.f.values();
        let mut acc = T::zero();
        for j in 0..m {
            let (wl, wr) = match table {
                Some(t) => t[m - 1 - j],
                None => cell_weights(sp.q + T::one(), s[m] - s[j + 1], s[j + 1] - s[j]),
            };
            acc = acc + wl * fv[j] + wr * fv[j + 1];
        }
        Ok(sp.cst * acc + node_value(self.f, &sp.rem, m)?)
    }
}

fn check<T: Real>(f: &SampledFunction<T>, g: &SampledFunction<T>) -> Result<()> {
    if !f.same_grid(g) {
        return Err(Error::GridMismatch);
    }
    f.require_defined()?;
    g.require_defined()
}

fn node_value<T: Real>(f: &SampledFunction<T>, g: &SampledFunction<T>, m: usize) -> Result<T> {
    // keep the singular operand in the s-coordinate, where its nodes are exact
    let (f, g) = if f.singular_exponent().is_some() && g.singular_exponent().is_none() { (g, f) } else { (f, g) };
    match f.grid().step() {
        Some(h) => uniform_node(f, g, m, h),
        None => general_node(f, g, m),
    }
}

#[inline]
fn lin_product<T: Real>(len: T, a0: T, a1: T, b0: T, b1: T) -> T {
    len / c(6.0) * (c::<T>(2.0) * a0 * b0 + a0 * b1 + a1 * b0 + c::<T>(2.0) * a1 * b1)
}

/// `int_c^d (u0 + (u1 - u0)(x - c)/(d - c)) * v1 (x / x1)^p dx` for `0 <= c < d <= x1`.
fn singular_piece<T: Real>(x1: T, v1: T, p: T, c0: T, d0: T, u_c: T, u_d: T) -> T {
    let one = T::one();
    let two = c::<T>(2.0);
    let rc = c0 / x1;
    let rd = d0 / x1;
    let slope = (u_d - u_c) / (d0 - c0);
    let a0 = u_c - slope * c0;
    let m0 = x1 * (rd.powf(p + one) - rc.powf(p + one)) / (p + one);
    let m1 = x1 * x1 * (rd.powf(p + two) - rc.powf(p + two)) / (p + two);
    v1 * (a0 * m0 + slope * m1)
}

fn beta<T: Real>(a: T, b: T) -> Result<T> {
    Ok(gamma_fn(a)? * gamma_fn(b)? / gamma_fn(a + b)?)
}

fn uniform_node<T: Real>(f: &SampledFunction<T>, g: &SampledFunction<T>, m: usize, h: T) -> Result<T> {
    let fv = f.values();
    let gv = g.values();
    let fs = f.singular_exponent();
    let gs = g.singular_exponent();
    if m == 1 {
        if let (Some(p), Some(q)) = (fs, gs) {
            return Ok(fv[1] * gv[1] * h * beta(p + T::one(), q + T::one())?);
        }
    }
    let mut acc = T::zero();
    for i in 0..m {
        let j = m - 1 - i; // f-cell
        let piece = if i == 0 && gs.is_some() {
            let q = gs.unwrap_or(T::zero());
            // f(t_m - s) runs from f_m at s = 0 to f_{m-1} at s = h
            singular_piece(h, gv[1], q, T::zero(), h, fv[m], fv[m - 1])
        } else if j == 0 && fs.is_some() {
            let p = fs.unwrap_or(T::zero());
            // tau = t_m - s; g runs from g_m at tau = 0 to g_{m-1} at tau = h
            singular_piece(h, fv[1], p, T::zero(), h, gv[m], gv[m - 1])
        } else {
            lin_product(h, fv[m - i], fv[m - i - 1], gv[i], gv[i + 1])
        };
        acc = acc + piece;
    }
    Ok(acc)
}

#[inline]
fn interp<T: Real>(x: &[T], v: &[T], cell: usize, at: T) -> T {
    let (x0, x1) = (x[cell], x[cell + 1]);
    let w = (at - x0) / (x1 - x0);
    v[cell] + (v[cell + 1] - v[cell]) * w
}

fn general_node<T: Real>(f: &SampledFunction<T>, g: &SampledFunction<T>, m: usize) -> Result<T> {
    let s = f.grid().nodes();
    let fv = f.values();
    let gv = g.values();
    let fs = f.singular_exponent();
    let gs = g.singular_exponent();
    let tm = s[m];
    if m == 1 {
        if let (Some(p), Some(q)) = (fs, gs) {
            return Ok(fv[1] * gv[1] * tm * beta(p + T::one(), q + T::one())?);
        }
    }
    // merged breakpoints: g nodes s_0..s_m and reflected f nodes t_m - s_k
    let tol = T::epsilon() * c::<T>(8.0) * tm;
    let mut pts: Vec<T> = Vec::with_capacity(2 * m + 2);
    let (mut i, mut k) = (0usize, m as isize);
    while i <= m || k >= 0 {
        let a = if i <= m { Some(s[i]) } else { None };
        let b = if k >= 0 { Some(tm - s[k as usize]) } else { None };
        let next = match (a, b) {
            (Some(x), Some(y)) if x <= y => {
                i += 1;
                if (y - x).abs() <= tol {
                    k -= 1;
                }
                x
            }
            (Some(x), Some(y)) => {
                k -= 1;
                if (x - y).abs() <= tol {
                    i += 1;
                    x
                } else {
                    y
                }
            }
            (Some(x), None) => {
                i += 1;
                x
            }
            (None, Some(y)) => {
                k -= 1;
                y
            }
            (None, None) => break,
        };
        if pts.last().is_none_or(|&last| next - last > tol) {
            pts.push(next);
        }
    }
    if let Some(last) = pts.last_mut() {
        *last = tm;
    }

    let mut acc = T::zero();
    let mut gi = 0usize; // g-cell index
    let mut fj = m.saturating_sub(1); // f-cell index, moves downwards
    for w in pts.windows(2) {
        let (c0, d0) = (w[0], w[1]);
        let mid = (c0 + d0) * c(0.5);
        while gi + 1 < m && s[gi + 1] <= mid {
            gi += 1;
        }
        let tau_mid = tm - mid;
        while fj > 0 && s[fj] > tau_mid {
            fj -= 1;
        }
        let g_sing = gs.is_some() && gi == 0;
        let f_sing = fs.is_some() && fj == 0;
        let piece = match (g_sing, f_sing) {
            (false, false) => {
                let g_c = interp(s, gv, gi, c0);
                let g_d = interp(s, gv, gi, d0);
                let f_c = interp(s, fv, fj, tm - c0);
                let f_d = interp(s, fv, fj, tm - d0);
                lin_product(d0 - c0, f_c, f_d, g_c, g_d)
            }
            (true, false) => {
                let q = gs.unwrap_or(T::zero());
                let f_c = interp(s, fv, fj, tm - c0);
                let f_d = interp(s, fv, fj, tm - d0);
                singular_piece(s[1], gv[1], q, c0, d0.min(s[1]), f_c, f_d)
            }
            (false, true) => {
                let p = fs.unwrap_or(T::zero());
                let (lo, hi) = ((tm - d0).max(T::zero()), (tm - c0).min(s[1]));
                let g_lo = interp(s, gv, gi, tm - lo);
                let g_hi = interp(s, gv, gi, tm - hi);
                singular_piece(s[1], fv[1], p, lo, hi, g_lo, g_hi)
            }
            (true, true) => {
                return Err(Error::Unsupported("both convolution operands singular on the same cell".into()))
            }
        };
        acc = acc + piece;
    }
    Ok(acc)
}
