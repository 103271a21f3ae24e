//! Caputo and Riemann-Liouville derivatives on uniform grids.

use crate::error::{Error, Result};
use crate::real::{c, Real};
use crate::special_functions::{gamma_fn, rgamma};

use super::{convolve_kernel_g, Origin, SampledFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `0 < alpha <= 1`
    Sub,
    /// `1 < alpha <= 2`
    Super,
}

impl Regime {
    pub fn order(self) -> usize {
        match self {
            Regime::Sub => 1,
            Regime::Super => 2,
        }
    }

    pub fn check<T: Real>(self, alpha: T) -> Result<()> {
        let ok = match self {
            Regime::Sub => alpha > T::zero() && alpha <= T::one(),
            Regime::Super => alpha > T::one() && alpha <= c(2.0),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("alpha = {alpha} does not match the {self:?} regime")))
        }
    }
}

fn uniform_step<T: Real>(f: &SampledFunction<T>) -> Result<T> {
    if f.len() < 3 {
        return Err(Error::GridTooCoarse(f.len(), 3));
    }
    f.grid().step().ok_or(Error::GridNotUniform)
}

fn undefined_origin<T: Real>(f: &SampledFunction<T>, mut values: Vec<T>) -> Result<SampledFunction<T>> {
    values[0] = T::nan();
    SampledFunction::with_origin(f.grid().clone(), values, Origin::Undefined)
}

/// Classical first derivative, second-order differences.
fn first_difference<T: Real>(v: &[T], h: T, from: usize) -> Vec<T> {
    let n = v.len() - 1;
    let two = c::<T>(2.0);
    let mut out = vec![T::nan(); v.len()];
    for m in from.max(1)..n {
        out[m] = (v[m + 1] - v[m - 1]) / (two * h);
    }
    out[n] = (c::<T>(3.0) * v[n] - c::<T>(4.0) * v[n - 1] + v[n - 2]) / (two * h);
    if from == 0 {
        out[0] = (-c::<T>(3.0) * v[0] + c::<T>(4.0) * v[1] - v[2]) / (two * h);
    }
    out
}

/// Classical second derivative, second-order differences.
fn second_difference<T: Real>(v: &[T], h: T, from: usize) -> Vec<T> {
    let n = v.len() - 1;
    let h2 = h * h;
    let mut out = vec![T::nan(); v.len()];
    for m in from.max(1)..n {
        out[m] = (v[m + 1] - c::<T>(2.0) * v[m] + v[m - 1]) / h2;
    }
    out[n] = if n >= 3 {
        (c::<T>(2.0) * v[n] - c::<T>(5.0) * v[n - 1] + c::<T>(4.0) * v[n - 2] - v[n - 3]) / h2
    } else {
        (v[n] - c::<T>(2.0) * v[n - 1] + v[n - 2]) / h2
    };
    if from == 0 && n >= 3 {
        out[0] = (c::<T>(2.0) * v[0] - c::<T>(5.0) * v[1] + c::<T>(4.0) * v[2] - v[3]) / h2;
    }
    out
}

/// Caputo derivative `g_{n-alpha} * f^(n)`.
///
/// Sub-diffusion uses the L1 scheme. For `1 < alpha < 2`, `f''` is taken
/// piecewise constant between cell midpoints, with the first half cell
/// anchored at `f'(0)`: `initial_slope` if given, else a one-sided estimate.
/// `alpha = 1` and `alpha = 2` fall back to classical differences.
pub fn caputo_derivative<T: Real>(
    f: &SampledFunction<T>,
    alpha: T,
    regime: Regime,
    initial_slope: Option<T>,
) -> Result<SampledFunction<T>> {
    regime.check(alpha)?;
    let h = uniform_step(f)?;
    if f.origin() != Origin::Regular {
        return Err(Error::Domain("Caputo derivative needs a finite value at t = 0".into()));
    }
    let v = f.values();
    let n = v.len() - 1;
    if alpha == T::one() {
        return undefined_origin(f, first_difference(v, h, 1));
    }
    if alpha == c(2.0) {
        return undefined_origin(f, second_difference(v, h, 1));
    }
    let mut out = vec![T::nan(); n + 1];
    match regime {
        Regime::Sub => {
            let e = T::one() - alpha;
            let b: Vec<T> = (0..n)
                .map(|j| {
                    let jf = T::from_usize_lossy(j);
                    (jf + T::one()).powf(e) - jf.powf(e)
                })
                .collect();
            let scale = h.powf(-alpha) * rgamma(c::<T>(2.0) - alpha);
            for m in 1..=n {
                let mut acc = T::zero();
                for j in 0..m {
                    acc = acc + b[j] * (v[m - j] - v[m - j - 1]);
                }
                out[m] = acc * scale;
            }
        }
        Regime::Super => {
            let two = c::<T>(2.0);
            let half = c::<T>(0.5);
            let slope = initial_slope.unwrap_or_else(|| (-c::<T>(3.0) * v[0] + c::<T>(4.0) * v[1] - v[2]) / (two * h));
            let delta: Vec<T> = v.windows(2).map(|w| (w[1] - w[0]) / h).collect();
            // second derivative on [0, h/2], then on [t_{k-1/2}, t_{k+1/2}]
            let mut dd = Vec::with_capacity(n + 1);
            dd.push((delta[0] - slope) / (h * half));
            for k in 1..n {
                dd.push((delta[k] - delta[k - 1]) / h);
            }
            let e = two - alpha;
            let scale = h.powf(e) * rgamma(c::<T>(3.0) - alpha);
            // int over [p, q] of (t_m - s)^(1-alpha), in units of h
            let seg = |m: usize, p: T, q: T| {
                let mf = T::from_usize_lossy(m);
                (mf - p).powf(e) - (mf - q).max(T::zero()).powf(e)
            };
            for m in 1..=n {
                let mut acc = dd[0] * seg(m, T::zero(), half);
                for (k, &d) in dd.iter().enumerate().take(m).skip(1) {
                    let kf = T::from_usize_lossy(k);
                    acc = acc + d * seg(m, kf - half, kf + half);
                }
                // last half cell [t_m - h/2, t_m] reuses the nearest value
                let mf = T::from_usize_lossy(m);
                let last = if m >= 2 { dd[m - 1] } else { dd[0] };
                acc = acc + last * seg(m, mf - half, mf);
                out[m] = acc * scale;
            }
        }
    }
    undefined_origin(f, out)
}

/// [`caputo_derivative`] with the singular terms `sum_k c_k t^sigma_k` of
/// `f - f(0) [- f'(0) t]` removed before differencing and added back exactly.
/// The `c_k` are fitted at nodes `1..=sigmas.len()`.
///
/// Solutions behaving like `f(0) + c t^alpha + ...` limit the plain L1
/// scheme to order `1 + alpha` on uniform grids; removing `t^alpha` and
/// `t^(2 alpha)` restores `2 - alpha` for `alpha` above about 0.2.
pub fn caputo_derivative_corrected<T: Real>(
    f: &SampledFunction<T>,
    alpha: T,
    regime: Regime,
    initial_slope: Option<T>,
    sigmas: &[T],
) -> Result<SampledFunction<T>> {
    regime.check(alpha)?;
    let h = uniform_step(f)?;
    let floor = T::from_usize_lossy(regime.order() - 1);
    if let Some(&bad) = sigmas.iter().find(|&&s| !(s > floor)) {
        return Err(Error::Domain(format!("correction exponent must exceed {floor}, got {bad}")));
    }
    let k = sigmas.len();
    if k + 1 >= f.len() {
        return Err(Error::GridTooCoarse(f.len(), k + 2));
    }
    let v = f.values();
    let slope = match regime {
        Regime::Sub => T::zero(),
        Regime::Super => {
            initial_slope.unwrap_or_else(|| (-c::<T>(3.0) * v[0] + c::<T>(4.0) * v[1] - v[2]) / (c::<T>(2.0) * h))
        }
    };
    // d_i = c_i h^sigma_i solves sum_i d_i j^sigma_i = f_j - f_0 - slope t_j
    let mut mat: Vec<Vec<T>> = (1..=k)
        .map(|j| {
            let jf = T::from_usize_lossy(j);
            let mut row: Vec<T> = sigmas.iter().map(|&s| jf.powf(s)).collect();
            row.push(v[j] - v[0] - slope * h * jf);
            row
        })
        .collect();
    let d = solve_dense(&mut mat)?;
    let cs: Vec<T> = d.iter().zip(sigmas).map(|(&di, &s)| di / h.powf(s)).collect();
    let nodes = f.grid().nodes();
    let rem: Vec<T> = nodes
        .iter()
        .zip(v)
        .map(|(&t, &x)| cs.iter().zip(sigmas).fold(x, |acc, (&ci, &s)| acc - ci * t.powf(s)))
        .collect();
    let rem = SampledFunction::with_origin(f.grid().clone(), rem, Origin::Regular)?;
    let base = caputo_derivative(&rem, alpha, regime, Some(slope))?;
    let mut out = base.values().to_vec();
    for (&ci, &s) in cs.iter().zip(sigmas) {
        let kk = ci * gamma_fn(s + T::one())? * rgamma(s + T::one() - alpha);
        for (o, &t) in out.iter_mut().zip(nodes).skip(1) {
            *o = *o + kk * t.powf(s - alpha);
        }
    }
    undefined_origin(f, out)
}

/// Gaussian elimination with partial pivoting on an augmented matrix.
fn solve_dense<T: Real>(a: &mut [Vec<T>]) -> Result<Vec<T>> {
    let n = a.len();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap_or(std::cmp::Ordering::Equal))
            .unwrap_or(col);
        if a[piv][col] == T::zero() {
            return Err(Error::Domain("correction exponents must be distinct".into()));
        }
        a.swap(col, piv);
        for r in col + 1..n {
            let fac = a[r][col] / a[col][col];
            let (top, bottom) = a.split_at_mut(r);
            for (x, &p) in bottom[0][col..=n].iter_mut().zip(&top[col][col..=n]) {
                *x = *x - fac * p;
            }
        }
    }
    let mut x = vec![T::zero(); n];
    for r in (0..n).rev() {
        let mut acc = a[r][n];
        for cc in r + 1..n {
            acc = acc - a[r][cc] * x[cc];
        }
        x[r] = acc / a[r][r];
    }
    Ok(x)
}

/// Riemann-Liouville derivative `d^n/dt^n (g_{n-alpha} * f)`.
pub fn rl_derivative<T: Real>(f: &SampledFunction<T>, alpha: T, regime: Regime) -> Result<SampledFunction<T>> {
    regime.check(alpha)?;
    let h = uniform_step(f)?;
    let order = regime.order();
    let gamma = T::from_usize_lossy(order) - alpha;
    let w = if gamma == T::zero() { f.clone() } else { convolve_kernel_g(gamma, f)? };
    let out = match order {
        1 => first_difference(w.values(), h, 1),
        _ => second_difference(w.values(), h, 1),
    };
    undefined_origin(f, out)
}
