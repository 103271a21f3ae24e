use crate::error::{Error, Result};
use crate::forward_solver::{mode_derivatives_at, mode_kernel_integral, mode_value, Derivative, ProblemSpec};
use crate::quadrature::Regime;
use crate::real::{c, Real};
use crate::special_functions::TruncationPolicy;

use super::{denominator_floor, guard, EstimateResult};

/// Pointwise data at one time. Which fields are needed depends on the
/// problem: `du` (Caputo sub), `ddu` (Caputo super), `g1u` (RL),
/// `g2u` (RL super).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmallTimeSample<T> {
    pub t: T,
    pub u: T,
    pub du: Option<T>,
    pub ddu: Option<T>,
    /// `(g_1 * u)(t)`
    pub g1u: Option<T>,
    /// `(g_2 * u)(t)`
    pub g2u: Option<T>,
}

/// Single-mode data on a decreasing schedule `t_0 > t_1 > ...`.
#[derive(Debug, Clone, PartialEq)]
pub struct SmallTimeData<T> {
    pub derivative: Derivative,
    pub regime: Regime,
    /// `x`
    pub u0: T,
    /// `y`, Caputo super only
    pub u1: Option<T>,
    pub samples: Vec<SmallTimeSample<T>>,
}

/// Noiseless data from the closed forms of mode 0 of `problem` on
/// `t_k = t0 2^-k`, `k = 0..=k_max`.
pub fn synthetic_small_time_data<T: Real>(
    problem: &ProblemSpec<T>,
    t0: T,
    k_max: usize,
    policy: &TruncationPolicy<T>,
) -> Result<SmallTimeData<T>> {
    if !(t0 > T::zero()) {
        return Err(Error::Domain(format!("t0 must be positive, got {t0}")));
    }
    let mode = problem.operator().modes()[0];
    let caputo = problem.derivative() == Derivative::Caputo;
    let sup = problem.regime() == Regime::Super;
    let mut samples = Vec::with_capacity(k_max + 1);
    let mut t = t0;
    for _ in 0..=k_max {
        let u = mode_value(problem, &mode, t, policy)?;
        let (du, ddu) = if caputo {
            let (d1, d2) = mode_derivatives_at(problem, &mode, t, policy)?;
            (Some(d1), d2)
        } else {
            (None, None)
        };
        let g1u = if caputo { None } else { Some(mode_kernel_integral(problem, &mode, T::one(), t, policy)?) };
        let g2u = if !caputo && sup { Some(mode_kernel_integral(problem, &mode, c(2.0), t, policy)?) } else { None };
        samples.push(SmallTimeSample { t, u, du, ddu, g1u, g2u });
        t = t * c(0.5);
    }
    Ok(SmallTimeData { derivative: problem.derivative(), regime: problem.regime(), u0: mode.u0, u1: mode.u1, samples })
}

fn need<T>(v: Option<T>, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::MissingDatum(what.into()))
}

fn ratio<T: Real>(data: &SmallTimeData<T>, s: &SmallTimeSample<T>, floor: T) -> Result<T> {
    let t = s.t;
    Ok(match (data.derivative, data.regime) {
        (Derivative::Caputo, Regime::Sub) => {
            let den = guard(s.u - data.u0, floor)?;
            t * need(s.du, "u'(t)")? / den
        }
        (Derivative::RiemannLiouville, Regime::Sub) => {
            let den = guard(need(s.g1u, "(g_1 * u)(t)")?, floor)?;
            t * s.u / den
        }
        (Derivative::Caputo, Regime::Super) => {
            let y = need(data.u1, "u1")?;
            let den = guard(s.u - data.u0 - t * y, floor)?;
            let cc = t * t * need(s.ddu, "u''(t)")? / den;
            if !(cc > T::zero()) {
                return Err(Error::Bracket(format!("alpha (alpha - 1) = {cc} at t = {t} has no root in (1, 2)")));
            }
            (T::one() + (T::one() + c::<T>(4.0) * cc).sqrt()) * c(0.5)
        }
        (Derivative::RiemannLiouville, Regime::Super) => {
            let den = guard(need(s.g2u, "(g_2 * u)(t)")?, floor)?;
            t * need(s.g1u, "(g_1 * u)(t)")? / den
        }
    })
}

/// Number of elimination levels in [`richardson`].
pub const RICHARDSON_LEVELS: usize = 6;

/// Extrapolated limit of `a_k`, sampled at `t_k = t_0 2^-k`.
///
/// The error is modelled as `sum_j c_j t^(j p)`. The base contraction
/// `r = 2^p` is fitted from the tail (see `refine_ratio` for five or more
/// entries), and level `j` of the table eliminates the `r^j` term. `None` when fewer than three entries
/// are given or the tail does not contract.
pub fn richardson<T: Real>(a: &[T]) -> Option<T> {
    let n = a.len();
    if n < 3 {
        return None;
    }
    let d_last = a[n - 1] - a[n - 2];
    if d_last == T::zero() {
        return Some(a[n - 1]);
    }
    let r = (a[n - 2] - a[n - 3]) / d_last;
    if !(r > c(1.01)) || !r.is_finite() {
        return None;
    }
    let r = refine_ratio(a).unwrap_or(r);
    let mut cur = a.to_vec();
    let mut rj = r;
    for _ in 0..RICHARDSON_LEVELS {
        if cur.len() < 2 {
            break;
        }
        cur = cur.windows(2).map(|w| w[1] + (w[1] - w[0]) / (rj - T::one())).collect();
        rj = rj * r;
    }
    cur.last().copied()
}

/// Ratios `r_k = d_(k-1) / d_k` of consecutive differences converge to the
/// contraction geometrically; one Aitken step on the last three sharpens it.
fn refine_ratio<T: Real>(a: &[T]) -> Option<T> {
    if a.len() < 5 {
        return None;
    }
    let d: Vec<T> = a.windows(2).map(|w| w[1] - w[0]).collect();
    let m = d.len();
    let r: Vec<T> = (m - 3..m).map(|k| d[k - 1] / d[k]).collect();
    let den = r[2] - c::<T>(2.0) * r[1] + r[0];
    if den == T::zero() {
        return None;
    }
    let out = r[2] - (r[2] - r[1]) * (r[2] - r[1]) / den;
    (out.is_finite() && out > c(1.01)).then_some(out)
}

/// Small-time estimate of `alpha` for single-mode data:
///
/// | problem | ratio |
/// |---|---|
/// | Caputo sub | `t u'(t) / (u(t) - x)` |
/// | RL sub | `t u(t) / (g_1 * u)(t)` |
/// | Caputo super | `c = t^2 u''(t) / (u(t) - x - t y)`, `alpha = (1 + sqrt(1 + 4c)) / 2` |
/// | RL super | `t (g_1 * u)(t) / (g_2 * u)(t)` |
///
/// Each ratio tends to `alpha` as `t -> 0+`.
pub fn small_time_estimate<T: Real>(data: &SmallTimeData<T>) -> Result<EstimateResult<T>> {
    if data.samples.is_empty() {
        return Err(Error::MissingDatum("no samples".into()));
    }
    if data.samples.windows(2).any(|w| !(w[1].t < w[0].t)) || !data.samples.last().is_some_and(|s| s.t > T::zero()) {
        return Err(Error::Domain("sample times must be positive and strictly decreasing".into()));
    }
    if data.u0 == T::zero() {
        return Err(Error::DegenerateDenominator { value: 0.0, threshold: 0.0 });
    }
    let mut norm = data.u0.abs().max(data.u1.map_or(T::zero(), T::abs));
    for s in &data.samples {
        for v in [Some(s.u), s.du, s.ddu, s.g1u, s.g2u].into_iter().flatten() {
            norm = norm.max(v.abs());
        }
    }
    let floor = denominator_floor(norm);
    let seq: Vec<T> = data.samples.iter().map(|s| ratio(data, s, floor)).collect::<Result<_>>()?;
    let raw = *seq.last().unwrap_or(&T::nan());
    let hat = richardson(&seq).unwrap_or(raw);
    Ok(EstimateResult {
        alpha_hat: hat,
        alpha_raw: raw,
        residual_at_solution: (hat - raw).abs(),
        evaluations: seq.len(),
        diagnostics: data.samples.iter().map(|s| s.t).zip(seq).collect(),
        multiple_roots: false,
    })
}
