use crate::error::{Error, Result};
use crate::quadrature::{convolve_at, kernel_g_at, Regime, SampledFunction};
use crate::real::{c, Real};
use crate::resolvent::{check_lambda, resolvent_value, sample_resolvent};
use crate::special_functions::TruncationPolicy;

use super::{denominator_floor, guard, EstimateResult, Theorem};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOptions<T> {
    /// Points of the coarse sign-change scan across the bracket.
    pub scan_points: usize,
    /// Stop once `|R| <= tol_r`.
    pub tol_r: T,
    /// Stop once the bracket is narrower than this.
    pub width_tol: T,
    pub max_iter: usize,
    /// With several sign changes, refine the one closest to this guess
    /// instead of the smallest.
    pub prefer: Option<T>,
}

impl<T: Real> Default for RootOptions<T> {
    fn default() -> Self {
        Self { scan_points: 64, tol_r: T::zero(), width_tol: c(1e-10), max_iter: 200, prefer: None }
    }
}

/// Data and settings for [`fixed_time_root_estimate`].
#[derive(Debug, Clone, PartialEq)]
pub struct EstimationRequest<T> {
    pub theorem: Theorem,
    /// Observed single-mode trace on `[0, T]`.
    pub trace: SampledFunction<T>,
    /// `u'` on the same grid, needed by T52.
    pub derivative_trace: Option<SampledFunction<T>>,
    /// Fixed time; must be a node of the trace grid. Defaults to its last node.
    pub horizon: Option<T>,
    /// Eigenvalue, the action of `A = -lambda`.
    pub lambda: T,
    /// `x`; defaults to `u(0)` for Caputo traces.
    pub u0: Option<T>,
    /// `y`, needed by T61 and T62.
    pub u1: Option<T>,
    pub bracket: (T, T),
    pub options: RootOptions<T>,
}

impl<T: Real> EstimationRequest<T> {
    pub fn new(theorem: Theorem, trace: SampledFunction<T>, lambda: T, bracket: (T, T)) -> Self {
        Self {
            theorem,
            trace,
            derivative_trace: None,
            horizon: None,
            lambda,
            u0: None,
            u1: None,
            bracket,
            options: RootOptions::default(),
        }
    }
}

/// `R(a) = L(a) - a B(a)` at the horizon node.
struct Residual<'a, T> {
    theorem: Theorem,
    u: &'a SampledFunction<T>,
    m: usize,
    t: T,
    lambda: T,
    x: T,
    y: T,
    um: T,
    dum: T,
    g1u: T,
    g2u: T,
    policy: TruncationPolicy<T>,
}

impl<T: Real> Residual<'_, T> {
    fn conv(&self, a: T, beta: T) -> Result<T> {
        let s = sample_resolvent(a, beta, self.lambda, self.u.grid(), &self.policy)?;
        convolve_at(&s, self.u, self.m)
    }

    /// Left side when it does not depend on the candidate.
    fn fixed_lhs(&self) -> Option<T> {
        let t = self.t;
        match self.theorem {
            Theorem::T51 => Some(t * self.um - self.g1u),
            Theorem::T52 => Some(t * self.dum),
            Theorem::T53 => Some(t * self.g1u - self.g2u),
            Theorem::T54 => Some(t * self.um),
            _ => None,
        }
    }

    fn eval(&self, a: T) -> Result<T> {
        let one = T::one();
        let two = c::<T>(2.0);
        let (t, lam) = (self.t, self.lambda);
        let (lhs, rhs) = match self.theorem {
            Theorem::T51 => (t * self.um - self.g1u, self.conv(a, one)? - self.g1u),
            Theorem::T52 => (t * self.dum, -lam * self.conv(a, a)?),
            Theorem::T53 => (t * self.g1u - self.g2u, -lam * self.conv(a, a + two)? + self.g2u),
            Theorem::T54 => (t * self.um, -lam * self.conv(a, a + one)? + self.g1u),
            Theorem::T61 => {
                let s3 = resolvent_value(a, c(3.0), lam, t, &self.policy)?;
                (t * self.um - self.g1u - s3 * self.y, self.conv(a, one)? - self.g1u)
            }
            Theorem::T62 => {
                let saa = resolvent_value(a, a, lam, t, &self.policy)?;
                (t * self.um + saa * self.x, self.g1u - lam * self.conv(a, a + one)?)
            }
            Theorem::SmallTime => unreachable!(),
        };
        Ok(lhs - a * rhs)
    }
}

fn node_index<T: Real>(u: &SampledFunction<T>, horizon: Option<T>) -> Result<usize> {
    let nodes = u.grid().nodes();
    let last = nodes.len() - 1;
    let Some(h) = horizon else { return Ok(last) };
    let tol = c::<T>(1e-12) * h.abs().max(T::one());
    nodes
        .iter()
        .position(|&t| (t - h).abs() <= tol)
        .filter(|&j| j > 0)
        .ok_or_else(|| Error::Domain(format!("horizon {h} is not a positive grid node")))
}

fn build_residual<T: Real>(
    req: &EstimationRequest<T>,
    derivative: crate::forward_solver::Derivative,
) -> Result<Residual<'_, T>> {
    let u = &req.trace;
    u.require_defined()?;
    let m = node_index(u, req.horizon)?;
    let t = u.grid().nodes()[m];
    let caputo = derivative == crate::forward_solver::Derivative::Caputo;
    let x = match req.u0 {
        Some(x) => x,
        None if caputo && u.origin() == crate::quadrature::Origin::Regular => u.values()[0],
        None if req.theorem == Theorem::T62 => return Err(Error::MissingDatum("u0".into())),
        None => T::zero(),
    };
    let y = match req.theorem {
        Theorem::T61 | Theorem::T62 => req.u1.ok_or_else(|| Error::MissingDatum("u1".into()))?,
        _ => req.u1.unwrap_or(T::zero()),
    };
    let dum = match req.theorem {
        Theorem::T52 => {
            let du = req.derivative_trace.as_ref().ok_or_else(|| Error::MissingDatum("u' trace (T52)".into()))?;
            if !du.same_grid(u) {
                return Err(Error::GridMismatch);
            }
            du.values()[m]
        }
        _ => T::zero(),
    };
    let need_g2 = req.theorem == Theorem::T53;
    Ok(Residual {
        theorem: req.theorem,
        u,
        m,
        t,
        lambda: req.lambda,
        x,
        y,
        um: u.values()[m],
        dum,
        g1u: kernel_g_at(T::one(), u, m)?,
        g2u: if need_g2 { kernel_g_at(c(2.0), u, m)? } else { T::zero() },
        policy: TruncationPolicy::default(),
    })
}

/// `R(alpha)` of the request's identity at one candidate, without root
/// finding. At the true order this measures the quadrature error of the
/// data-side functionals.
pub fn fixed_time_residual<T: Real>(req: &EstimationRequest<T>, alpha: T) -> Result<T> {
    let (derivative, regime) = req
        .theorem
        .problem_class()
        .ok_or_else(|| Error::Unsupported("small-time data has no fixed-time residual".into()))?;
    check_lambda(req.lambda)?;
    regime.check(alpha)?;
    build_residual(req, derivative)?.eval(alpha)
}

/// Recover `alpha` from a sampled trace by solving `R(alpha) = 0`, where
/// `R(a) = LHS(data) - a RHS(a, data)` is the fixed-time identity of the
/// request's theorem with `S_{a,.}` in the convolutions.
///
/// A coarse scan locates sign changes; the first one (or the one nearest
/// `options.prefer`) is refined by Brent's method (bisection with secant
/// and inverse-quadratic steps). `R` can vanish at more than one candidate;
/// the result is then flagged `multiple_roots`.
pub fn fixed_time_root_estimate<T: Real>(req: &EstimationRequest<T>) -> Result<EstimateResult<T>> {
    let (derivative, regime) = req
        .theorem
        .problem_class()
        .ok_or_else(|| Error::Unsupported("use small_time_estimate for small-time data".into()))?;
    check_lambda(req.lambda)?;
    let (lo, hi) = req.bracket;
    let (floor_a, ceil_a) = match regime {
        Regime::Sub => (T::zero(), T::one()),
        Regime::Super => (T::one(), c(2.0)),
    };
    if !(lo > floor_a && lo < hi && hi < ceil_a) {
        return Err(Error::Domain(format!("bracket ({lo}, {hi}) must lie inside ({floor_a}, {ceil_a})")));
    }
    if req.options.scan_points < 2 {
        return Err(Error::Domain("scan needs at least two points".into()));
    }
    let res = build_residual(req, derivative)?;
    let t = res.t;

    // singular traces are unbounded near 0, so the scale comes from the
    // horizon values and the initial data
    let norm = [res.x, res.y, res.um, res.g1u, res.g2u, res.dum].iter().fold(T::zero(), |acc, v| acc.max(v.abs()));
    if let Some(l) = res.fixed_lhs() {
        guard(l, denominator_floor(norm) * t.max(T::one()))?;
    }

    // coarse scan
    let k = req.options.scan_points;
    let mut curve = Vec::with_capacity(k);
    for i in 0..k {
        let a = lo + (hi - lo) * T::from_usize_lossy(i) / T::from_usize_lossy(k - 1);
        curve.push((a, res.eval(a)?));
    }
    let mut evaluations = k;
    let changes: Vec<usize> = (0..k - 1)
        .filter(|&i| {
            let (r0, r1) = (curve[i].1, curve[i + 1].1);
            r0 == T::zero() || (r0 < T::zero()) != (r1 < T::zero()) && r1 != T::zero()
        })
        .collect();
    let last_zero = curve[k - 1].1 == T::zero();
    let pick = match req.options.prefer {
        Some(g) => changes.iter().copied().min_by(|&i, &j| {
            let di = (curve[i].0 + curve[i + 1].0) * c(0.5) - g;
            let dj = (curve[j].0 + curve[j + 1].0) * c(0.5) - g;
            di.abs().partial_cmp(&dj.abs()).unwrap_or(std::cmp::Ordering::Equal)
        }),
        None => changes.first().copied(),
    };
    let Some(first) = pick else {
        if last_zero {
            let (a, r) = curve[k - 1];
            return Ok(result(a, r, evaluations, curve, false));
        }
        return Err(Error::NoSignChange {
            lo: lo.to_f64_lossy(),
            hi: hi.to_f64_lossy(),
            r_lo: curve[0].1.to_f64_lossy(),
            r_hi: curve[k - 1].1.to_f64_lossy(),
            curve: curve.iter().map(|&(a, r)| (a.to_f64_lossy(), r.to_f64_lossy())).collect(),
        });
    };
    let multiple = changes.len() + usize::from(last_zero) > 1;
    let (a0, r0) = curve[first];
    let (a1, r1) = curve[first + 1];
    let (root, r, n) = brent(|a| res.eval(a), a0, r0, a1, r1, &req.options)?;
    evaluations += n;
    Ok(result(root, r, evaluations, curve, multiple))
}

fn result<T: Real>(a: T, r: T, evaluations: usize, curve: Vec<(T, T)>, multiple: bool) -> EstimateResult<T> {
    EstimateResult {
        alpha_hat: a,
        alpha_raw: a,
        residual_at_solution: r,
        evaluations,
        diagnostics: curve,
        multiple_roots: multiple,
    }
}

/// Brent's method on a bracket with `fa`, `fb` of opposite sign (or zero).
fn brent<T: Real>(
    mut f: impl FnMut(T) -> Result<T>,
    a0: T,
    fa0: T,
    b0: T,
    fb0: T,
    opts: &RootOptions<T>,
) -> Result<(T, T, usize)> {
    let (mut a, mut fa, mut b, mut fb) = (a0, fa0, b0, fb0);
    if fa == T::zero() {
        return Ok((a, fa, 0));
    }
    if fb == T::zero() {
        return Ok((b, fb, 0));
    }
    let two = c::<T>(2.0);
    let half = c::<T>(0.5);
    let (mut cc, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    let mut evals = 0;
    for _ in 0..opts.max_iter {
        if (fb > T::zero()) == (fc > T::zero()) {
            cc = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = cc;
            cc = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = two * T::epsilon() * b.abs() + half * opts.width_tol;
        let xm = half * (cc - b);
        if xm.abs() <= tol || fb.abs() <= opts.tol_r {
            return Ok((b, fb, evals));
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == cc {
                p = two * xm * s;
                q = T::one() - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (two * xm * qq * (qq - r) - (b - a) * (r - T::one()));
                q = (qq - T::one()) * (r - T::one()) * (s - T::one());
            }
            if p > T::zero() {
                q = -q;
            }
            p = p.abs();
            let min1 = c::<T>(3.0) * xm * q - (tol * q).abs();
            let min2 = (e * q).abs();
            if two * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b = if d.abs() > tol { b + d } else { b + tol.copysign(xm) };
        fb = f(b)?;
        evals += 1;
    }
    Ok((b, fb, evals))
}
