//! Closed-form mode solutions of the four model problems
//!
//! | derivative | regime | `u_n(t)` |
//! |---|---|---|
//! | Caputo | sub | `S_{a,1} u0` |
//! | Caputo | super | `S_{a,1} u0 + S_{a,2} u1` |
//! | RL | sub | `S_{a,a} u0` |
//! | RL | super | `S_{a,a-1} u0 + S_{a,a} u1` |

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quadrature::{caputo_derivative, rl_derivative, Origin, Regime, SampledFunction, TimeGrid};
use crate::real::Real;
use crate::resolvent::{resolvent_value, SpectralMode, SpectralOperator};
use crate::special_functions::TruncationPolicy;

/// `(beta, coef)` pairs of `sum coef S_{a,beta}`.
type Families<T> = Vec<(T, T)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivative {
    Caputo,
    RiemannLiouville,
}

/// One of the four model problems on a diagonal operator.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec<T> {
    derivative: Derivative,
    regime: Regime,
    alpha: T,
    operator: SpectralOperator<T>,
}

impl<T: Real> ProblemSpec<T> {
    pub fn new(derivative: Derivative, regime: Regime, alpha: T, operator: SpectralOperator<T>) -> Result<Self> {
        regime.check(alpha)?;
        if regime == Regime::Super {
            if let Some(n) = operator.modes().iter().position(|m| m.u1.is_none()) {
                return Err(Error::MissingDatum(format!("u1 of mode {n} (super-diffusion)")));
            }
        }
        Ok(Self { derivative, regime, alpha, operator })
    }

    /// Single-mode convenience constructor.
    pub fn single(derivative: Derivative, regime: Regime, alpha: T, lambda: T, u0: T, u1: Option<T>) -> Result<Self> {
        let op = SpectralOperator::new(vec![SpectralMode::new(lambda, u0, u1)?])?;
        Self::new(derivative, regime, alpha, op)
    }

    pub fn derivative(&self) -> Derivative {
        self.derivative
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn operator(&self) -> &SpectralOperator<T> {
        &self.operator
    }

    /// `(beta, coefficient)` pairs so that `u_n = sum coef * S_{a,beta}`.
    fn families(&self, mode: &SpectralMode<T>) -> Result<Families<T>> {
        let a = self.alpha;
        let one = T::one();
        let u1 = || mode.u1.ok_or_else(|| Error::MissingDatum("u1".into()));
        Ok(match (self.derivative, self.regime) {
            (Derivative::Caputo, Regime::Sub) => vec![(one, mode.u0)],
            (Derivative::Caputo, Regime::Super) => vec![(one, mode.u0), (one + one, u1()?)],
            (Derivative::RiemannLiouville, Regime::Sub) => vec![(a, mode.u0)],
            (Derivative::RiemannLiouville, Regime::Super) => vec![(a - one, mode.u0), (a, u1()?)],
        })
    }

    /// Behaviour of `u_n` at the origin: the leading power `t^(beta-1)`
    /// among the families with a nonzero coefficient.
    pub fn mode_origin(&self, mode: &SpectralMode<T>) -> Result<Origin<T>> {
        let lead = self
            .families(mode)?
            .into_iter()
            .filter(|&(_, coef)| coef != T::zero())
            .map(|(b, _)| b)
            .fold(T::infinity(), T::min);
        Ok(if lead < T::one() { Origin::Singular(lead - T::one()) } else { Origin::Regular })
    }
}

fn combo<T: Real>(alpha: T, lambda: T, terms: &[(T, T)], t: T, policy: &TruncationPolicy<T>) -> Result<T> {
    let mut acc = T::zero();
    for &(beta, coef) in terms {
        if coef != T::zero() {
            acc = acc + coef * resolvent_value(alpha, beta, lambda, t, policy)?;
        }
    }
    Ok(acc)
}

/// `u_n(t)` for `t > 0`.
pub fn mode_value<T: Real>(
    problem: &ProblemSpec<T>,
    mode: &SpectralMode<T>,
    t: T,
    policy: &TruncationPolicy<T>,
) -> Result<T> {
    combo(problem.alpha, mode.lambda, &problem.families(mode)?, t, policy)
}

/// `(g_gamma * u_n)(t) = sum coef S_{a, beta + gamma}(t)`.
pub fn mode_kernel_integral<T: Real>(
    problem: &ProblemSpec<T>,
    mode: &SpectralMode<T>,
    gamma: T,
    t: T,
    policy: &TruncationPolicy<T>,
) -> Result<T> {
    if !(gamma > T::zero()) {
        return Err(Error::Domain(format!("kernel order must be positive, got {gamma}")));
    }
    let shifted: Families<T> = problem.families(mode)?.into_iter().map(|(b, k)| (b + gamma, k)).collect();
    combo(problem.alpha, mode.lambda, &shifted, t, policy)
}

/// `S'_{a,1} = -lambda S_{a,a}`, `S'_{a,2} = S_{a,1}`, `S'_{a,a} = S_{a,a-1}`.
fn derivative_families<T: Real>(
    problem: &ProblemSpec<T>,
    mode: &SpectralMode<T>,
) -> Result<(Families<T>, Option<Families<T>>)> {
    if problem.derivative != Derivative::Caputo {
        return Err(Error::Unsupported("pointwise derivatives are only provided for Caputo problems".into()));
    }
    let a = problem.alpha;
    let lam = mode.lambda;
    Ok(match problem.regime {
        Regime::Sub => (vec![(a, -lam * mode.u0)], None),
        Regime::Super => {
            let u1 = mode.u1.ok_or_else(|| Error::MissingDatum("u1".into()))?;
            (vec![(a, -lam * mode.u0), (T::one(), u1)], Some(vec![(a - T::one(), -lam * mode.u0), (a, -lam * u1)]))
        }
    })
}

/// `(u_n'(t), u_n''(t))` for `t > 0`, Caputo problems only; the second
/// derivative is present for super-diffusion.
pub fn mode_derivatives_at<T: Real>(
    problem: &ProblemSpec<T>,
    mode: &SpectralMode<T>,
    t: T,
    policy: &TruncationPolicy<T>,
) -> Result<(T, Option<T>)> {
    let (d1, d2) = derivative_families(problem, mode)?;
    let first = combo(problem.alpha, mode.lambda, &d1, t, policy)?;
    let second = d2.map(|d| combo(problem.alpha, mode.lambda, &d, t, policy)).transpose()?;
    Ok((first, second))
}

/// Mode values on the grid. Singular entries at `t = 0` are NaN.
pub fn solve_mode<T: Real>(
    problem: &ProblemSpec<T>,
    mode: &SpectralMode<T>,
    grid: &TimeGrid<T>,
    policy: &TruncationPolicy<T>,
) -> Result<Vec<T>> {
    let terms = problem.families(mode)?;
    let sing = !matches!(problem.mode_origin(mode)?, Origin::Regular);
    grid.nodes()
        .iter()
        .map(
            |&t| {
                if t == T::zero() && sing {
                    Ok(T::nan())
                } else {
                    combo(problem.alpha, mode.lambda, &terms, t, policy)
                }
            },
        )
        .collect()
}

/// Mode trace as a [`SampledFunction`] with the right origin tag.
pub fn solve_mode_sampled<T: Real>(
    problem: &ProblemSpec<T>,
    mode: &SpectralMode<T>,
    grid: &Arc<TimeGrid<T>>,
    policy: &TruncationPolicy<T>,
) -> Result<SampledFunction<T>> {
    let values = solve_mode(problem, mode, grid, policy)?;
    SampledFunction::with_origin(grid.clone(), values, problem.mode_origin(mode)?)
}

/// Pointwise `u'_n` and, for super-diffusion, `u''_n` on the grid (Caputo
/// problems only). Entries that blow up at `t = 0` are NaN.
pub fn solve_mode_derivatives<T: Real>(
    problem: &ProblemSpec<T>,
    mode: &SpectralMode<T>,
    grid: &TimeGrid<T>,
    policy: &TruncationPolicy<T>,
) -> Result<(Vec<T>, Option<Vec<T>>)> {
    let (d1, d2) = derivative_families(problem, mode)?;
    let eval = |terms: &[(T, T)]| -> Result<Vec<T>> {
        grid.nodes()
            .iter()
            .map(|&t| {
                let v = combo(problem.alpha, mode.lambda, terms, t, policy)?;
                Ok(if v.is_finite() { v } else { T::nan() })
            })
            .collect()
    };
    let first = eval(&d1)?;
    let second = d2.map(|d| eval(&d)).transpose()?;
    Ok((first, second))
}

/// Per-mode solution over a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionTrace<T> {
    pub grid: Arc<TimeGrid<T>>,
    /// `per_mode[n][j]` is mode `n` at node `j`.
    pub per_mode: Vec<Vec<T>>,
    pub origins: Vec<Origin<T>>,
    pub observable: Option<SampledFunction<T>>,
}

impl<T: Real> SolutionTrace<T> {
    pub fn mode(&self, n: usize) -> Result<SampledFunction<T>> {
        let values = self.per_mode.get(n).ok_or_else(|| Error::Domain(format!("no mode {n}")))?.clone();
        SampledFunction::with_origin(self.grid.clone(), values, self.origins[n])
    }
}

/// Solve every mode of `problem` on `grid`.
pub fn solve<T: Real>(
    problem: &ProblemSpec<T>,
    grid: &Arc<TimeGrid<T>>,
    policy: &TruncationPolicy<T>,
) -> Result<SolutionTrace<T>> {
    let mut per_mode = Vec::new();
    let mut origins = Vec::new();
    for mode in problem.operator.modes() {
        per_mode.push(solve_mode(problem, mode, grid, policy)?);
        origins.push(problem.mode_origin(mode)?);
    }
    Ok(SolutionTrace { grid: grid.clone(), per_mode, origins, observable: None })
}

/// Weighted mode sum `sum_n w_n u_n(t)`, e.g. `w_n = phi_n(x0)`.
pub fn assemble_observable<T: Real>(trace: &SolutionTrace<T>, weights: &[T]) -> Result<SampledFunction<T>> {
    if weights.len() != trace.per_mode.len() {
        return Err(Error::LengthMismatch { expected: trace.per_mode.len(), got: weights.len() });
    }
    let n = trace.grid.len();
    let mut values = vec![T::zero(); n];
    let mut origin = Origin::Regular;
    for ((mode, &w), &o) in trace.per_mode.iter().zip(weights).zip(&trace.origins) {
        if w == T::zero() {
            continue;
        }
        origin = match (origin, o) {
            (Origin::Regular, x) | (x, Origin::Regular) => x,
            (Origin::Singular(p), Origin::Singular(q)) => Origin::Singular(p.min(q)),
            _ => Origin::Undefined,
        };
        for (v, &u) in values.iter_mut().zip(mode) {
            *v = *v + w * u;
        }
    }
    if origin != Origin::Regular {
        values[0] = T::nan();
    }
    SampledFunction::with_origin(trace.grid.clone(), values, origin)
}

/// Max over modes and window nodes of `|D^alpha u_n + lambda_n u_n|`.
///
/// `window` defaults to `(0, T]` for Caputo problems and `[0.1 T, T]` for
/// Riemann-Liouville problems. Needs a uniform grid.
pub fn verify_residual<T: Real>(
    problem: &ProblemSpec<T>,
    trace: &SolutionTrace<T>,
    window: Option<(T, T)>,
) -> Result<T> {
    let grid = &trace.grid;
    let t_max = grid.t_max();
    let (lo, hi) = window.unwrap_or(match problem.derivative {
        Derivative::Caputo => (T::zero(), t_max),
        Derivative::RiemannLiouville => (T::lit(0.1) * t_max, t_max),
    });
    let mut worst = T::zero();
    for (n, mode) in problem.operator.modes().iter().enumerate() {
        let u = trace.mode(n)?;
        let d = match problem.derivative {
            Derivative::Caputo => caputo_derivative(&u, problem.alpha, problem.regime, mode.u1)?,
            Derivative::RiemannLiouville => rl_derivative(&u, problem.alpha, problem.regime)?,
        };
        for j in 1..grid.len() {
            let t = grid.nodes()[j];
            if t < lo || t > hi {
                continue;
            }
            let r = (d.values()[j] + mode.lambda * u.values()[j]).abs();
            worst = worst.max(r);
        }
    }
    Ok(worst)
}

/// Dirichlet Laplacian eigenvalues on `(0, length)`: `(n pi / length)^2`.
pub fn dirichlet_laplacian_modes<T: Real>(length: T, count: usize) -> Result<Vec<T>> {
    if !(length > T::zero()) {
        return Err(Error::Domain(format!("interval length must be positive, got {length}")));
    }
    if count == 0 {
        return Err(Error::Domain("need at least one mode".into()));
    }
    Ok((1..=count)
        .map(|n| {
            let k = T::from_usize_lossy(n) * T::PI() / length;
            k * k
        })
        .collect())
}
