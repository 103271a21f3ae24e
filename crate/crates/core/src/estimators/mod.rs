//! Identification of the fractional order from solution data.
//!
//! * [`small_time_estimate`]: limits of scalar ratios as `t -> 0+`.
//! * [`fixed_time_identity`]: the exact ratios at a fixed horizon `T`,
//!   evaluated from closed forms (or quadrature where none exists).
//! * [`fixed_time_root_estimate`]: recovers `alpha` from a sampled trace by
//!   solving `LHS(data) = alpha * RHS(alpha, data)` for `alpha`.

mod fixed_time;
mod root;
mod small_time;

pub use fixed_time::{
    fixed_time_identity, fixed_time_identity_with_cells, probe_functionals, ProbeFunctionals, QUADRATURE_CELLS,
};
pub use root::{fixed_time_residual, fixed_time_root_estimate, EstimationRequest, RootOptions};
pub use small_time::{richardson, small_time_estimate, synthetic_small_time_data, SmallTimeData, SmallTimeSample};

use crate::error::{Error, Result};
use crate::forward_solver::Derivative;
use crate::quadrature::Regime;
use crate::real::{c, Real};

/// Which identity drives an estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    SmallTime,
    /// Caputo sub: `T u(T) - (g_1 * u)(T) = alpha phi_T`
    T51,
    /// Caputo sub: `T u'(T) = alpha F_T`
    T52,
    /// RL sub: `int_0^T r u(r) dr = alpha psi_T`
    T53,
    /// RL sub: `T u(T) = alpha G_T`
    T54,
    /// Caputo super: `(g_2 * S_{a,1})(T) y = alpha phi_T`
    T61,
    /// RL super: `T u(T) + (g_1 * S_{a,a-1})(T) x = alpha phi~_T`
    T62,
}

impl Theorem {
    /// Problem class a fixed-time theorem applies to.
    pub fn problem_class(self) -> Option<(Derivative, Regime)> {
        use Derivative::*;
        match self {
            Theorem::SmallTime => None,
            Theorem::T51 | Theorem::T52 => Some((Caputo, Regime::Sub)),
            Theorem::T53 | Theorem::T54 => Some((RiemannLiouville, Regime::Sub)),
            Theorem::T61 => Some((Caputo, Regime::Super)),
            Theorem::T62 => Some((RiemannLiouville, Regime::Super)),
        }
    }

    pub fn for_problem(derivative: Derivative, regime: Regime) -> Theorem {
        match (derivative, regime) {
            (Derivative::Caputo, Regime::Sub) => Theorem::T51,
            (Derivative::RiemannLiouville, Regime::Sub) => Theorem::T54,
            (Derivative::Caputo, Regime::Super) => Theorem::T61,
            (Derivative::RiemannLiouville, Regime::Super) => Theorem::T62,
        }
    }
}

impl std::str::FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "small-time" | "smalltime" => Theorem::SmallTime,
            "t51" => Theorem::T51,
            "t52" => Theorem::T52,
            "t53" => Theorem::T53,
            "t54" => Theorem::T54,
            "t61" => Theorem::T61,
            "t62" => Theorem::T62,
            other => return Err(Error::Parse(format!("unknown theorem `{other}`"))),
        })
    }
}

/// Outcome of an estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateResult<T> {
    pub alpha_hat: T,
    /// Small time: the ratio at the smallest `t`. Root finding: `alpha_hat`.
    pub alpha_raw: T,
    /// `R(alpha_hat)` for root finding; for small-time estimates the size of
    /// the last Richardson correction.
    pub residual_at_solution: T,
    pub evaluations: usize,
    /// `(t_k, alpha(t_k))` for small-time estimates, `(alpha, R(alpha))` scan
    /// points for root finding.
    pub diagnostics: Vec<(T, T)>,
    /// The coarse scan saw more than one sign change; the smallest root is
    /// returned.
    pub multiple_roots: bool,
}

/// Denominator threshold `1e-12 * |data|_inf`.
pub(crate) fn denominator_floor<T: Real>(data_norm: T) -> T {
    c::<T>(1e-12) * data_norm
}

pub(crate) fn guard<T: Real>(value: T, floor: T) -> Result<T> {
    if value.abs() > floor && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::DegenerateDenominator { value: value.to_f64_lossy(), threshold: floor.to_f64_lossy() })
    }
}
