use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::estimators::{
    fixed_time_root_estimate, small_time_estimate, EstimateResult, EstimationRequest, RootOptions, SmallTimeData,
    SmallTimeSample, Theorem,
};
use crate::forward_solver::Derivative;
use crate::quadrature::{kernel_g_at, Regime};

use super::trace::TraceFile;

/// Settings of [`run_estimate`] beyond the trace itself.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateParams {
    pub theorem: Theorem,
    /// Required by every fixed-time theorem.
    pub lambda: Option<f64>,
    /// Defaults to `(0.05, 0.95)` or `(1.05, 1.95)`.
    pub bracket: Option<(f64, f64)>,
    /// `x`; read from the trace when `u(0)` is finite.
    pub u0: Option<f64>,
    /// `y`; read from `du(0)` when present.
    pub u1: Option<f64>,
    /// Root to refine when the scan finds several.
    pub prefer: Option<f64>,
    /// Problem class, needed for small-time estimates only.
    pub derivative: Option<Derivative>,
    pub regime: Option<Regime>,
}

impl EstimateParams {
    pub fn new(theorem: Theorem) -> Self {
        Self { theorem, lambda: None, bracket: None, u0: None, u1: None, prefer: None, derivative: None, regime: None }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EstimateReport {
    pub theorem: Theorem,
    pub result: EstimateResult<f64>,
}

impl EstimateReport {
    pub fn to_text(&self) -> String {
        let r = &self.result;
        let mut out = String::new();
        let _ = writeln!(out, "theorem      {:?}", self.theorem);
        let _ = writeln!(out, "alpha_hat    {:.12}", r.alpha_hat);
        let _ = writeln!(out, "residual     {:.3e}", r.residual_at_solution);
        let _ = writeln!(out, "evaluations  {}", r.evaluations);
        if r.multiple_roots {
            let _ = writeln!(out, "warning      several sign changes in the bracket");
        }
        let head = if self.theorem == Theorem::SmallTime { ("t", "alpha(t)") } else { ("alpha", "R(alpha)") };
        let _ = writeln!(out, "{:>24} {:>24}", head.0, head.1);
        for (a, b) in &r.diagnostics {
            let _ = writeln!(out, "{a:>24.16e} {b:>24.16e}");
        }
        out
    }
}

fn first_finite(col: Option<&Vec<f64>>) -> Option<f64> {
    col.and_then(|c| c.first().copied()).filter(|v| v.is_finite())
}

/// Pointwise small-time data extracted from a trace at the nodes `j = n 2^-k`
/// with `t_j <= t_N / 10`. Those times must form a geometric sequence, as
/// on uniform and on `t_N (j/n)^r` graded grids.
pub fn small_time_data_from_trace(
    tf: &TraceFile,
    derivative: Derivative,
    regime: Regime,
    u0: Option<f64>,
    u1: Option<f64>,
) -> Result<SmallTimeData<f64>> {
    let grid = tf.grid()?;
    let u = tf.u_sampled(&grid)?;
    let t = &tf.t;
    let n = t.len() - 1;
    let t_max = t[n];
    let caputo = derivative == Derivative::Caputo;
    if caputo && tf.du.is_none() {
        return Err(Error::MissingDatum("du column".into()));
    }
    if caputo && regime == Regime::Super && tf.ddu.is_none() {
        return Err(Error::MissingDatum("ddu column".into()));
    }
    let mut nodes = Vec::new();
    let mut m = n;
    while m.is_multiple_of(2) && m > 1 {
        m /= 2;
        if t[m] <= 0.1 * t_max {
            nodes.push(m);
        }
    }
    let geometric = nodes.windows(3).all(|w| ((t[w[0]] / t[w[1]]) / (t[w[1]] / t[w[2]]) - 1.0).abs() <= 1e-9);
    if !geometric {
        return Err(Error::Domain("trace nodes n 2^-k are not geometric in t".into()));
    }
    let mut samples = Vec::with_capacity(nodes.len());
    for m in nodes {
        samples.push(SmallTimeSample {
            t: t[m],
            u: tf.u[m],
            du: tf.du.as_ref().map(|d| d[m]),
            ddu: tf.ddu.as_ref().map(|d| d[m]),
            g1u: if caputo { None } else { Some(kernel_g_at(1.0, &u, m)?) },
            g2u: if !caputo && regime == Regime::Super { Some(kernel_g_at(2.0, &u, m)?) } else { None },
        });
    }
    if samples.len() < 3 {
        return Err(Error::GridTooCoarse(samples.len(), 3));
    }
    let u0 = match (caputo, u0) {
        (_, Some(x)) => x,
        (true, None) => first_finite(Some(&tf.u)).ok_or_else(|| Error::MissingDatum("u0".into()))?,
        (false, None) => 1.0,
    };
    let u1 = u1.or_else(|| first_finite(tf.du.as_ref()));
    Ok(SmallTimeData { derivative, regime, u0, u1, samples })
}

/// Estimate `alpha` from a trace file.
pub fn run_estimate(tf: &TraceFile, params: &EstimateParams) -> Result<EstimateReport> {
    let result = match params.theorem.problem_class() {
        None => {
            let derivative = params.derivative.ok_or_else(|| Error::MissingDatum("derivative".into()))?;
            let regime = params.regime.ok_or_else(|| Error::MissingDatum("regime".into()))?;
            let data = small_time_data_from_trace(tf, derivative, regime, params.u0, params.u1)?;
            small_time_estimate(&data)?
        }
        Some((_, regime)) => {
            let lambda = params.lambda.ok_or_else(|| Error::MissingDatum("lambda".into()))?;
            let grid = tf.grid()?;
            let bracket = params.bracket.unwrap_or(match regime {
                Regime::Sub => (0.05, 0.95),
                Regime::Super => (1.05, 1.95),
            });
            let mut req = EstimationRequest::new(params.theorem, tf.u_sampled(&grid)?, lambda, bracket);
            req.derivative_trace = tf.du_sampled(&grid)?;
            req.u0 = params.u0;
            req.u1 = params.u1.or_else(|| first_finite(tf.du.as_ref()));
            req.options = RootOptions { prefer: params.prefer, ..RootOptions::default() };
            fixed_time_root_estimate(&req)?
        }
    };
    Ok(EstimateReport { theorem: params.theorem, result })
}
