use crate::error::{Error, Result};
use crate::quadrature::{convolve, convolve_at, convolve_kernel_g, kernel_g_at, Origin, SampledFunction, TimeGrid};
use crate::real::{c, Real};
use crate::resolvent::{check_lambda, grading_for, resolvent_value, sample_resolvent, SpectralMode};
use crate::special_functions::{series_eval, SeriesKind, TruncationPolicy};

use super::{denominator_floor, guard, Theorem};

/// Cells of the graded grid used for the theorems without a closed form.
pub const QUADRATURE_CELLS: usize = 4096;

/// The exact fixed-time ratio `alpha_n` for one mode, which equals `alpha`
/// up to truncation or quadrature error.
///
/// T51, T54, T61 and T62 use closed forms in `E_{a,b}` and
/// `E^2_{a,b}` at `z = -lambda T^a`, truncated as `policy` says. T52 and
/// T53 evaluate both sides by product integration on a graded grid.
pub fn fixed_time_identity<T: Real>(
    theorem: Theorem,
    alpha: T,
    horizon: T,
    mode: &SpectralMode<T>,
    policy: &TruncationPolicy<T>,
) -> Result<T> {
    fixed_time_identity_with_cells(theorem, alpha, horizon, mode, policy, QUADRATURE_CELLS)
}

/// [`fixed_time_identity`] with `cells` graded cells for T52 and T53.
pub fn fixed_time_identity_with_cells<T: Real>(
    theorem: Theorem,
    alpha: T,
    horizon: T,
    mode: &SpectralMode<T>,
    policy: &TruncationPolicy<T>,
    cells: usize,
) -> Result<T> {
    let (_, regime) = theorem
        .problem_class()
        .ok_or_else(|| Error::Unsupported("small-time estimates have no fixed-time identity".into()))?;
    regime.check(alpha)?;
    check_lambda(mode.lambda)?;
    if !(horizon > T::zero()) {
        return Err(Error::Domain(format!("horizon must be positive, got {horizon}")));
    }
    let a = alpha;
    let one = T::one();
    let lam = mode.lambda;
    let t = horizon;
    let x = mode.u0;
    let y = match theorem {
        Theorem::T61 | Theorem::T62 => mode.u1.ok_or_else(|| Error::MissingDatum("u1".into()))?,
        _ => T::zero(),
    };
    let floor = denominator_floor(x.abs().max(y.abs()));
    let z = -lam * t.powf(a);
    let e = |b: T| series_eval(SeriesKind::Standard, a, b, z, policy).map(|v| v.value);
    let p = |b: T| series_eval(SeriesKind::Prabhakar2, a, b, z, policy).map(|v| v.value);
    let two = c::<T>(2.0);
    let (num, den) = match theorem {
        Theorem::T51 => {
            let (e1, e2, p2) = (e(one)?, e(two)?, p(two)?);
            ((e1 - e2) * x, (p2 - e2) * x)
        }
        Theorem::T54 => {
            let num = e(a)? * x;
            let den = (z * p(two * a + one)? + e(a + one)?) * x;
            (num, den)
        }
        Theorem::T61 => {
            let (e1, e2, e3) = (e(one)?, e(two)?, e(c(3.0))?);
            let (p2, p3) = (p(two)?, p(c(3.0))?);
            let num = e1 * x + t * e2 * y - e2 * x - two * t * e3 * y;
            let den = p2 * x + t * p3 * y - e2 * x - t * e3 * y;
            (num, den)
        }
        Theorem::T62 => {
            let (eam1, ea, ea1) = (e(a - one)?, e(a)?, e(a + one)?);
            let (p2a, p2a1) = (p(two * a)?, p(two * a + one)?);
            let num = eam1 * x + t * ea * y + ea * x;
            let den = ea * x + t * ea1 * y + z * p2a * x + z * t * p2a1 * y;
            (num, den)
        }
        Theorem::T52 | Theorem::T53 => return quadrature_identity(theorem, a, t, mode, policy, floor, cells),
        Theorem::SmallTime => unreachable!(),
    };
    Ok(num / guard(den, floor)?)
}

fn quadrature_identity<T: Real>(
    theorem: Theorem,
    a: T,
    t: T,
    mode: &SpectralMode<T>,
    policy: &TruncationPolicy<T>,
    floor: T,
    cells: usize,
) -> Result<T> {
    let one = T::one();
    let two = c::<T>(2.0);
    let lam = mode.lambda;
    let grid = TimeGrid::graded(t, cells, grading_for(a - one))?.into_shared();
    let m = grid.len() - 1;
    match theorem {
        Theorem::T52 => {
            // T u'(T) = alpha F_T, F_T = -lambda (S_{a,a} * u)(T), u = S_{a,1} x
            let u = sample_resolvent(a, one, lam, &grid, policy)?.scale(mode.u0);
            let saa = sample_resolvent(a, a, lam, &grid, policy)?;
            let lhs = t * (-lam) * resolvent_value(a, a, lam, t, policy)? * mode.u0;
            let f_t = -lam * convolve_at(&saa, &u, m)?;
            Ok(lhs / guard(f_t, floor)?)
        }
        Theorem::T53 => {
            // int_0^T r u(r) dr = T (g_1 * u) - (g_2 * u) = alpha psi_T,
            // psi_T = -lambda (S_{a,a+2} * u)(T) + (g_2 * u)(T), u = S_{a,a} x
            let u = sample_resolvent(a, a, lam, &grid, policy)?.scale(mode.u0);
            let g1u = kernel_g_at(one, &u, m)?;
            let g2u = kernel_g_at(two, &u, m)?;
            let s2 = sample_resolvent(a, a + two, lam, &grid, policy)?;
            let lhs = t * g1u - g2u;
            let psi = -lam * convolve_at(&s2, &u, m)? + g2u;
            Ok(lhs / guard(psi, floor)?)
        }
        _ => unreachable!(),
    }
}

/// The intermediate functionals of the estimates, sampled on the data grid
/// for a candidate `alpha`. Only those the theorem uses are populated.
///
/// | theorem | functional |
/// |---|---|
/// | small time, Caputo | `phi_t = u - x`, `psi_t = u'` |
/// | small time, RL | `phi~_t = g_1 * u`, `psi~_t = u` |
/// | T51, T61 | `phi_t = S_{a,1} * u - g_1 * u` |
/// | T52 | `F_t = -lambda S_{a,a} * u` |
/// | T53 | `psi_t = -lambda S_{a,a+2} * u + g_2 * u` |
/// | T54 | `G_t = -lambda S_{a,a+1} * u + g_1 * u` |
/// | T62 | `phi~_t = g_1 * u - lambda S_{a,a+1} * u` |
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeFunctionals<T> {
    pub phi_t: Option<SampledFunction<T>>,
    pub psi_t: Option<SampledFunction<T>>,
    pub phi_tilde_t: Option<SampledFunction<T>>,
    pub psi_tilde_t: Option<SampledFunction<T>>,
    pub f_t: Option<SampledFunction<T>>,
    pub g_t: Option<SampledFunction<T>>,
}

impl<T> Default for ProbeFunctionals<T> {
    fn default() -> Self {
        Self { phi_t: None, psi_t: None, phi_tilde_t: None, psi_tilde_t: None, f_t: None, g_t: None }
    }
}

/// Evaluate the [`ProbeFunctionals`] of `theorem` on trace `u`.
///
/// `du` is needed for small-time Caputo data; `caputo` picks the
/// small-time variant.
pub fn probe_functionals<T: Real>(
    theorem: Theorem,
    alpha: T,
    lambda: T,
    u: &SampledFunction<T>,
    du: Option<&SampledFunction<T>>,
    caputo: bool,
) -> Result<ProbeFunctionals<T>> {
    check_lambda(lambda)?;
    let one = T::one();
    let pol = TruncationPolicy::default();
    let grid = u.grid();
    let s = |b: T| sample_resolvent(alpha, b, lambda, grid, &pol);
    let g = |gamma: T| convolve_kernel_g(gamma, u);
    let mut out = ProbeFunctionals::default();
    match theorem {
        Theorem::SmallTime if caputo => {
            let x = u.values()[0];
            let vals = u.values().iter().map(|&v| v - x).collect();
            out.phi_t = Some(SampledFunction::with_origin(grid.clone(), vals, Origin::Regular)?);
            out.psi_t = Some(du.ok_or_else(|| Error::MissingDatum("u' trace".into()))?.clone());
        }
        Theorem::SmallTime => {
            out.phi_tilde_t = Some(g(one)?);
            out.psi_tilde_t = Some(u.clone());
        }
        Theorem::T51 | Theorem::T61 => {
            out.phi_t = Some(convolve(&s(one)?, u)?.combine(one, &g(one)?, -one)?);
        }
        Theorem::T52 => out.f_t = Some(convolve(&s(alpha)?, u)?.scale(-lambda)),
        Theorem::T53 => {
            let two = c::<T>(2.0);
            out.psi_t = Some(convolve(&s(alpha + two)?, u)?.combine(-lambda, &g(two)?, one)?);
        }
        Theorem::T54 => out.g_t = Some(convolve(&s(alpha + one)?, u)?.combine(-lambda, &g(one)?, one)?),
        Theorem::T62 => {
            out.phi_tilde_t = Some(convolve(&s(alpha + one)?, u)?.combine(-lambda, &g(one)?, one)?);
        }
    }
    Ok(out)
}
