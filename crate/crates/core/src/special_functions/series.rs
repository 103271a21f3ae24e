use crate::error::{Error, Result};
use crate::real::{c, Real};

use super::contour::contour_value;
use super::gamma::{ln_gamma_pos, ln_gamma_ratio, rgamma};

/// Parameters `(alpha, beta)` of `E_{alpha,beta}`; both strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLOrder<T> {
    alpha: T,
    beta: T,
}

impl<T: Real> MLOrder<T> {
    pub fn new(alpha: T, beta: T) -> Result<Self> {
        if !(alpha > T::zero()) || !(beta > T::zero()) || !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::Domain(format!(
                "Mittag-Leffler order needs alpha > 0 and beta > 0, got ({alpha}, {beta})"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn beta(&self) -> T {
        self.beta
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TruncationMode {
    /// Sum exactly `max_terms + 1` terms, `k = 0..=max_terms`.
    FixedN,
    /// Stop once `|term_k| <= rel_tol * |sum|`, or after `max_terms`.
    Adaptive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy<T> {
    pub max_terms: usize,
    pub rel_tol: T,
    pub mode: TruncationMode,
}

impl<T: Real> TruncationPolicy<T> {
    /// The N-th partial sum, as used in the reference tables.
    pub fn fixed(n: usize) -> Self {
        Self { max_terms: n, rel_tol: T::epsilon() * c(64.0), mode: TruncationMode::FixedN }
    }

    pub fn adaptive(max_terms: usize, rel_tol: T) -> Self {
        Self { max_terms, rel_tol, mode: TruncationMode::Adaptive }
    }
}

impl<T: Real> Default for TruncationPolicy<T> {
    /// Converged values: adaptive with tolerance at machine precision.
    fn default() -> Self {
        Self::adaptive(100_000, T::epsilon())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// `sum z^k / Gamma(alpha k + beta)`
    Standard,
    /// `sum (k + 1) z^k / Gamma(alpha k + beta)`
    Prabhakar2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMethod {
    /// Plain compensated summation.
    Series,
    /// Full series replaced by its contour-integral value.
    Contour,
    /// Partial sum recovered as contour value minus the summed tail.
    ContourMinusTail,
}

/// A partial sum together with its truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue<T> {
    pub value: T,
    /// Number of terms represented by `value` (0 for a pure contour value).
    pub terms_used: usize,
    /// Magnitude of the last summed term.
    pub last_term: T,
    /// Largest term magnitude met while summing.
    pub peak_term: T,
    /// The series had not converged within `max_terms`: a fixed-N sum left a
    /// last term above `rel_tol * |sum|`, or an adaptive request was served
    /// by the contour integral where summation would have needed more terms.
    pub truncation_warning: bool,
    /// `|z| > 30`, outside the range where plain summation is trusted.
    pub outside_safe_range: bool,
    /// Rough relative error from cancellation.
    pub rel_error_estimate: T,
    pub method: EvalMethod,
}

const SAFE_RANGE: f64 = 30.0;
// e^7 ~ 1e3 ulps of cancellation before the contour takes over
const LOSS_SWITCH: f64 = 7.0;
const TAIL_CAP: usize = 1_000_000;
// above this Gamma overflows and terms come from the ratio recurrence
const DIRECT_LIMIT: f64 = 170.0;

/// `E_{alpha,beta}(z)` truncated according to `policy`.
pub fn mittag_leffler<T: Real>(order: MLOrder<T>, z: T, policy: &TruncationPolicy<T>) -> Result<SeriesValue<T>> {
    series_eval(SeriesKind::Standard, order.alpha, order.beta, z, policy)
}

/// Prabhakar function `E^2_{alpha,beta}(z)` truncated according to `policy`.
pub fn prabhakar_ml2<T: Real>(order: MLOrder<T>, z: T, policy: &TruncationPolicy<T>) -> Result<SeriesValue<T>> {
    series_eval(SeriesKind::Prabhakar2, order.alpha, order.beta, z, policy)
}

struct Terms<T> {
    kind: SeriesKind,
    alpha: T,
    beta: T,
    z: T,
    k: usize,
    base: T,
}

impl<T: Real> Terms<T> {
    fn new(kind: SeriesKind, alpha: T, beta: T, z: T) -> Self {
        Self { kind, alpha, beta, z, k: 0, base: rgamma(beta) }
    }

    fn arg(&self, k: usize) -> T {
        self.alpha * T::from_usize_lossy(k) + self.beta
    }

    fn term(&self) -> T {
        match self.kind {
            SeriesKind::Standard => self.base,
            SeriesKind::Prabhakar2 => self.base * T::from_usize_lossy(self.k + 1),
        }
    }

    fn advance(&mut self) {
        let prev = self.arg(self.k);
        self.k += 1;
        let x = self.arg(self.k);
        if x <= c(DIRECT_LIMIT) && self.k <= i32::MAX as usize {
            // independent rounding per term, exact factorials at integer x
            let zk = self.z.powi(self.k as i32);
            if zk.is_finite() && zk != T::zero() {
                self.base = zk * rgamma(x);
                return;
            }
        }
        self.base = if prev > T::zero() {
            if self.base == T::zero() {
                // underflowed past the peak
                return;
            }
            self.base * self.z * (-ln_gamma_ratio(prev, self.alpha)).exp()
        } else {
            // only reachable for a handful of leading terms when beta <= 0
            self.z.powi(self.k as i32) * rgamma(x)
        };
    }
}

fn kahan_add<T: Real>(sum: &mut T, comp: &mut T, x: T) {
    let y = x - *comp;
    let t = *sum + y;
    *comp = (t - *sum) - y;
    *sum = t;
}

fn contour_available<T: Real>(alpha: T, z: T) -> bool {
    alpha <= T::one() && z < T::zero()
}

fn ln_abs_term<T: Real>(kind: SeriesKind, alpha: T, beta: T, z: T, k: usize) -> T {
    let kf = T::from_usize_lossy(k);
    let x = alpha * kf + beta;
    let coef = match kind {
        SeriesKind::Standard => T::zero(),
        SeriesKind::Prabhakar2 => (kf + T::one()).ln(),
    };
    coef + kf * z.abs().ln() - ln_gamma_pos(x)
}

/// Shared evaluator. `beta` may be any real here (terms at Gamma poles are
/// zero); the public entry points enforce `beta > 0`.
pub(crate) fn series_eval<T: Real>(
    kind: SeriesKind,
    alpha: T,
    beta: T,
    z: T,
    policy: &TruncationPolicy<T>,
) -> Result<SeriesValue<T>> {
    if !z.is_finite() {
        return Err(Error::Domain(format!("non-finite argument z = {z}")));
    }
    let outside_safe_range = z.abs() > c(SAFE_RANGE);
    let first = rgamma(beta);
    if z == T::zero() {
        return Ok(SeriesValue {
            value: first,
            terms_used: 1,
            last_term: first.abs(),
            peak_term: first.abs(),
            truncation_warning: false,
            outside_safe_range,
            rel_error_estimate: T::zero(),
            method: EvalMethod::Series,
        });
    }
    let loss = z.abs().powf(alpha.recip());
    let contour_ok = contour_available(alpha, z);

    if policy.mode == TruncationMode::Adaptive && contour_ok && loss > c(LOSS_SWITCH) {
        let v = contour_value(kind, alpha, beta, z);
        let n = policy.max_terms;
        let last = ln_abs_term(kind, alpha, beta, z, n).exp();
        // the series itself would still be diverging at max_terms
        let unconverged = !(alpha * T::from_usize_lossy(n) + beta > T::zero() && last <= policy.rel_tol * v.abs());
        return Ok(SeriesValue {
            value: v,
            terms_used: 0,
            last_term: T::zero(),
            peak_term: T::zero(),
            truncation_warning: unconverged,
            outside_safe_range,
            // quadrature error is absolute, of order eps * max|integrand|
            rel_error_estimate: T::epsilon() * c(1e2) / v.abs().min(T::one()).max(T::min_positive_value()),
            method: EvalMethod::Contour,
        });
    }

    match policy.mode {
        TruncationMode::FixedN => {
            fixed_sum(kind, alpha, beta, z, policy.max_terms, policy.rel_tol, outside_safe_range, contour_ok)
        }
        TruncationMode::Adaptive => {
            let mut terms = Terms::new(kind, alpha, beta, z);
            let (mut sum, mut comp) = (T::zero(), T::zero());
            let mut peak = T::zero();
            let mut last;
            loop {
                let t = terms.term();
                if !t.is_finite() {
                    return Err(Error::Overflow { k: terms.k, z: z.to_f64_lossy() });
                }
                kahan_add(&mut sum, &mut comp, t);
                last = t.abs();
                peak = peak.max(last);
                let settled = terms.arg(terms.k) > T::one();
                if (settled && last <= policy.rel_tol * sum.abs()) || terms.k >= policy.max_terms {
                    break;
                }
                terms.advance();
            }
            let used = terms.k + 1;
            let rel = cancellation(peak, sum);
            Ok(SeriesValue {
                value: sum,
                terms_used: used,
                last_term: last,
                peak_term: peak,
                truncation_warning: last > policy.rel_tol * sum.abs(),
                outside_safe_range,
                rel_error_estimate: rel,
                method: EvalMethod::Series,
            })
        }
    }
}

fn cancellation<T: Real>(peak: T, sum: T) -> T {
    if sum == T::zero() {
        if peak == T::zero() {
            T::zero()
        } else {
            T::infinity()
        }
    } else {
        T::epsilon() * (peak / sum.abs()).max(T::one())
    }
}

#[allow(clippy::too_many_arguments)]
fn fixed_sum<T: Real>(
    kind: SeriesKind,
    alpha: T,
    beta: T,
    z: T,
    n: usize,
    rel_tol: T,
    outside_safe_range: bool,
    contour_ok: bool,
) -> Result<SeriesValue<T>> {
    let mut terms = Terms::new(kind, alpha, beta, z);
    let (mut sum, mut comp) = (T::zero(), T::zero());
    let mut peak = T::zero();
    let mut last = T::zero();
    for k in 0..=n {
        if k > 0 {
            terms.advance();
        }
        let t = terms.term();
        if !t.is_finite() {
            return Err(Error::Overflow { k, z: z.to_f64_lossy() });
        }
        kahan_add(&mut sum, &mut comp, t);
        last = t.abs();
        peak = peak.max(last);
    }
    let mut value = sum;
    let mut method = EvalMethod::Series;
    let mut rel = cancellation(peak, sum);
    if contour_ok && rel > T::epsilon() * c(1e3) {
        // The partial sum lies far below its largest term, so it is past
        // the peak: S_N = E(z) - sum_{k>N} t_k, with a well-behaved tail.
        let full = contour_value(kind, alpha, beta, z);
        let (mut tail, mut tcomp) = (T::zero(), T::zero());
        let mut steps = 0;
        let mut first_tail = T::zero();
        loop {
            terms.advance();
            let t = terms.term();
            if steps == 0 {
                first_tail = t.abs();
            }
            kahan_add(&mut tail, &mut tcomp, t);
            steps += 1;
            let scale = (full - tail).abs().max(T::min_positive_value());
            if t.abs() <= T::epsilon() * c::<T>(1e-2) * scale || steps > TAIL_CAP {
                break;
            }
        }
        if steps <= TAIL_CAP {
            value = full - tail;
            method = EvalMethod::ContourMinusTail;
            let scale = value.abs().max(T::min_positive_value());
            rel = T::epsilon() * c::<T>(1e3) * full.abs().max(scale) / scale + T::epsilon() * first_tail / scale;
        }
    }
    Ok(SeriesValue {
        value,
        terms_used: n + 1,
        last_term: last,
        peak_term: peak,
        truncation_warning: last > rel_tol * value.abs(),
        outside_safe_range,
        rel_error_estimate: rel,
        method,
    })
}
