//! Gamma function, power kernels and Mittag-Leffler series.
//!
//! Partial sums are computed by a Gamma-ratio recurrence with compensated
//! summation. When a partial sum sits many orders of magnitude below its
//! largest term (small `alpha`, large `|z|`), the digits are recovered from
//! a contour-integral value of the full series minus the (benign) tail.

mod contour;
mod gamma;
mod series;

pub use gamma::{g_kernel, gamma_fn, ln_gamma, ln_gamma_ratio, rgamma};
pub use series::{
    mittag_leffler, prabhakar_ml2, EvalMethod, MLOrder, SeriesKind, SeriesValue, TruncationMode, TruncationPolicy,
};

pub(crate) use gamma::g_unchecked;
pub(crate) use series::series_eval;
