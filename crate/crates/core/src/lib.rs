//! Numerics for fractional evolution equations in spectral coordinates:
//! Mittag-Leffler resolvents, product-integration quadrature, closed-form
//! mode solutions and identification of the fractional order from data.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod estimators;
pub mod experiments;
pub mod forward_solver;
pub mod quadrature;
pub mod real;
pub mod resolvent;
pub mod special_functions;

pub use error::{Error, Result};
pub use real::Real;

/// Double-precision instances of the generic types.
pub type Grid = quadrature::TimeGrid<f64>;
pub type Sampled = quadrature::SampledFunction<f64>;
pub type Mode = resolvent::SpectralMode<f64>;
pub type Operator = resolvent::SpectralOperator<f64>;
pub type Problem = forward_solver::ProblemSpec<f64>;
pub type Trace = forward_solver::SolutionTrace<f64>;
pub type Policy = special_functions::TruncationPolicy<f64>;
pub type Request = estimators::EstimationRequest<f64>;
pub type Estimate = estimators::EstimateResult<f64>;

/// Single-precision instances.
pub type Grid32 = quadrature::TimeGrid<f32>;
pub type Sampled32 = quadrature::SampledFunction<f32>;
pub type Mode32 = resolvent::SpectralMode<f32>;
pub type Problem32 = forward_solver::ProblemSpec<f32>;
pub type Policy32 = special_functions::TruncationPolicy<f32>;
