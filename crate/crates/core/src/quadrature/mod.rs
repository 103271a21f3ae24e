//! Time grids, sampled functions, product-integration convolutions and
//! numerical fractional derivatives.

mod convolution;
mod derivative;
mod grid;
mod kernel;
mod sampled;

pub use convolution::{convolve, convolve_at};
pub use derivative::{caputo_derivative, caputo_derivative_corrected, rl_derivative, Regime};
pub use grid::TimeGrid;
pub use kernel::{convolve_kernel_g, kernel_g_at};
pub use sampled::{Origin, SampledFunction};
