//! Reproducible experiments and file formats used by the command-line tool.
//!
//! Everything here works in `f64`: it is the I/O edge of the crate.

mod config;
mod estimate;
mod table;
mod trace;

pub use config::{ExperimentConfig, OutputFormat};
pub use estimate::{run_estimate, small_time_data_from_trace, EstimateParams, EstimateReport};
pub use table::{printed_values, run_table, RowTolerance, TableId, TableReport, TableRow};
pub use trace::{run_solve, TraceFile};
