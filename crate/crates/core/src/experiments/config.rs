use std::str::FromStr;

use crate::error::{Error, Result};
use crate::estimators::Theorem;

use super::table::TableId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Csv,
    #[default]
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "text" | "txt" => Ok(OutputFormat::Text),
            other => Err(Error::Parse(format!("unknown output format `{other}`"))),
        }
    }
}

/// Parameter sweep for [`run_table`](super::run_table).
///
/// With `table_id` set, the built-in presets replace the lists, the data
/// and the truncation. Without it, `theorem` defaults to T51 or T61
/// according to the regime of the first `alpha`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub table_id: Option<TableId>,
    pub theorem: Option<Theorem>,
    pub alpha_list: Vec<f64>,
    pub t_list: Vec<f64>,
    pub lambda_list: Vec<f64>,
    /// Cancels from every fixed-time ratio; kept for completeness.
    pub u0: f64,
    pub u1: Option<f64>,
    /// Fixed number of series terms; `None` sums to convergence.
    pub truncation: Option<usize>,
    /// Cells of the quadrature grid for T52 and T53.
    pub grid_size: usize,
    pub output_format: OutputFormat,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            table_id: None,
            theorem: None,
            alpha_list: Vec::new(),
            t_list: Vec::new(),
            lambda_list: Vec::new(),
            u0: 1.0,
            u1: None,
            truncation: None,
            grid_size: crate::estimators::QUADRATURE_CELLS,
            output_format: OutputFormat::Text,
        }
    }
}

fn list(key: &str, v: &str) -> Result<Vec<f64>> {
    v.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|e| Error::Parse(format!("{key}: `{s}`: {e}"))))
        .collect()
}

fn scalar<T: FromStr>(key: &str, v: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    v.parse::<T>().map_err(|e| Error::Parse(format!("{key}: `{v}`: {e}")))
}

impl ExperimentConfig {
    /// The built-in sweep for one table.
    pub fn preset(id: TableId) -> Self {
        let (alphas, ts, lambdas, u1, n): (&[f64], &[f64], &[f64], Option<f64>, usize) = match id.get() {
            1 => (&[0.2, 0.4], &[0.1, 1.0, 10.0, 100.0], &[4.0, 9.0], None, 50),
            2 => (&[1.4, 1.8], &[0.5, 1.0, 5.0], &[1.0, 4.0], Some(2.0), 100),
            3 => (&[0.4, 0.7], &[0.1, 0.5, 1.0], &[1.0, 4.0], None, 1000),
            _ => (&[1.3, 1.7], &[0.1, 0.5, 1.0], &[1.0, 4.0], Some(2.0), 1000),
        };
        Self {
            table_id: Some(id),
            theorem: Some(id.theorem()),
            alpha_list: alphas.to_vec(),
            t_list: ts.to_vec(),
            lambda_list: lambdas.to_vec(),
            u0: 1.0,
            u1,
            truncation: Some(n),
            ..Self::default()
        }
    }

    /// Flat `key = value` text; `#` starts a comment, lists are
    /// comma-separated.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) =
                line.split_once('=').ok_or_else(|| Error::Parse(format!("line {}: expected key=value", no + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "table_id" => cfg.table_id = Some(value.parse()?),
                "theorem" => cfg.theorem = Some(value.parse()?),
                "alpha_list" => cfg.alpha_list = list(key, value)?,
                "T_list" => cfg.t_list = list(key, value)?,
                "lambda_list" => cfg.lambda_list = list(key, value)?,
                "u0" => cfg.u0 = scalar(key, value)?,
                "u1" => cfg.u1 = Some(scalar(key, value)?),
                "truncation" => cfg.truncation = Some(scalar(key, value)?),
                "grid_size" => cfg.grid_size = scalar(key, value)?,
                "output_format" => cfg.output_format = value.parse()?,
                other => return Err(Error::Parse(format!("line {}: unknown key `{other}`", no + 1))),
            }
        }
        Ok(cfg)
    }

    /// Apply the table preset, if any, and validate.
    pub fn resolved(&self) -> Result<Self> {
        let cfg = match self.table_id {
            Some(id) => Self { output_format: self.output_format, grid_size: self.grid_size, ..Self::preset(id) },
            None => self.clone(),
        };
        for (name, l) in [("alpha_list", &cfg.alpha_list), ("T_list", &cfg.t_list), ("lambda_list", &cfg.lambda_list)] {
            if l.is_empty() {
                return Err(Error::MissingDatum(format!("{name} is empty")));
            }
        }
        Ok(cfg)
    }
}
