use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::forward_solver::{solve_mode, solve_mode_derivatives, Derivative, ProblemSpec};
use crate::quadrature::{Origin, SampledFunction, TimeGrid};
use crate::special_functions::TruncationPolicy;

const NA: &str = "NA";

/// A single-mode trace in CSV form: header `t,u[,du,ddu]`, one row per
/// node, `NA` where the value at `t = 0` is singular.
///
/// Missing values are stored as NaN.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceFile {
    pub path: Option<PathBuf>,
    pub t: Vec<f64>,
    pub u: Vec<f64>,
    pub du: Option<Vec<f64>>,
    pub ddu: Option<Vec<f64>>,
}

fn field(s: &str, row: usize, col: &str) -> Result<f64> {
    let s = s.trim();
    if s == NA {
        if row == 0 {
            return Ok(f64::NAN);
        }
        return Err(Error::Parse(format!("row {}: `NA` in column {col} is only allowed at t = 0", row + 1)));
    }
    let v: f64 = s.parse().map_err(|_| Error::Parse(format!("row {}: bad number `{s}` in column {col}", row + 1)))?;
    if !v.is_finite() {
        return Err(Error::Parse(format!("row {}: non-finite value in column {col}", row + 1)));
    }
    Ok(v)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

fn fmt(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        NA.to_string()
    }
}

impl TraceFile {
    pub fn new(t: Vec<f64>, u: Vec<f64>, du: Option<Vec<f64>>, ddu: Option<Vec<f64>>) -> Result<Self> {
        let tf = Self { path: None, t, u, du, ddu };
        tf.validate()?;
        Ok(tf)
    }

    fn validate(&self) -> Result<()> {
        let n = self.t.len();
        if n < 2 {
            return Err(Error::Parse(format!("trace needs at least 2 rows, got {n}")));
        }
        if self.t[0] != 0.0 {
            return Err(Error::Parse(format!("t must start at 0, got {}", self.t[0])));
        }
        if let Some(k) = self.t.windows(2).position(|w| !(w[1] > w[0])) {
            return Err(Error::Parse(format!("t is not strictly increasing at row {}", k + 2)));
        }
        let cols = [Some(&self.u), self.du.as_ref(), self.ddu.as_ref()];
        for c in cols.into_iter().flatten() {
            if c.len() != n {
                return Err(Error::Parse("columns differ in length".into()));
            }
            if c.iter().skip(1).any(|v| !v.is_finite()) {
                return Err(Error::Parse("non-finite value after the first row".into()));
            }
        }
        if self.ddu.is_some() && self.du.is_none() {
            return Err(Error::Parse("ddu column requires du".into()));
        }
        Ok(())
    }

    pub fn parse<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let header: Vec<String> = rdr.headers().map_err(csv_err)?.iter().map(str::to_string).collect();
        let expected = ["t", "u", "du", "ddu"];
        if header.len() < 2 || header.len() > 4 || header.iter().zip(expected).any(|(h, e)| h != e) {
            return Err(Error::Parse(format!("header must be t,u[,du,ddu], got {}", header.join(","))));
        }
        let width = header.len();
        let mut cols: Vec<Vec<f64>> = vec![Vec::new(); width];
        for (row, rec) in rdr.records().enumerate() {
            let rec = rec.map_err(csv_err)?;
            if rec.len() != width {
                return Err(Error::Parse(format!("row {}: expected {width} fields, got {}", row + 1, rec.len())));
            }
            for (j, s) in rec.iter().enumerate() {
                let v = field(s, row, expected[j])?;
                if j == 0 && v.is_nan() {
                    return Err(Error::Parse("t cannot be NA".into()));
                }
                cols[j].push(v);
            }
        }
        let mut it = cols.into_iter();
        let t = it.next().unwrap_or_default();
        let u = it.next().unwrap_or_default();
        Self::new(t, u, it.next(), it.next())
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let mut tf = Self::parse(std::io::BufReader::new(file))?;
        tf.path = Some(path.to_path_buf());
        Ok(tf)
    }

    pub fn write_to<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let mut header = vec!["t", "u"];
        if self.du.is_some() {
            header.push("du");
        }
        if self.ddu.is_some() {
            header.push("ddu");
        }
        w.write_record(&header).map_err(csv_err)?;
        for j in 0..self.t.len() {
            let mut rec = vec![fmt(self.t[j]), fmt(self.u[j])];
            for c in [&self.du, &self.ddu].into_iter().flatten() {
                rec.push(fmt(c[j]));
            }
            w.write_record(&rec).map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let file = std::fs::File::create(path.as_ref())?;
        self.write_to(std::io::BufWriter::new(file))
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_to(&mut buf)?;
        String::from_utf8(buf).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn grid(&self) -> Result<Arc<TimeGrid<f64>>> {
        Ok(TimeGrid::new(self.t.clone())?.into_shared())
    }

    /// Exponent `p` of `u ~ C t^p` near 0, or `None` when `u(0)` is
    /// finite. Local slopes `ln(u_2j / u_j) / ln(t_2j / t_j)` over
    /// `j = 1, 2, 4, ...` are extrapolated to `t -> 0`.
    pub fn singular_exponent(&self) -> Option<f64> {
        if self.u[0].is_finite() {
            return None;
        }
        let n = self.t.len() - 1;
        let mut slopes = Vec::new();
        let mut j = 1;
        while 2 * j <= n && 2 * j <= 256 {
            slopes.push((self.u[2 * j] / self.u[j]).ln() / (self.t[2 * j] / self.t[j]).ln());
            j *= 2;
        }
        slopes.reverse();
        let p = match slopes.len() {
            0 => f64::NAN,
            1 | 2 => *slopes.last().unwrap_or(&f64::NAN),
            _ => crate::estimators::richardson(&slopes).unwrap_or(slopes[slopes.len() - 1]),
        };
        Some(if p.is_finite() { p.clamp(-1.0 + 1e-6, -1e-6) } else { -0.5 })
    }

    /// `u` on `grid`, tagged singular when its first entry is `NA`.
    pub fn u_sampled(&self, grid: &Arc<TimeGrid<f64>>) -> Result<SampledFunction<f64>> {
        match self.singular_exponent() {
            Some(p) => SampledFunction::singular(grid.clone(), self.u.clone(), p),
            None => SampledFunction::new(grid.clone(), self.u.clone()),
        }
    }

    pub fn du_sampled(&self, grid: &Arc<TimeGrid<f64>>) -> Result<Option<SampledFunction<f64>>> {
        let Some(du) = &self.du else { return Ok(None) };
        let origin = if du[0].is_finite() { Origin::Regular } else { Origin::Undefined };
        SampledFunction::with_origin(grid.clone(), du.clone(), origin).map(Some)
    }
}

/// Trace of mode 0 of `problem` on `grid`, with `du` (and `ddu` in the
/// super regime) for Caputo problems.
pub fn run_solve(
    problem: &ProblemSpec<f64>,
    grid: &TimeGrid<f64>,
    policy: &TruncationPolicy<f64>,
) -> Result<TraceFile> {
    let mode = problem.operator().modes().first().ok_or_else(|| Error::MissingDatum("no spectral mode".into()))?;
    let u = solve_mode(problem, mode, grid, policy)?;
    let (du, ddu) = match problem.derivative() {
        Derivative::Caputo => {
            let (d1, d2) = solve_mode_derivatives(problem, mode, grid, policy)?;
            (Some(d1), d2)
        }
        Derivative::RiemannLiouville => (None, None),
    };
    TraceFile::new(grid.nodes().to_vec(), u, du, ddu)
}
