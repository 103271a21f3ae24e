use std::sync::Arc;

use crate::error::{Error, Result};
use crate::real::Real;

use super::TimeGrid;

/// Behaviour of a sampled function at `t = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Origin<T> {
    /// `values[0]` is a finite sample.
    Regular,
    /// `f(s) ~ C s^p` with `-1 < p < 0`; `values[0]` is ignored and the
    /// first cell is modelled as `f(s_1) (s / s_1)^p`.
    Singular(T),
    /// Nothing is known at 0 (e.g. a numerical derivative); `values[0]` is NaN.
    Undefined,
}

/// Values of a function on a [`TimeGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction<T> {
    grid: Arc<TimeGrid<T>>,
    values: Vec<T>,
    origin: Origin<T>,
}

impl<T: Real> SampledFunction<T> {
    pub fn new(grid: Arc<TimeGrid<T>>, values: Vec<T>) -> Result<Self> {
        Self::with_origin(grid, values, Origin::Regular)
    }

    /// Samples of a function with an integrable `s^p` singularity at 0.
    pub fn singular(grid: Arc<TimeGrid<T>>, mut values: Vec<T>, p: T) -> Result<Self> {
        if let Some(v) = values.first_mut() {
            *v = T::nan();
        }
        Self::with_origin(grid, values, Origin::Singular(p))
    }

    pub fn with_origin(grid: Arc<TimeGrid<T>>, values: Vec<T>, origin: Origin<T>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::LengthMismatch { expected: grid.len(), got: values.len() });
        }
        if let Origin::Singular(p) = origin {
            if !(p > -T::one()) || !(p < T::zero()) {
                return Err(Error::Domain(format!("singular exponent must lie in (-1, 0), got {p}")));
            }
        }
        let skip = usize::from(!matches!(origin, Origin::Regular));
        if values.iter().skip(skip).any(|v| !v.is_finite()) {
            return Err(Error::Domain("sampled values must be finite".into()));
        }
        Ok(Self { grid, values, origin })
    }

    /// Sample `f` at every node; `f` is not called at 0 unless `origin` is regular.
    pub fn from_fn(grid: Arc<TimeGrid<T>>, origin: Origin<T>, mut f: impl FnMut(T) -> Result<T>) -> Result<Self> {
        let mut values = Vec::with_capacity(grid.len());
        for (j, &t) in grid.nodes().iter().enumerate() {
            if j == 0 && !matches!(origin, Origin::Regular) {
                values.push(T::nan());
            } else {
                values.push(f(t)?);
            }
        }
        Self::with_origin(grid, values, origin)
    }

    pub fn grid(&self) -> &Arc<TimeGrid<T>> {
        &self.grid
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn origin(&self) -> Origin<T> {
        self.origin
    }

    pub fn singular_exponent(&self) -> Option<T> {
        match self.origin {
            Origin::Singular(p) => Some(p),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at the last node.
    pub fn last(&self) -> T {
        self.values[self.values.len() - 1]
    }

    pub fn same_grid(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.grid, &other.grid) || self.grid.nodes() == other.grid.nodes()
    }

    pub(crate) fn require_defined(&self) -> Result<()> {
        match self.origin {
            Origin::Undefined => Err(Error::Domain("sampled function has no usable value at t = 0".into())),
            _ => Ok(()),
        }
    }

    /// Pointwise linear combination `a*self + b*other` on a shared grid.
    pub fn combine(&self, a: T, other: &Self, b: T) -> Result<Self> {
        if !self.same_grid(other) {
            return Err(Error::GridMismatch);
        }
        let origin = match (self.origin, other.origin) {
            (Origin::Regular, o) | (o, Origin::Regular) => o,
            (Origin::Singular(p), Origin::Singular(q)) => Origin::Singular(p.min(q)),
            _ => Origin::Undefined,
        };
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .enumerate()
            .map(|(j, (&x, &y))| if j == 0 && origin != Origin::Regular { T::nan() } else { a * x + b * y })
            .collect();
        Self::with_origin(self.grid.clone(), values, origin)
    }

    pub fn scale(&self, a: T) -> Self {
        let values = self.values.iter().map(|&v| a * v).collect();
        Self { grid: self.grid.clone(), values, origin: self.origin }
    }
}
