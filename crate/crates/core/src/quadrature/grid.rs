use std::sync::Arc;

use crate::error::{Error, Result};
use crate::real::{c, Real};

/// Strictly increasing time nodes starting at 0.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid<T> {
    nodes: Vec<T>,
    step: Option<T>,
}

impl<T: Real> TimeGrid<T> {
    pub fn new(nodes: Vec<T>) -> Result<Self> {
        if nodes.len() < 2 {
            return Err(Error::GridTooCoarse(nodes.len(), 2));
        }
        if nodes[0] != T::zero() {
            return Err(Error::Domain(format!("grid must start at 0, got {}", nodes[0])));
        }
        if nodes.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("non-finite grid node".into()));
        }
        if nodes.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Domain("grid nodes must be strictly increasing".into()));
        }
        let step = detect_step(&nodes);
        Ok(Self { nodes, step })
    }

    /// `n` equal subintervals of `[0, t_max]`.
    pub fn uniform(t_max: T, n: usize) -> Result<Self> {
        check_span(t_max, n)?;
        let nf = T::from_usize_lossy(n);
        let nodes = (0..=n).map(|j| t_max * T::from_usize_lossy(j) / nf).collect();
        Ok(Self { nodes, step: Some(t_max / nf) })
    }

    /// Nodes `t_max (j/n)^r`, clustered at the origin for `r > 1`.
    pub fn graded(t_max: T, n: usize, r: T) -> Result<Self> {
        check_span(t_max, n)?;
        if !(r >= T::one()) {
            return Err(Error::Domain(format!("grading exponent must be >= 1, got {r}")));
        }
        if r == T::one() {
            return Self::uniform(t_max, n);
        }
        let nf = T::from_usize_lossy(n);
        let mut nodes: Vec<T> = (0..=n).map(|j| t_max * (T::from_usize_lossy(j) / nf).powf(r)).collect();
        nodes[n] = t_max;
        Self::new(nodes)
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn t_max(&self) -> T {
        self.nodes[self.nodes.len() - 1]
    }

    /// Spacing of a uniform grid.
    pub fn step(&self) -> Option<T> {
        self.step
    }

    pub fn is_uniform(&self) -> bool {
        self.step.is_some()
    }

    pub fn into_shared(self) -> Arc<Self> {
        Arc::new(self)
    }
}

fn check_span<T: Real>(t_max: T, n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::GridTooCoarse(n + 1, 2));
    }
    if !(t_max > T::zero()) || !t_max.is_finite() {
        return Err(Error::Domain(format!("grid length must be positive, got {t_max}")));
    }
    Ok(())
}

fn detect_step<T: Real>(nodes: &[T]) -> Option<T> {
    let n = nodes.len() - 1;
    let h = nodes[n] / T::from_usize_lossy(n);
    let tol = c::<T>(1e-9) * h;
    nodes.iter().enumerate().all(|(j, &x)| (x - h * T::from_usize_lossy(j)).abs() <= tol).then_some(h)
}
