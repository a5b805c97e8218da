//! Spin factors `J(V) = V ⊕ R` and their Minkowski metric.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A pair `(v, α)`: spatial vector and time scalar.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinFactorElement {
    pub space: Vec<f64>,
    pub time: f64,
}

impl SpinFactorElement {
    pub fn new(space: Vec<f64>, time: f64) -> Self {
        SpinFactorElement { space, time }
    }

    /// The unit `(0, 1)`.
    pub fn unit(dim: usize) -> Self {
        SpinFactorElement {
            space: vec![0.0; dim],
            time: 1.0,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.len()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    /// `(v,α)∘(w,β) = (αw + βv, <v,w> + αβ)`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let space = self
            .space
            .iter()
            .zip(&other.space)
            .map(|(v, w)| self.time * w + other.time * v)
            .collect();
        Ok(SpinFactorElement {
            space,
            time: dot(&self.space, &other.space) + self.time * other.time,
        })
    }

    /// Signature `(n, 1)` form `<v,w> − αβ`.
    pub fn minkowski(&self, other: &Self) -> Result<f64> {
        self.check_dim(other)?;
        Ok(dot(&self.space, &other.space) - self.time * other.time)
    }

    /// Nonzero with vanishing Minkowski square, up to `tol` relative to the
    /// squared size.
    pub fn is_lightlike(&self, tol: f64) -> bool {
        let size = dot(&self.space, &self.space) + self.time * self.time;
        if size == 0.0 {
            return false;
        }
        let q = dot(&self.space, &self.space) - self.time * self.time;
        q.abs() <= tol * size
    }

    pub fn max_diff(&self, other: &Self) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self
            .space
            .iter()
            .zip(&other.space)
            .map(|(a, b)| (a - b).abs())
            .fold((self.time - other.time).abs(), f64::max))
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn spin_product(s: &SpinFactorElement, t: &SpinFactorElement) -> Result<SpinFactorElement> {
    s.product(t)
}

pub fn minkowski_inner(s: &SpinFactorElement, t: &SpinFactorElement) -> Result<f64> {
    s.minkowski(t)
}
