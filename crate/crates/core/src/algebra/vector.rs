use std::ops::Index;

use super::scalar::{self, conj};
use crate::error::{mismatch, Error, Result};

/// Dense column vector over the max-times semiring.
#[derive(Debug, Clone, PartialEq)]
pub struct TropVector {
    entries: Vec<f64>,
}

impl TropVector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        if let Some((i, &v)) = entries.iter().enumerate().find(|(_, v)| !scalar::is_valid(**v)) {
            return Err(Error::InvalidEntry {
                row: i,
                col: 0,
                value: v,
            });
        }
        Ok(TropVector { entries })
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<f64>) -> Self {
        debug_assert!(!entries.is_empty());
        TropVector { entries }
    }

    /// The all-ones vector `1`.
    pub fn ones(dim: usize) -> Self {
        TropVector::from_vec_unchecked(vec![1.0; dim])
    }

    /// The unit vector `e_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut e = vec![0.0; dim];
        e[i] = 1.0;
        TropVector::from_vec_unchecked(e)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.entries
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.entries.iter().copied()
    }

    pub fn is_positive(&self) -> bool {
        self.entries.iter().all(|&v| v > 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0.0)
    }

    pub fn max(&self) -> f64 {
        self.iter().fold(0.0, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.iter().fold(f64::INFINITY, f64::min)
    }

    pub fn scale(&self, c: f64) -> Self {
        TropVector::from_vec_unchecked(self.iter().map(|v| v * c).collect())
    }

    /// Entrywise maximum.
    pub fn oplus(&self, other: &TropVector) -> Result<Self> {
        self.check_dim(other)?;
        Ok(TropVector::from_vec_unchecked(
            self.iter().zip(other.iter()).map(|(a, b)| a.max(b)).collect(),
        ))
    }

    /// Entries of the row vector `x⁻` (reciprocals, zeros kept).
    pub fn conjugate(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(TropVector::from_vec_unchecked(self.iter().map(conj).collect()))
    }

    /// Tropical inner product `x⁻ y`-style pairing: `max_i self_i · other_i`.
    pub fn dot(&self, other: &TropVector) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self
            .iter()
            .zip(other.iter())
            .map(|(a, b)| a * b)
            .fold(0.0, f64::max))
    }

    /// Rescales so the largest entry equals one.
    pub fn normalize_max(&self) -> Result<Self> {
        let m = self.max();
        if m == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(self.scale(1.0 / m))
    }

    pub(crate) fn check_dim(&self, other: &TropVector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(mismatch(
                format!("vector of dim {}", self.dim()),
                format!("dim {}", other.dim()),
            ));
        }
        Ok(())
    }
}

impl Index<usize> for TropVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.entries[i]
    }
}

impl TryFrom<Vec<f64>> for TropVector {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        TropVector::new(v)
    }
}

impl<const N: usize> TryFrom<[f64; N]> for TropVector {
    type Error = Error;

    fn try_from(v: [f64; N]) -> Result<Self> {
        TropVector::new(v.to_vec())
    }
}
