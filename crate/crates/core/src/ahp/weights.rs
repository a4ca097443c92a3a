use crate::algebra::{TropMatrix, TropVector};
use crate::error::{Error, Result};
use crate::geom::reduce_generators;
use crate::opt::{min_pseudo_quadratic, weighted_max};
use crate::tolerance::Tolerance;

use super::problem::validate_reciprocal;

/// All log-Chebyshev optimal criterion weight vectors: the span of the
/// essential columns of `(λ⁻¹C)*`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightCone {
    pub lambda_c: f64,
    /// `m × d` matrix of essential generators, each normalized to max entry one.
    pub generators: TropMatrix,
    pub essential_dim: usize,
}

impl WeightCone {
    /// Weight vector `G v` for a parameter vector `v` over the generators.
    pub fn weights(&self, v: &[f64]) -> Result<TropVector> {
        self.generators.mul_vec(&TropVector::new(v.to_vec())?)
    }
}

pub fn derive_weight_cone(c: &TropMatrix, tol: &Tolerance) -> Result<WeightCone> {
    validate_reciprocal(c, tol).map_err(|violation| Error::NotReciprocal {
        matrix: "criteria".into(),
        violation,
    })?;
    let cone = min_pseudo_quadratic(c, tol)?;
    let reduced = reduce_generators(&cone.generators, tol)?;
    let cols: Vec<TropVector> = reduced
        .columns()
        .map(|g| g.normalize_max())
        .collect::<Result<_>>()?;
    Ok(WeightCone {
        lambda_c: cone.optimum,
        essential_dim: cols.len(),
        generators: TropMatrix::from_columns(&cols)?,
    })
}

/// `b_ij = max_k w_k a_ij^(k)`.
pub fn assemble_b(w: &TropVector, matrices: &[TropMatrix]) -> Result<TropMatrix> {
    weighted_max(matrices, w.as_slice())
}
