//! Max-times semiring scalars, vectors and matrices.

mod matrix;
pub mod scalar;
mod vector;

pub use matrix::TropMatrix;
pub use scalar::{conj, oplus, otimes};
pub use vector::TropVector;

use crate::error::{Error, Result};
use crate::opt::SolutionCone;
use crate::tolerance::Tolerance;

/// All positive solutions of `Ax ≤ x`: the tropical column span of `A*`.
pub fn solve_subeigen(a: &TropMatrix, tol: &Tolerance) -> Result<SolutionCone> {
    let tr = a.tr_sum()?;
    if !tol.le(tr, 1.0) {
        return Err(Error::NoPositiveSolution { tr });
    }
    Ok(SolutionCone::new(tr, a.kleene_star_unchecked()))
}
