//! Classic weighted-sum AHP with principal (Perron) eigenvectors, kept as a
//! point of comparison for the tropical rankings.

use crate::algebra::{TropMatrix, TropVector};
use crate::error::{Error, Result};

use super::problem::DecisionProblem;
use super::rank::{rank, Ranking};

const MAX_ITERATIONS: usize = 10_000;
const RESIDUAL: f64 = 1e-12;

/// Perron vector of a positive matrix by power iteration, normalized to sum one.
pub fn perron_vector(m: &TropMatrix) -> Result<TropVector> {
    m.check_square()?;
    if !m.is_positive() {
        return Err(Error::NotPositive { what: "matrix" });
    }
    let n = m.rows();
    let mut x = vec![1.0 / n as f64; n];
    for _ in 0..MAX_ITERATIONS {
        let mut y: Vec<f64> = (0..n)
            .map(|i| m.row(i).iter().zip(&x).map(|(a, b)| a * b).sum())
            .collect();
        let s: f64 = y.iter().sum();
        y.iter_mut().for_each(|v| *v /= s);
        let residual = y.iter().zip(&x).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        x = y;
        if residual < RESIDUAL {
            return TropVector::new(x);
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
    })
}

/// Scores `x = Σ_k w_k y_k` with Perron weights `w` of the criteria matrix and
/// Perron priorities `y_k` of each alternative matrix.
pub fn baseline_scores(problem: &DecisionProblem) -> Result<TropVector> {
    let w = perron_vector(problem.criteria())?;
    let n = problem.num_alternatives();
    let mut x = vec![0.0; n];
    for (k, a) in problem.alternatives().iter().enumerate() {
        let y = perron_vector(a)?;
        for (xi, yi) in x.iter_mut().zip(y.iter()) {
            *xi += w[k] * yi;
        }
    }
    TropVector::new(x)
}

pub fn classic_ahp_baseline(problem: &DecisionProblem, tie_tol: f64) -> Result<Ranking> {
    rank(&baseline_scores(problem)?, tie_tol)
}
