//! Tropical optimization problems whose complete solution sets are tropical
//! column spans.
//!
//! Every solver returns a [`SolutionCone`]: the optimal value together with a
//! generator matrix `G` such that the positive solutions are exactly the
//! vectors `G u` with `u > 0`.

use crate::algebra::{TropMatrix, TropVector};
use crate::error::{Error, Result};
use crate::geom::dedup_collinear;
use crate::tolerance::Tolerance;

/// Zero-based index pair `(k, l)` attaining the maximum in the ratio problem:
/// `k` indexes a column of the matrix and `l` a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WitnessPair {
    pub k: usize,
    pub l: usize,
}

/// Optimal value plus generators of the full solution set.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionCone {
    pub optimum: f64,
    pub generators: TropMatrix,
    /// Index pairs attaining the maximum (maximization problems only).
    pub witness_pairs: Vec<WitnessPair>,
    /// Generator block of each witness pair, in the same order.
    pub blocks: Vec<TropMatrix>,
}

impl SolutionCone {
    pub(crate) fn new(optimum: f64, generators: TropMatrix) -> Self {
        SolutionCone {
            optimum,
            generators,
            witness_pairs: Vec::new(),
            blocks: Vec::new(),
        }
    }

    /// The solution `G u` for a parameter vector `u`.
    pub fn point(&self, u: &TropVector) -> Result<TropVector> {
        self.generators.mul_vec(u)
    }
}

/// Result of the weighted problem: the cone and the combined matrix `B`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedSolution {
    pub cone: SolutionCone,
    pub combined: TropMatrix,
}

/// `min_x x⁻Ax`: optimum `λ`, solutions `(λ⁻¹A)* u`.
pub fn min_pseudo_quadratic(a: &TropMatrix, tol: &Tolerance) -> Result<SolutionCone> {
    let lambda = a.spectral_radius()?;
    if lambda == 0.0 {
        return Err(Error::ZeroSpectralRadius);
    }
    let star = a.scale(1.0 / lambda).kleene_star(tol)?;
    Ok(SolutionCone::new(lambda, star))
}

/// `min_x ⊕_k w_k x⁻A_k x`, reduced to [`min_pseudo_quadratic`] on
/// `B = ⊕_k w_k A_k`.
pub fn min_weighted_pseudo_quadratic(
    matrices: &[TropMatrix],
    weights: &[f64],
    tol: &Tolerance,
) -> Result<WeightedSolution> {
    let combined = weighted_max(matrices, weights)?;
    let cone = min_pseudo_quadratic(&combined, tol)?;
    Ok(WeightedSolution { cone, combined })
}

pub(crate) fn weighted_max(matrices: &[TropMatrix], weights: &[f64]) -> Result<TropMatrix> {
    let first = matrices.first().ok_or(Error::Empty)?;
    if matrices.len() != weights.len() {
        return Err(crate::error::mismatch(
            format!("{} weights", matrices.len()),
            weights.len(),
        ));
    }
    if weights.iter().any(|&w| !(w > 0.0 && w.is_finite())) {
        return Err(Error::NotPositive { what: "weights" });
    }
    first.check_square()?;
    let mut acc = first.scale(weights[0]);
    for (a, &w) in matrices.iter().zip(weights).skip(1) {
        acc = acc.oplus(&a.scale(w))?;
    }
    Ok(acc)
}

/// `max_x q⁻x (Ax)⁻ p` for a positive `(m×n)`-matrix `A`.
///
/// The optimum is `Δ = q⁻A⁻p`. The solution set is the union over all index
/// pairs `(k, l)` with `q_k⁻¹ a_lk⁻¹ p_l = Δ` of the spans of
/// `I ⊕ A_lk⁻ A`, where `A_lk` keeps only the entry `a_lk`.
pub fn max_ratio(a: &TropMatrix, p: &TropVector, q: &TropVector, tol: &Tolerance) -> Result<SolutionCone> {
    if !a.is_positive() {
        return Err(Error::NotPositive { what: "matrix A" });
    }
    if p.dim() != a.rows() {
        return Err(crate::error::mismatch(format!("p of dim {}", a.rows()), p.dim()));
    }
    if q.dim() != a.cols() {
        return Err(crate::error::mismatch(format!("q of dim {}", a.cols()), q.dim()));
    }
    if p.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !q.is_positive() {
        return Err(Error::NotPositive { what: "vector q" });
    }
    // rows with p_l = 0 never contribute and are dropped together with p_l
    let rows: Vec<usize> = (0..a.rows()).filter(|&l| p[l] > 0.0).collect();

    let ratio = |k: usize, l: usize| p[l] / (q[k] * a.get(l, k));
    let delta = rows
        .iter()
        .flat_map(|&l| (0..a.cols()).map(move |k| ratio(k, l)))
        .fold(0.0, f64::max);

    let mut pairs = Vec::new();
    for k in 0..a.cols() {
        for &l in &rows {
            if tol.eq(ratio(k, l), delta) {
                pairs.push(WitnessPair { k, l });
            }
        }
    }

    let blocks: Vec<TropMatrix> = pairs.iter().map(|&wp| ratio_block(a, wp)).collect();
    let generators = concat_dedup(&blocks, tol)?;
    Ok(SolutionCone {
        optimum: delta,
        generators,
        witness_pairs: pairs,
        blocks,
    })
}

/// `I ⊕ A_lk⁻ A`: the identity with row `k` replaced by `a_l· / a_lk`.
fn ratio_block(a: &TropMatrix, wp: WitnessPair) -> TropMatrix {
    let n = a.cols();
    let pivot = a.get(wp.l, wp.k);
    TropMatrix::from_fn(n, n, |i, j| {
        let id: f64 = if i == j { 1.0 } else { 0.0 };
        if i == wp.k {
            id.max(a.get(wp.l, j) / pivot)
        } else {
            id
        }
    })
}

fn concat_dedup(blocks: &[TropMatrix], tol: &Tolerance) -> Result<TropMatrix> {
    let cols: Vec<TropVector> = blocks.iter().flat_map(|b| b.columns()).collect();
    TropMatrix::from_columns(&dedup_collinear(cols, tol))
}

/// Maximizes the Hilbert seminorm `1ᵀx x⁻1` over the column span of a positive
/// matrix `S`.
///
/// This is [`max_ratio`] with `q⁻ = 1ᵀS` and `p = 1`, giving
/// `Δ = 1ᵀ S S⁻ 1`. The returned generators and blocks are already mapped into
/// the span, i.e. they are columns of `S (I ⊕ S_lk⁻ S)`.
pub fn max_hilbert_over_span(s: &TropMatrix, tol: &Tolerance) -> Result<SolutionCone> {
    if !s.is_positive() {
        return Err(Error::NotPositive { what: "matrix S" });
    }
    let q = TropVector::new(s.columns().map(|c| 1.0 / c.max()).collect())?;
    let p = TropVector::ones(s.rows());
    let raw = max_ratio(s, &p, &q, tol)?;

    let mut blocks = Vec::with_capacity(raw.blocks.len());
    for b in &raw.blocks {
        let mapped = s.mat_mul(b)?;
        blocks.push(TropMatrix::from_columns(&dedup_collinear(
            mapped.columns().collect(),
            tol,
        ))?);
    }
    let generators = concat_dedup(&blocks, tol)?;
    Ok(SolutionCone {
        optimum: raw.optimum,
        generators,
        witness_pairs: raw.witness_pairs,
        blocks,
    })
}

/// `min_x q⁻x x⁻p` subject to `Ax ≤ x`, for `Tr(A) ≤ 1`.
///
/// Optimum `δ = q⁻A*p`; solutions `(δ⁻¹ p q⁻ ⊕ A)* u`.
pub fn min_hilbert_constrained(
    a: &TropMatrix,
    p: &TropVector,
    q: &TropVector,
    tol: &Tolerance,
) -> Result<SolutionCone> {
    let star = a.kleene_star(tol)?;
    let n = a.rows();
    if p.dim() != n || q.dim() != n {
        return Err(crate::error::mismatch(
            format!("vectors of dim {n}"),
            format!("{} and {}", p.dim(), q.dim()),
        ));
    }
    if p.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !q.is_positive() {
        return Err(Error::NotPositive { what: "vector q" });
    }
    let mut delta: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            delta = delta.max(star.get(i, j) * p[j] / q[i]);
        }
    }
    let shifted = TropMatrix::outer_conj(p, q).scale(1.0 / delta).oplus(a)?;
    // Tr of the shifted matrix is at most one by construction
    let generators = shifted.kleene_star(&loosened(tol))?;
    Ok(SolutionCone::new(delta, generators))
}

/// Minimizes the Hilbert seminorm over the span of `(λ⁻¹A)*`:
/// `δ = 1ᵀ(λ⁻¹A)*1`, solutions `(δ⁻¹11ᵀ ⊕ λ⁻¹A)* u`.
pub fn min_hilbert_over_kleene_cone(a: &TropMatrix, tol: &Tolerance) -> Result<SolutionCone> {
    let lambda = a.spectral_radius()?;
    if lambda == 0.0 {
        return Err(Error::ZeroSpectralRadius);
    }
    let ones = TropVector::ones(a.rows());
    min_hilbert_constrained(&a.scale(1.0 / lambda), &ones, &ones, &loosened(tol))
}

// λ⁻¹A has Tr = 1 only up to rounding in the spectral radius
fn loosened(tol: &Tolerance) -> Tolerance {
    Tolerance {
        rel_eq: tol.rel_eq.max(1e-12),
        ..*tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[f64]]) -> TropMatrix {
        TropMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn identity_has_unit_value() {
        let tol = Tolerance::default();
        let cone = min_pseudo_quadratic(&TropMatrix::identity(3), &tol).unwrap();
        assert_eq!(cone.optimum, 1.0);
        assert_eq!(cone.generators, TropMatrix::identity(3));
    }

    #[test]
    fn zero_matrix_rejected() {
        let tol = Tolerance::default();
        assert_eq!(
            min_pseudo_quadratic(&TropMatrix::zeros(2, 2), &tol),
            Err(Error::ZeroSpectralRadius)
        );
        assert_eq!(
            min_hilbert_over_kleene_cone(&TropMatrix::zeros(2, 2), &tol),
            Err(Error::ZeroSpectralRadius)
        );
    }

    #[test]
    fn all_ones_ratio_is_one() {
        let tol = Tolerance::default();
        let one = TropVector::ones(3);
        let cone = max_ratio(&TropMatrix::ones(3, 3), &one, &one, &tol).unwrap();
        assert!(tol.eq(cone.optimum, 1.0));
        assert_eq!(cone.witness_pairs.len(), 9);
    }

    #[test]
    fn ratio_input_errors() {
        let tol = Tolerance::default();
        let one = TropVector::ones(2);
        let zero = TropVector::new(vec![0.0, 0.0]).unwrap();
        let a = m(&[&[1.0, 2.0], &[3.0, 4.0]]);
        assert_eq!(max_ratio(&a, &zero, &one, &tol), Err(Error::ZeroVector));
        assert!(max_ratio(&TropMatrix::identity(2), &one, &one, &tol).is_err());
        assert!(max_ratio(&a, &one, &zero, &tol).is_err());
    }

    #[test]
    fn zero_components_of_p_drop_rows() {
        let tol = Tolerance::default();
        let a = m(&[&[1.0, 2.0], &[0.01, 4.0], &[3.0, 1.0]]);
        let p = TropVector::new(vec![1.0, 0.0, 1.0]).unwrap();
        let q = TropVector::ones(2);
        let cone = max_ratio(&a, &p, &q, &tol).unwrap();
        // with row 1 present the ratio 1/0.01 would dominate
        assert!(tol.eq(cone.optimum, 1.0));
        assert!(cone.witness_pairs.iter().all(|wp| wp.l != 1));
    }

    #[test]
    fn weighted_single_matrix_matches_plain() {
        let tol = Tolerance::default();
        let a = m(&[&[1.0, 3.0], &[1.0 / 3.0, 1.0]]);
        let w = min_weighted_pseudo_quadratic(std::slice::from_ref(&a), &[1.0], &tol).unwrap();
        assert_eq!(w.cone, min_pseudo_quadratic(&a, &tol).unwrap());
        assert!(min_weighted_pseudo_quadratic(std::slice::from_ref(&a), &[1.0, 2.0], &tol).is_err());
        assert!(min_weighted_pseudo_quadratic(&[a], &[0.0], &tol).is_err());
    }

    #[test]
    fn constrained_zero_matrix_gives_constant_ray() {
        let tol = Tolerance::default();
        let one = TropVector::ones(3);
        let cone = min_hilbert_constrained(&TropMatrix::zeros(3, 3), &one, &one, &tol).unwrap();
        assert_eq!(cone.optimum, 1.0);
        for c in cone.generators.columns() {
            assert!(c.iter().all(|v| tol.eq(v, 1.0)));
        }
    }

    #[test]
    fn constrained_rejects_large_trace() {
        let tol = Tolerance::default();
        let one = TropVector::ones(1);
        assert!(matches!(
            min_hilbert_constrained(&m(&[&[2.0]]), &one, &one, &tol),
            Err(Error::TrExceedsOne { .. })
        ));
    }
}
