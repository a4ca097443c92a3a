//! Tropical decision procedure over pairwise comparison matrices.
//!
//! 1. The criteria matrix `C` is approximated in the log-Chebyshev sense,
//!    giving the cone of optimal weight vectors ([`derive_weight_cone`]).
//! 2. For chosen weights the alternative matrices are combined into
//!    `B = ⊕_k w_k A_k` and approximated jointly ([`solve_fixed_weights`]).
//! 3. The resulting cone of priority vectors is summarized by its members of
//!    largest and smallest Hilbert seminorm, the most and least
//!    differentiating priority vectors.
//!
//! When the weight cone is not a single ray, [`solve`] searches it separately
//! for the weights that maximize `Δ` and those that minimize `δ`.

mod baseline;
mod engine;
mod problem;
mod rank;
mod search;
mod weights;

pub use baseline::{baseline_scores, classic_ahp_baseline, perron_vector};
pub use engine::{
    solve, solve_fixed_weights, solve_with_weights, FixedWeightSolution, MatrixConsistency, Mode,
    SolveOptions, SolveReport,
};
pub use problem::{
    consistency_index, validate_reciprocal, DecisionProblem, ReciprocalViolation, ViolationKind,
};
pub use rank::{combine_rankings, rank, CombinedOrder, PairRelation, Ranking, Relation};
pub use search::WeightSearch;
pub use weights::{assemble_b, derive_weight_cone, WeightCone};
