use crate::algebra::{TropMatrix, TropVector};
use crate::error::Result;
use crate::geom::reduce_generators;
use crate::opt::{
    max_hilbert_over_span, min_hilbert_over_kleene_cone, min_weighted_pseudo_quadratic, WitnessPair,
};
use crate::tolerance::Tolerance;

use super::baseline::classic_ahp_baseline;
use super::problem::DecisionProblem;
use super::rank::{combine_rankings, rank, CombinedOrder, Ranking};
use super::search::{search_weights, WeightSearch};
use super::weights::{derive_weight_cone, WeightCone};

/// Which differentiating branches to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    Most,
    Least,
    #[default]
    All,
}

impl Mode {
    fn most(self) -> bool {
        matches!(self, Mode::Most | Mode::All)
    }

    fn least(self) -> bool {
        matches!(self, Mode::Least | Mode::All)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOptions {
    pub tolerance: Tolerance,
    pub mode: Mode,
    /// Compute the classic eigenvector ranking for comparison.
    pub baseline: bool,
    /// Points per axis of the weight grid when the weight cone has three or
    /// more essential generators.
    pub grid: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            tolerance: Tolerance::default(),
            mode: Mode::All,
            baseline: false,
            grid: 200,
        }
    }
}

/// Priority cone for one fixed weight vector with its most and least
/// differentiating members.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedWeightSolution {
    /// Criterion weights, normalized to max entry one.
    pub weights: TropVector,
    /// `B = ⊕_k w_k A_k`.
    pub combined: TropMatrix,
    /// Spectral radius of `B`.
    pub mu: f64,
    /// Essential generators of `(μ⁻¹B)*`, each normalized to max entry one.
    pub priority_generators: TropMatrix,
    /// Maximum Hilbert seminorm `Δ` over the priority cone.
    pub delta_max: f64,
    pub witness_pairs: Vec<WitnessPair>,
    /// Per witness pair, the generators of that part of the maximizing set.
    pub most_blocks: Vec<TropMatrix>,
    pub most_diff: Vec<Ranking>,
    /// Minimum Hilbert seminorm `δ` over the priority cone.
    pub delta_min: f64,
    pub least_generators: TropMatrix,
    pub least_diff: Vec<Ranking>,
}

pub fn solve_fixed_weights(
    problem: &DecisionProblem,
    w: &TropVector,
    tol: &Tolerance,
) -> Result<FixedWeightSolution> {
    let weights = w.normalize_max()?;
    let weighted = min_weighted_pseudo_quadratic(problem.alternatives(), weights.as_slice(), tol)?;
    let combined = weighted.combined;
    let mu = weighted.cone.optimum;
    let priority_generators = normalize_columns(&reduce_generators(&weighted.cone.generators, tol)?)?;

    let most = max_hilbert_over_span(&priority_generators, tol)?;
    let most_vectors = normalize_columns(&most.generators)?;
    let most_diff = rank_columns(&most_vectors, tol)?;

    let least = min_hilbert_over_kleene_cone(&combined, tol)?;
    let least_generators = normalize_columns(&reduce_generators(&least.generators, tol)?)?;
    let least_diff = rank_columns(&least_generators, tol)?;

    Ok(FixedWeightSolution {
        weights,
        combined,
        mu,
        priority_generators,
        delta_max: most.optimum,
        witness_pairs: most.witness_pairs,
        most_blocks: most.blocks,
        most_diff,
        delta_min: least.optimum,
        least_generators,
        least_diff,
    })
}

fn normalize_columns(m: &TropMatrix) -> Result<TropMatrix> {
    let cols: Vec<TropVector> = m.columns().map(|c| c.normalize_max()).collect::<Result<_>>()?;
    TropMatrix::from_columns(&cols)
}

fn rank_columns(m: &TropMatrix, tol: &Tolerance) -> Result<Vec<Ranking>> {
    m.columns().map(|c| rank(&c, tol.tie_tol)).collect()
}

/// Spectral radius of one input matrix; `log_lambda` is zero iff consistent.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixConsistency {
    pub name: String,
    pub lambda: f64,
    pub log_lambda: f64,
}

/// Full output of the tropical decision procedure.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub weight_cone: WeightCone,
    pub weight_search: WeightSearch,
    /// Branch whose weights maximize `Δ`; its `most_diff` are the reported
    /// most differentiating vectors.
    pub most: Option<FixedWeightSolution>,
    /// Branch whose weights minimize `δ`; its `least_diff` are the reported
    /// least differentiating vectors.
    pub least: Option<FixedWeightSolution>,
    pub most_order: Option<CombinedOrder>,
    pub least_order: Option<CombinedOrder>,
    /// Agreement of all most and least differentiating rankings.
    pub combined_order: Option<CombinedOrder>,
    pub consistency: Vec<MatrixConsistency>,
    pub baseline: Option<Ranking>,
}

impl SolveReport {
    pub fn delta_max(&self) -> Option<f64> {
        self.most.as_ref().map(|b| b.delta_max)
    }

    pub fn delta_min(&self) -> Option<f64> {
        self.least.as_ref().map(|b| b.delta_min)
    }

    pub fn most_diff(&self) -> &[Ranking] {
        self.most.as_ref().map_or(&[], |b| &b.most_diff)
    }

    pub fn least_diff(&self) -> &[Ranking] {
        self.least.as_ref().map_or(&[], |b| &b.least_diff)
    }
}

/// Runs the full procedure: weight cone from the criteria matrix, weight
/// selection per branch, priority cone and its extreme members.
pub fn solve(problem: &DecisionProblem, opts: &SolveOptions) -> Result<SolveReport> {
    let tol = &opts.tolerance;
    let weight_cone = derive_weight_cone(problem.criteria(), tol)?;
    let search = search_weights(problem, &weight_cone, opts.grid, tol);
    let most_w = weight_cone.weights(&search.most)?;
    let least_w = weight_cone.weights(&search.least)?;
    assemble(problem, opts, weight_cone, search.kind, &most_w, &least_w)
}

/// Same report as [`solve`] but both branches use the given criterion weights.
/// The weight cone of `C` is still derived and reported for reference.
pub fn solve_with_weights(
    problem: &DecisionProblem,
    weights: &TropVector,
    opts: &SolveOptions,
) -> Result<SolveReport> {
    if weights.dim() != problem.num_criteria() {
        return Err(crate::error::mismatch(
            format!("{} weights", problem.num_criteria()),
            weights.dim(),
        ));
    }
    if !weights.is_positive() {
        return Err(crate::error::Error::NotPositive {
            what: "weight vector",
        });
    }
    let weight_cone = derive_weight_cone(problem.criteria(), &opts.tolerance)?;
    assemble(problem, opts, weight_cone, WeightSearch::Fixed, weights, weights)
}

fn assemble(
    problem: &DecisionProblem,
    opts: &SolveOptions,
    weight_cone: WeightCone,
    weight_search: WeightSearch,
    most_w: &TropVector,
    least_w: &TropVector,
) -> Result<SolveReport> {
    let tol = &opts.tolerance;
    let most = if opts.mode.most() {
        Some(solve_fixed_weights(problem, most_w, tol)?)
    } else {
        None
    };
    let least = match (&most, opts.mode.least()) {
        (_, false) => None,
        (Some(m), true) if most_w == least_w => Some(m.clone()),
        (_, true) => Some(solve_fixed_weights(problem, least_w, tol)?),
    };

    let most_rankings = most.as_ref().map(|b| b.most_diff.clone()).unwrap_or_default();
    let least_rankings = least.as_ref().map(|b| b.least_diff.clone()).unwrap_or_default();
    let order_of = |rs: &[Ranking]| -> Result<Option<CombinedOrder>> {
        if rs.is_empty() {
            Ok(None)
        } else {
            combine_rankings(rs).map(Some)
        }
    };
    let most_order = order_of(&most_rankings)?;
    let least_order = order_of(&least_rankings)?;
    let combined_order = if most.is_some() && least.is_some() {
        let all: Vec<Ranking> = most_rankings.iter().chain(&least_rankings).cloned().collect();
        order_of(&all)?
    } else {
        None
    };

    let baseline = if opts.baseline {
        Some(classic_ahp_baseline(problem, tol.tie_tol)?)
    } else {
        None
    };

    Ok(SolveReport {
        weight_cone,
        weight_search,
        most,
        least,
        most_order,
        least_order,
        combined_order,
        consistency: consistency_table(problem)?,
        baseline,
    })
}

fn consistency_table(problem: &DecisionProblem) -> Result<Vec<MatrixConsistency>> {
    let entry = |name: String, m: &TropMatrix| -> Result<MatrixConsistency> {
        let lambda = m.spectral_radius()?;
        Ok(MatrixConsistency {
            name,
            lambda,
            log_lambda: lambda.ln(),
        })
    };
    let mut out = vec![entry("criteria".into(), problem.criteria())?];
    for (label, a) in problem.criteria_labels().iter().zip(problem.alternatives()) {
        out.push(entry(label.clone(), a)?);
    }
    Ok(out)
}
