//! Search over the weight cone for the weights that maximize `Δ` (most
//! differentiating branch) and, independently, minimize `δ` (least
//! differentiating branch).
//!
//! Weights are `w = g₁ ⊕ t₂g₂ ⊕ … ⊕ t_d g_d` over the essential generators of
//! the weight cone; the first coefficient is fixed to one since `Δ` and `δ` do
//! not depend on the scale of `w`.
//!
//! * `d = 2`: every `t` where two weighted entries `w_k(t) a_ij^(k)` and
//!   `w_k'(t) a_ij^(k')` swap, plus geometric midpoints and one point beyond
//!   each end.
//! * `d = 3`: a geometric grid over both coefficients, refined once around the
//!   incumbent.
//! * `d ≥ 4`: the same grid on two-coordinate slices swept pairwise.
//!
//! Optima are typically attained on whole regions of weights. Among all
//! candidates within `rel_eq` of the optimum, the one whose weight vector is
//! nearest (in log scale) to the centroid of the distinct tied weight vectors
//! is chosen, which keeps the pick away from region boundaries.

use crate::algebra::TropMatrix;
use crate::tolerance::Tolerance;

use super::problem::DecisionProblem;
use super::weights::WeightCone;

/// How the weights of a solve were obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightSearch {
    /// The weight cone has a single essential generator.
    Unique,
    /// Two generators: exhaustive breakpoint sweep.
    Exact,
    /// Three generators: full two-dimensional grid.
    Grid,
    /// Four or more generators: pairwise slices of the parameter space.
    Sampled,
    /// Weights supplied by the caller; no search.
    Fixed,
}

impl WeightSearch {
    pub fn as_str(self) -> &'static str {
        match self {
            WeightSearch::Unique => "unique",
            WeightSearch::Exact => "exact",
            WeightSearch::Grid => "grid",
            WeightSearch::Sampled => "sampled",
            WeightSearch::Fixed => "fixed",
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(
            self,
            WeightSearch::Unique | WeightSearch::Exact | WeightSearch::Fixed
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct SearchOutcome {
    pub most: Vec<f64>,
    pub least: Vec<f64>,
    pub kind: WeightSearch,
}

const SLICE_GRID: usize = 60;
const REFINE_GRID: usize = 21;

struct Evaluator<'a> {
    gens: &'a TropMatrix,
    matrices: &'a [TropMatrix],
}

#[derive(Clone, Copy)]
struct Score {
    delta_max: f64,
    delta_min: f64,
}

impl Evaluator<'_> {
    fn weights(&self, coeffs: &[f64]) -> Vec<f64> {
        (0..self.gens.rows())
            .map(|k| {
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(j, c)| c * self.gens.get(k, j))
                    .fold(0.0, f64::max)
            })
            .collect()
    }

    /// `Δ` and `δ` of the priority cone for the given coefficients.
    fn score(&self, coeffs: &[f64]) -> Option<Score> {
        let w = self.weights(coeffs);
        let b = crate::opt::weighted_max(self.matrices, &w).ok()?;
        let mu = b.spectral_radius().ok()?;
        if mu <= 0.0 {
            return None;
        }
        let star = b.scale(1.0 / mu).kleene_star_unchecked();
        let delta_min = star.max_entry();
        // max Hilbert seminorm over the span is attained at a generator
        let delta_max = star.columns().map(|c| c.max() / c.min()).fold(0.0, f64::max);
        Some(Score { delta_max, delta_min })
    }
}

struct Candidate {
    coeffs: Vec<f64>,
    /// Log of the weight vector, normalized to max entry one.
    log_w: Vec<f64>,
    score: Score,
}

pub(crate) fn search_weights(
    problem: &DecisionProblem,
    cone: &WeightCone,
    grid: usize,
    tol: &Tolerance,
) -> SearchOutcome {
    let eval = Evaluator {
        gens: &cone.generators,
        matrices: problem.alternatives(),
    };
    match cone.essential_dim {
        0 | 1 => SearchOutcome {
            most: vec![1.0],
            least: vec![1.0],
            kind: WeightSearch::Unique,
        },
        2 => {
            let cands = score_all(
                &eval,
                breakpoint_candidates(&eval).into_iter().map(|t| vec![1.0, t]),
            );
            SearchOutcome {
                most: pick(&cands, Goal::MaxDelta, tol),
                least: pick(&cands, Goal::MinDelta, tol),
                kind: WeightSearch::Exact,
            }
        }
        3 => {
            let ranges = [axis_range(cone, 1), axis_range(cone, 2)];
            let mut cands = score_all(&eval, grid2(ranges, grid));
            let step = |r: (f64, f64)| (r.1 / r.0).powf(1.0 / (grid.max(2) - 1) as f64);
            let steps = [step(ranges[0]), step(ranges[1])];
            let mut outcome = [Vec::new(), Vec::new()];
            for (slot, goal) in [Goal::MaxDelta, Goal::MinDelta].into_iter().enumerate() {
                let inc = pick(&cands, goal, tol);
                let local = [
                    (inc[1] / steps[0], inc[1] * steps[0]),
                    (inc[2] / steps[1], inc[2] * steps[1]),
                ];
                let refined = score_all(&eval, grid2(local, REFINE_GRID));
                let mut all = std::mem::take(&mut cands);
                all.extend(refined);
                outcome[slot] = pick(&all, goal, tol);
                cands = all;
            }
            let [most, least] = outcome;
            SearchOutcome {
                most,
                least,
                kind: WeightSearch::Grid,
            }
        }
        d => {
            let ranges: Vec<(f64, f64)> = (1..d).map(|j| axis_range(cone, j)).collect();
            let centre: Vec<f64> = std::iter::once(1.0)
                .chain(ranges.iter().map(|(lo, hi)| (lo * hi).sqrt()))
                .collect();
            let mut best = [centre.clone(), centre];
            for (slot, goal) in [Goal::MaxDelta, Goal::MinDelta].into_iter().enumerate() {
                for a in 1..d {
                    for b in a + 1..d {
                        let base = best[slot].clone();
                        let slice = grid2([ranges[a - 1], ranges[b - 1]], SLICE_GRID).map(|c| {
                            let mut v = base.clone();
                            v[a] = c[1];
                            v[b] = c[2];
                            v
                        });
                        let mut cands = score_all(&eval, slice);
                        cands.extend(score_all(&eval, std::iter::once(base)));
                        best[slot] = pick(&cands, goal, tol);
                    }
                }
            }
            let [most, least] = best;
            SearchOutcome {
                most,
                least,
                kind: WeightSearch::Sampled,
            }
        }
    }
}

fn score_all(eval: &Evaluator<'_>, coeffs: impl Iterator<Item = Vec<f64>>) -> Vec<Candidate> {
    coeffs
        .filter_map(|c| {
            let score = eval.score(&c)?;
            let w = eval.weights(&c);
            let top = w.iter().copied().fold(0.0, f64::max);
            let log_w = w.iter().map(|x| (x / top).ln()).collect();
            Some(Candidate {
                coeffs: c,
                log_w,
                score,
            })
        })
        .collect()
}

/// Range of the coefficient of generator `j` in which it trades dominance with
/// the first generator in some entry, widened by a factor of two each way.
fn axis_range(cone: &WeightCone, j: usize) -> (f64, f64) {
    let g = &cone.generators;
    let ratios = (0..g.rows()).map(|k| g.get(k, 0) / g.get(k, j));
    let (lo, hi) = ratios.fold((f64::INFINITY, 0.0f64), |(lo, hi), r| (lo.min(r), hi.max(r)));
    (lo / 2.0, hi * 2.0)
}

fn grid2(ranges: [(f64, f64); 2], size: usize) -> impl Iterator<Item = Vec<f64>> {
    let size = size.max(2);
    let axis = move |(lo, hi): (f64, f64)| {
        let (llo, lhi) = (lo.ln(), hi.ln());
        (0..size).map(move |i| (llo + (lhi - llo) * i as f64 / (size - 1) as f64).exp())
    };
    let ys: Vec<f64> = axis(ranges[1]).collect();
    axis(ranges[0]).flat_map(move |x| ys.clone().into_iter().map(move |y| vec![1.0, x, y]))
}

fn breakpoint_candidates(eval: &Evaluator<'_>) -> Vec<f64> {
    let g = eval.gens;
    let m = g.rows();
    // w_k(t) = max(c_k, t l_k) with c_k = g_k1, l_k = g_k2
    let mut ts: Vec<f64> = (0..m).map(|k| g.get(k, 0) / g.get(k, 1)).collect();
    let a = eval.matrices;
    let n = a[0].rows();
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for k2 in 0..m {
                    if k == k2 {
                        continue;
                    }
                    let (x, y) = (a[k].get(i, j), a[k2].get(i, j));
                    // c_k x = t l_k2 y
                    ts.push(g.get(k, 0) * x / (g.get(k2, 1) * y));
                }
            }
        }
    }
    ts.retain(|t| t.is_finite() && *t > 0.0);
    ts.sort_by(f64::total_cmp);
    ts.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs());
    let mut out = Vec::with_capacity(2 * ts.len() + 2);
    if let (Some(&first), Some(&last)) = (ts.first(), ts.last()) {
        out.push(first / 2.0);
        for w in ts.windows(2) {
            out.push(w[0]);
            out.push((w[0] * w[1]).sqrt());
        }
        out.push(last);
        out.push(last * 2.0);
    } else {
        out.push(1.0);
    }
    out
}

#[derive(Clone, Copy)]
enum Goal {
    MaxDelta,
    MinDelta,
}

fn pick(cands: &[Candidate], goal: Goal, tol: &Tolerance) -> Vec<f64> {
    let value = |c: &Candidate| match goal {
        Goal::MaxDelta => c.score.delta_max,
        Goal::MinDelta => -c.score.delta_min,
    };
    let best = cands.iter().map(value).fold(f64::NEG_INFINITY, f64::max);
    let mut tied: Vec<&Candidate> = cands.iter().filter(|c| tol.eq(value(c), best)).collect();
    // many coefficient vectors produce the same weights once a generator
    // saturates; only distinct weight vectors count towards the centroid
    tied.sort_by(|a, b| cmp_slices(&a.log_w, &b.log_w));
    tied.dedup_by(|a, b| same_weights(&a.log_w, &b.log_w));
    let Some(first) = tied.first() else {
        return vec![1.0];
    };
    let dim = first.log_w.len();
    let mut centre = vec![0.0; dim];
    for c in &tied {
        for (s, v) in centre.iter_mut().zip(&c.log_w) {
            *s += v;
        }
    }
    centre.iter_mut().for_each(|s| *s /= tied.len() as f64);
    let dist = |c: &Candidate| {
        c.log_w
            .iter()
            .zip(&centre)
            .map(|(v, m)| (v - m).powi(2))
            .sum::<f64>()
    };
    tied.iter()
        .min_by(|a, b| dist(a).total_cmp(&dist(b)))
        .map(|c| c.coeffs.clone())
        .unwrap_or_else(|| vec![1.0])
}

fn cmp_slices(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

fn same_weights(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= 1e-12)
}
