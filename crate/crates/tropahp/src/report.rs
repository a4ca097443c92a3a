//! The report format produced by `solve`, in JSON and plain text.
//!
//! Every number is rounded to twelve significant digits before it is
//! serialized, which makes the output stable across platforms and lets a
//! parsed report serialize back to the same bytes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use tropahp_core::ahp::{
    solve, solve_with_weights, CombinedOrder, DecisionProblem, FixedWeightSolution, Mode, Ranking,
    SolveOptions, SolveReport,
};
use tropahp_core::geom::{section_at_unit_last_coord, section_of_blocks, SectionPlot};
use tropahp_core::opt::{max_hilbert_over_span, min_hilbert_over_kleene_cone, min_pseudo_quadratic};
use tropahp_core::{Tolerance, TropMatrix, TropVector};

use crate::document::ProblemDocument;
use crate::error::{Error, Result};

pub const REPORT_SCHEMA: &str = "tropahp-report/1";

/// Rounds to twelve significant digits.
pub fn r12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn vec12(x: &TropVector) -> Vec<f64> {
    x.iter().map(r12).collect()
}

fn columns12(m: &TropMatrix) -> Vec<Vec<f64>> {
    m.columns().map(|c| vec12(&c)).collect()
}

fn rows12(m: &TropMatrix) -> Vec<Vec<f64>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(r12).collect())
        .collect()
}

/// Solver settings as they appear on the command line and in API bodies.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolveSettings {
    /// `most`, `least` or `all` (the default).
    pub mode: Option<String>,
    pub rel_eq: Option<f64>,
    pub tie_tol: Option<f64>,
    pub baseline: bool,
}

impl SolveSettings {
    pub fn tolerance(&self) -> Result<Tolerance> {
        let d = Tolerance::default();
        let (rel_eq, tie_tol) = (self.rel_eq.unwrap_or(d.rel_eq), self.tie_tol.unwrap_or(d.tie_tol));
        Tolerance::new(rel_eq, tie_tol).ok_or_else(|| {
            Error::invalid(
                "tolerance",
                format!("need 0 < rel_eq < tie_tol < 1, got rel_eq = {rel_eq}, tie_tol = {tie_tol}"),
            )
        })
    }

    pub fn options(&self) -> Result<SolveOptions> {
        let mode = match self.mode.as_deref() {
            None | Some("all") => Mode::All,
            Some("most") => Mode::Most,
            Some("least") => Mode::Least,
            Some(other) => {
                return Err(Error::invalid(
                    "mode",
                    format!("expected most, least or all, found '{other}'"),
                ))
            }
        };
        Ok(SolveOptions {
            tolerance: self.tolerance()?,
            mode,
            baseline: self.baseline,
            ..SolveOptions::default()
        })
    }
}

/// Validates a document and solves it, searching the weight cone or using
/// `weights` when given.
pub fn solve_document(
    doc: &ProblemDocument,
    settings: &SolveSettings,
    weights: Option<&[f64]>,
) -> Result<ReportDocument> {
    let opts = settings.options()?;
    let problem = doc.to_problem(&opts.tolerance)?;
    let report = match weights {
        None => solve(&problem, &opts)?,
        Some(w) => {
            if w.len() != problem.num_criteria() || w.iter().any(|&x| !(x > 0.0 && x.is_finite())) {
                return Err(Error::invalid(
                    "weights",
                    format!("need {} positive finite weights", problem.num_criteria()),
                ));
            }
            solve_with_weights(&problem, &TropVector::new(w.to_vec())?, &opts)?
        }
    };
    ReportDocument::build(&doc.name, &problem, &opts, &report)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub problem: String,
    pub criteria: Vec<String>,
    pub alternatives: Vec<String>,
    pub options: OptionsDoc,
    pub weight_cone: WeightConeDoc,
    pub most: Option<BranchDoc>,
    pub least: Option<BranchDoc>,
    pub orders: OrdersDoc,
    pub consistency: Vec<ConsistencyDoc>,
    pub baseline: Option<BaselineDoc>,
    /// Sections by the plane `x₃ = 1`, for three alternatives only.
    pub section: Option<SectionDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptionsDoc {
    pub mode: String,
    pub rel_eq: f64,
    pub tie_tol: f64,
    pub grid: usize,
    pub baseline: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightConeDoc {
    pub lambda: f64,
    pub essential_dim: usize,
    /// How the branch weights were chosen: unique, exact, grid, sampled or fixed.
    pub search: String,
    /// Generators as columns, each normalized to max entry one.
    pub generators: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BranchDoc {
    pub weights: Vec<f64>,
    pub combined_matrix: Vec<Vec<f64>>,
    pub mu: f64,
    pub delta_max: f64,
    pub delta_min: f64,
    /// Generators of the priority cone as columns.
    pub priority_generators: Vec<Vec<f64>>,
    /// One-based `(k, l)` pairs attaining `delta_max`.
    pub witness_pairs: Vec<[usize; 2]>,
    /// Most differentiating vectors in the `most` branch, least
    /// differentiating ones in the `least` branch.
    pub vectors: Vec<RankingDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingDoc {
    pub vector: Vec<f64>,
    pub groups: Vec<Vec<String>>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrdersDoc {
    pub most: Option<OrderDoc>,
    pub least: Option<OrderDoc>,
    pub combined: Option<OrderDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderDoc {
    /// False when the rankings conflict and only pairwise relations exist.
    pub chain: bool,
    pub text: String,
    pub pairs: Vec<PairDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairDoc {
    pub better: String,
    pub worse: String,
    pub relation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConsistencyDoc {
    pub matrix: String,
    pub lambda: f64,
    pub log_lambda: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineDoc {
    pub ranking: RankingDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectionDoc {
    pub span: PlotDoc,
    pub most: PlotDoc,
    pub least: PlotDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlotDoc {
    pub points: Vec<[f64; 2]>,
    pub labels: Vec<String>,
    pub segments: Vec<[[f64; 2]; 2]>,
}

impl From<&SectionPlot> for PlotDoc {
    fn from(p: &SectionPlot) -> Self {
        let pt = |q: &[f64; 2]| [r12(q[0]), r12(q[1])];
        PlotDoc {
            points: p.points.iter().map(pt).collect(),
            labels: p.labels.clone(),
            segments: p.segments.iter().map(|[a, b]| [pt(a), pt(b)]).collect(),
        }
    }
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Most => "most",
        Mode::Least => "least",
        Mode::All => "all",
    }
}

fn ranking_doc(r: &Ranking, labels: &[String]) -> RankingDoc {
    RankingDoc {
        vector: vec12(&r.vector),
        groups: r
            .groups
            .iter()
            .map(|g| g.iter().map(|&i| labels[i].clone()).collect())
            .collect(),
        text: r.render(labels),
    }
}

fn order_doc(o: &CombinedOrder, labels: &[String]) -> OrderDoc {
    let pairs = match o {
        CombinedOrder::Chain { order, links } => order
            .windows(2)
            .zip(links)
            .map(|(w, rel)| PairDoc {
                better: labels[w[0]].clone(),
                worse: labels[w[1]].clone(),
                relation: rel.symbol().into(),
            })
            .collect(),
        CombinedOrder::Pairwise(ps) => ps
            .iter()
            .map(|p| PairDoc {
                better: labels[p.better].clone(),
                worse: labels[p.worse].clone(),
                relation: p.relation.symbol().into(),
            })
            .collect(),
    };
    OrderDoc {
        chain: o.is_chain(),
        text: o.render(labels),
        pairs,
    }
}

fn branch_doc(b: &FixedWeightSolution, most: bool, labels: &[String]) -> BranchDoc {
    let rankings = if most { &b.most_diff } else { &b.least_diff };
    BranchDoc {
        weights: vec12(&b.weights),
        combined_matrix: rows12(&b.combined),
        mu: r12(b.mu),
        delta_max: r12(b.delta_max),
        delta_min: r12(b.delta_min),
        priority_generators: columns12(&b.priority_generators),
        witness_pairs: b.witness_pairs.iter().map(|w| [w.k + 1, w.l + 1]).collect(),
        vectors: rankings.iter().map(|r| ranking_doc(r, labels)).collect(),
    }
}

fn section_doc(report: &SolveReport) -> Result<Option<SectionDoc>> {
    let (Some(most), Some(least)) = (&report.most, &report.least) else {
        let Some(b) = report.most.as_ref().or(report.least.as_ref()) else {
            return Ok(None);
        };
        if b.priority_generators.rows() != 3 {
            return Ok(None);
        }
        let span = PlotDoc::from(&section_at_unit_last_coord(&b.priority_generators)?);
        let empty = PlotDoc::from(&SectionPlot::default());
        let (m, l) = if report.most.is_some() {
            (PlotDoc::from(&section_of_blocks(&b.most_blocks)?), empty)
        } else {
            (
                empty,
                PlotDoc::from(&section_at_unit_last_coord(&b.least_generators)?),
            )
        };
        return Ok(Some(SectionDoc {
            span,
            most: m,
            least: l,
        }));
    };
    if most.priority_generators.rows() != 3 {
        return Ok(None);
    }
    Ok(Some(SectionDoc {
        span: PlotDoc::from(&section_at_unit_last_coord(&most.priority_generators)?),
        most: PlotDoc::from(&section_of_blocks(&most.most_blocks)?),
        least: PlotDoc::from(&section_at_unit_last_coord(&least.least_generators)?),
    }))
}

impl ReportDocument {
    pub fn build(
        name: &str,
        problem: &DecisionProblem,
        opts: &SolveOptions,
        report: &SolveReport,
    ) -> Result<Self> {
        let labels = problem.alternative_labels();
        let order = |o: &Option<CombinedOrder>| o.as_ref().map(|o| order_doc(o, labels));
        Ok(ReportDocument {
            schema_version: REPORT_SCHEMA.into(),
            problem: name.into(),
            criteria: problem.criteria_labels().to_vec(),
            alternatives: labels.to_vec(),
            options: OptionsDoc {
                mode: mode_name(opts.mode).into(),
                rel_eq: opts.tolerance.rel_eq,
                tie_tol: opts.tolerance.tie_tol,
                grid: opts.grid,
                baseline: opts.baseline,
            },
            weight_cone: WeightConeDoc {
                lambda: r12(report.weight_cone.lambda_c),
                essential_dim: report.weight_cone.essential_dim,
                search: report.weight_search.as_str().into(),
                generators: columns12(&report.weight_cone.generators),
            },
            most: report.most.as_ref().map(|b| branch_doc(b, true, labels)),
            least: report.least.as_ref().map(|b| branch_doc(b, false, labels)),
            orders: OrdersDoc {
                most: order(&report.most_order),
                least: order(&report.least_order),
                combined: order(&report.combined_order),
            },
            consistency: report
                .consistency
                .iter()
                .map(|c| ConsistencyDoc {
                    matrix: c.name.clone(),
                    lambda: r12(c.lambda),
                    log_lambda: r12(c.log_lambda),
                })
                .collect(),
            baseline: report.baseline.as_ref().map(|r| BaselineDoc {
                ranking: ranking_doc(r, labels),
            }),
            section: section_doc(report)?,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let vec = |v: &[f64]| v.iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>().join(", ");
        let _ = writeln!(
            out,
            "problem: {} ({} criteria, {} alternatives)",
            self.problem,
            self.criteria.len(),
            self.alternatives.len()
        );
        let wc = &self.weight_cone;
        let _ = writeln!(
            out,
            "criteria λ = {:.6}; weight cone with {} essential generator(s), {} weights",
            wc.lambda, wc.essential_dim, wc.search
        );
        for (title, branch, most) in [
            ("most differentiating", &self.most, true),
            ("least differentiating", &self.least, false),
        ] {
            let Some(b) = branch else { continue };
            let (sym, value) = if most {
                ("Δ", b.delta_max)
            } else {
                ("δ", b.delta_min)
            };
            let _ = writeln!(out, "\n{title} ({sym} = {value:.6}, μ = {:.6})", b.mu);
            let _ = writeln!(out, "  weights ({})", vec(&b.weights));
            if most {
                let pairs: Vec<String> = b
                    .witness_pairs
                    .iter()
                    .map(|[k, l]| format!("({k},{l})"))
                    .collect();
                let _ = writeln!(out, "  witness pairs {}", pairs.join(" "));
            }
            for r in &b.vectors {
                let _ = writeln!(out, "  ({})  {}", vec(&r.vector), r.text);
            }
        }
        let _ = writeln!(out, "\norders");
        for (name, o) in [
            ("most", &self.orders.most),
            ("least", &self.orders.least),
            ("combined", &self.orders.combined),
        ] {
            if let Some(o) = o {
                let _ = writeln!(out, "  {name:<9} {}", o.text);
            }
        }
        let _ = writeln!(out, "\nconsistency (λ = 1 iff consistent)");
        for c in &self.consistency {
            let _ = writeln!(
                out,
                "  {:<24} λ = {:.6}  log λ = {:.6}",
                c.matrix, c.lambda, c.log_lambda
            );
        }
        if let Some(b) = &self.baseline {
            let _ = writeln!(out, "\nbaseline (principal eigenvector)");
            let _ = writeln!(out, "  ({})  {}", vec(&b.ranking.vector), b.ranking.text);
        }
        out
    }
}

/// Section plots with the extreme seminorm values, for three alternatives.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeometryDocument {
    pub name: String,
    pub delta_max: f64,
    /// One-based `(k, l)` pairs attaining `delta_max`.
    pub witness_pairs: Vec<[usize; 2]>,
    pub delta_min: f64,
    pub span: PlotDoc,
    pub most: PlotDoc,
    pub least: PlotDoc,
}

impl GeometryDocument {
    /// Geometry of a single `3 × 3` positive matrix `A`: the span of
    /// `(λ⁻¹A)*`, its most differentiating rays and the cone of least
    /// differentiating vectors.
    pub fn from_matrix(name: &str, a: &TropMatrix, tol: &Tolerance) -> Result<Self> {
        if a.rows() != 3 || a.cols() != 3 {
            return Err(Error::invalid(
                "matrix",
                format!("geometry needs a 3x3 matrix, found {}x{}", a.rows(), a.cols()),
            ));
        }
        let span = min_pseudo_quadratic(a, tol)?.generators;
        let most = max_hilbert_over_span(&span, tol)?;
        let least = min_hilbert_over_kleene_cone(a, tol)?;
        Ok(GeometryDocument {
            name: name.into(),
            delta_max: r12(most.optimum),
            witness_pairs: most.witness_pairs.iter().map(|w| [w.k + 1, w.l + 1]).collect(),
            delta_min: r12(least.optimum),
            span: PlotDoc::from(&section_at_unit_last_coord(&span)?),
            most: PlotDoc::from(&section_of_blocks(&most.blocks)?),
            least: PlotDoc::from(&section_at_unit_last_coord(&least.generators)?),
        })
    }

    /// Geometry taken from a full report; needs three alternatives and both
    /// branches.
    pub fn from_report(report: &ReportDocument) -> Result<Self> {
        if report.alternatives.len() != 3 {
            return Err(Error::invalid(
                "alternatives",
                format!(
                    "geometry needs 3 alternatives, found {}",
                    report.alternatives.len()
                ),
            ));
        }
        let (Some(most), Some(least), Some(section)) = (&report.most, &report.least, &report.section) else {
            return Err(Error::invalid("mode", "geometry needs both branches"));
        };
        Ok(GeometryDocument {
            name: report.problem.clone(),
            delta_max: most.delta_max,
            witness_pairs: most.witness_pairs.clone(),
            delta_min: least.delta_min,
            span: section.span.clone(),
            most: section.most.clone(),
            least: section.least.clone(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("geometry serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(r12(5f64.powf(0.75)), 3.34370152488);
        assert_eq!(r12(1.0 / 3.0), 0.333333333333);
        assert_eq!(r12(0.0), 0.0);
        assert_eq!(r12(123456789012345.0), 123456789012000.0);
        let x = r12(std::f64::consts::PI);
        assert_eq!(r12(x), x);
    }
}
