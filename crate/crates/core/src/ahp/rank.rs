use std::cmp::Ordering;
use std::fmt;

use crate::algebra::TropVector;
use crate::error::{Error, Result};

/// Ordered groups of tied alternatives, best group first.
#[derive(Debug, Clone, PartialEq)]
pub struct Ranking {
    /// Zero-based alternative indices; each group sorted by index.
    pub groups: Vec<Vec<usize>>,
    /// The scored vector, normalized to max entry one.
    pub vector: TropVector,
}

impl Ranking {
    /// Group position of every alternative (0 = best).
    pub fn levels(&self) -> Vec<usize> {
        let mut levels = vec![0; self.vector.dim()];
        for (g, members) in self.groups.iter().enumerate() {
            for &i in members {
                levels[i] = g;
            }
        }
        levels
    }

    /// Renders as e.g. `C ≡ S ≻ D ≻ Q`.
    pub fn render(&self, labels: &[String]) -> String {
        self.groups
            .iter()
            .map(|g| {
                g.iter()
                    .map(|&i| label(labels, i))
                    .collect::<Vec<_>>()
                    .join(" ≡ ")
            })
            .collect::<Vec<_>>()
            .join(" ≻ ")
    }
}

fn label(labels: &[String], i: usize) -> String {
    labels.get(i).cloned().unwrap_or_else(|| format!("#{}", i + 1))
}

/// Ranks the entries of a positive vector, highest first. An entry joins the
/// current group when its ratio to the group leader is at least `1 - tie_tol`.
pub fn rank(x: &TropVector, tie_tol: f64) -> Result<Ranking> {
    if !x.is_positive() {
        return Err(Error::NotPositive { what: "score vector" });
    }
    let vector = x.normalize_max()?;
    let mut order: Vec<usize> = (0..vector.dim()).collect();
    order.sort_by(|&a, &b| vector[b].total_cmp(&vector[a]).then(a.cmp(&b)));

    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut leader = f64::NAN;
    for i in order {
        match groups.last_mut() {
            Some(g) if vector[i] / leader >= 1.0 - tie_tol => g.push(i),
            _ => {
                leader = vector[i];
                groups.push(vec![i]);
            }
        }
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    Ok(Ranking { groups, vector })
}

/// Relation of the first alternative of a pair to the second across several
/// rankings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// Ahead in every ranking: `≻`.
    Strict,
    /// Ahead in some rankings, tied in the rest: `⪰`.
    Weak,
    /// Tied in every ranking: `≡`.
    Equivalent,
    /// Ahead in one ranking and behind in another.
    Conflict,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Strict => "≻",
            Relation::Weak => "⪰",
            Relation::Equivalent => "≡",
            Relation::Conflict => "∥",
        }
    }
}

/// One oriented pair of a combined order: `better` relates to `worse` by
/// `relation` (for `Equivalent` and `Conflict` the orientation is by index).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairRelation {
    pub better: usize,
    pub worse: usize,
    pub relation: Relation,
}

/// Agreement of several rankings over the same alternatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CombinedOrder {
    /// The rankings agree on a total preorder; `links[i]` relates `order[i]`
    /// to `order[i + 1]`.
    Chain { order: Vec<usize>, links: Vec<Relation> },
    /// Some pair conflicts; every pair is listed instead.
    Pairwise(Vec<PairRelation>),
}

impl CombinedOrder {
    pub fn render(&self, labels: &[String]) -> String {
        match self {
            CombinedOrder::Chain { order, links } => {
                let mut out = label(labels, order[0]);
                for (rel, &i) in links.iter().zip(&order[1..]) {
                    out.push_str(&format!(" {} {}", rel.symbol(), label(labels, i)));
                }
                out
            }
            CombinedOrder::Pairwise(pairs) => pairs
                .iter()
                .map(|p| {
                    format!(
                        "{} {} {}",
                        label(labels, p.better),
                        p.relation.symbol(),
                        label(labels, p.worse)
                    )
                })
                .collect::<Vec<_>>()
                .join(", "),
        }
    }

    pub fn is_chain(&self) -> bool {
        matches!(self, CombinedOrder::Chain { .. })
    }
}

/// Combines rankings pairwise: `≻` where strict in every ranking, `⪰` where
/// strict in some and tied in the others, `≡` where tied in all.
pub fn combine_rankings(rankings: &[Ranking]) -> Result<CombinedOrder> {
    let first = rankings.first().ok_or(Error::Empty)?;
    let n = first.vector.dim();
    if rankings.iter().any(|r| r.vector.dim() != n) {
        return Err(crate::error::mismatch(
            format!("rankings over {n} alternatives"),
            "rankings of different sizes",
        ));
    }
    let levels: Vec<Vec<usize>> = rankings.iter().map(Ranking::levels).collect();

    // relation of i to j, oriented from i's point of view
    let relate = |i: usize, j: usize| -> (Relation, Ordering) {
        let (mut ahead, mut behind, mut tied) = (0, 0, 0);
        for l in &levels {
            match l[i].cmp(&l[j]) {
                Ordering::Less => ahead += 1,
                Ordering::Greater => behind += 1,
                Ordering::Equal => tied += 1,
            }
        }
        match (ahead, behind, tied) {
            (0, 0, _) => (Relation::Equivalent, Ordering::Equal),
            (_, 0, 0) => (Relation::Strict, Ordering::Less),
            (_, 0, _) => (Relation::Weak, Ordering::Less),
            (0, _, 0) => (Relation::Strict, Ordering::Greater),
            (0, _, _) => (Relation::Weak, Ordering::Greater),
            _ => (Relation::Conflict, Ordering::Equal),
        }
    };

    let mut pairs = Vec::new();
    let mut conflict = false;
    let mut wins = vec![0usize; n];
    for i in 0..n {
        for j in i + 1..n {
            let (rel, dir) = relate(i, j);
            conflict |= rel == Relation::Conflict;
            let (better, worse) = if dir == Ordering::Greater { (j, i) } else { (i, j) };
            if matches!(rel, Relation::Strict | Relation::Weak) {
                wins[better] += 1;
            }
            pairs.push(PairRelation {
                better,
                worse,
                relation: rel,
            });
        }
    }
    if conflict {
        return Ok(CombinedOrder::Pairwise(pairs));
    }
    // without conflicts the relation is a total preorder, so win counts sort it
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| wins[b].cmp(&wins[a]).then(a.cmp(&b)));
    let links = order.windows(2).map(|w| relate(w[0], w[1]).0).collect();
    Ok(CombinedOrder::Chain { order, links })
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}
