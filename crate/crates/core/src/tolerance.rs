/// Relative tolerances used for scalar equality and ranking ties.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Relative tolerance for `a = b` tests, including argmax index conditions.
    pub rel_eq: f64,
    /// Relative tolerance for grouping tied scores in a ranking.
    pub tie_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel_eq: 1e-9,
            tie_tol: 1e-7,
        }
    }
}

impl Tolerance {
    /// Builds a tolerance, returning `None` unless `0 < rel_eq < tie_tol < 1`.
    pub fn new(rel_eq: f64, tie_tol: f64) -> Option<Self> {
        (rel_eq > 0.0 && rel_eq < tie_tol && tie_tol < 1.0).then_some(Tolerance { rel_eq, tie_tol })
    }

    /// Exact comparisons; used where equivalence must be tested at zero slack.
    pub const fn exact() -> Self {
        Tolerance {
            rel_eq: 0.0,
            tie_tol: 0.0,
        }
    }

    /// `|a - b| <= rel_eq * max(|a|, |b|)`.
    #[inline]
    pub fn eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.rel_eq * a.abs().max(b.abs())
    }

    /// `a <= b` up to the relative tolerance.
    #[inline]
    pub fn le(&self, a: f64, b: f64) -> bool {
        a <= b || self.eq(a, b)
    }
}
