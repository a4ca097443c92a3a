use std::fmt;

use crate::algebra::TropMatrix;
use crate::error::{Error, Result};
use crate::tolerance::Tolerance;

/// What is wrong with a pairwise comparison matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ViolationKind {
    NotSquare,
    NonPositive,
    Diagonal,
    NotReciprocal,
}

/// First offending entry of a matrix that is not symmetrically reciprocal.
/// Indices are zero-based.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReciprocalViolation {
    pub kind: ViolationKind,
    pub row: usize,
    pub col: usize,
    pub value: f64,
    /// The mirrored entry `a_ji` for reciprocity failures.
    pub mirror: f64,
}

impl fmt::Display for ReciprocalViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = (self.row + 1, self.col + 1);
        match self.kind {
            ViolationKind::NotSquare => write!(f, "matrix is not square"),
            ViolationKind::NonPositive => write!(f, "entry ({i},{j}) = {} is not positive", self.value),
            ViolationKind::Diagonal => write!(f, "diagonal entry ({i},{i}) = {} is not 1", self.value),
            ViolationKind::NotReciprocal => write!(
                f,
                "entries ({i},{j}) = {} and ({j},{i}) = {} are not reciprocal",
                self.value, self.mirror
            ),
        }
    }
}

/// Checks that `M` is positive with unit diagonal and `m_ij m_ji = 1`.
pub fn validate_reciprocal(m: &TropMatrix, tol: &Tolerance) -> std::result::Result<(), ReciprocalViolation> {
    let violation = |kind, row, col, value, mirror| ReciprocalViolation {
        kind,
        row,
        col,
        value,
        mirror,
    };
    if !m.is_square() {
        return Err(violation(ViolationKind::NotSquare, 0, 0, 0.0, 0.0));
    }
    let n = m.rows();
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j);
            if v <= 0.0 {
                return Err(violation(ViolationKind::NonPositive, i, j, v, 0.0));
            }
        }
    }
    for i in 0..n {
        let d = m.get(i, i);
        if !tol.eq(d, 1.0) {
            return Err(violation(ViolationKind::Diagonal, i, i, d, d));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (m.get(i, j), m.get(j, i));
            if !tol.eq(a * b, 1.0) {
                return Err(violation(ViolationKind::NotReciprocal, i, j, a, b));
            }
        }
    }
    Ok(())
}

/// Spectral radius of a reciprocal matrix; one exactly when it is consistent.
pub fn consistency_index(m: &TropMatrix, tol: &Tolerance) -> Result<f64> {
    validate_reciprocal(m, tol).map_err(|violation| Error::NotReciprocal {
        matrix: "M".into(),
        violation,
    })?;
    m.spectral_radius()
}

/// A multi-criteria ranking problem: criteria comparisons `C` and one
/// alternative comparison matrix per criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem {
    criteria_labels: Vec<String>,
    alternative_labels: Vec<String>,
    criteria: TropMatrix,
    alternatives: Vec<TropMatrix>,
}

impl DecisionProblem {
    pub fn new(
        criteria_labels: Vec<String>,
        alternative_labels: Vec<String>,
        criteria: TropMatrix,
        alternatives: Vec<TropMatrix>,
        tol: &Tolerance,
    ) -> Result<Self> {
        let m = criteria_labels.len();
        let n = alternative_labels.len();
        if m == 0 {
            return Err(Error::InvalidProblem("at least one criterion is required".into()));
        }
        if n < 2 {
            return Err(Error::InvalidProblem(
                "at least two alternatives are required".into(),
            ));
        }
        if criteria.rows() != m || criteria.cols() != m {
            return Err(Error::InvalidProblem(format!(
                "criteria matrix is {}x{}, expected {m}x{m}",
                criteria.rows(),
                criteria.cols()
            )));
        }
        if alternatives.len() != m {
            return Err(Error::InvalidProblem(format!(
                "{} alternative matrices given for {m} criteria",
                alternatives.len()
            )));
        }
        validate_reciprocal(&criteria, tol).map_err(|violation| Error::NotReciprocal {
            matrix: "criteria".into(),
            violation,
        })?;
        for (k, a) in alternatives.iter().enumerate() {
            if a.rows() != n || a.cols() != n {
                return Err(Error::InvalidProblem(format!(
                    "alternative matrix {} is {}x{}, expected {n}x{n}",
                    k + 1,
                    a.rows(),
                    a.cols()
                )));
            }
            validate_reciprocal(a, tol).map_err(|violation| Error::NotReciprocal {
                matrix: format!("alternatives[{}] ({})", k, criteria_labels[k]),
                violation,
            })?;
        }
        Ok(DecisionProblem {
            criteria_labels,
            alternative_labels,
            criteria,
            alternatives,
        })
    }

    pub fn criteria_labels(&self) -> &[String] {
        &self.criteria_labels
    }

    pub fn alternative_labels(&self) -> &[String] {
        &self.alternative_labels
    }

    pub fn criteria(&self) -> &TropMatrix {
        &self.criteria
    }

    pub fn alternatives(&self) -> &[TropMatrix] {
        &self.alternatives
    }

    pub fn num_criteria(&self) -> usize {
        self.criteria_labels.len()
    }

    pub fn num_alternatives(&self) -> usize {
        self.alternative_labels.len()
    }
}
