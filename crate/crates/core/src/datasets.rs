//! Reference decision problems and matrices used throughout the tests and
//! examples.

use crate::ahp::DecisionProblem;
use crate::algebra::TropMatrix;
use crate::tolerance::Tolerance;

fn labels(s: &[&str]) -> Vec<String> {
    s.iter().map(|x| x.to_string()).collect()
}

fn mat<const N: usize>(rows: [[f64; N]; N]) -> TropMatrix {
    TropMatrix::from_rows(&rows).expect("valid literal matrix")
}

/// Choosing a vacation site: short trips (S), Quebec (Q), Denver (D) and
/// California (C) under five criteria.
pub fn vacation() -> DecisionProblem {
    let c = mat([
        [1.0, 1.0 / 5.0, 1.0 / 5.0, 1.0, 1.0 / 3.0],
        [5.0, 1.0, 1.0 / 5.0, 1.0 / 5.0, 1.0],
        [5.0, 5.0, 1.0, 1.0 / 5.0, 1.0],
        [1.0, 5.0, 5.0, 1.0, 5.0],
        [3.0, 1.0, 1.0, 1.0 / 5.0, 1.0],
    ]);
    let a = vec![
        mat([
            [1.0, 3.0, 7.0, 9.0],
            [1.0 / 3.0, 1.0, 6.0, 7.0],
            [1.0 / 7.0, 1.0 / 6.0, 1.0, 3.0],
            [1.0 / 9.0, 1.0 / 7.0, 1.0 / 3.0, 1.0],
        ]),
        mat([
            [1.0, 1.0 / 5.0, 1.0 / 6.0, 1.0 / 4.0],
            [5.0, 1.0, 2.0, 4.0],
            [6.0, 1.0 / 2.0, 1.0, 6.0],
            [4.0, 1.0 / 4.0, 1.0 / 6.0, 1.0],
        ]),
        mat([
            [1.0, 7.0, 7.0, 1.0 / 2.0],
            [1.0 / 7.0, 1.0, 1.0, 1.0 / 7.0],
            [1.0 / 7.0, 1.0, 1.0, 1.0 / 7.0],
            [2.0, 7.0, 7.0, 1.0],
        ]),
        mat([
            [1.0, 4.0, 1.0 / 4.0, 1.0 / 3.0],
            [1.0 / 4.0, 1.0, 1.0 / 2.0, 3.0],
            [4.0, 2.0, 1.0, 3.0],
            [3.0, 1.0 / 3.0, 1.0 / 3.0, 1.0],
        ]),
        mat([
            [1.0, 1.0, 7.0, 4.0],
            [1.0, 1.0, 6.0, 3.0],
            [1.0 / 7.0, 1.0 / 6.0, 1.0, 1.0 / 4.0],
            [1.0 / 4.0, 1.0 / 3.0, 4.0, 1.0],
        ]),
    ];
    DecisionProblem::new(
        labels(&[
            "cost",
            "sight-seeing",
            "entertainment",
            "way of travel",
            "eating places",
        ]),
        labels(&["S", "Q", "D", "C"]),
        c,
        a,
        &Tolerance::default(),
    )
    .expect("vacation data is reciprocal")
}

/// Choosing among three high schools A, B, C under six criteria.
pub fn school() -> DecisionProblem {
    let c = mat([
        [1.0, 4.0, 3.0, 1.0, 3.0, 4.0],
        [1.0 / 4.0, 1.0, 7.0, 3.0, 1.0 / 5.0, 1.0],
        [1.0 / 3.0, 1.0 / 7.0, 1.0, 1.0 / 5.0, 1.0 / 5.0, 1.0 / 6.0],
        [1.0, 1.0 / 3.0, 5.0, 1.0, 1.0, 1.0 / 3.0],
        [1.0 / 3.0, 5.0, 5.0, 1.0, 1.0, 3.0],
        [1.0 / 4.0, 1.0, 6.0, 3.0, 1.0 / 3.0, 1.0],
    ]);
    let a = vec![
        mat([
            [1.0, 1.0 / 3.0, 1.0 / 2.0],
            [3.0, 1.0, 3.0],
            [2.0, 1.0 / 3.0, 1.0],
        ]),
        mat([[1.0, 1.0, 1.0], [1.0, 1.0, 1.0], [1.0, 1.0, 1.0]]),
        mat([[1.0, 5.0, 1.0], [1.0 / 5.0, 1.0, 1.0 / 5.0], [1.0, 5.0, 1.0]]),
        mat([
            [1.0, 9.0, 7.0],
            [1.0 / 9.0, 1.0, 1.0 / 5.0],
            [1.0 / 7.0, 5.0, 1.0],
        ]),
        mat([[1.0, 1.0 / 2.0, 1.0], [2.0, 1.0, 2.0], [1.0, 1.0 / 2.0, 1.0]]),
        mat([
            [1.0, 6.0, 4.0],
            [1.0 / 6.0, 1.0, 1.0 / 3.0],
            [1.0 / 4.0, 3.0, 1.0],
        ]),
    ];
    DecisionProblem::new(
        labels(&[
            "learning",
            "friends",
            "school life",
            "vocational training",
            "college preparation",
            "music classes",
        ]),
        labels(&["A", "B", "C"]),
        c,
        a,
        &Tolerance::default(),
    )
    .expect("school data is reciprocal")
}

/// A 3×3 Kleene star whose span section is a segment.
pub fn span_segment() -> TropMatrix {
    mat([
        [1.0, 3.0 / 4.0, 1.0 / 2.0],
        [4.0 / 3.0, 1.0, 2.0 / 3.0],
        [2.0 / 3.0, 1.0 / 2.0, 1.0],
    ])
}

/// A 3×3 Kleene star whose span section is a two-dimensional region.
pub fn span_region() -> TropMatrix {
    mat([
        [1.0, 3.0 / 4.0, 1.0 / 2.0],
        [3.0 / 4.0, 1.0, 1.0 / 2.0],
        [1.0 / 2.0, 1.0 / 2.0, 1.0],
    ])
}
