//! Geometry of tropical column spans: Hilbert seminorm, collinearity,
//! generator reduction and plane sections of three-dimensional spans.

use crate::algebra::{TropMatrix, TropVector};
use crate::error::{mismatch, Error, Result};
use crate::tolerance::Tolerance;

/// `(max_i x_i) / (min_j x_j)` for a positive vector; the Hilbert seminorm
/// without the logarithm.
pub fn hilbert_seminorm(x: &TropVector) -> Result<f64> {
    if !x.is_positive() {
        return Err(Error::NotPositive { what: "vector x" });
    }
    Ok(x.max() / x.min())
}

/// Whether `x = c y` for some `c > 0`, up to `tol.rel_eq` on the ratio spread.
pub fn is_collinear(x: &TropVector, y: &TropVector, tol: &Tolerance) -> Result<bool> {
    x.check_dim(y)?;
    if !x.is_positive() || !y.is_positive() {
        return Err(Error::NotPositive { what: "vectors" });
    }
    Ok(collinear_nonneg(x, y, tol))
}

// Nonnegative version: equal supports and a constant ratio on the support.
fn collinear_nonneg(x: &TropVector, y: &TropVector, tol: &Tolerance) -> bool {
    let mut lo = f64::INFINITY;
    let mut hi: f64 = 0.0;
    for (a, b) in x.iter().zip(y.iter()) {
        match (a > 0.0, b > 0.0) {
            (true, true) => {
                let r = a / b;
                lo = lo.min(r);
                hi = hi.max(r);
            }
            (false, false) => {}
            _ => return false,
        }
    }
    hi == 0.0 || tol.eq(hi, lo)
}

/// Drops every vector collinear with an earlier one; first occurrence wins.
pub(crate) fn dedup_collinear(cols: Vec<TropVector>, tol: &Tolerance) -> Vec<TropVector> {
    let mut kept: Vec<TropVector> = Vec::with_capacity(cols.len());
    for c in cols {
        if c.is_zero() {
            continue;
        }
        if !kept.iter().any(|k| collinear_nonneg(k, &c, tol)) {
            kept.push(c);
        }
    }
    kept
}

/// Whether `c` lies in the column span of `s`, by residuation: with
/// `y_j = min_i c_i / s_ij`, `c` is in the span iff `S y = c`.
pub fn in_span(s: &TropMatrix, c: &TropVector, tol: &Tolerance) -> Result<bool> {
    if c.dim() != s.rows() {
        return Err(mismatch(format!("vector of dim {}", s.rows()), c.dim()));
    }
    if !s.is_positive() {
        return Err(Error::NotPositive { what: "matrix S" });
    }
    let y: Vec<f64> = (0..s.cols())
        .map(|j| {
            (0..s.rows())
                .map(|i| c[i] / s.get(i, j))
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    let sy = s.mul_vec(&TropVector::from_vec_unchecked(y))?;
    let matches = sy.iter().zip(c.iter()).all(|(a, b)| tol.eq(a, b));
    Ok(matches)
}

/// Reduces a positive generator matrix to a set of essential columns without
/// changing its span.
///
/// Collinear duplicates go first (keeping the first occurrence); then each
/// remaining column, in order, is dropped if it lies in the span of the other
/// columns still kept.
pub fn reduce_generators(s: &TropMatrix, tol: &Tolerance) -> Result<TropMatrix> {
    if !s.is_positive() {
        return Err(Error::NotPositive { what: "matrix S" });
    }
    let mut kept = dedup_collinear(s.columns().collect(), tol);
    let mut j = 0;
    while j < kept.len() && kept.len() > 1 {
        let others: Vec<TropVector> = kept
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != j)
            .map(|(_, c)| c.clone())
            .collect();
        if in_span(&TropMatrix::from_columns(&others)?, &kept[j], tol)? {
            kept.remove(j);
        } else {
            j += 1;
        }
    }
    TropMatrix::from_columns(&kept)
}

/// Section of a three-dimensional span by the plane `x₃ = 1`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SectionPlot {
    pub points: Vec<[f64; 2]>,
    pub segments: Vec<[[f64; 2]; 2]>,
    /// One tag per point: `g<j>` for generators, `b<i>` for segment
    /// breakpoints, prefixed by `<block>.` in a union of block sections.
    pub labels: Vec<String>,
}

impl SectionPlot {
    fn add_point(&mut self, p: [f64; 2], label: String) {
        if !self.points.iter().any(|q| same_point(*q, p)) {
            self.points.push(p);
            self.labels.push(label);
        }
    }

    fn add_segment(&mut self, a: [f64; 2], b: [f64; 2]) {
        if same_point(a, b) {
            return;
        }
        let dup = self.segments.iter().any(|[p, q]| {
            (same_point(*p, a) && same_point(*q, b)) || (same_point(*p, b) && same_point(*q, a))
        });
        if !dup {
            self.segments.push([a, b]);
        }
    }

    /// Merges another section into this one.
    pub fn extend(&mut self, other: SectionPlot) {
        for (p, l) in other.points.into_iter().zip(other.labels) {
            self.add_point(p, l);
        }
        for [a, b] in other.segments {
            self.add_segment(a, b);
        }
    }

    pub fn has_point(&self, p: [f64; 2], eps: f64) -> bool {
        self.points
            .iter()
            .any(|q| (q[0] - p[0]).abs() <= eps && (q[1] - p[1]).abs() <= eps)
    }

    pub fn has_segment(&self, a: [f64; 2], b: [f64; 2], eps: f64) -> bool {
        let close = |p: [f64; 2], q: [f64; 2]| (p[0] - q[0]).abs() <= eps && (p[1] - q[1]).abs() <= eps;
        self.segments
            .iter()
            .any(|[p, q]| (close(*p, a) && close(*q, b)) || (close(*p, b) && close(*q, a)))
    }
}

fn same_point(a: [f64; 2], b: [f64; 2]) -> bool {
    let tol = Tolerance::default();
    tol.eq(a[0], b[0]) && tol.eq(a[1], b[1])
}

/// Plane section `{x : x₃ = 1}` of the span of a positive `3×d` matrix.
///
/// Each generator is scaled to last coordinate one. Between every pair of
/// generators the tropical segment is traced as a polyline: it runs from `a`
/// through the breakpoints of `a ⊕ βb` up to `a ⊕ b`, then through those of
/// `αa ⊕ b` down to `b`.
pub fn section_at_unit_last_coord(s: &TropMatrix) -> Result<SectionPlot> {
    if s.rows() != 3 {
        return Err(mismatch("3 rows", s.rows()));
    }
    if !s.is_positive() {
        return Err(Error::NotPositive { what: "matrix S" });
    }
    let gens: Vec<[f64; 2]> = s.columns().map(|c| [c[0] / c[2], c[1] / c[2]]).collect();
    let mut plot = SectionPlot::default();
    for (j, g) in gens.iter().enumerate() {
        plot.add_point(*g, format!("g{}", j + 1));
    }
    let mut bp = 0;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let path = tropical_segment(gens[i], gens[j]);
            if path.len() < 2 {
                continue;
            }
            for w in path.windows(2) {
                plot.add_segment(w[0], w[1]);
            }
            for v in &path[1..path.len() - 1] {
                bp += 1;
                plot.add_point(*v, format!("b{bp}"));
            }
        }
    }
    Ok(plot)
}

/// Union of the sections of several spans (e.g. the per-pair blocks of a
/// maximization cone).
pub fn section_of_blocks(blocks: &[TropMatrix]) -> Result<SectionPlot> {
    let mut plot = SectionPlot::default();
    for (i, b) in blocks.iter().enumerate() {
        let mut part = section_at_unit_last_coord(b)?;
        for l in &mut part.labels {
            *l = format!("{}.{l}", i + 1);
        }
        plot.extend(part);
    }
    Ok(plot)
}

// Vertices of the tropical segment between two points of the plane x₃ = 1.
fn tropical_segment(a: [f64; 2], b: [f64; 2]) -> Vec<[f64; 2]> {
    let join = |x: [f64; 2], y: [f64; 2], t: f64| [x[0].max(t * y[0]), x[1].max(t * y[1])];
    let mut path = vec![a];
    let push = |p: [f64; 2], path: &mut Vec<[f64; 2]>| {
        if !same_point(*path.last().unwrap(), p) {
            path.push(p);
        }
    };
    let mut up: Vec<f64> = (0..2).map(|i| a[i] / b[i]).filter(|&t| t < 1.0).collect();
    up.sort_by(f64::total_cmp);
    for t in up {
        push(join(a, b, t), &mut path);
    }
    push(join(a, b, 1.0), &mut path);
    let mut down: Vec<f64> = (0..2).map(|i| b[i] / a[i]).filter(|&t| t < 1.0).collect();
    down.sort_by(|x, y| y.total_cmp(x));
    for t in down {
        push(join(b, a, t), &mut path);
    }
    push(b, &mut path);
    simplify(path)
}

// Drops interior vertices lying on a straight line with their neighbours.
fn simplify(path: Vec<[f64; 2]>) -> Vec<[f64; 2]> {
    let mut out: Vec<[f64; 2]> = Vec::with_capacity(path.len());
    for p in path {
        if out.len() >= 2 {
            let a = out[out.len() - 2];
            let b = out[out.len() - 1];
            let cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
            let scale = (b[0] - a[0]).hypot(b[1] - a[1]) * (p[0] - a[0]).hypot(p[1] - a[1]);
            if cross.abs() <= 1e-12 * scale.max(f64::MIN_POSITIVE) {
                out.pop();
            }
        }
        out.push(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[f64]) -> TropVector {
        TropVector::new(x.to_vec()).unwrap()
    }

    #[test]
    fn seminorm_basics() {
        assert_eq!(hilbert_seminorm(&v(&[3.0, 3.0, 3.0])).unwrap(), 1.0);
        assert_eq!(hilbert_seminorm(&v(&[1.0, 4.0, 2.0])).unwrap(), 4.0);
        assert_eq!(hilbert_seminorm(&v(&[2.0, 8.0, 4.0])).unwrap(), 4.0);
        assert!(hilbert_seminorm(&v(&[1.0, 0.0])).is_err());
    }

    #[test]
    fn collinearity() {
        let tol = Tolerance::default();
        assert!(is_collinear(&v(&[1.0, 2.0]), &v(&[3.0, 6.0]), &tol).unwrap());
        assert!(!is_collinear(&v(&[1.0, 2.0]), &v(&[2.0, 1.0]), &tol).unwrap());
        assert!(is_collinear(&v(&[1.0, 2.0]), &v(&[1.0, 2.0, 3.0]), &tol).is_err());
    }

    #[test]
    fn dedup_respects_support() {
        let tol = Tolerance::default();
        let cols = vec![v(&[1.0, 0.0]), v(&[2.0, 0.0]), v(&[1.0, 1.0]), v(&[0.0, 0.0])];
        assert_eq!(dedup_collinear(cols, &tol).len(), 2);
    }

    #[test]
    fn reduce_drops_max_combination() {
        let tol = Tolerance::default();
        // third column = max of the first two
        let s = TropMatrix::from_rows(&[[1.0, 0.5, 1.0], [0.2, 1.0, 1.0], [0.3, 0.3, 0.3]]).unwrap();
        let r = reduce_generators(&s, &tol).unwrap();
        assert_eq!(r.cols(), 2);
        assert_eq!(r.column(0), s.column(0));
        assert_eq!(r.column(1), s.column(1));
    }

    #[test]
    fn section_single_generator() {
        let s = TropMatrix::from_rows(&[[0.5], [2.0], [1.0]]).unwrap();
        let plot = section_at_unit_last_coord(&s).unwrap();
        assert_eq!(plot.points, vec![[0.5, 2.0]]);
        assert!(plot.segments.is_empty());
        assert!(section_at_unit_last_coord(&TropMatrix::ones(2, 2)).is_err());
    }

    #[test]
    fn segment_with_bend() {
        // a = (1, 2), b = (2, 1): path (1,2) -> (2,2) -> (2,1)
        let s = TropMatrix::from_rows(&[[1.0, 2.0], [2.0, 1.0], [1.0, 1.0]]).unwrap();
        let plot = section_at_unit_last_coord(&s).unwrap();
        assert_eq!(plot.segments.len(), 2);
        assert!(plot.has_segment([1.0, 2.0], [2.0, 2.0], 1e-12));
        assert!(plot.has_segment([2.0, 2.0], [2.0, 1.0], 1e-12));
        assert!(plot.has_point([2.0, 2.0], 1e-12));
    }
}
