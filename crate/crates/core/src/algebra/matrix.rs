use std::fmt;

use super::scalar::{self, conj};
use super::vector::TropVector;
use crate::error::{mismatch, Error, Result};
use crate::tolerance::Tolerance;

/// Dense row-major matrix over the max-times semiring.
#[derive(Debug, Clone, PartialEq)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl TropMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if data.len() != rows * cols {
            return Err(mismatch(
                format!("{} entries for a {rows}x{cols} matrix", rows * cols),
                data.len(),
            ));
        }
        if let Some((k, &v)) = data.iter().enumerate().find(|(_, v)| !scalar::is_valid(**v)) {
            return Err(Error::InvalidEntry {
                row: k / cols,
                col: k % cols,
                value: v,
            });
        }
        Ok(TropMatrix { rows, cols, data })
    }

    /// Builds a matrix from row slices; all rows must have equal length.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(mismatch(format!("row of length {cols}"), r.len()));
            }
            data.extend_from_slice(r);
        }
        TropMatrix::new(rows.len(), cols, data)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[TropVector]) -> Result<Self> {
        let first = columns.first().ok_or(Error::Empty)?;
        let rows = first.dim();
        let cols = columns.len();
        let mut data = vec![0.0; rows * cols];
        for (j, c) in columns.iter().enumerate() {
            first.check_dim(c)?;
            for i in 0..rows {
                data[i * cols + j] = c[i];
            }
        }
        Ok(TropMatrix { rows, cols, data })
    }

    pub(crate) fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        TropMatrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        TropMatrix::from_fn(n, n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        TropMatrix::from_fn(rows, cols, |_, _| 0.0)
    }

    /// The all-ones matrix `11ᵀ`.
    pub fn ones(rows: usize, cols: usize) -> Self {
        TropMatrix::from_fn(rows, cols, |_, _| 1.0)
    }

    /// Outer product `p q⁻` of a column vector and the conjugate of another.
    pub fn outer_conj(p: &TropVector, q: &TropVector) -> Self {
        TropMatrix::from_fn(p.dim(), q.dim(), |i, j| p[i] * conj(q[j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> TropVector {
        TropVector::from_vec_unchecked((0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn columns(&self) -> impl Iterator<Item = TropVector> + '_ {
        (0..self.cols).map(|j| self.column(j))
    }

    /// Submatrix of the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Result<Self> {
        if cols.is_empty() {
            return Err(Error::Empty);
        }
        Ok(TropMatrix::from_fn(self.rows, cols.len(), |i, j| {
            self.get(i, cols[j])
        }))
    }

    pub fn is_positive(&self) -> bool {
        self.data.iter().all(|&v| v > 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0.0)
    }

    pub fn max_entry(&self) -> f64 {
        self.data.iter().copied().fold(0.0, f64::max)
    }

    pub fn transpose(&self) -> Self {
        TropMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn scale(&self, c: f64) -> Self {
        TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    /// Entrywise maximum `A ⊕ B`.
    pub fn oplus(&self, other: &TropMatrix) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.max(*b))
                .collect(),
        })
    }

    /// Max-times product, `(AB)_ij = max_k a_ik b_kj`.
    pub fn mat_mul(&self, other: &TropMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(mismatch(
                format!("{} rows in right factor", self.cols),
                other.rows,
            ));
        }
        let mut out = vec![0.0; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                let dst = &mut out[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(other.row(k)) {
                    let v = a * b;
                    if v > *d {
                        *d = v;
                    }
                }
            }
        }
        Ok(TropMatrix {
            rows: self.rows,
            cols: other.cols,
            data: out,
        })
    }

    /// Max-times matrix-vector product.
    pub fn mul_vec(&self, x: &TropVector) -> Result<TropVector> {
        if self.cols != x.dim() {
            return Err(mismatch(format!("vector of dim {}", self.cols), x.dim()));
        }
        Ok(TropVector::from_vec_unchecked(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(x.iter())
                        .map(|(a, b)| a * b)
                        .fold(0.0, f64::max)
                })
                .collect(),
        ))
    }

    /// Multiplicative conjugate transpose `A⁻`: entry `(i, j)` is `1/a_ji`,
    /// or zero where `a_ji` is zero.
    pub fn conjugate_transpose(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroMatrix);
        }
        Ok(TropMatrix::from_fn(self.cols, self.rows, |i, j| {
            conj(self.get(j, i))
        }))
    }

    /// Tropical power `A^p` with `A^0 = I`.
    pub fn power(&self, p: u32) -> Result<Self> {
        self.check_square()?;
        let mut acc = TropMatrix::identity(self.rows);
        for _ in 0..p {
            acc = acc.mat_mul(self)?;
        }
        Ok(acc)
    }

    /// Tropical trace, `max_i a_ii`.
    pub fn trace(&self) -> Result<f64> {
        self.check_square()?;
        Ok((0..self.rows).map(|i| self.get(i, i)).fold(0.0, f64::max))
    }

    /// `Tr(A) = tr A ⊕ tr A² ⊕ … ⊕ tr Aⁿ`.
    pub fn tr_sum(&self) -> Result<f64> {
        Ok(self.trace_powers()?.into_iter().fold(0.0, f64::max))
    }

    /// Spectral radius: the maximum cycle geometric mean,
    /// `λ = ⊕_{m=1..n} tr^{1/m}(A^m)`.
    pub fn spectral_radius(&self) -> Result<f64> {
        Ok(self
            .trace_powers()?
            .into_iter()
            .enumerate()
            .map(|(m, t)| {
                if t == 0.0 {
                    0.0
                } else {
                    t.powf(1.0 / (m as f64 + 1.0))
                }
            })
            .fold(0.0, f64::max))
    }

    fn trace_powers(&self) -> Result<Vec<f64>> {
        self.check_square()?;
        let mut traces = Vec::with_capacity(self.rows);
        let mut pow = self.clone();
        traces.push(pow.trace()?);
        for _ in 1..self.rows {
            pow = pow.mat_mul(self)?;
            traces.push(pow.trace()?);
        }
        Ok(traces)
    }

    /// Kleene star `A* = I ⊕ A ⊕ … ⊕ A^{n-1}`, defined when `Tr(A) ≤ 1`.
    ///
    /// `Tr(A)` may exceed one by at most `tol.rel_eq`.
    pub fn kleene_star(&self, tol: &Tolerance) -> Result<Self> {
        let tr = self.tr_sum()?;
        if !tol.le(tr, 1.0) {
            return Err(Error::TrExceedsOne { tr });
        }
        Ok(self.kleene_star_unchecked())
    }

    pub(crate) fn kleene_star_unchecked(&self) -> Self {
        let n = self.rows;
        let mut star = TropMatrix::identity(n);
        let mut pow = TropMatrix::identity(n);
        for _ in 1..n {
            pow = pow.mat_mul(self).expect("square");
            star = star.oplus(&pow).expect("same shape");
        }
        star
    }

    /// `x⁻ A x = max_{i,j} a_ij x_j / x_i` for positive `x`.
    pub fn quad_form(&self, x: &TropVector) -> Result<f64> {
        self.check_square()?;
        if x.dim() != self.rows {
            return Err(mismatch(format!("vector of dim {}", self.rows), x.dim()));
        }
        if !x.is_positive() {
            return Err(Error::NotPositive { what: "vector x" });
        }
        let ax = self.mul_vec(x)?;
        Ok(ax.iter().zip(x.iter()).map(|(a, b)| a / b).fold(0.0, f64::max))
    }

    /// `1ᵀ A 1`, the largest entry.
    pub fn sum_all(&self) -> f64 {
        self.max_entry()
    }

    /// Entrywise approximate equality under a relative tolerance.
    pub fn approx_eq(&self, other: &TropMatrix, tol: &Tolerance) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| tol.eq(*a, *b))
    }

    /// Entrywise `self ≤ other` up to the relative tolerance.
    pub fn approx_le(&self, other: &TropMatrix, tol: &Tolerance) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| tol.le(*a, *b))
    }

    pub(crate) fn check_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &TropMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(mismatch(
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| format!("{v:>10.4}")).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
