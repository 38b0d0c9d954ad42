//! Column-major sparse matrices.

use std::fmt;

use super::sparse::Accumulator;
use super::{Scalar, SparseVec};
use crate::error::{Error, Result};

/// A `rows × cols` matrix stored as sparse columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix { rows: n, cols: n, columns: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns.iter().all(|c| c.max_index().is_none_or(|i| i < rows)));
        Matrix { rows, cols: columns.len(), columns }
    }

    /// Row-major dense input.
    pub fn from_rows<T: Clone + Into<Scalar>>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut pairs: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); c];
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix rows");
            for (j, x) in row.iter().enumerate() {
                let x: Scalar = x.clone().into();
                if !x.is_zero() {
                    pairs[j].push((i, x));
                }
            }
        }
        Matrix::from_columns(r, pairs.into_iter().map(SparseVec::from_sorted_unchecked).collect())
    }

    /// Builds from `(row, col, value)` triples, summing duplicates.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Self {
        let mut pairs: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for (i, j, v) in triplets {
            debug_assert!(i < rows && j < cols);
            pairs[j].push((i, v));
        }
        Matrix::from_columns(rows, pairs.into_iter().map(SparseVec::from_pairs).collect())
    }

    /// The matrix sending basis vector `j` to basis vector `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        Matrix::from_columns(n, perm.iter().map(|&i| SparseVec::unit(i)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<SparseVec> {
        self.columns
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.columns[j].get(i)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.columns.iter().enumerate().all(|(j, c)| {
                c.nnz() == 1 && c.first().is_some_and(|(i, v)| i == j && v.is_one())
            })
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::ZERO; self.cols]; self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for (i, v) in c.iter() {
                out[i][j] = v.clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut pairs: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for (i, v) in c.iter() {
                pairs[i].push((j, v.clone()));
            }
        }
        Matrix::from_columns(self.cols, pairs.into_iter().map(SparseVec::from_sorted_unchecked).collect())
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new(self.rows);
        for (k, x) in v.iter() {
            acc.add_scaled(x, &self.columns[k]);
        }
        acc.take()
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { op: "matrix product", expected: self.cols, found: rhs.rows });
        }
        let mut acc = Accumulator::new(self.rows);
        let columns = rhs
            .columns
            .iter()
            .map(|c| {
                for (k, x) in c.iter() {
                    acc.add_scaled(x, &self.columns[k]);
                }
                acc.take()
            })
            .collect();
        Ok(Matrix::from_columns(self.rows, columns))
    }

    /// Panics on incompatible shapes.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("incompatible matrix shapes")
    }

    pub fn try_add_scaled(&self, c: &Scalar, rhs: &Matrix) -> Result<Matrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch {
                op: "matrix sum",
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        let columns = self.columns.iter().zip(&rhs.columns).map(|(a, b)| a.axpy(c, b)).collect();
        Ok(Matrix::from_columns(self.rows, columns))
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        self.try_add_scaled(&Scalar::ONE, rhs).expect("incompatible matrix shapes")
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.try_add_scaled(&-Scalar::ONE, rhs).expect("incompatible matrix shapes")
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_columns(self.rows, self.columns.iter().map(|col| col.scale(c)).collect())
    }

    /// Kronecker product; row and column index `(i, j)` of the result is `i * dim2 + j`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let (r2, c2) = rhs.shape();
        let mut columns = Vec::with_capacity(self.cols * c2);
        for a in &self.columns {
            for b in &rhs.columns {
                let mut entries = Vec::with_capacity(a.nnz() * b.nnz());
                for (i1, x) in a.iter() {
                    for (i2, y) in b.iter() {
                        entries.push((i1 * r2 + i2, x * y));
                    }
                }
                columns.push(SparseVec::from_sorted_unchecked(entries));
            }
        }
        Matrix::from_columns(self.rows * r2, columns)
    }

    /// `I_left ⊗ self ⊗ I_right`.
    pub fn pad(&self, left: usize, right: usize) -> Matrix {
        let (r, c) = self.shape();
        let mut columns = Vec::with_capacity(left * c * right);
        for l in 0..left {
            for j in 0..c {
                for k in 0..right {
                    let entries = self.columns[j]
                        .iter()
                        .map(|(i, v)| ((l * r + i) * right + k, v.clone()))
                        .collect();
                    columns.push(SparseVec::from_sorted_unchecked(entries));
                }
            }
        }
        Matrix::from_columns(left * r * right, columns)
    }

    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.first().map_or(0, |m| m.rows);
        assert!(blocks.iter().all(|m| m.rows == rows), "hstack row mismatch");
        let columns = blocks.iter().flat_map(|m| m.columns.iter().cloned()).collect();
        Matrix::from_columns(rows, columns)
    }

    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.first().map_or(0, |m| m.cols);
        assert!(blocks.iter().all(|m| m.cols == cols), "vstack column mismatch");
        let mut columns = vec![Vec::new(); cols];
        let mut offset = 0;
        for m in blocks {
            for (j, c) in m.columns.iter().enumerate() {
                columns[j].extend(c.iter().map(|(i, v)| (offset + i, v.clone())));
            }
            offset += m.rows;
        }
        Matrix::from_columns(offset, columns.into_iter().map(SparseVec::from_sorted_unchecked).collect())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_columns(self.rows, idx.iter().map(|&j| self.columns[j].clone()).collect())
    }

    /// Keeps the given rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut pos = vec![usize::MAX; self.rows];
        for (k, &i) in idx.iter().enumerate() {
            pos[i] = k;
        }
        let columns = self
            .columns
            .iter()
            .map(|c| c.filter_map_index(|i| (pos[i] != usize::MAX).then_some(pos[i])))
            .collect();
        Matrix::from_columns(idx.len(), columns)
    }

    pub fn rank(&self) -> usize {
        super::echelon::rank(self)
    }

    /// Some `x` with `self · x = b`, or `None` if `b` is outside the column space.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        assert!(b.max_index().is_none_or(|i| i < self.rows), "right-hand side too long");
        let n = self.cols;
        let mut cols = self.columns.clone();
        cols.push(b.clone());
        let aug = Matrix::from_columns(self.rows, cols);
        // the augmented column is free iff b lies in the column space; its kernel
        // vector is then (-x, 1)
        super::echelon::kernel_basis(&aug)
            .into_iter()
            .find(|v| v.last().map(|(i, _)| i) == Some(n))
            .map(|v| v.filter_map_index(|i| (i < n).then_some(i)).neg())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        if self.rows * self.cols <= 400 {
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
                writeln!(f, "[{}]", cells.join(" "))?;
            }
        }
        Ok(())
    }
}
