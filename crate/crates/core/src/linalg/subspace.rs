//! Subspaces in canonical form, quotients, and cohomology of a three-term complex.

use super::echelon::{kernel_basis, rank, span_basis};
use super::sparse::Accumulator;
use super::{Matrix, Scalar, SparseVec};
use crate::error::{Error, Result};

/// A subspace of `ℚ^ambient`.
///
/// The basis is canonical: basis vector `j` has its last nonzero entry at
/// `pivots[j]`, equal to 1, and every other basis vector vanishes there.
/// Two subspaces are equal iff their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn from_canonical(ambient: usize, basis: Vec<SparseVec>) -> Self {
        let pivots = basis.iter().map(|b| b.max_index().expect("nonzero basis vector")).collect();
        Subspace { ambient, basis, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_canonical(ambient, (0..ambient).map(SparseVec::unit).collect())
    }

    pub fn span(ambient: usize, vectors: &[SparseVec]) -> Self {
        Subspace::from_canonical(ambient, span_basis(vectors, ambient))
    }

    /// Column space of `m`.
    pub fn image(m: &Matrix) -> Self {
        Subspace::span(m.rows(), m.columns())
    }

    pub fn kernel(m: &Matrix) -> Self {
        Subspace::from_canonical(m.cols(), kernel_basis(m))
    }

    /// Span of the given coordinate vectors.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        Subspace::from_canonical(ambient, idx.into_iter().map(SparseVec::unit).collect())
    }

    /// Common fixed vectors `{v : m v = v for all m}` of square matrices.
    /// Monomial inputs are handled orbit by orbit without elimination.
    pub fn common_fixed(ambient: usize, mats: &[Matrix]) -> Self {
        assert!(mats.iter().all(|m| m.shape() == (ambient, ambient)));
        if mats.iter().all(|m| m.columns().iter().all(|c| c.nnz() == 1)) {
            return Subspace::from_canonical(ambient, monomial_fixed(ambient, mats));
        }
        let id = Matrix::identity(ambient);
        let blocks: Vec<Matrix> = mats.iter().map(|m| m.sub(&id)).collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        Subspace::kernel(&Matrix::vstack(&refs))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Inclusion `ℚ^dim → ℚ^ambient`.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, self.basis.clone())
    }

    /// Coordinates of `v`, or `None` if `v` is not in the subspace.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        self.coords_in(v, &mut Accumulator::new(self.ambient))
    }

    fn coords_in(&self, v: &SparseVec, acc: &mut Accumulator) -> Option<SparseVec> {
        let c: Vec<(usize, Scalar)> = self
            .pivots
            .iter()
            .enumerate()
            .filter_map(|(j, &p)| {
                let x = v.get(p);
                (!x.is_zero()).then_some((j, x))
            })
            .collect();
        for (j, x) in &c {
            acc.add_scaled(x, &self.basis[*j]);
        }
        (acc.take() == *v).then(|| SparseVec::from_sorted_unchecked(c))
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of each column of `m`, as a `dim × m.cols()` matrix.
    pub fn coords_matrix(&self, m: &Matrix, context: &str) -> Result<Matrix> {
        if m.rows() != self.ambient {
            return Err(Error::DimensionMismatch { op: "subspace coordinates", expected: self.ambient, found: m.rows() });
        }
        let mut acc = Accumulator::new(self.ambient);
        let cols = m
            .columns()
            .iter()
            .map(|v| self.coords_in(v, &mut acc).ok_or_else(|| Error::NotInSubspace(context.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.dim(), cols))
    }

    /// Matrix of `f: ambient(src) → ambient(self)` restricted to `src → self`.
    /// Fails if `f` does not carry `src` into `self`.
    pub fn restrict(&self, f: &Matrix, src: &Subspace, context: &str) -> Result<Matrix> {
        if f.cols() != src.ambient {
            return Err(Error::DimensionMismatch { op: "restriction", expected: src.ambient, found: f.cols() });
        }
        self.coords_matrix(&f.mul(&src.basis_matrix()), context)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &v)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        // x in self ∩ other  ⟺  [B_self | -B_other] (a, b) = 0
        let a = self.basis_matrix();
        let b = other.basis_matrix().scale(&-Scalar::ONE);
        let k = Subspace::kernel(&Matrix::hstack(&[&a, &b]));
        let vs: Vec<SparseVec> = k
            .basis
            .iter()
            .map(|c| a.mul_vec(&c.filter_map_index(|i| (i < self.dim()).then_some(i))))
            .collect();
        Subspace::span(self.ambient, &vs)
    }
}

fn monomial_fixed(n: usize, mats: &[Matrix]) -> Vec<SparseVec> {
    let mut coeff: Vec<Option<Scalar>> = vec![None; n];
    let mut out = Vec::new();
    for start in 0..n {
        if coeff[start].is_some() {
            continue;
        }
        coeff[start] = Some(Scalar::ONE);
        let mut orbit = vec![start];
        let mut consistent = true;
        let mut k = 0;
        while k < orbit.len() {
            let i = orbit[k];
            k += 1;
            let ci = coeff[i].clone().expect("visited");
            for m in mats {
                let (j, a) = m.col(i).first().expect("monomial column");
                // (m v)_j = a v_i must equal v_j
                let cj = a * &ci;
                match &coeff[j] {
                    None => {
                        coeff[j] = Some(cj);
                        orbit.push(j);
                    }
                    Some(c) if *c != cj => consistent = false,
                    Some(_) => {}
                }
            }
        }
        if consistent {
            let top = *orbit.iter().max().expect("nonempty orbit");
            let inv = coeff[top].clone().expect("visited").recip();
            let v = SparseVec::from_pairs(orbit.iter().map(|&i| (i, coeff[i].as_ref().expect("visited") * &inv)).collect());
            out.push((top, v));
        }
    }
    out.sort_by_key(|(p, _)| *p);
    out.into_iter().map(|(_, v)| v).collect()
}

/// `ℚ^ambient / W` with explicit projection and section.
///
/// The quotient basis is indexed by the coordinates that are not pivots of `W`;
/// the section sends quotient basis vector `k` to the unit vector at the `k`-th
/// such coordinate.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    ambient: usize,
    free: Vec<usize>,
    projection: Matrix,
}

impl QuotientPresentation {
    pub fn new(w: &Subspace) -> Self {
        let n = w.ambient;
        let mut pos = vec![usize::MAX; n];
        let mut is_pivot = vec![false; n];
        for &p in &w.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&i| !is_pivot[i]).collect();
        for (k, &i) in free.iter().enumerate() {
            pos[i] = k;
        }
        let mut cols = vec![SparseVec::new(); n];
        for &i in &free {
            cols[i] = SparseVec::unit(pos[i]);
        }
        for (b, &p) in w.basis.iter().zip(&w.pivots) {
            cols[p] = b.filter_map_index(|i| (i != p).then_some(pos[i])).neg();
        }
        let q = free.len();
        QuotientPresentation { ambient: n, free, projection: Matrix::from_columns(q, cols) }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn free_coordinates(&self) -> &[usize] {
        &self.free
    }

    /// `ℚ^ambient → quotient`.
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// `quotient → ℚ^ambient`, a right inverse of the projection.
    pub fn section(&self) -> Matrix {
        Matrix::from_columns(self.ambient, self.free.iter().map(|&i| SparseVec::unit(i)).collect())
    }

    pub fn project(&self, v: &SparseVec) -> SparseVec {
        self.projection.mul_vec(v)
    }
}

/// Dimension of `ker d_out / im d_in` for `V_{n-1} → V_n → V_{n+1}`.
pub fn cohomology_at(d_in: &Matrix, d_out: &Matrix, degree: usize) -> Result<usize> {
    if d_in.rows() != d_out.cols() {
        return Err(Error::DimensionMismatch { op: "cohomology", expected: d_out.cols(), found: d_in.rows() });
    }
    if !d_out.mul(d_in).is_zero() {
        return Err(Error::NotAComplex { degree });
    }
    Ok(d_out.cols() - rank(d_out) - rank(d_in))
}
