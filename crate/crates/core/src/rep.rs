//! Representations of finite groups over ℚ and G-graded vector spaces.
//!
//! Tensor products use the Kronecker convention throughout: basis vector
//! `(i, j)` of `V ⊗ W` has index `i * dim W + j`. Because this indexing is
//! strictly associative, `(U ⊗ V) ⊗ W` and `U ⊗ (V ⊗ W)` are the same indexed
//! space and no associator ever has to be written down.

use std::sync::Arc;

use thiserror::Error;

use crate::group::FinGroup;
use crate::linalg::{Matrix, Scalar, SparseVec, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("expected {expected} matrices, one per group element, found {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("matrix for element {element} is {rows}x{cols}, expected {dim}x{dim}")]
    WrongShape { element: usize, rows: usize, cols: usize, dim: usize },
    #[error("identity element does not act as the identity")]
    IdentityNotIdentity,
    #[error("rho({0}) rho({1}) != rho({0}*{1})")]
    NotMultiplicative(usize, usize),
    #[error("character is not multiplicative at ({0}, {1})")]
    CharacterNotMultiplicative(usize, usize),
    #[error("representations live over different groups")]
    GroupMismatch,
    #[error("degree {degree} of basis vector {index} is not a group element")]
    BadDegree { index: usize, degree: usize },
    #[error("element {h} sends basis vector {index} of degree {g} outside degree {expected}")]
    NotEquivariant { h: usize, index: usize, g: usize, expected: usize },
}

pub(crate) fn same_group(a: &Arc<FinGroup>, b: &Arc<FinGroup>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A representation `ρ: G → GL(V)`, one matrix per group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    group: Arc<FinGroup>,
    dim: usize,
    rho: Vec<Matrix>,
}

impl Rep {
    pub fn new(group: Arc<FinGroup>, dim: usize, rho: Vec<Matrix>) -> Result<Self, RepError> {
        let rep = Rep { group, dim, rho };
        rep.validate()?;
        Ok(rep)
    }

    /// The action is extended from the given generator images; fails if they
    /// do not define a homomorphism.
    pub fn from_generators(group: Arc<FinGroup>, dim: usize, images: &[(usize, Matrix)]) -> Result<Self, RepError> {
        let mut rho: Vec<Option<Matrix>> = vec![None; group.order()];
        rho[group.identity()] = Some(Matrix::identity(dim));
        let mut frontier = vec![group.identity()];
        while let Some(x) = frontier.pop() {
            for (s, m) in images {
                if m.shape() != (dim, dim) {
                    return Err(RepError::WrongShape { element: *s, rows: m.rows(), cols: m.cols(), dim });
                }
                let y = group.mul(x, *s);
                if rho[y].is_none() {
                    rho[y] = Some(rho[x].as_ref().expect("reached").mul(m));
                    frontier.push(y);
                }
            }
        }
        let rho = rho
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(RepError::WrongCount { expected: group.order(), found: images.len() })?;
        Rep::new(group, dim, rho)
    }

    fn validate(&self) -> Result<(), RepError> {
        let g = &self.group;
        if self.rho.len() != g.order() {
            return Err(RepError::WrongCount { expected: g.order(), found: self.rho.len() });
        }
        for (element, m) in self.rho.iter().enumerate() {
            if m.shape() != (self.dim, self.dim) {
                return Err(RepError::WrongShape { element, rows: m.rows(), cols: m.cols(), dim: self.dim });
            }
        }
        if !self.rho[g.identity()].is_identity() && self.dim > 0 {
            return Err(RepError::IdentityNotIdentity);
        }
        for a in g.elements() {
            for b in g.elements() {
                if self.rho[a].mul(&self.rho[b]) != self.rho[g.mul(a, b)] {
                    return Err(RepError::NotMultiplicative(a, b));
                }
            }
        }
        Ok(())
    }

    pub fn trivial(group: Arc<FinGroup>, dim: usize) -> Self {
        let rho = vec![Matrix::identity(dim); group.order()];
        Rep { group, dim, rho }
    }

    /// Permutation representation of a G-set on `0..n`; `action(g, i)` is `g·i`.
    pub fn permutation(group: Arc<FinGroup>, n: usize, action: impl Fn(usize, usize) -> usize) -> Result<Self, RepError> {
        let rho = group
            .elements()
            .map(|g| Matrix::permutation(&(0..n).map(|i| action(g, i)).collect::<Vec<_>>()))
            .collect();
        Rep::new(group, n, rho)
    }

    /// Left regular representation on `kG`.
    pub fn regular(group: Arc<FinGroup>) -> Self {
        let g2 = group.clone();
        Rep::permutation(group, g2.order(), |g, h| g2.mul(g, h)).expect("regular action is a representation")
    }

    /// One-dimensional representation with `ρ(g) = χ(g)`.
    pub fn character(group: Arc<FinGroup>, chi: &[Scalar]) -> Result<Self, RepError> {
        if chi.len() != group.order() {
            return Err(RepError::WrongCount { expected: group.order(), found: chi.len() });
        }
        for a in group.elements() {
            for b in group.elements() {
                if &chi[a] * &chi[b] != chi[group.mul(a, b)] {
                    return Err(RepError::CharacterNotMultiplicative(a, b));
                }
            }
        }
        let rho = chi.iter().map(|c| Matrix::from_rows(&[vec![c.clone()]])).collect();
        Rep::new(group, 1, rho)
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rho(&self, g: usize) -> &Matrix {
        &self.rho[g]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.rho
    }

    /// Action matrices of a generating set of the group.
    pub fn generator_matrices(&self) -> Vec<Matrix> {
        self.group.generators().into_iter().map(|g| self.rho[g].clone()).collect()
    }

    pub fn tensor(&self, other: &Rep) -> Result<Rep, RepError> {
        if !same_group(&self.group, &other.group) {
            return Err(RepError::GroupMismatch);
        }
        let rho = self.rho.iter().zip(&other.rho).map(|(a, b)| a.kron(b)).collect();
        Ok(Rep { group: self.group.clone(), dim: self.dim * other.dim, rho })
    }

    /// Contragredient: `ρ*(g) = ρ(g⁻¹)ᵀ`.
    pub fn dual(&self) -> Rep {
        let rho = self.group.elements().map(|g| self.rho[self.group.inv(g)].transpose()).collect();
        Rep { group: self.group.clone(), dim: self.dim, rho }
    }

    pub fn direct_sum(&self, other: &Rep) -> Result<Rep, RepError> {
        if !same_group(&self.group, &other.group) {
            return Err(RepError::GroupMismatch);
        }
        let rho = self.rho.iter().zip(&other.rho).map(|(a, b)| block_diag(a, b)).collect();
        Ok(Rep { group: self.group.clone(), dim: self.dim + other.dim, rho })
    }

    /// `{v : ρ(g) v = v for all g}`.
    pub fn invariants(&self) -> Subspace {
        Subspace::common_fixed(self.dim, &self.generator_matrices())
    }

    /// Image of the averaging projector `(1/|G|) Σ ρ(g)`.
    pub fn invariants_by_averaging(&self) -> Subspace {
        let mut sum = Matrix::zeros(self.dim, self.dim);
        for m in &self.rho {
            sum = sum.add(m);
        }
        Subspace::image(&sum.scale(&Scalar::ratio(1, self.group.order() as i64)))
    }

    /// Whether `f: self → other` commutes with the actions.
    pub fn is_equivariant(&self, f: &Matrix, other: &Rep) -> bool {
        f.shape() == (other.dim, self.dim)
            && self
                .group
                .generators()
                .into_iter()
                .all(|g| other.rho[g].mul(f) == f.mul(&self.rho[g]))
    }
}

pub(crate) fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let mut cols: Vec<SparseVec> = a.columns().to_vec();
    cols.extend(b.columns().iter().map(|c| c.remap(|i| i + a.rows())));
    Matrix::from_columns(a.rows() + b.rows(), cols)
}

/// Matrices `X: V → W` flattened row-major: entry `X[i][j]` sits at `i * dim V + j`.
pub fn matrix_to_vec(x: &Matrix) -> SparseVec {
    let c = x.cols();
    SparseVec::from_pairs(
        x.columns()
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (i * c + j, v.clone())))
            .collect(),
    )
}

pub fn vec_to_matrix(v: &SparseVec, rows: usize, cols: usize) -> Matrix {
    Matrix::from_triplets(rows, cols, v.iter().map(|(k, x)| (k / cols, k % cols, x.clone())))
}

/// `Hom_G(V, W)` as a subspace of flattened `dim W × dim V` matrices.
pub fn hom_space(v: &Rep, w: &Rep) -> Result<Subspace, RepError> {
    Ok(w.tensor(&v.dual())?.invariants())
}

/// A G-graded space: each basis vector carries a degree in `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    group: Arc<FinGroup>,
    degrees: Vec<usize>,
}

impl GradedSpace {
    pub fn new(group: Arc<FinGroup>, degrees: Vec<usize>) -> Result<Self, RepError> {
        if let Some(index) = degrees.iter().position(|&d| d >= group.order()) {
            return Err(RepError::BadDegree { index, degree: degrees[index] });
        }
        Ok(GradedSpace { group, degrees })
    }

    /// Components laid out in element order: `dims[g]` basis vectors of degree `g`.
    pub fn from_dims(group: Arc<FinGroup>, dims: &[usize]) -> Result<Self, RepError> {
        if dims.len() != group.order() {
            return Err(RepError::WrongCount { expected: group.order(), found: dims.len() });
        }
        let degrees = dims.iter().enumerate().flat_map(|(g, &d)| std::iter::repeat_n(g, d)).collect();
        Ok(GradedSpace { group, degrees })
    }

    pub fn concentrated(group: Arc<FinGroup>, degree: usize, dim: usize) -> Self {
        GradedSpace { group, degrees: vec![degree; dim] }
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Dimension of each homogeneous component, in element order.
    pub fn dims(&self) -> Vec<usize> {
        let mut d = vec![0; self.group.order()];
        for &g in &self.degrees {
            d[g] += 1;
        }
        d
    }

    /// Offset of each component when basis vectors are grouped by degree.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.group.order());
        let mut acc = 0;
        for d in self.dims() {
            off.push(acc);
            acc += d;
        }
        off
    }

    /// Basis indices of degree `g`, in increasing order.
    pub fn component(&self, g: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == g).collect()
    }

    /// A permutation listing basis indices grouped by degree (element order),
    /// and by index within a degree.
    pub fn component_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.dim()).collect();
        idx.sort_by_key(|&i| (self.degrees[i], i));
        idx
    }

    /// Convolution tensor: `(i, j)` has degree `deg i · deg j`.
    pub fn tensor(&self, other: &GradedSpace) -> Result<GradedSpace, RepError> {
        if !same_group(&self.group, &other.group) {
            return Err(RepError::GroupMismatch);
        }
        let degrees = self
            .degrees
            .iter()
            .flat_map(|&x| other.degrees.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.group.mul(x, y))
            .collect();
        Ok(GradedSpace { group: self.group.clone(), degrees })
    }

    pub fn direct_sum(&self, other: &GradedSpace) -> Result<GradedSpace, RepError> {
        if !same_group(&self.group, &other.group) {
            return Err(RepError::GroupMismatch);
        }
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        Ok(GradedSpace { group: self.group.clone(), degrees })
    }

    /// Whether `f: self → other` preserves degrees.
    pub fn is_graded_map(&self, f: &Matrix, other: &GradedSpace) -> bool {
        f.shape() == (other.dim(), self.dim())
            && f.columns()
                .iter()
                .enumerate()
                .all(|(j, c)| c.indices().all(|i| other.degrees[i] == self.degrees[j]))
    }

    /// Degree-preserving matrices `V → W`, flattened as in [`matrix_to_vec`].
    pub fn hom_space(&self, other: &GradedSpace) -> Subspace {
        let n = self.dim();
        Subspace::coordinate(
            other.dim() * n,
            (0..other.dim())
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| other.degrees[i] == self.degrees[j])
                .map(|(i, j)| i * n + j),
        )
    }
}

/// A G-graded space with a compatible G-action: `h` maps degree `g` into
/// degree `h g h⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantGraded {
    graded: GradedSpace,
    action: Rep,
}

impl EquivariantGraded {
    pub fn new(graded: GradedSpace, action: Rep) -> Result<Self, RepError> {
        if !same_group(graded.group(), action.group()) {
            return Err(RepError::GroupMismatch);
        }
        if graded.dim() != action.dim() {
            return Err(RepError::WrongShape { element: 0, rows: action.dim(), cols: action.dim(), dim: graded.dim() });
        }
        let e = EquivariantGraded { graded, action };
        if let Some((h, index, g, expected)) = e.block_violation() {
            return Err(RepError::NotEquivariant { h, index, g, expected });
        }
        Ok(e)
    }

    /// First `(h, basis index, its degree, expected image degree)` at which
    /// the action leaves the conjugated component.
    pub fn block_violation(&self) -> Option<(usize, usize, usize, usize)> {
        let grp = self.graded.group();
        for h in grp.elements() {
            for (j, col) in self.action.rho(h).columns().iter().enumerate() {
                let g = self.graded.degree(j);
                let expected = grp.conj(h, g);
                if col.indices().any(|i| self.graded.degree(i) != expected) {
                    return Some((h, j, g, expected));
                }
            }
        }
        None
    }

    pub fn graded(&self) -> &GradedSpace {
        &self.graded
    }

    pub fn action(&self) -> &Rep {
        &self.action
    }

    pub fn dim(&self) -> usize {
        self.graded.dim()
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        self.graded.group()
    }
}
