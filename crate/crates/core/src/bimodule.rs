//! Bimodules over an algebra in `Rep(G)` or `Vec_G`, relative tensor products,
//! and the free bimodules `A ⊗ Q ⊗ A`.

use std::sync::Arc;

use crate::algebra::AlgebraData;
use crate::category::Obj;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, QuotientPresentation, Scalar, SparseVec, Subspace};
use crate::rep::{matrix_to_vec, vec_to_matrix};

/// An `A`-bimodule `S` with `left: A ⊗ S → S` and `right: S ⊗ A → S`.
#[derive(Clone, Debug)]
pub struct BimoduleData {
    algebra: Arc<AlgebraData>,
    obj: Obj,
    left: Matrix,
    right: Matrix,
}

impl BimoduleData {
    pub fn new(algebra: Arc<AlgebraData>, obj: Obj, left: Matrix, right: Matrix) -> Result<Self> {
        let b = BimoduleData { algebra, obj, left, right };
        match b.check() {
            None => Ok(b),
            Some(msg) => Err(Error::InvalidModule(msg)),
        }
    }

    pub fn new_unchecked(algebra: Arc<AlgebraData>, obj: Obj, left: Matrix, right: Matrix) -> Self {
        BimoduleData { algebra, obj, left, right }
    }

    /// `A` acting on itself from both sides.
    pub fn regular(algebra: &Arc<AlgebraData>) -> Self {
        BimoduleData {
            algebra: algebra.clone(),
            obj: algebra.obj().clone(),
            left: algebra.mult().clone(),
            right: algebra.mult().clone(),
        }
    }

    /// The free bimodule `P = A ⊗ Q ⊗ A` together with its augmentation
    /// `P → A`, `a ⊗ q ⊗ b ↦ ε(q) a b`, for a morphism `ε: Q → 1`.
    pub fn free(algebra: &Arc<AlgebraData>, q: &Obj, eps: &Matrix) -> Result<(Self, Matrix)> {
        let (a, dq) = (algebra.dim(), q.dim());
        if eps.shape() != (1, dq) {
            return Err(Error::DimensionMismatch { op: "augmentation", expected: dq, found: eps.cols() });
        }
        if !q.is_morphism(eps, &algebra.category().unit_object()) {
            return Err(Error::InvalidModule("augmentation is not a morphism".into()));
        }
        if eps.is_zero() {
            return Err(Error::InvalidModule("augmentation is not surjective".into()));
        }
        let obj = algebra.obj().tensor(q)?.tensor(algebra.obj())?;
        let left = algebra.mult().pad(1, dq * a);
        let right = algebra.mult().pad(a * dq, 1);
        let aug = algebra.mult().mul(&Matrix::identity(a).kron(eps).kron(&Matrix::identity(a)));
        let p = BimoduleData::new(algebra.clone(), obj, left, right)?;
        if !p.is_bimodule_map(&aug, &BimoduleData::regular(algebra)) {
            return Err(Error::InvalidModule("augmentation is not a bimodule map".into()));
        }
        Ok((p, aug))
    }

    pub fn algebra(&self) -> &Arc<AlgebraData> {
        &self.algebra
    }

    pub fn obj(&self) -> &Obj {
        &self.obj
    }

    pub fn dim(&self) -> usize {
        self.obj.dim()
    }

    pub fn left(&self) -> &Matrix {
        &self.left
    }

    pub fn right(&self) -> &Matrix {
        &self.right
    }

    /// Description of the first failed bimodule axiom.
    pub fn check(&self) -> Option<String> {
        let (a, s) = (self.algebra.dim(), self.dim());
        if self.left.shape() != (s, a * s) || self.right.shape() != (s, s * a) {
            return Some("action matrices have the wrong shape".into());
        }
        let m = self.algebra.mult();
        let ia = Matrix::identity(a);
        let is = Matrix::identity(s);
        if self.left.mul(&m.kron(&is)) != self.left.mul(&ia.kron(&self.left)) {
            return Some("left action is not associative".into());
        }
        if self.right.mul(&is.kron(m)) != self.right.mul(&self.right.kron(&ia)) {
            return Some("right action is not associative".into());
        }
        let u = self.algebra.unit_matrix();
        if !self.left.mul(&u.kron(&is)).is_identity() {
            return Some("unit does not act as the identity on the left".into());
        }
        if !self.right.mul(&is.kron(&u)).is_identity() {
            return Some("unit does not act as the identity on the right".into());
        }
        if self.left.mul(&ia.kron(&self.right)) != self.right.mul(&self.left.kron(&ia)) {
            return Some("left and right actions do not commute".into());
        }
        let ao = self.algebra.obj();
        if !ao.tensor(&self.obj).is_ok_and(|x| x.is_morphism(&self.left, &self.obj)) {
            return Some("left action is not a morphism".into());
        }
        if !self.obj.tensor(ao).is_ok_and(|x| x.is_morphism(&self.right, &self.obj)) {
            return Some("right action is not a morphism".into());
        }
        None
    }

    /// Whether `f: self → other` is a morphism of bimodules in the category.
    pub fn is_bimodule_map(&self, f: &Matrix, other: &BimoduleData) -> bool {
        let ia = Matrix::identity(self.algebra.dim());
        f.shape() == (other.dim(), self.dim())
            && self.obj.is_morphism(f, &other.obj)
            && f.mul(&self.left) == other.left.mul(&ia.kron(f))
            && f.mul(&self.right) == other.right.mul(&f.kron(&ia))
    }

    /// All bimodule maps `self → other`, as flattened `dim other × dim self` matrices.
    pub fn bimodule_maps(&self, other: &BimoduleData) -> Result<Subspace> {
        let (s, t) = (self.dim(), other.dim());
        let ia = Matrix::identity(self.algebra.dim());
        let constraint_cols: Vec<SparseVec> = (0..t * s)
            .map(|k| {
                let f = vec_to_matrix(&SparseVec::unit(k), t, s);
                let l = f.mul(&self.left).sub(&other.left.mul(&ia.kron(&f)));
                let r = f.mul(&self.right).sub(&other.right.mul(&f.kron(&ia)));
                let lv = matrix_to_vec(&l);
                let off = l.rows() * l.cols();
                lv.add(&matrix_to_vec(&r).remap(|i| i + off))
            })
            .collect();
        let rows = t * self.algebra.dim() * s * 2;
        let module = Subspace::kernel(&Matrix::from_columns(rows, constraint_cols));
        Ok(module.intersection(&self.obj.hom_space(&other.obj)?))
    }

    /// `S ⊗_A T` as the quotient of `S ⊗ T` by the image of `r ⊗ 1 - 1 ⊗ l`,
    /// with the induced outer actions.
    pub fn tensor_over(&self, other: &BimoduleData) -> Result<RelativeTensor> {
        if self.algebra != other.algebra {
            return Err(Error::CategoryMismatch("bimodules over different algebras".into()));
        }
        let (s, t, a) = (self.dim(), other.dim(), self.algebra.dim());
        let rel = self.right.kron(&Matrix::identity(t)).sub(&Matrix::identity(s).kron(&other.left));
        let q = QuotientPresentation::new(&Subspace::image(&rel));
        let sec = q.section();
        let plain = self.obj.tensor(&other.obj)?;
        let obj = plain.subquotient(q.projection(), &sec);
        let left = q.projection().mul(&self.left.kron(&Matrix::identity(t))).mul(&Matrix::identity(a).kron(&sec));
        let right = q.projection().mul(&Matrix::identity(s).kron(&other.right)).mul(&sec.kron(&Matrix::identity(a)));
        let bimodule = BimoduleData::new(self.algebra.clone(), obj, left, right)?;
        Ok(RelativeTensor { bimodule, quotient: q })
    }
}

/// `S ⊗_A T` with its presentation as a quotient of `S ⊗ T`.
#[derive(Clone, Debug)]
pub struct RelativeTensor {
    pub bimodule: BimoduleData,
    pub quotient: QuotientPresentation,
}

impl RelativeTensor {
    /// The map `S ⊗_A T → S' ⊗_A T'` induced by a linear map `S ⊗ T → S' ⊗ T'`
    /// on representatives; fails unless it respects the relations.
    pub fn induced(&self, target: &RelativeTensor, f: &Matrix) -> Result<Matrix> {
        induced_on_quotients(&self.quotient, &target.quotient, f)
    }
}

/// `π_dst ∘ f ∘ σ_src`, after checking `f` maps the relations of `src` into those of `dst`.
pub fn induced_on_quotients(src: &QuotientPresentation, dst: &QuotientPresentation, f: &Matrix) -> Result<Matrix> {
    if f.shape() != (dst.ambient(), src.ambient()) {
        return Err(Error::DimensionMismatch { op: "induced map", expected: dst.ambient() * src.ambient(), found: f.rows() * f.cols() });
    }
    let pf = dst.projection().mul(f);
    // relations of src are spanned by e_p - section(projection(e_p)) at its pivots
    let sec = src.section();
    let diff = pf.sub(&pf.mul(&sec).mul(src.projection()));
    if !diff.is_zero() {
        return Err(Error::NotWellDefined("map does not respect the tensor relations".into()));
    }
    Ok(pf.mul(&sec))
}

/// `S^{⊗_A k}` presented as a quotient of the plain power `S^{⊗k}` by all
/// junction relations; `k = 0` gives `A` itself.
#[derive(Clone, Debug)]
pub struct RelativePower {
    pub k: usize,
    pub quotient: QuotientPresentation,
}

impl RelativePower {
    pub fn new(s: &BimoduleData, k: usize) -> Self {
        if k == 0 {
            return RelativePower { k, quotient: QuotientPresentation::new(&Subspace::zero(s.algebra.dim())) };
        }
        let d = s.dim();
        let junction = s.right.kron(&Matrix::identity(d)).sub(&Matrix::identity(d).kron(&s.left));
        let mut rels = Vec::new();
        for j in 0..k.saturating_sub(1) {
            rels.extend(junction.pad(d.pow(j as u32), d.pow((k - 2 - j) as u32)).into_columns());
        }
        let w = Subspace::span(d.pow(k as u32), &rels);
        RelativePower { k, quotient: QuotientPresentation::new(&w) }
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn plain_dim(&self) -> usize {
        self.quotient.ambient()
    }
}

/// On plain tensors `S^{⊗k} → S^{⊗(k-1)}`: apply `d: S → A` to factor `i`
/// and absorb the result into a neighbour (the next factor, or the previous
/// one when `i` is last). For `k = 1` this is `d` itself.
pub fn contract_factor(s: &BimoduleData, d: &Matrix, k: usize, i: usize) -> Matrix {
    assert!(i < k);
    let n = s.dim();
    if k == 1 {
        return d.clone();
    }
    let is = Matrix::identity(n);
    if i + 1 < k {
        let local = s.left.mul(&d.kron(&is));
        local.pad(n.pow(i as u32), n.pow((k - 2 - i) as u32))
    } else {
        let local = s.right.mul(&is.kron(d));
        local.pad(n.pow((k - 2) as u32), 1)
    }
}

/// `d_k = Σ_{i<k} (-1)^i (contraction at i)` on representatives, `S^{⊗k} → S^{⊗(k-1)}`.
pub fn bar_differential(s: &BimoduleData, d: &Matrix, k: usize) -> Matrix {
    let mut out: Option<Matrix> = None;
    for i in 0..k {
        let c = contract_factor(s, d, k, i);
        let c = if i % 2 == 1 { c.scale(&-Scalar::ONE) } else { c };
        out = Some(match out {
            None => c,
            Some(m) => m.add(&c),
        });
    }
    out.expect("k >= 1")
}
