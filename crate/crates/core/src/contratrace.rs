//! Hom-type symmetric 2-contratraces and their lift to bimodules.
//!
//! Both trace types store an element of `F(V)` in the same ambient space of
//! dimension `dim M · dim V`, indexed `(m, v) ↦ m · dim V + v`:
//!
//! * type A on `Rep(G)`: `F(V) = Hom_G(M ⊗ V, k)`, entry `(m, v)` is `f(m ⊗ v)`;
//! * type B on `Vec_G`: `F(V)` = grade-preserving `V → M`, entry `(m, v)` is
//!   the `m`-coordinate of `f(v)`.
//!
//! In both cases precomposition with `f: V → W` acts on the ambient as
//! `I_M ⊗ fᵀ`.

use std::sync::Arc;

use crate::algebra::AlgebraData;
use crate::bimodule::BimoduleData;
use crate::category::{CatKind, Category, Obj};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseVec, Subspace};
use crate::rep::same_group;
use crate::sayd::SaydModule;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TraceKind {
    /// `Hom_G(M ⊗ −, k)` on `Rep(G)`
    A,
    /// grade-preserving `Hom(−, M)` on `Vec_G`
    B,
}

impl TraceKind {
    pub fn category_kind(self) -> CatKind {
        match self {
            TraceKind::A => CatKind::Rep,
            TraceKind::B => CatKind::Graded,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Contratrace {
    kind: TraceKind,
    coeff: SaydModule,
    cat: Category,
}

/// `F(V)` as a subspace of the ambient `(m, v)` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceSpace {
    source_dim: usize,
    space: Subspace,
}

impl TraceSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn ambient(&self) -> usize {
        self.space.ambient()
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Matrix of an ambient map `src → self`, in canonical coordinates.
    pub fn restrict(&self, f: &Matrix, src: &TraceSpace, context: &str) -> Result<Matrix> {
        self.space.restrict(f, &src.space, context)
    }
}

impl Contratrace {
    pub fn new(kind: TraceKind, coeff: SaydModule, cat: Category) -> Result<Self> {
        if cat.kind() != kind.category_kind() {
            return Err(Error::CategoryMismatch(format!("type {kind:?} trace needs the other category")));
        }
        if !same_group(cat.group(), coeff.group()) {
            return Err(Error::CategoryMismatch("coefficient and category use different groups".into()));
        }
        Ok(Contratrace { kind, coeff, cat })
    }

    pub fn type_a(coeff: SaydModule) -> Self {
        let cat = Category::rep(coeff.group().clone());
        Contratrace { kind: TraceKind::A, coeff, cat }
    }

    pub fn type_b(coeff: SaydModule) -> Self {
        let cat = Category::graded(coeff.group().clone());
        Contratrace { kind: TraceKind::B, coeff, cat }
    }

    pub fn kind(&self) -> TraceKind {
        self.kind
    }

    pub fn coeff(&self) -> &SaydModule {
        &self.coeff
    }

    pub fn category(&self) -> &Category {
        &self.cat
    }

    pub fn ambient_dim(&self, v: &Obj) -> usize {
        self.coeff.dim() * v.dim()
    }

    fn check_obj(&self, v: &Obj) -> Result<()> {
        if v.category().same_as(&self.cat) {
            Ok(())
        } else {
            Err(Error::CategoryMismatch(format!("object of {:?} given to a trace on {:?}", v.category(), self.cat)))
        }
    }

    pub fn eval_space(&self, v: &Obj) -> Result<TraceSpace> {
        self.check_obj(v)?;
        let (dm, dv) = (self.coeff.dim(), v.dim());
        let space = match v {
            Obj::Rep(r) => {
                // f ∘ ρ(g) = f  ⟺  ρ(g)ᵀ f = f, over a generating set
                let mats: Vec<Matrix> = self
                    .cat
                    .group()
                    .generators()
                    .into_iter()
                    .map(|g| self.coeff.rho(g).kron(r.rho(g)).transpose())
                    .collect();
                Subspace::common_fixed(dm * dv, &mats)
            }
            Obj::Graded(gs) => {
                let m = self.coeff.graded();
                Subspace::coordinate(
                    dm * dv,
                    (0..dm).flat_map(|i| (0..dv).filter(move |&j| m.degree(i) == gs.degree(j)).map(move |j| i * dv + j)),
                )
            }
        };
        Ok(TraceSpace { source_dim: dv, space })
    }

    /// Precomposition with a linear map `f: V → W` on ambients, `amb(W) → amb(V)`.
    pub fn ambient_mor(&self, f: &Matrix) -> Matrix {
        f.transpose().pad(self.coeff.dim(), 1)
    }

    /// `F(f): F(W) → F(V)` for a morphism `f: V → W`.
    pub fn eval_mor(&self, f: &Matrix, v: &Obj, w: &Obj) -> Result<Matrix> {
        if f.shape() != (w.dim(), v.dim()) {
            return Err(Error::DimensionMismatch { op: "trace morphism", expected: w.dim() * v.dim(), found: f.rows() * f.cols() });
        }
        if !v.is_morphism(f, w) {
            return Err(Error::NotAMorphism("precomposed map is not a morphism of the category".into()));
        }
        let (fv, fw) = (self.eval_space(v)?, self.eval_space(w)?);
        fv.restrict(&self.ambient_mor(f), &fw, "precomposition with a morphism")
    }

    /// The flip on ambients, `amb(V ⊗ W) → amb(W ⊗ V)`.
    ///
    /// Type A: `(τf)(m ⊗ w ⊗ v) = f(m ⊗ v ⊗ x⁻¹w)` for `m ∈ M_x`.
    /// Type B: `(τf)(w ⊗ v) = y⁻¹ · f(v ⊗ w)` for `v` of degree `y`.
    pub fn ambient_tau(&self, v: &Obj, w: &Obj) -> Result<Matrix> {
        self.check_obj(v)?;
        self.check_obj(w)?;
        let (dm, dv, dw) = (self.coeff.dim(), v.dim(), w.dim());
        let grp = self.cat.group();
        let target = |m: usize, wi: usize, vi: usize| (m * dw + wi) * dv + vi;
        let mut columns = Vec::with_capacity(dm * dv * dw);
        match (v, w) {
            (_, Obj::Rep(wr)) => {
                // column (m, v, w') has entry ρ_W(x⁻¹)[w', w] at row (m, w, v)
                let twisted: Vec<Option<Matrix>> = {
                    let mut t = vec![None; grp.order()];
                    for m in 0..dm {
                        let x = self.coeff.degree(m);
                        t[x].get_or_insert_with(|| wr.rho(grp.inv(x)).transpose());
                    }
                    t
                };
                for m in 0..dm {
                    let t = twisted[self.coeff.degree(m)].as_ref().expect("filled above");
                    for vi in 0..dv {
                        for wp in 0..dw {
                            let entries = t.col(wp).iter().map(|(wi, a)| (target(m, wi, vi), a.clone())).collect();
                            columns.push(SparseVec::from_pairs(entries));
                        }
                    }
                }
            }
            (Obj::Graded(vg), _) => {
                // column (m', v, w) has entry ρ_M(y⁻¹)[m, m'] at row (m, w, v)
                for mp in 0..dm {
                    for vi in 0..dv {
                        let rho = self.coeff.rho(grp.inv(vg.degree(vi)));
                        for wi in 0..dw {
                            let entries = rho.col(mp).iter().map(|(m, a)| (target(m, wi, vi), a.clone())).collect();
                            columns.push(SparseVec::from_pairs(entries));
                        }
                    }
                }
            }
            _ => unreachable!("objects checked against the category"),
        }
        Ok(Matrix::from_columns(dm * dv * dw, columns))
    }

    /// `τ_{V,W}: F(V ⊗ W) → F(W ⊗ V)` in canonical coordinates.
    pub fn tau(&self, v: &Obj, w: &Obj) -> Result<Matrix> {
        let src = self.eval_space(&v.tensor(w)?)?;
        let dst = self.eval_space(&w.tensor(v)?)?;
        dst.restrict(&self.ambient_tau(v, w)?, &src, "flip of a trace")
    }

    pub fn lift(&self, algebra: Arc<AlgebraData>) -> Result<LiftedContratrace> {
        LiftedContratrace::new(self.clone(), algebra)
    }
}

/// `F_A` on `A`-bimodules: the equalizer of `F(r)` and `τ_{A,S} ∘ F(l)`.
#[derive(Clone, Debug)]
pub struct LiftedContratrace {
    base: Contratrace,
    algebra: Arc<AlgebraData>,
}

impl LiftedContratrace {
    pub fn new(base: Contratrace, algebra: Arc<AlgebraData>) -> Result<Self> {
        if !algebra.category().same_as(base.category()) {
            return Err(Error::CategoryMismatch("algebra lives in another category than the trace".into()));
        }
        Ok(LiftedContratrace { base, algebra })
    }

    pub fn base(&self) -> &Contratrace {
        &self.base
    }

    pub fn algebra(&self) -> &Arc<AlgebraData> {
        &self.algebra
    }

    /// `F_A(S)` for an object `S` with left action `l: A ⊗ S → S` and right
    /// action `r: S ⊗ A → S`.
    pub fn equalizer(&self, s: &Obj, left: &Matrix, right: &Matrix) -> Result<TraceSpace> {
        let a = self.algebra.obj();
        let fs = self.base.eval_space(s)?;
        let e = self
            .base
            .ambient_mor(right)
            .sub(&self.base.ambient_tau(a, s)?.mul(&self.base.ambient_mor(left)));
        let b = fs.space.basis_matrix();
        let k = Subspace::kernel(&e.mul(&b));
        let vectors: Vec<SparseVec> = k.basis().iter().map(|c| b.mul_vec(c)).collect();
        Ok(TraceSpace { source_dim: s.dim(), space: Subspace::span(fs.ambient(), &vectors) })
    }

    pub fn eval_bimodule(&self, s: &BimoduleData) -> Result<TraceSpace> {
        if s.algebra() != &self.algebra {
            return Err(Error::CategoryMismatch("bimodule over a different algebra".into()));
        }
        self.equalizer(s.obj(), s.left(), s.right())
    }

    /// `F_A(f): F_A(T) → F_A(S)` for a bimodule map `f: S → T`.
    pub fn eval_bimodule_map(&self, f: &Matrix, s: &BimoduleData, t: &BimoduleData) -> Result<Matrix> {
        if !s.is_bimodule_map(f, t) {
            return Err(Error::NotAMorphism("map is not a bimodule map".into()));
        }
        let (fs, ft) = (self.eval_bimodule(s)?, self.eval_bimodule(t)?);
        fs.restrict(&self.base.ambient_mor(f), &ft, "precomposition with a bimodule map")
    }

    /// The flip `F_A(S ⊗_A T) → F_A(T ⊗_A S)` computed on representatives:
    /// pull back along `π: S ⊗ T → S ⊗_A T`, apply `τ_{S,T}`, and read off
    /// through a linear section `σ'` of `π': T ⊗ S → T ⊗_A S`. Fails unless
    /// the result is a genuine pullback along `π'`.
    #[allow(clippy::too_many_arguments)]
    pub fn flip_on_representatives(
        &self,
        s: &Obj,
        t: &Obj,
        pi: &Matrix,
        pi_prime: &Matrix,
        section_prime: &Matrix,
        src: &TraceSpace,
        dst: &TraceSpace,
    ) -> Result<Matrix> {
        let pulled = self.base.ambient_tau(s, t)?.mul(&self.base.ambient_mor(pi)).mul(&src.space.basis_matrix());
        let read = self.base.ambient_mor(section_prime).mul(&pulled);
        if self.base.ambient_mor(pi_prime).mul(&read) != pulled {
            return Err(Error::NotWellDefined("flip does not descend to the relative tensor product".into()));
        }
        dst.space.coords_matrix(&read, "flip of a lifted trace")
    }

    /// `F_A(S ⊗_A T) → F_A(T ⊗_A S)` for two bimodules, with both spaces.
    pub fn flip(&self, s: &BimoduleData, t: &BimoduleData) -> Result<(TraceSpace, TraceSpace, Matrix)> {
        let st = s.tensor_over(t)?;
        let ts = t.tensor_over(s)?;
        let src = self.eval_bimodule(&st.bimodule)?;
        let dst = self.eval_bimodule(&ts.bimodule)?;
        let m = self.flip_on_representatives(
            s.obj(),
            t.obj(),
            st.quotient.projection(),
            ts.quotient.projection(),
            &ts.quotient.section(),
            &src,
            &dst,
        )?;
        Ok((src, dst, m))
    }
}
