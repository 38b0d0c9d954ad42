//! Admissible pairs `(P, d)` built as free bimodules `A ⊗ Q ⊗ A`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraData;
use crate::bimodule::{bar_differential, BimoduleData, RelativePower};
use crate::category::Obj;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    /// `A ⊗ A` with the multiplication
    Canonical,
    /// `A ⊗ Q ⊗ A` with `a ⊗ q ⊗ b ↦ ε(q) ab`
    FreeOnQ,
}

#[derive(Clone, Debug)]
pub struct AdmissiblePair {
    pub kind: PairKind,
    pub p: BimoduleData,
    pub d: Matrix,
    pub q: Obj,
    pub eps: Matrix,
}

/// A nonzero morphism `Q → 1`: the first canonical basis vector of the hom space.
pub fn default_augmentation(q: &Obj) -> Result<Matrix> {
    let unit = q.category().unit_object();
    let homs = q.hom_space(&unit)?;
    let v = homs.basis().first().ok_or_else(|| Error::InvalidModule("object admits no nonzero map to the unit".into()))?;
    Ok(crate::rep::vec_to_matrix(v, 1, q.dim()))
}

impl AdmissiblePair {
    pub fn canonical(a: &Arc<AlgebraData>) -> Result<Self> {
        let q = a.category().unit_object();
        let mut pair = AdmissiblePair::free_on(a, &q, &Matrix::identity(1))?;
        pair.kind = PairKind::Canonical;
        Ok(pair)
    }

    pub fn free_on(a: &Arc<AlgebraData>, q: &Obj, eps: &Matrix) -> Result<Self> {
        if !q.category().same_as(&a.category()) {
            return Err(Error::CategoryMismatch("generating object lives in another category".into()));
        }
        let (p, d) = BimoduleData::free(a, q, eps)?;
        let pair = AdmissiblePair { kind: PairKind::FreeOnQ, p, d, q: q.clone(), eps: eps.clone() };
        pair.check_exact()?;
        Ok(pair)
    }

    pub fn algebra(&self) -> &Arc<AlgebraData> {
        self.p.algebra()
    }

    /// `d` is a surjective bimodule map and `P ⊗_A P → P → A → 0` is exact.
    pub fn check_exact(&self) -> Result<()> {
        let a = self.algebra();
        let reg = BimoduleData::regular(a);
        if !self.p.is_bimodule_map(&self.d, &reg) {
            return Err(Error::CheckFailed("augmentation is not a bimodule map".into()));
        }
        let rank_d = self.d.rank();
        if rank_d != a.dim() {
            return Err(Error::CheckFailed("augmentation is not surjective".into()));
        }
        let p2 = RelativePower::new(&self.p, 2);
        let p1 = RelativePower::new(&self.p, 1);
        let d2 = crate::bimodule::induced_on_quotients(&p2.quotient, &p1.quotient, &bar_differential(&self.p, &self.d, 2))?;
        if !self.d.mul(&d2).is_zero() || d2.rank() + rank_d != self.p.dim() {
            return Err(Error::CheckFailed("P ⊗_A P → P → A is not exact at P".into()));
        }
        Ok(())
    }
}
