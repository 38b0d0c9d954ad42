//! The precocyclic object `C^n = F_A(P^{⊗_A (n+1)})` of an admissible pair.
//!
//! For `P = A ⊗ Q ⊗ A` the relative power `P^{⊗_A k}` is identified with
//! `T_k = A ⊗ (Q ⊗ A)^{⊗k}` by multiplying adjacent copies of `A`. Cofaces
//! apply `d` to the `i`-th copy of `P`, which merges the two copies of `A`
//! around the `i`-th `Q`; `τ_n` is the lifted flip `F_A(P ⊗_A T_n) → F_A(T_n ⊗_A P)`.

use super::object::PrecocyclicObject;
use super::pair::AdmissiblePair;
use super::{check_budget, check_degree};
use crate::category::Obj;
use crate::contratrace::{LiftedContratrace, TraceSpace};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Largest ambient touched: `dim M · dim A · dim T_{N+1}`, reached by the flip
/// and equalizer at the top degree.
pub fn new_ambient(f: &LiftedContratrace, pair: &AdmissiblePair, n_max: usize) -> usize {
    let (da, dq) = (pair.algebra().dim(), pair.q.dim());
    f.base()
        .coeff()
        .dim()
        .saturating_mul(da)
        .saturating_mul(da)
        .saturating_mul((dq * da).saturating_pow(n_max as u32 + 1))
}

struct ReducedModel<'a> {
    pair: &'a AdmissiblePair,
    /// `dim A · dim Q`
    dqa: usize,
}

impl ReducedModel<'_> {
    /// `T_k` as an object.
    fn object(&self, k: usize) -> Result<Obj> {
        let qa = self.pair.q.tensor(self.pair.algebra().obj())?;
        self.pair.algebra().obj().tensor(&qa.tensor_power(k))
    }

    fn left(&self, k: usize) -> Matrix {
        self.pair.algebra().mult().pad(1, self.dqa.pow(k as u32))
    }

    fn right(&self, k: usize) -> Matrix {
        self.pair.algebra().mult().pad(self.dqa.pow(k as u32), 1)
    }

    /// `T_{k} → T_{k-1}`: `d` on the `i`-th copy of `P`.
    fn coface(&self, k: usize, i: usize) -> Matrix {
        let aq = self.dqa;
        self.pair.d.pad(aq.pow(i as u32), aq.pow((k - 1 - i) as u32))
    }
}

pub fn build_new_precocyclic(f: &LiftedContratrace, pair: &AdmissiblePair, n_max: usize, budget: usize) -> Result<PrecocyclicObject> {
    check_degree(n_max)?;
    if f.algebra() != pair.algebra() {
        return Err(Error::CategoryMismatch("pair and lifted trace use different algebras".into()));
    }
    check_budget(new_ambient(f, pair, n_max), budget)?;
    let a = pair.algebra();
    let (da, dq) = (a.dim(), pair.q.dim());
    let model = ReducedModel { pair, dqa: da * dq };
    let objects: Vec<Obj> = (0..=n_max + 1).map(|k| model.object(k)).collect::<Result<_>>()?;
    let spaces: Vec<TraceSpace> = (0..=n_max)
        .map(|n| f.equalizer(&objects[n + 1], &model.left(n + 1), &model.right(n + 1)))
        .collect::<Result<_>>()?;

    let mut cofaces = Vec::with_capacity(n_max);
    for n in 0..n_max {
        let faces = (0..=n + 1)
            .map(|i| spaces[n + 1].restrict(&f.base().ambient_mor(&model.coface(n + 2, i)), &spaces[n], "coface"))
            .collect::<Result<Vec<_>>>()?;
        cofaces.push(faces);
    }

    let p_obj = pair.p.obj();
    let mult = a.mult();
    let unit = a.unit_matrix();
    let cyclic = (0..=n_max)
        .map(|n| {
            let tail = model.dqa.pow(n as u32);
            // P ⊗ T_n → T_{n+1}, T_n ⊗ P → T_{n+1}, and a section of the latter
            let pi = mult.pad(da * dq, tail);
            let pi_prime = mult.pad(tail, dq * da);
            let section = unit.pad(da * tail, dq * da);
            f.flip_on_representatives(p_obj, &objects[n], &pi, &pi_prime, &section, &spaces[n], &spaces[n])
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(PrecocyclicObject {
        max_degree: n_max,
        dims: spaces.iter().map(TraceSpace::dim).collect(),
        cofaces,
        cyclic,
        codegeneracies: None,
    })
}
