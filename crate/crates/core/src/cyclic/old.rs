//! The cocyclic object `C^n = F(A^{⊗(n+1)})` of an algebra.

use super::object::PrecocyclicObject;
use super::{check_budget, check_degree};
use crate::algebra::AlgebraData;
use crate::contratrace::{Contratrace, TraceSpace};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Largest ambient the old construction touches: `dim M · (dim A)^{N+1}`.
pub fn old_ambient(f: &Contratrace, a: &AlgebraData, n_max: usize) -> usize {
    f.coeff().dim().saturating_mul(a.dim().saturating_pow(n_max as u32 + 1))
}

/// Cofaces multiply neighbouring factors, the last one is `τ δ_0`, `τ_n` is
/// the flip `τ_{A, A^{⊗n}}` and codegeneracies insert the unit after slot `j`.
pub fn build_old_cocyclic(f: &Contratrace, a: &AlgebraData, n_max: usize, budget: usize) -> Result<PrecocyclicObject> {
    check_degree(n_max)?;
    if !a.category().same_as(f.category()) {
        return Err(Error::CategoryMismatch("algebra and trace live in different categories".into()));
    }
    check_budget(old_ambient(f, a, n_max), budget)?;
    let obj = a.obj();
    let powers: Vec<_> = (0..=n_max + 1).map(|k| obj.tensor_power(k)).collect();
    let spaces: Vec<TraceSpace> = (0..=n_max).map(|n| f.eval_space(&powers[n + 1])).collect::<Result<_>>()?;

    let cyclic: Vec<Matrix> = (0..=n_max)
        .map(|n| spaces[n].restrict(&f.ambient_tau(obj, &powers[n])?, &spaces[n], "cyclic operator"))
        .collect::<Result<_>>()?;

    let mut cofaces = Vec::with_capacity(n_max);
    for n in 0..n_max {
        let mut faces: Vec<Matrix> = (0..=n)
            .map(|i| spaces[n + 1].restrict(&f.ambient_mor(&a.mult_at(n + 1, i)), &spaces[n], "coface"))
            .collect::<Result<_>>()?;
        faces.push(cyclic[n + 1].mul(&faces[0]));
        cofaces.push(faces);
    }

    let codegeneracies = (0..n_max)
        .map(|n| {
            (0..=n)
                .map(|j| spaces[n].restrict(&f.ambient_mor(&a.unit_at(n + 1, j + 1)), &spaces[n + 1], "codegeneracy"))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(PrecocyclicObject {
        max_degree: n_max,
        dims: spaces.iter().map(TraceSpace::dim).collect(),
        cofaces,
        cyclic,
        codegeneracies: Some(codegeneracies),
    })
}
