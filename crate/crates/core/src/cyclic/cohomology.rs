//! Hochschild cohomology from `b = Σ (-1)^i δ_i` and cyclic cohomology from
//! the subcomplex of `λ = (-1)^n τ_n` invariants.

use serde::{Deserialize, Serialize};

use super::object::{PrecocyclicObject, RelationReport};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    /// `N`; both sequences cover `n = 0..N`.
    pub max_degree: usize,
    pub dims: Vec<usize>,
    pub hh: Vec<usize>,
    pub hc: Vec<usize>,
    pub relations: RelationReport,
}

/// `b_n: C^n → C^{n+1}` for `n < N`.
pub fn hochschild_differentials(obj: &PrecocyclicObject) -> Vec<Matrix> {
    obj.cofaces
        .iter()
        .map(|faces| {
            let mut b = faces[0].clone();
            for (i, d) in faces.iter().enumerate().skip(1) {
                let sign = if i % 2 == 0 { Scalar::ONE } else { -Scalar::ONE };
                b = b.try_add_scaled(&sign, d).expect("cofaces share a shape");
            }
            b
        })
        .collect()
}

/// Cohomology dimensions of `C^0 → C^1 → … → C^N` at degrees `0..N`, given
/// the differentials restricted to subspaces with the listed dimensions.
fn complex_dims(dims: &[usize], diffs: &[Matrix]) -> Result<Vec<usize>> {
    for (n, pair) in diffs.windows(2).enumerate() {
        if !pair[1].mul(&pair[0]).is_zero() {
            return Err(Error::NotAComplex { degree: n + 1 });
        }
    }
    let ranks: Vec<usize> = diffs.iter().map(Matrix::rank).collect();
    Ok((0..diffs.len())
        .map(|n| dims[n] - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
        .collect())
}

/// `HH^n` for `n < N`.
pub fn hochschild(obj: &PrecocyclicObject) -> Result<Vec<usize>> {
    complex_dims(&obj.dims, &hochschild_differentials(obj))
}

/// `HC^n` for `n < N`.
pub fn cyclic_lambda(obj: &PrecocyclicObject) -> Result<Vec<usize>> {
    let b = hochschild_differentials(obj);
    let lambda: Vec<Matrix> = obj
        .cyclic
        .iter()
        .enumerate()
        .map(|(n, t)| if n % 2 == 0 { t.clone() } else { t.scale(&-Scalar::ONE) })
        .collect();
    let inv: Vec<Subspace> = lambda.iter().map(|l| Subspace::common_fixed(l.rows(), std::slice::from_ref(l))).collect();
    let mut restricted = Vec::with_capacity(b.len());
    for (n, bn) in b.iter().enumerate() {
        let image = bn.mul(&inv[n].basis_matrix());
        let r = inv[n + 1]
            .coords_matrix(&image, "cyclic invariants")
            .map_err(|_| Error::CheckFailed(format!("b does not preserve cyclic invariants at degree {n}")))?;
        restricted.push(r);
    }
    let dims: Vec<usize> = inv.iter().map(Subspace::dim).collect();
    complex_dims(&dims, &restricted)
}

pub fn cohomology(obj: &PrecocyclicObject) -> Result<CohomologyReport> {
    let relations = obj.check();
    if !relations.passed() {
        let f = &relations.failures[0];
        return Err(Error::CheckFailed(format!("{} fails at degree {} (i = {}, j = {})", f.relation, f.degree, f.i, f.j)));
    }
    Ok(CohomologyReport {
        max_degree: obj.max_degree,
        dims: obj.dims.clone(),
        hh: hochschild(obj)?,
        hc: cyclic_lambda(obj)?,
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trivial_tower(n_max: usize) -> PrecocyclicObject {
        let id = Matrix::identity(1);
        PrecocyclicObject {
            max_degree: n_max,
            dims: vec![1; n_max + 1],
            cofaces: (0..n_max).map(|n| vec![id.clone(); n + 2]).collect(),
            cyclic: vec![id.clone(); n_max + 1],
            codegeneracies: None,
        }
    }

    #[test]
    fn trivial_tower_cohomology() {
        let r = cohomology(&trivial_tower(5)).unwrap();
        assert_eq!(r.hh, vec![1, 0, 0, 0, 0]);
        assert_eq!(r.hc, vec![1, 0, 1, 0, 1]);
    }

    #[test]
    fn broken_differential_is_not_a_complex() {
        let d = vec![Matrix::identity(1), Matrix::identity(1)];
        assert_eq!(complex_dims(&[1, 1, 1], &d), Err(Error::NotAComplex { degree: 1 }));
    }
}
