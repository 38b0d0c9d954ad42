//! Chain homotopies between lifts of augmentations.
//!
//! Given augmented bimodules `d_P: P → A`, `d_Q: Q → A`, bimodule maps
//! `f, g: P → Q` over `A` and `h: P → Q ⊗_A Q` with `d h = g − f`, the maps
//! `H_n = Σ_i (-1)^i f^{⊗i} ⊗ h ⊗ g^{⊗(n−i)}` satisfy
//! `d H_n + H_{n−1} d = g^{⊗(n+1)} − f^{⊗(n+1)}` on `P^{⊗_A (n+1)}`.
//! Everything is evaluated on plain tensors and pushed to the quotients.

use crate::bimodule::{bar_differential, induced_on_quotients, BimoduleData, RelativePower};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, SparseVec};
use crate::rep::{matrix_to_vec, vec_to_matrix};

/// A bimodule with its augmentation to the algebra.
#[derive(Clone, Debug)]
pub struct Augmented {
    pub module: BimoduleData,
    pub d: Matrix,
}

impl Augmented {
    pub fn new(module: BimoduleData, d: Matrix) -> Result<Self> {
        if !module.is_bimodule_map(&d, &BimoduleData::regular(module.algebra())) {
            return Err(Error::CheckFailed("augmentation is not a bimodule map".into()));
        }
        Ok(Augmented { module, d })
    }

    fn differential(&self, powers: &[RelativePower], k: usize) -> Result<Matrix> {
        induced_on_quotients(&powers[k].quotient, &powers[k - 1].quotient, &bar_differential(&self.module, &self.d, k))
    }
}

/// The affine space of bimodule maps `f: P → Q` with `d_Q f = d_P`: one
/// solution plus a basis of the directions.
pub fn augmentation_lifts(p: &Augmented, q: &Augmented) -> Result<(Matrix, Vec<Matrix>)> {
    let maps = p.module.bimodule_maps(&q.module)?;
    let (dp, dqm) = (p.module.dim(), q.module.dim());
    let basis: Vec<Matrix> = maps.basis().iter().map(|v| vec_to_matrix(v, dqm, dp)).collect();
    let images: Vec<SparseVec> = basis.iter().map(|f| matrix_to_vec(&q.d.mul(f))).collect();
    let sys = Matrix::from_columns(q.d.rows() * dp, images);
    let c = sys
        .solve(&matrix_to_vec(&p.d))
        .ok_or_else(|| Error::CheckFailed("no bimodule map lifts the augmentation".into()))?;
    let combine = |c: &SparseVec| {
        c.iter().fold(Matrix::zeros(dqm, dp), |acc, (j, x)| acc.try_add_scaled(x, &basis[j]).expect("same shape"))
    };
    let particular = combine(&c);
    let directions = crate::linalg::Subspace::kernel(&sys).basis().iter().map(combine).collect();
    Ok((particular, directions))
}

/// A bimodule map `h: P → Q ⊗_A Q` with `d h = g − f`, in quotient coordinates.
pub fn solve_homotopy(p: &Augmented, q: &Augmented, f: &Matrix, g: &Matrix) -> Result<Matrix> {
    let q2 = q.module.tensor_over(&q.module)?;
    let q_powers: Vec<RelativePower> = (0..=2).map(|k| RelativePower::new(&q.module, k)).collect();
    let d2 = q.differential(&q_powers, 2)?;
    let maps = p.module.bimodule_maps(&q2.bimodule)?;
    let (dp, d2dim) = (p.module.dim(), q2.bimodule.dim());
    let basis: Vec<Matrix> = maps.basis().iter().map(|v| vec_to_matrix(v, d2dim, dp)).collect();
    let images = basis.iter().map(|h| matrix_to_vec(&d2.mul(h))).collect();
    let sys = Matrix::from_columns(q.module.dim() * dp, images);
    let c = sys
        .solve(&matrix_to_vec(&g.sub(f)))
        .ok_or_else(|| Error::CheckFailed("g − f is not a boundary".into()))?;
    Ok(c.iter().fold(Matrix::zeros(d2dim, dp), |acc, (j, x)| acc.try_add_scaled(x, &basis[j]).expect("same shape")))
}

/// Checks the preconditions, then `d H_n + H_{n−1} d = g^{⊗(n+1)} − f^{⊗(n+1)}` for `n ≤ n_max`.
pub fn homotopy_check(p: &Augmented, q: &Augmented, f: &Matrix, g: &Matrix, h: &Matrix, n_max: usize) -> Result<bool> {
    if p.module.algebra() != q.module.algebra() {
        return Err(Error::CategoryMismatch("bimodules over different algebras".into()));
    }
    for (name, m) in [("f", f), ("g", g)] {
        if !p.module.is_bimodule_map(m, &q.module) || q.d.mul(m) != p.d {
            return Err(Error::CheckFailed(format!("{name} is not a bimodule map lifting the augmentation")));
        }
    }
    let p_powers: Vec<RelativePower> = (0..=n_max + 1).map(|k| RelativePower::new(&p.module, k)).collect();
    let q_powers: Vec<RelativePower> = (0..=n_max + 2).map(|k| RelativePower::new(&q.module, k)).collect();
    let q2 = q.module.tensor_over(&q.module)?;
    if !p.module.is_bimodule_map(h, &q2.bimodule) {
        return Err(Error::CheckFailed("h is not a bimodule map".into()));
    }
    if q.differential(&q_powers, 2)?.mul(h) != g.sub(f) {
        return Err(Error::CheckFailed("d h differs from g − f".into()));
    }
    let lifted_h = q_powers[2].quotient.section().mul(h);

    let power = |m: &Matrix, k: usize| (0..k).fold(Matrix::identity(1), |acc, _| acc.kron(m));
    let mut previous: Option<Matrix> = None;
    for n in 0..=n_max {
        let mut plain: Option<Matrix> = None;
        for i in 0..=n {
            let term = power(f, i).kron(&lifted_h).kron(&power(g, n - i));
            let term = if i % 2 == 1 { term.scale(&-Scalar::ONE) } else { term };
            plain = Some(match plain {
                None => term,
                Some(s) => s.add(&term),
            });
        }
        let h_n = induced_on_quotients(&p_powers[n + 1].quotient, &q_powers[n + 2].quotient, &plain.expect("n + 1 terms"))?;
        let mut lhs = q.differential(&q_powers, n + 2)?.mul(&h_n);
        if let Some(h_prev) = &previous {
            lhs = lhs.add(&h_prev.mul(&p.differential(&p_powers, n + 1)?));
        }
        let rhs_plain = power(g, n + 1).sub(&power(f, n + 1));
        let rhs = induced_on_quotients(&p_powers[n + 1].quotient, &q_powers[n + 1].quotient, &rhs_plain)?;
        if lhs != rhs {
            return Ok(false);
        }
        previous = Some(h_n);
    }
    Ok(true)
}
