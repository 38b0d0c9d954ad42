//! Symmetric 2-contratraces: trace spaces, induced maps and the flips
//! `F(V ⊗ W) → F(W ⊗ V)`, on both backends.

use std::sync::Arc;

use cyclic_sayd::category::{Category, Obj};
use cyclic_sayd::contratrace::Contratrace;
use cyclic_sayd::group::FinGroup;
use cyclic_sayd::linalg::Matrix;
use cyclic_sayd::rep::{GradedSpace, Rep};
use cyclic_sayd::sayd::SaydModule;

fn main() {
    let s3 = Arc::new(FinGroup::symmetric(3).expect("S_3"));
    let m = SaydModule::adjoint_diagonal(&s3);

    let a = Contratrace::type_a(m.clone());
    let v = Obj::Rep(Rep::regular(s3.clone()));
    let w = Category::rep(s3.clone()).trivial_object(2);
    let (fvw, fwv) = (a.eval_space(&v.tensor(&w).unwrap()).unwrap(), a.eval_space(&w.tensor(&v).unwrap()).unwrap());
    println!("type A: dim F(V ⊗ W) = {}, dim F(W ⊗ V) = {}", fvw.dim(), fwv.dim());
    let tau = a.tau(&v, &w).unwrap();
    let back = a.tau(&w, &v).unwrap();
    println!("  τ_(W,V) τ_(V,W) = id: {}", back.mul(&tau).is_identity());

    let b = Contratrace::type_b(m.dual_flip());
    let x = Obj::Graded(GradedSpace::new(s3.clone(), s3.elements().collect()).unwrap());
    let space = b.eval_space(&x.tensor(&x).unwrap()).unwrap();
    println!("type B: dim F(kG ⊗ kG) = {} inside an ambient of {}", space.dim(), space.ambient());
    let tau = b.tau(&x, &x).unwrap();
    println!("  τ² = id: {}", tau.mul(&tau).is_identity());

    let swap = Matrix::permutation(&[1, 0]);
    let t = Category::graded(s3.clone()).trivial_object(2);
    println!("  F(swap) on F(k²) squares to id: {}", b.eval_mor(&swap, &t, &t).map(|f| f.mul(&f).is_identity()).unwrap());
}
