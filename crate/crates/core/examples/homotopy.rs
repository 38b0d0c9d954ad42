//! Two lifts of an augmentation between admissible pairs are chain
//! homotopic; the homotopy is solved for and then checked degree by degree.

use std::sync::Arc;

use cyclic_sayd::algebra::AlgebraData;
use cyclic_sayd::category::{Category, Obj};
use cyclic_sayd::cyclic::{augmentation_lifts, default_augmentation, homotopy_check, solve_homotopy, AdmissiblePair, Augmented};
use cyclic_sayd::group::FinGroup;
use cyclic_sayd::linalg::Scalar;
use cyclic_sayd::rep::Rep;

fn main() {
    let z2 = Arc::new(FinGroup::cyclic(2).expect("Z/2"));
    let a = Arc::new(AlgebraData::group_algebra(&Category::rep(z2.clone()), &z2).unwrap());
    let canonical = AdmissiblePair::canonical(&a).unwrap();
    let q = Obj::Rep(Rep::regular(z2.clone()));
    let free = AdmissiblePair::free_on(&a, &q, &default_augmentation(&q).unwrap()).unwrap();
    let p = Augmented::new(canonical.p, canonical.d).unwrap();
    let q = Augmented::new(free.p, free.d).unwrap();

    let (f, directions) = augmentation_lifts(&p, &q).unwrap();
    println!("lifts P → Q form an affine space of dimension {}", directions.len());
    let g = directions.iter().fold(f.clone(), |acc, d| acc.add(&d.scale(&Scalar::ratio(1, 2))));
    let h = solve_homotopy(&p, &q, &f, &g).unwrap();
    println!("homotopy h: P → Q ⊗_A Q is a {} x {} matrix", h.rows(), h.cols());
    println!("dH + Hd = g^⊗(n+1) − f^⊗(n+1) for n ≤ 3: {}", homotopy_check(&p, &q, &f, &g, &h, 3).unwrap());
}
