//! Finite groups from tables, representations, tensor products and invariants.

use std::sync::Arc;

use cyclic_sayd::group::FinGroup;
use cyclic_sayd::linalg::Scalar;
use cyclic_sayd::rep::Rep;

fn main() {
    let s3 = Arc::new(FinGroup::symmetric(3).expect("S_3"));
    println!("S_3: order {}, abelian {}, generators {:?}", s3.order(), s3.is_abelian(), s3.generators());

    let regular = Rep::regular(s3.clone());
    let sign: Vec<Scalar> = s3
        .elements()
        .map(|g| if s3.element_order(g) == 2 { Scalar::int(-1) } else { Scalar::ONE })
        .collect();
    let sign = Rep::character(s3.clone(), &sign).expect("sign is a character");

    println!("dim kS_3^G = {}", regular.invariants().dim());
    println!("dim (sign ⊗ sign)^G = {}", sign.tensor(&sign).unwrap().invariants().dim());
    println!("dim (regular ⊗ regular)^G = {}", regular.tensor(&regular).unwrap().invariants().dim());
    assert_eq!(regular.invariants(), regular.invariants_by_averaging());
    println!("dual of the regular rep has the same invariants: {}", regular.dual().invariants().dim());
}
