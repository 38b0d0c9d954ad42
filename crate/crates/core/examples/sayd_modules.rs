//! Coefficient modules: the standard constructions, their checker, and the
//! witnesses produced for invalid data.

use std::sync::Arc;

use cyclic_sayd::group::FinGroup;
use cyclic_sayd::linalg::Scalar;
use cyclic_sayd::rep::{GradedSpace, Rep};
use cyclic_sayd::sayd::{check_sayd, SaydModule};

fn main() {
    let z2 = Arc::new(FinGroup::cyclic(2).expect("Z/2"));
    let s3 = Arc::new(FinGroup::symmetric(3).expect("S_3"));
    let sign = Rep::character(z2.clone(), &[Scalar::ONE, Scalar::int(-1)]).unwrap();

    let examples = [
        ("sign at e", SaydModule::concentrated_at_identity(&sign)),
        ("conjugation-diagonal on kS_3", SaydModule::adjoint_diagonal(&s3)),
        ("multiplication-adjoint on kS_3", SaydModule::multiplication_adjoint(&s3)),
        ("modular pair (trivial, e)", SaydModule::modular_pair(&z2, &[Scalar::ONE; 2], 0).unwrap()),
    ];
    for (name, m) in &examples {
        let flipped = m.dual_flip();
        println!("{name}: dim {}, degrees {:?}, dual flip degrees {:?}", m.dim(), m.graded().degrees(), flipped.graded().degrees());
        println!("  underlying module of sections has dim {}", m.forget_grading().dim());
    }

    let unstable = check_sayd(&GradedSpace::concentrated(z2.clone(), 1, 1), &sign);
    println!("k in degree g with g acting by -1: {unstable:?}");
    let twisted = SaydModule::modular_pair(&z2, &[Scalar::ONE, Scalar::int(-1)], 1);
    println!("modular pair (sign, g): {}", twisted.unwrap_err());
    let regular_graded = check_sayd(&GradedSpace::new(s3.clone(), s3.elements().collect()).unwrap(), &Rep::regular(s3.clone()));
    println!("kS_3 graded by element with the regular action: {regular_graded:?}");
}
