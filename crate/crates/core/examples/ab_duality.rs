//! Equivariant data in Rep(G) against the crossed product in Vec_G with the
//! dual-flipped coefficient.

use std::sync::Arc;

use cyclic_sayd::algebra::AlgebraData;
use cyclic_sayd::category::Category;
use cyclic_sayd::contratrace::Contratrace;
use cyclic_sayd::cyclic::DEFAULT_BUDGET;
use cyclic_sayd::group::FinGroup;
use cyclic_sayd::harness::{run_suite, Pipeline, Side, Suite};
use cyclic_sayd::sayd::SaydModule;

fn main() {
    let s3 = Arc::new(FinGroup::symmetric(3).expect("S_3"));
    let m = SaydModule::adjoint_diagonal(&s3);
    let a = AlgebraData::unit_algebra(&Category::rep(s3.clone()));
    let crossed = a.crossed_product().unwrap();
    let left = Side::new(Contratrace::type_a(m.clone()), a, Pipeline::Old).run(4, DEFAULT_BUDGET).unwrap();
    let right = Side::new(Contratrace::type_b(m.dual_flip()), crossed, Pipeline::Old).run(4, DEFAULT_BUDGET).unwrap();
    println!("S_3, A = k: type A HC {:?}, type B HC of k ⋊ S_3 {:?}", left.hc, right.hc);

    for i in run_suite(Suite::AbDuality, 4, DEFAULT_BUDGET).instances {
        println!("[{}] {}: {:?} vs {:?}", if i.passed { "pass" } else { "FAIL" }, i.description, i.left, i.right);
    }
}
