//! Matrix amplification leaves cyclic cohomology unchanged.

use std::sync::Arc;

use cyclic_sayd::algebra::AlgebraData;
use cyclic_sayd::category::Category;
use cyclic_sayd::contratrace::Contratrace;
use cyclic_sayd::cyclic::DEFAULT_BUDGET;
use cyclic_sayd::group::FinGroup;
use cyclic_sayd::harness::{Pipeline, Side};
use cyclic_sayd::sayd::SaydModule;

fn main() {
    let vect = Category::vect();
    let f = Contratrace::type_b(SaydModule::trivial(vect.group()));
    let z3 = Arc::new(FinGroup::cyclic(3).expect("Z/3"));
    let bases = [
        ("k", AlgebraData::unit_algebra(&vect)),
        ("dual numbers", AlgebraData::dual_numbers(&vect).unwrap()),
        ("kZ/3", AlgebraData::group_algebra(&vect, &z3).unwrap()),
    ];
    for (name, a) in bases {
        for n in 1..=2 {
            let amplified = a.matrix_amplify(n).unwrap();
            let report = Side::new(f.clone(), amplified, Pipeline::Old).run(3, DEFAULT_BUDGET).unwrap();
            println!("M_{n}({name}): HC = {:?}", report.hc);
        }
    }
}
