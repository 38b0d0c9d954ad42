//! The cocyclic object built directly from an algebra against the
//! precocyclic object built from an admissible pair: structure checks and
//! Hochschild and cyclic cohomology from both.

use std::sync::Arc;

use cyclic_sayd::algebra::AlgebraData;
use cyclic_sayd::category::Category;
use cyclic_sayd::contratrace::Contratrace;
use cyclic_sayd::cyclic::{build_new_precocyclic, build_old_cocyclic, cohomology, AdmissiblePair, DEFAULT_BUDGET};
use cyclic_sayd::group::FinGroup;
use cyclic_sayd::harness::{run_suite, Suite};
use cyclic_sayd::sayd::SaydModule;

fn main() {
    let z2 = Arc::new(FinGroup::cyclic(2).expect("Z/2"));
    let graded = Category::graded(z2.clone());
    let f = Contratrace::type_b(SaydModule::adjoint_diagonal(&z2));
    let a = Arc::new(AlgebraData::group_algebra(&graded, &z2).unwrap());

    let old = build_old_cocyclic(&f, &a, 4, DEFAULT_BUDGET).unwrap();
    let pair = AdmissiblePair::canonical(&a).unwrap();
    let new = build_new_precocyclic(&f.lift(a.clone()).unwrap(), &pair, 4, DEFAULT_BUDGET).unwrap();
    for (name, obj) in [("old", &old), ("new", &new)] {
        let report = cohomology(obj).unwrap();
        println!(
            "{name}: dims {:?}, HH {:?}, HC {:?}, {} relations checked",
            report.dims, report.hh, report.hc, report.relations.checked
        );
    }

    let suite = run_suite(Suite::OldVsNew, 4, DEFAULT_BUDGET);
    for i in &suite.instances {
        println!("[{}] {}: {:?}", if i.passed { "pass" } else { "FAIL" }, i.description, i.left);
    }
}
