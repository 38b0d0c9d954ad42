//! Functions on a free finite G-set: cyclic cohomology is the space of
//! invariant sections in even degrees and vanishes in odd ones.

use std::sync::Arc;

use cyclic_sayd::algebra::AlgebraData;
use cyclic_sayd::contratrace::Contratrace;
use cyclic_sayd::cyclic::DEFAULT_BUDGET;
use cyclic_sayd::group::FinGroup;
use cyclic_sayd::harness::{run_suite, Pipeline, Side, Suite};
use cyclic_sayd::rep::Rep;
use cyclic_sayd::sayd::SaydModule;

fn main() {
    let s3 = Arc::new(FinGroup::symmetric(3).expect("S_3"));
    let g = s3.clone();
    let functions = AlgebraData::function_algebra_on_gset(&s3, s3.order(), move |x, y| g.mul(x, y)).unwrap();
    let m = SaydModule::concentrated_at_identity(&Rep::regular(s3.clone()));
    let sections = m.action().tensor(functions.obj().as_rep().unwrap()).unwrap().invariants().dim();
    let report = Side::new(Contratrace::type_a(m), functions, Pipeline::Old).run(2, DEFAULT_BUDGET).unwrap();
    println!("S_3 on itself, coefficient kS_3 at e: sections {sections}, HC {:?}", report.hc);

    for i in run_suite(Suite::DerhamFinite, 4, DEFAULT_BUDGET).instances {
        println!("[{}] {}: {:?}", if i.passed { "pass" } else { "FAIL" }, i.description, i.left);
    }
}
