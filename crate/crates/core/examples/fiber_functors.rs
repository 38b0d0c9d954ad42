//! Coefficients coming from the forgetful functor recover ordinary cyclic
//! cohomology of the algebra or of its crossed product.

use cyclic_sayd::cyclic::DEFAULT_BUDGET;
use cyclic_sayd::harness::{run_suite, Suite};

fn main() {
    let suite = run_suite(Suite::FiberExamples, 4, DEFAULT_BUDGET);
    for i in &suite.instances {
        println!("[{}] {}", if i.passed { "pass" } else { "FAIL" }, i.description);
        println!("       equivariant {:?}, ordinary {:?}", i.left, i.right);
    }
}
