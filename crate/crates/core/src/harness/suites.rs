//! The fixed instance lists behind each suite.

use std::sync::Arc;

use super::{Expected, Instance, Pipeline, Side, Suite};
use crate::algebra::AlgebraData;
use crate::category::{Category, Obj};
use crate::contratrace::Contratrace;
use crate::group::FinGroup;
use crate::linalg::Scalar;
use crate::rep::{GradedSpace, Rep};
use crate::sayd::SaydModule;

fn cyclic(n: usize) -> Arc<FinGroup> {
    Arc::new(FinGroup::cyclic(n).expect("cyclic group"))
}

fn s3() -> Arc<FinGroup> {
    Arc::new(FinGroup::symmetric(3).expect("symmetric group"))
}

fn sign(g: &Arc<FinGroup>) -> Rep {
    let chi: Vec<Scalar> = g.elements().map(|x| if x == g.identity() { Scalar::ONE } else { -Scalar::ONE }).collect();
    Rep::character(g.clone(), &chi).expect("sign character of Z/2")
}

/// Plain vector spaces with the trivial coefficient: ordinary cyclic cohomology.
fn ordinary(a: &AlgebraData) -> Side {
    let trace = Contratrace::type_b(SaydModule::trivial(Category::vect().group()));
    Side::new(trace, a.forget(), Pipeline::Old)
}

fn group_algebra(cat: &Category, g: &Arc<FinGroup>) -> AlgebraData {
    AlgebraData::group_algebra(cat, g).expect("group algebra")
}

fn functions_on_group(g: &Arc<FinGroup>) -> AlgebraData {
    let grp = g.clone();
    AlgebraData::function_algebra_on_gset(g, g.order(), move |x, y| grp.mul(x, y)).expect("functions on a G-set")
}

fn unit_rep(g: &Arc<FinGroup>) -> AlgebraData {
    AlgebraData::unit_algebra(&Category::rep(g.clone()))
}

fn instance(description: &str, left: Side, right: Expected) -> Instance {
    Instance { description: description.to_string(), left, right }
}

fn computed(left: Side, right: Side, description: &str) -> Instance {
    instance(description, left, Expected::Computed(right))
}

pub fn instances(suite: Suite) -> Vec<Instance> {
    match suite {
        Suite::OldVsNew => old_vs_new(),
        Suite::PairIndependence => pair_independence(),
        Suite::Morita => morita(),
        Suite::AbDuality => ab_duality(),
        Suite::FiberExamples => fiber_examples(),
        Suite::DerhamFinite => derham_finite(),
    }
}

fn old_and_new(description: &str, trace: Contratrace, a: AlgebraData) -> Instance {
    computed(
        Side::new(trace.clone(), a.clone(), Pipeline::Old),
        Side::new(trace, a, Pipeline::NewCanonical),
        description,
    )
}

fn old_vs_new() -> Vec<Instance> {
    let vect = Category::vect();
    let kv = Contratrace::type_b(SaydModule::trivial(vect.group()));
    let (z2, z3) = (cyclic(2), cyclic(3));
    vec![
        old_and_new("kZ/2 in Vec, coefficient k", kv.clone(), group_algebra(&vect, &z2)),
        old_and_new(
            "k in Rep(Z/2), coefficient sign at e",
            Contratrace::type_a(SaydModule::concentrated_at_identity(&sign(&z2))),
            unit_rep(&z2),
        ),
        old_and_new(
            "kZ/2 in Vec_Z/2, conjugation-diagonal coefficient",
            Contratrace::type_b(SaydModule::adjoint_diagonal(&z2)),
            group_algebra(&Category::graded(z2.clone()), &z2),
        ),
        old_and_new(
            "functions on Z/2 in Rep(Z/2), coefficient k",
            Contratrace::type_a(SaydModule::trivial(&z2)),
            functions_on_group(&z2),
        ),
        old_and_new(
            "kZ/3 in Vec_Z/3, conjugation-diagonal coefficient",
            Contratrace::type_b(SaydModule::adjoint_diagonal(&z3)),
            group_algebra(&Category::graded(z3.clone()), &z3),
        ),
        old_and_new("dual numbers in Vec, coefficient k", kv, AlgebraData::dual_numbers(&vect).expect("dual numbers")),
    ]
}

fn pair_independence() -> Vec<Instance> {
    let z2 = cyclic(2);
    let rep = Category::rep(z2.clone());
    let graded = Category::graded(z2.clone());
    let ke = Contratrace::type_a(SaydModule::trivial(&z2));
    let regular = Obj::Rep(Rep::regular(z2.clone()));
    let pair = |description: &str, trace: &Contratrace, a: &AlgebraData, q: Obj| {
        computed(
            Side::new(trace.clone(), a.clone(), Pipeline::NewCanonical),
            Side::new(trace.clone(), a.clone(), Pipeline::NewFree(q)),
            description,
        )
    };
    let regular_plus_unit = regular.direct_sum(&rep.unit_object()).expect("same category");
    vec![
        pair("kZ/2 in Rep(Z/2), coefficient k, Q = kG", &ke, &group_algebra(&rep, &z2), regular.clone()),
        pair(
            "functions on Z/2 in Rep(Z/2), coefficient sign at e, Q = kG",
            &Contratrace::type_a(SaydModule::concentrated_at_identity(&sign(&z2))),
            &functions_on_group(&z2),
            regular.clone(),
        ),
        pair(
            "kZ/2 in Vec_Z/2, conjugation-diagonal coefficient, Q = kG",
            &Contratrace::type_b(SaydModule::adjoint_diagonal(&z2)),
            &group_algebra(&graded, &z2),
            Obj::Graded(GradedSpace::new(z2.clone(), vec![0, 1]).expect("degrees")),
        ),
        pair("kZ/2 in Rep(Z/2), coefficient k, Q = 1", &ke, &group_algebra(&rep, &z2), rep.unit_object()),
        pair("k in Rep(Z/2), coefficient k, Q = kG + 1", &ke, &unit_rep(&z2), regular_plus_unit),
    ]
}

fn morita() -> Vec<Instance> {
    let vect = Category::vect();
    let kv = Contratrace::type_b(SaydModule::trivial(vect.group()));
    let k = AlgebraData::unit_algebra(&vect);
    let kz2 = group_algebra(&vect, &cyclic(2));
    let side = |a: AlgebraData| Side::new(kv.clone(), a, Pipeline::Old);
    vec![
        computed(side(k.clone()), side(k.matrix_amplify(2).expect("M_2")), "k against M_2(k)"),
        computed(side(kz2.clone()), side(kz2.matrix_amplify(2).expect("M_2")), "kZ/2 against M_2(kZ/2)"),
        computed(side(kz2.clone()), side(kz2.matrix_amplify(1).expect("M_1")), "kZ/2 against M_1(kZ/2)"),
    ]
}

/// Type A data `(A, M)` in `Rep(G)` against type B data `(A ⋊ G, M^∨)` in `Vec_G`.
fn duality(description: &str, a: AlgebraData, m: SaydModule) -> Instance {
    let crossed = a.crossed_product().expect("crossed product");
    computed(
        Side::new(Contratrace::type_a(m.clone()), a, Pipeline::Old),
        Side::new(Contratrace::type_b(m.dual_flip()), crossed, Pipeline::Old),
        description,
    )
}

/// `k` in degree `x` with the trivial action.
fn modular_pair(g: &Arc<FinGroup>, x: usize) -> SaydModule {
    SaydModule::modular_pair(g, &vec![Scalar::ONE; g.order()], x).expect("trivial character on a central element")
}

fn ab_duality() -> Vec<Instance> {
    let (z2, z3, s3) = (cyclic(2), cyclic(3), s3());
    let at_e = |v: &Rep| SaydModule::concentrated_at_identity(v);
    vec![
        duality("Z/2, A = k, V = sign", unit_rep(&z2), at_e(&sign(&z2))),
        duality("Z/2, A = k, V = trivial", unit_rep(&z2), SaydModule::trivial(&z2)),
        duality("Z/2, A = functions on Z/2, V = trivial", functions_on_group(&z2), SaydModule::trivial(&z2)),
        duality("Z/2, A = k, conjugation-diagonal coefficient", unit_rep(&z2), SaydModule::adjoint_diagonal(&z2)),
        duality("Z/3, A = k, V = regular", unit_rep(&z3), at_e(&Rep::regular(z3.clone()))),
        duality("S_3, A = k, conjugation-diagonal coefficient", unit_rep(&s3), SaydModule::adjoint_diagonal(&s3)),
        duality("Z/2, A = functions on Z/2, modular pair (trivial, g)", functions_on_group(&z2), modular_pair(&z2, 1)),
        duality("Z/3, A = k, modular pair (trivial, g)", unit_rep(&z3), modular_pair(&z3, 1)),
    ]
}

fn fiber_examples() -> Vec<Instance> {
    let (z2, s3) = (cyclic(2), s3());
    let graded = Category::graded(z2.clone());
    let fun = functions_on_group(&z2);
    let kz2 = group_algebra(&graded, &z2);
    let crossed = fun.crossed_product().expect("crossed product");
    let a_side = |m: SaydModule, a: &AlgebraData| Side::new(Contratrace::type_a(m), a.clone(), Pipeline::Old);
    vec![
        computed(a_side(SaydModule::multiplication_adjoint(&z2), &unit_rep(&z2)), ordinary(&unit_rep(&z2)), "Z/2, A = k, multiplication-adjoint coefficient against HC(k)"),
        computed(
            Side::new(Contratrace::type_b(SaydModule::adjoint_diagonal(&z2)), kz2.clone(), Pipeline::Old),
            ordinary(&kz2),
            "Z/2, B = kG graded, conjugation-diagonal coefficient against HC(kG)",
        ),
        computed(
            a_side(SaydModule::adjoint_diagonal(&z2), &fun),
            ordinary(&crossed),
            "Z/2, A = functions on Z/2, conjugation-diagonal coefficient against HC(A ⋊ G)",
        ),
        computed(
            a_side(SaydModule::multiplication_adjoint(&z2), &fun),
            ordinary(&fun),
            "Z/2, A = functions on Z/2, multiplication-adjoint coefficient against HC(A)",
        ),
        computed(a_side(SaydModule::multiplication_adjoint(&s3), &unit_rep(&s3)), ordinary(&unit_rep(&s3)), "S_3, A = k, multiplication-adjoint coefficient against HC(k)"),
    ]
}

/// `dim (M ⊗ O_Y)^G`, the global sections on the finite quotient.
fn sections(m: &SaydModule, a: &AlgebraData) -> usize {
    let rep = a.obj().as_rep().expect("function algebra in Rep(G)");
    m.action().tensor(rep).expect("same group").invariants().dim()
}

fn derham_finite() -> Vec<Instance> {
    let (z1, z2, z3) = (cyclic(1), cyclic(2), cyclic(3));
    let case = |description: &str, g: &Arc<FinGroup>, m: SaydModule| {
        let a = functions_on_group(g);
        let even = sections(&m, &a);
        instance(description, Side::new(Contratrace::type_a(m), a, Pipeline::Old), Expected::Periodic { even, odd: 0 })
    };
    vec![
        case("Z/2 acting on itself, coefficient sign at e", &z2, SaydModule::concentrated_at_identity(&sign(&z2))),
        case("Z/2 acting on itself, coefficient k", &z2, SaydModule::trivial(&z2)),
        case("trivial group on a point, coefficient k", &z1, SaydModule::trivial(&z1)),
        case("Z/3 acting on itself, coefficient regular at e", &z3, SaydModule::concentrated_at_identity(&Rep::regular(z3.clone()))),
    ]
}
