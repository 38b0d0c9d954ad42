//! Property tests for the algebraic invariants the engine relies on.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use cyclic_sayd::algebra::AlgebraData;
use cyclic_sayd::config::{
    parse_config, AlgebraSpec, CategorySpec, CoefficientSpec, ComputationConfig, GeneratorImage, GroupSpec, ObjectSpec,
    PairSpec, PipelineSpec, ProductSpec, ScalarLit, TraceSpec, SCHEMA_VERSION,
};
use cyclic_sayd::cyclic::RelationReport;
use cyclic_sayd::harness::{InstanceResult, SuiteResult};
use cyclic_sayd::report::{ComputationReport, PipelineRow, Report, REPORT_SCHEMA};
use cyclic_sayd::category::{Category, Obj};
use cyclic_sayd::contratrace::Contratrace;
use cyclic_sayd::cyclic::{build_old_cocyclic, cohomology, DEFAULT_BUDGET};
use cyclic_sayd::group::FinGroup;
use cyclic_sayd::linalg::{Matrix, Scalar, SparseVec, Subspace};
use cyclic_sayd::rep::{vec_to_matrix, GradedSpace, Rep};
use cyclic_sayd::sayd::{check_sayd, SaydModule};

fn big(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn scalar() -> impl Strategy<Value = (i64, i64)> {
    let num = prop_oneof![-20i64..20, any::<i64>().prop_filter("not MIN", |n| *n != i64::MIN)];
    let den = prop_oneof![1i64..12, 1i64..i64::MAX];
    (num, den)
}

fn small_matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r).prop_map(|rows| Matrix::from_rows(&rows))
    })
}

fn groups() -> Vec<Arc<FinGroup>> {
    let z2 = FinGroup::cyclic(2).unwrap();
    vec![
        Arc::new(FinGroup::trivial()),
        Arc::new(z2.clone()),
        Arc::new(FinGroup::cyclic(3).unwrap()),
        Arc::new(FinGroup::cyclic(4).unwrap()),
        Arc::new(z2.product(&z2)),
        Arc::new(FinGroup::symmetric(3).unwrap()),
    ]
}

fn group() -> impl Strategy<Value = Arc<FinGroup>> {
    (0..groups().len()).prop_map(|i| groups()[i].clone())
}

/// A ±1 character: the sign of a permutation for `S_3`, parity of the index for cyclic groups.
fn sign_like(g: &Arc<FinGroup>) -> Rep {
    let trivial = vec![Scalar::ONE; g.order()];
    let parity: Vec<Scalar> = g.elements().map(|x| if x % 2 == 0 { Scalar::ONE } else { -Scalar::ONE }).collect();
    Rep::character(g.clone(), &parity).unwrap_or_else(|_| Rep::character(g.clone(), &trivial).unwrap())
}

fn inverse(p: &Matrix) -> Option<Matrix> {
    let n = p.rows();
    let cols: Option<Vec<SparseVec>> = (0..n).map(|i| p.solve(&SparseVec::unit(i))).collect();
    let inv = Matrix::from_columns(n, cols?);
    (p.mul(&inv).is_identity()).then_some(inv)
}

/// A direct sum of trivial, sign-like and regular pieces, conjugated by `p` when `p` is invertible.
fn rep_of(g: &Arc<FinGroup>, parts: &[u8], p: &[i64]) -> Rep {
    let piece = |k: u8| match k % 3 {
        0 => Rep::trivial(g.clone(), 1),
        1 => sign_like(g),
        _ => Rep::regular(g.clone()),
    };
    let sum = parts.iter().skip(1).fold(piece(parts[0]), |acc, &k| acc.direct_sum(&piece(k)).unwrap());
    let n = sum.dim();
    let entries: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| if i == j { 1 } else { p[(i * n + j) % p.len()] }).collect()).collect();
    let p = Matrix::from_rows(&entries);
    match inverse(&p) {
        Some(inv) => Rep::new(g.clone(), n, sum.matrices().iter().map(|m| p.mul(m).mul(&inv)).collect()).unwrap(),
        None => sum,
    }
}

fn coefficient(g: &Arc<FinGroup>, k: u8) -> SaydModule {
    match k % 5 {
        0 => SaydModule::trivial(g),
        1 => SaydModule::adjoint_diagonal(g),
        2 => SaydModule::multiplication_adjoint(g),
        3 => SaydModule::concentrated_at_identity(&sign_like(g)),
        _ => SaydModule::adjoint_diagonal(g).dual_flip(),
    }
}

fn graded_of(g: &Arc<FinGroup>, degrees: &[usize]) -> Obj {
    Obj::Graded(GradedSpace::new(g.clone(), degrees.iter().map(|d| d % g.order()).collect()).unwrap())
}

/// A random morphism `v → w` from the hom space.
fn morphism(v: &Obj, w: &Obj, coeffs: &[i64]) -> Matrix {
    let homs = v.hom_space(w).unwrap();
    homs.basis().iter().zip(coeffs.iter().cycle()).fold(Matrix::zeros(w.dim(), v.dim()), |acc, (b, &c)| {
        acc.add(&vec_to_matrix(b, w.dim(), v.dim()).scale(&Scalar::int(c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn scalar_arithmetic_matches_big_rationals((a, b) in scalar(), (c, d) in scalar()) {
        let (x, y) = (Scalar::ratio(a, b), Scalar::ratio(c, d));
        let (bx, by) = (big(a, b), big(c, d));
        prop_assert_eq!(BigRational::from(&(&x + &y)), &bx + &by);
        prop_assert_eq!(BigRational::from(&(&x - &y)), &bx - &by);
        prop_assert_eq!(BigRational::from(&(&x * &y)), &bx * &by);
        if c != 0 {
            prop_assert_eq!(BigRational::from(&(&x / &y)), &bx / &by);
        }
        prop_assert_eq!(x.cmp(&y), bx.cmp(&by));
        prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }

    #[test]
    fn rank_nullity_and_transpose(m in small_matrix(6)) {
        let r = m.rank();
        prop_assert_eq!(r, m.transpose().rank());
        let ker = Subspace::kernel(&m);
        prop_assert_eq!(r + ker.dim(), m.cols());
        for v in ker.basis() {
            prop_assert!(m.mul_vec(v).is_zero());
        }
        prop_assert_eq!(Subspace::image(&m).dim(), r);
    }

    #[test]
    fn solve_recovers_a_preimage(m in small_matrix(5), x in proptest::collection::vec(-4i64..=4, 5)) {
        let x = SparseVec::from_dense(&x[..m.cols()].iter().map(|&v| Scalar::int(v)).collect::<Vec<_>>());
        let b = m.mul_vec(&x);
        let y = m.solve(&b).expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn kronecker_mixed_product(a in small_matrix(3), b in small_matrix(3), seed in 0i64..5) {
        let c = Matrix::from_rows(&(0..a.cols()).map(|i| (0..2).map(|j| (i as i64 + j + seed) % 3 - 1).collect()).collect::<Vec<Vec<i64>>>());
        let d = Matrix::from_rows(&(0..b.cols()).map(|i| (0..2).map(|j| (i as i64 * j + seed) % 4 - 2).collect()).collect::<Vec<Vec<i64>>>());
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
        prop_assert_eq!(a.pad(2, 3), Matrix::identity(2).kron(&a).kron(&Matrix::identity(3)));
    }

    #[test]
    fn subspace_form_is_canonical(m in small_matrix(5), scale in 1i64..5, shift in 0usize..5) {
        let cols: Vec<SparseVec> = m.columns().to_vec();
        let mut other: Vec<SparseVec> = cols.iter().map(|v| v.scale(&Scalar::ratio(-scale, 3))).collect();
        other.rotate_left(shift % cols.len());
        if cols.len() > 1 {
            other.push(cols[0].add(&cols[1]));
        }
        prop_assert_eq!(Subspace::span(m.rows(), &cols), Subspace::span(m.rows(), &other));
    }

    #[test]
    fn sum_and_intersection_dimensions(a in small_matrix(5), b in small_matrix(5)) {
        prop_assume!(a.rows() == b.rows());
        let (u, w) = (Subspace::image(&a), Subspace::image(&b));
        prop_assert_eq!(u.sum(&w).dim() + u.intersection(&w).dim(), u.dim() + w.dim());
        prop_assert!(u.sum(&w).contains_subspace(&u));
        prop_assert!(u.contains_subspace(&u.intersection(&w)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn invariants_by_elimination_and_averaging_agree(
        g in group(),
        parts in proptest::collection::vec(any::<u8>(), 1..3),
        p in proptest::collection::vec(-1i64..=1, 1..8),
    ) {
        let r = rep_of(&g, &parts, &p);
        prop_assert_eq!(r.invariants(), r.invariants_by_averaging());
        for x in g.elements() {
            for y in g.elements() {
                prop_assert_eq!(r.rho(x).mul(r.rho(y)), r.rho(g.mul(x, y)).clone());
            }
        }
    }

    #[test]
    fn sayd_constructions_pass_the_checker(g in group(), k in any::<u8>(), parts in proptest::collection::vec(any::<u8>(), 1..3)) {
        let m = coefficient(&g, k);
        prop_assert!(check_sayd(m.graded(), m.action()).is_ok());
        prop_assert_eq!(m.dual_flip().dual_flip(), m.clone());
        let v = SaydModule::concentrated_at_identity(&rep_of(&g, &parts, &[0]));
        prop_assert!(check_sayd(v.graded(), v.action()).is_ok());
    }

    #[test]
    fn type_a_flip_is_an_involution_and_natural(
        g in group(),
        k in any::<u8>(),
        pv in proptest::collection::vec(any::<u8>(), 1..3),
        pw in proptest::collection::vec(any::<u8>(), 1..3),
        coeffs in proptest::collection::vec(-2i64..=2, 1..6),
    ) {
        let f = Contratrace::type_a(coefficient(&g, k));
        let v = Obj::Rep(rep_of(&g, &pv, &[0]));
        let w = Obj::Rep(rep_of(&g, &pw, &[0]));
        prop_assume!(f.ambient_dim(&v.tensor(&w).unwrap()) <= 400);
        let t = f.tau(&v, &w).unwrap();
        prop_assert!(f.tau(&w, &v).unwrap().mul(&t).is_identity());

        // τ_{V,W} F(h ⊗ 1) = F(1 ⊗ h) τ_{V',W} for a morphism h: V → V'
        let v2 = Obj::Rep(rep_of(&g, &pw, &[1]));
        let h = morphism(&v, &v2, &coeffs);
        let (iw, vw, v2w, wv, wv2) = (
            Matrix::identity(w.dim()),
            v.tensor(&w).unwrap(),
            v2.tensor(&w).unwrap(),
            w.tensor(&v).unwrap(),
            w.tensor(&v2).unwrap(),
        );
        let lhs = t.mul(&f.eval_mor(&h.kron(&iw), &vw, &v2w).unwrap());
        let rhs = f.eval_mor(&iw.kron(&h), &wv, &wv2).unwrap().mul(&f.tau(&v2, &w).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn type_b_flip_is_an_involution_and_natural(
        g in group(),
        k in any::<u8>(),
        dv in proptest::collection::vec(0usize..6, 1..4),
        dw in proptest::collection::vec(0usize..6, 1..4),
        coeffs in proptest::collection::vec(-2i64..=2, 1..6),
    ) {
        let f = Contratrace::type_b(coefficient(&g, k));
        let (v, w) = (graded_of(&g, &dv), graded_of(&g, &dw));
        let t = f.tau(&v, &w).unwrap();
        prop_assert!(f.tau(&w, &v).unwrap().mul(&t).is_identity());

        let v2 = graded_of(&g, &dw);
        let h = morphism(&v, &v2, &coeffs);
        let iw = Matrix::identity(w.dim());
        let lhs = t.mul(&f.eval_mor(&h.kron(&iw), &v.tensor(&w).unwrap(), &v2.tensor(&w).unwrap()).unwrap());
        let rhs = f
            .eval_mor(&iw.kron(&h), &w.tensor(&v).unwrap(), &w.tensor(&v2).unwrap())
            .unwrap()
            .mul(&f.tau(&v2, &w).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trace_is_a_contravariant_functor(
        g in group(),
        k in any::<u8>(),
        degrees in proptest::collection::vec(proptest::collection::vec(0usize..6, 1..4), 3),
        coeffs in proptest::collection::vec(-2i64..=2, 1..6),
    ) {
        let f = Contratrace::type_b(coefficient(&g, k));
        let objs: Vec<Obj> = degrees.iter().map(|d| graded_of(&g, d)).collect();
        let a = morphism(&objs[0], &objs[1], &coeffs);
        let b = morphism(&objs[1], &objs[2], &coeffs[1..]);
        let composite = f.eval_mor(&b.mul(&a), &objs[0], &objs[2]).unwrap();
        let fa = f.eval_mor(&a, &objs[0], &objs[1]).unwrap();
        let fb = f.eval_mor(&b, &objs[1], &objs[2]).unwrap();
        prop_assert_eq!(composite, fa.mul(&fb));
        let id = f.eval_mor(&Matrix::identity(objs[0].dim()), &objs[0], &objs[0]).unwrap();
        prop_assert!(id.is_identity());
    }
}

fn small_algebra(cat: &Category, k: u8) -> AlgebraData {
    let g = cat.group().clone();
    match k % 4 {
        0 => AlgebraData::unit_algebra(cat),
        1 => AlgebraData::group_algebra(cat, &g).unwrap(),
        2 => AlgebraData::dual_numbers(cat).unwrap(),
        _ => AlgebraData::function_algebra(cat, 2).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn cocyclic_objects_satisfy_every_relation(gi in 0usize..3, rep_side in any::<bool>(), ka in any::<u8>(), km in any::<u8>()) {
        let g = groups()[gi].clone();
        let cat = if rep_side { Category::rep(g.clone()) } else { Category::graded(g.clone()) };
        let a = small_algebra(&cat, ka);
        let m = coefficient(&g, km);
        let f = if rep_side { Contratrace::type_a(m) } else { Contratrace::type_b(m) };
        let obj = build_old_cocyclic(&f, &a, 3, DEFAULT_BUDGET).unwrap();
        let report = obj.check();
        prop_assert!(report.passed(), "{:?}", report.failures.first());
        let coh = cohomology(&obj).unwrap();
        // cyclic cocycles are Hochschild cocycles in degree 0
        prop_assert_eq!(coh.hc[0], coh.hh[0]);
    }
}

fn scalar_lit() -> impl Strategy<Value = ScalarLit> {
    prop_oneof![(-9i64..9).prop_map(ScalarLit::Int), ((-9i64..9), (1i64..9)).prop_map(|(n, d)| ScalarLit::Text(format!("{n}/{d}")))]
}

fn object_spec() -> impl Strategy<Value = ObjectSpec> {
    let leaf = prop_oneof![
        Just(ObjectSpec::Unit {}),
        (1usize..4).prop_map(|dim| ObjectSpec::Trivial { dim }),
        Just(ObjectSpec::Regular {}),
        proptest::collection::vec(scalar_lit(), 1..4).prop_map(|values| ObjectSpec::Character { values }),
        proptest::collection::vec(0usize..4, 1..4).prop_map(|degrees| ObjectSpec::Graded { degrees }),
    ];
    leaf.prop_recursive(2, 6, 3, |inner| proptest::collection::vec(inner, 1..3).prop_map(|parts| ObjectSpec::Sum { parts }))
}

fn algebra_spec() -> impl Strategy<Value = AlgebraSpec> {
    let leaf = prop_oneof![
        Just(AlgebraSpec::Unit {}),
        Just(AlgebraSpec::GroupAlgebra { of: None }),
        (1usize..4).prop_map(|n| AlgebraSpec::GroupAlgebra { of: Some(GroupSpec::Cyclic { n }) }),
        (1usize..4).prop_map(|points| AlgebraSpec::Functions { points }),
        Just(AlgebraSpec::FunctionsOnGroup {}),
        Just(AlgebraSpec::DualNumbers {}),
        (object_spec(), proptest::collection::vec(scalar_lit(), 1..3), proptest::collection::vec((0usize..3, 0usize..3, proptest::collection::vec(scalar_lit(), 1..3)), 0..3))
            .prop_map(|(object, unit, products)| AlgebraSpec::Explicit {
                object,
                unit,
                products: products.into_iter().map(|(left, right, value)| ProductSpec { left, right, value }).collect(),
            }),
    ];
    leaf.prop_recursive(2, 4, 1, |inner| {
        prop_oneof![
            ((1usize..3), inner.clone()).prop_map(|(n, inner)| AlgebraSpec::Matrix { n, inner: Box::new(inner) }),
            inner.prop_map(|inner| AlgebraSpec::Crossed { inner: Box::new(inner) }),
        ]
    })
}

fn coefficient_spec() -> impl Strategy<Value = CoefficientSpec> {
    let leaf = prop_oneof![
        Just(CoefficientSpec::Trivial {}),
        object_spec().prop_map(|rep| CoefficientSpec::AtIdentity { rep }),
        Just(CoefficientSpec::AdjointDiagonal {}),
        Just(CoefficientSpec::MultiplicationAdjoint {}),
        (proptest::collection::vec(scalar_lit(), 1..4), 0usize..4).prop_map(|(chi, x)| CoefficientSpec::ModularPair { chi, x }),
        (proptest::collection::vec(0usize..4, 1..3), proptest::collection::vec((0usize..4, proptest::collection::vec(proptest::collection::vec(scalar_lit(), 2), 2)), 0..2))
            .prop_map(|(degrees, gens)| CoefficientSpec::Explicit {
                degrees,
                generators: gens.into_iter().map(|(element, matrix)| GeneratorImage { element, matrix }).collect(),
            }),
    ];
    leaf.prop_recursive(2, 3, 1, |inner| inner.prop_map(|of| CoefficientSpec::DualFlip { of: Box::new(of) }))
}

fn config() -> impl Strategy<Value = ComputationConfig> {
    let group = prop_oneof![
        Just(GroupSpec::Trivial {}),
        (1usize..6).prop_map(|n| GroupSpec::Cyclic { n }),
        (1usize..4).prop_map(|n| GroupSpec::Symmetric { n }),
        Just(GroupSpec::Table { table: vec![vec![0, 1], vec![1, 0]] }),
    ];
    let pair = prop_oneof![Just(PairSpec::Canonical {}), object_spec().prop_map(|q| PairSpec::Free { q })];
    let pipeline = prop_oneof![Just(PipelineSpec::Old), Just(PipelineSpec::New), Just(PipelineSpec::All)];
    (
        group,
        any::<bool>(),
        proptest::option::of("[a-z ]{0,12}"),
        algebra_spec(),
        coefficient_spec(),
        (1usize..6, 1usize..1_000_000),
        pipeline,
        pair,
    )
        .prop_map(|(group, rep, name, algebra, coefficient, (max_degree, budget), pipeline, pair)| ComputationConfig {
            schema: SCHEMA_VERSION,
            name,
            group,
            category: if rep { CategorySpec::Rep } else { CategorySpec::Graded },
            algebra,
            coefficient,
            trace: if rep { TraceSpec::A } else { TraceSpec::B },
            max_degree,
            budget,
            pipeline,
            pair,
        })
}

fn report() -> impl Strategy<Value = Report> {
    let dims = || proptest::collection::vec(0usize..50, 0..5);
    let row = ("[a-z-]{1,12}", 0usize..100_000, dims(), dims(), dims(), 0usize..500, 0usize..3, proptest::option::of("[a-z ]{0,20}"))
        .prop_map(|(pipeline, ambient, dims, hh, hc, relations_checked, relation_failures, error)| PipelineRow {
            pipeline,
            ambient,
            dims,
            hh,
            hc,
            relations_checked,
            relation_failures: relation_failures.min(relations_checked),
            error,
        });
    let computation = ("[a-zA-Z0-9 /]{0,16}", 1usize..6, proptest::collection::vec(row, 0..4), any::<bool>())
        .prop_map(|(name, max_degree, rows, agree)| ComputationReport { name, max_degree, rows, agree });
    let instance = ("[a-z ,/=]{0,24}", dims(), dims(), 0usize..200, proptest::option::of("[a-z ]{0,12}"), any::<bool>())
        .prop_map(|(description, left, right, checked, error, passed)| InstanceResult {
            description,
            left,
            right,
            relations: RelationReport { checked, failures: Vec::new() },
            error,
            passed,
        });
    let suite = ("[a-z_]{1,16}", 1usize..6, proptest::collection::vec(instance, 0..4))
        .prop_map(|(suite, max_degree, instances)| SuiteResult { suite, max_degree, instances });
    (any::<u64>(), proptest::collection::vec(computation, 0..3), proptest::collection::vec(suite, 0..3))
        .prop_map(|(wall_time_ms, computations, suites)| Report { schema: REPORT_SCHEMA, wall_time_ms, computations, suites })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn configs_survive_a_json_round_trip(c in config()) {
        let text = serde_json::to_string_pretty(&c).unwrap();
        prop_assert_eq!(parse_config(&text).unwrap(), c);
    }

    #[test]
    fn reports_survive_a_json_round_trip(r in report()) {
        prop_assert_eq!(Report::from_json(&r.to_json()).unwrap(), r.clone());
        prop_assert_eq!(r.passed(), r.to_text().trim_end().ends_with(&format!("PASS in {} ms", r.wall_time_ms)));
    }
}
