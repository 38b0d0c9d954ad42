//! Acceptance criteria, one line each, all exact. Expected values come from
//! the dense oracle in `support/`, from analytic arguments restated here, or
//! from two independently computed sides.

#[path = "support/dense_oracle.rs"]
mod dense_oracle;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cyclic_sayd::algebra::AlgebraData;
use cyclic_sayd::category::{Category, Obj};
use cyclic_sayd::contratrace::Contratrace;
use cyclic_sayd::cyclic::{augmentation_lifts, homotopy_check, solve_homotopy, AdmissiblePair, Augmented, DEFAULT_BUDGET};
use cyclic_sayd::group::FinGroup;
use cyclic_sayd::harness::{run_all, InstanceResult, Pipeline, Side, Suite, SuiteResult};
use cyclic_sayd::linalg::{Matrix, Scalar};
use cyclic_sayd::rep::{GradedSpace, Rep};
use cyclic_sayd::sayd::{check_sayd, SaydError, SaydModule, SaydViolation};
use dense_oracle::DenseAlgebra;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cyclic(n: usize) -> Arc<FinGroup> {
    Arc::new(FinGroup::cyclic(n).unwrap())
}

fn sign(g: &Arc<FinGroup>) -> Rep {
    Rep::character(g.clone(), &[Scalar::ONE, Scalar::int(-1)]).unwrap()
}

fn vect_trace() -> Contratrace {
    Contratrace::type_b(SaydModule::trivial(Category::vect().group()))
}

/// `(HH, HC)` dimensions.
type Dims = (Vec<usize>, Vec<usize>);

/// HH and HC for `n < 4` by the old and new-canonical pipelines.
fn both_pipelines(a: &AlgebraData) -> Result<[Dims; 2], String> {
    let run = |p: Pipeline| {
        Side::new(vect_trace(), a.clone(), p).run(4, DEFAULT_BUDGET).map(|r| (r.hh, r.hc)).map_err(|e| e.to_string())
    };
    Ok([run(Pipeline::Old)?, run(Pipeline::NewCanonical)?])
}

fn find(suites: &[SuiteResult], suite: Suite) -> &[InstanceResult] {
    &suites.iter().find(|s| s.suite == suite.name()).expect("suite ran").instances
}

fn all_pass(instances: &[InstanceResult]) -> Result<(), String> {
    match instances.iter().find(|i| !i.passed) {
        None => Ok(()),
        Some(i) => Err(format!("{}: {:?} vs {:?} {:?}", i.description, i.left, i.right, i.error)),
    }
}

fn structural(suites: &[SuiteResult]) -> Outcome {
    let mut checked = 0;
    for i in suites.iter().flat_map(|s| &s.instances) {
        ensure(i.error.is_none(), format!("{}: {:?}", i.description, i.error))?;
        ensure(i.relations.passed(), format!("{}: {:?}", i.description, i.relations.failures.first()))?;
        checked += i.relations.checked;
    }
    ensure(checked > 0, "no relations checked")?;
    Ok(format!("{checked} matrix identities on {} instances", suites.iter().map(|s| s.instances.len()).sum::<usize>()))
}

fn unit_algebra() -> Outcome {
    let (_, oracle_hc) = dense_oracle::cohomology(&DenseAlgebra::unit(), 4);
    ensure(oracle_hc == [1, 0, 1, 0], format!("oracle gave {oracle_hc:?}"))?;
    let [old, new] = both_pipelines(&AlgebraData::unit_algebra(&Category::vect()))?;
    ensure(old.1 == oracle_hc, format!("old {:?}", old.1))?;
    ensure(new == old, format!("new {new:?} vs old {old:?}"))?;
    Ok("HC = [1,0,1,0], old = new".into())
}

fn group_algebra_z2() -> Outcome {
    // kZ/2 splits as k × k, so HC doubles that of k
    let split: Vec<usize> = [1, 0, 1, 0].iter().map(|x| 2 * x).collect();
    let (_, oracle_hc) = dense_oracle::cohomology(&DenseAlgebra::cyclic_group(2), 4);
    ensure(oracle_hc == split, format!("oracle gave {oracle_hc:?}"))?;
    let [old, new] = both_pipelines(&AlgebraData::group_algebra(&Category::vect(), &cyclic(2)).unwrap())?;
    ensure(old.1 == split && new.1 == split, format!("old {:?}, new {:?}", old.1, new.1))?;
    Ok("HC = [2,0,2,0]".into())
}

fn morita(suites: &[SuiteResult], seconds: f64) -> Outcome {
    let inst = find(suites, Suite::Morita);
    all_pass(inst)?;
    for wanted in ["k against M_2(k)", "kZ/2 against M_2(kZ/2)"] {
        ensure(inst.iter().any(|i| i.description == wanted && i.passed), format!("missing {wanted}"))?;
    }
    ensure(seconds < 60.0, format!("took {seconds:.1} s"))?;
    let k = &inst[0];
    ensure(k.left[..4] == [1, 0, 1, 0], format!("HC(k) = {:?}", k.left))?;
    Ok(format!("{} instances in {seconds:.1} s", inst.len()))
}

fn pair_independence(suites: &[SuiteResult]) -> Outcome {
    let inst = find(suites, Suite::PairIndependence);
    all_pass(inst)?;
    let with_kg = inst.iter().filter(|i| i.description.ends_with("Q = kG")).count();
    ensure(with_kg >= 3, format!("only {with_kg} instances with Q = kG"))?;
    Ok(format!("{} instances, {with_kg} with Q = kG", inst.len()))
}

fn ab_duality(suites: &[SuiteResult]) -> Outcome {
    let inst = find(suites, Suite::AbDuality);
    ensure(inst.len() >= 4, "fewer than four instances")?;
    all_pass(inst)?;
    // Hom_G(sign, trivial) = 0 kills every cochain on the left
    let vanishing = inst.iter().find(|i| i.description == "Z/2, A = k, V = sign").ok_or("vanishing instance missing")?;
    ensure(vanishing.left.iter().chain(&vanishing.right).all(|&x| x == 0), format!("{vanishing:?}"))?;
    Ok(format!("{} instances, sign instance vanishes on both sides", inst.len()))
}

fn fiber_examples(suites: &[SuiteResult]) -> Outcome {
    let inst = find(suites, Suite::FiberExamples);
    all_pass(inst)?;
    // functions on Z/2 crossed with Z/2 is M_2(k): close the loop through HC(k)
    let z2 = cyclic(2);
    let g = z2.clone();
    let fun = AlgebraData::function_algebra_on_gset(&z2, 2, move |x, y| g.mul(x, y)).unwrap();
    let crossed = fun.crossed_product().unwrap().forget();
    let vect = Category::vect();
    let m2 = AlgebraData::unit_algebra(&vect).matrix_amplify(2).unwrap();
    let hc = |a: AlgebraData| Side::new(vect_trace(), a, Pipeline::Old).run(4, DEFAULT_BUDGET).map(|r| r.hc).map_err(|e| e.to_string());
    let (hc_crossed, hc_m2, hc_k) = (hc(crossed)?, hc(m2)?, hc(AlgebraData::unit_algebra(&vect))?);
    let (_, oracle_m2) = dense_oracle::cohomology(&DenseAlgebra::matrices(2), 3);
    ensure(hc_crossed == hc_m2 && hc_m2 == hc_k, format!("{hc_crossed:?}, {hc_m2:?}, {hc_k:?}"))?;
    ensure(hc_m2[..3] == oracle_m2[..], format!("oracle M_2(k) {oracle_m2:?}"))?;
    let loop_inst = inst.iter().find(|i| i.description.contains("against HC(A ⋊ G)")).ok_or("crossed instance missing")?;
    ensure(loop_inst.left == hc_k, format!("crossed instance {:?}", loop_inst.left))?;
    Ok(format!("{} instances, HC(A ⋊ G) = HC(M_2(k)) = HC(k)", inst.len()))
}

fn derham(suites: &[SuiteResult]) -> Outcome {
    let inst = find(suites, Suite::DerhamFinite);
    all_pass(inst)?;
    // O_G for G acting on itself is free, so (M ⊗ O_G)^G has dimension dim M
    let expected = [
        ("Z/2 acting on itself, coefficient sign at e", 1),
        ("Z/2 acting on itself, coefficient k", 1),
        ("trivial group on a point, coefficient k", 1),
        ("Z/3 acting on itself, coefficient regular at e", 3),
    ];
    for (description, dim) in expected {
        let i = inst.iter().find(|i| i.description == description).ok_or(format!("missing {description}"))?;
        let want: Vec<usize> = (0..i.left.len()).map(|n| if n % 2 == 0 { dim } else { 0 }).collect();
        ensure(i.left == want, format!("{description}: {:?} vs {want:?}", i.left))?;
    }
    Ok(format!("{} instances", inst.len()))
}

fn dual_numbers() -> Outcome {
    let (oracle_hh, oracle_hc) = dense_oracle::cohomology(&DenseAlgebra::dual_numbers(), 4);
    let [old, new] = both_pipelines(&AlgebraData::dual_numbers(&Category::vect()).unwrap())?;
    ensure(old == (oracle_hh.clone(), oracle_hc.clone()), format!("old {old:?} vs oracle {oracle_hh:?} {oracle_hc:?}"))?;
    ensure(new == old, format!("new {new:?}"))?;
    Ok(format!("HH = {oracle_hh:?}, HC = {oracle_hc:?}"))
}

fn random_lift(rng: &mut ChaCha8Rng, particular: &Matrix, directions: &[Matrix]) -> Matrix {
    directions.iter().fold(particular.clone(), |acc, d| {
        let c = Scalar::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2));
        acc.add(&d.scale(&c))
    })
}

fn homotopy() -> Outcome {
    let z2 = cyclic(2);
    let vect = Category::vect();
    let rep = Category::rep(z2.clone());
    let kz2_vect = Arc::new(AlgebraData::group_algebra(&vect, &z2).unwrap());
    let kz2_rep = Arc::new(AlgebraData::group_algebra(&rep, &z2).unwrap());
    let dual = Arc::new(AlgebraData::dual_numbers(&vect).unwrap());
    let augmented = |pair: AdmissiblePair| Augmented::new(pair.p, pair.d).unwrap();
    let canonical = |a: &Arc<AlgebraData>| augmented(AdmissiblePair::canonical(a).unwrap());
    let free = |a: &Arc<AlgebraData>, q: Obj| {
        let eps = cyclic_sayd::cyclic::default_augmentation(&q).unwrap();
        augmented(AdmissiblePair::free_on(a, &q, &eps).unwrap())
    };
    let graded_q = Obj::Graded(GradedSpace::new(Arc::new(FinGroup::trivial()), vec![0, 0]).unwrap());
    let setups = [
        (canonical(&kz2_vect), canonical(&kz2_vect)),
        (canonical(&dual), canonical(&dual)),
        (canonical(&kz2_rep), free(&kz2_rep, Obj::Rep(Rep::regular(z2.clone())))),
        (free(&kz2_vect, graded_q), canonical(&kz2_vect)),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut count = 0;
    for round in 0..3 {
        for (k, (p, q)) in setups.iter().enumerate() {
            let (particular, directions) = augmentation_lifts(p, q).map_err(|e| e.to_string())?;
            let f = random_lift(&mut rng, &particular, &directions);
            let g = random_lift(&mut rng, &particular, &directions);
            let h = solve_homotopy(p, q, &f, &g).map_err(|e| e.to_string())?;
            let ok = homotopy_check(p, q, &f, &g, &h, 3).map_err(|e| e.to_string())?;
            ensure(ok, format!("setup {k}, round {round}: dH + Hd ≠ g − f"))?;
            count += 1;
        }
    }
    ensure(count >= 10, "fewer than ten instances")?;
    Ok(format!("{count} seeded instances, n ≤ 3"))
}

fn sayd_checkers() -> Outcome {
    let (z2, z3) = (cyclic(2), cyclic(3));
    let s3 = Arc::new(FinGroup::symmetric(3).unwrap());
    let mut valid = vec![
        SaydModule::concentrated_at_identity(&Rep::trivial(z2.clone(), 1)),
        SaydModule::concentrated_at_identity(&sign(&z2)),
        SaydModule::concentrated_at_identity(&Rep::regular(z3.clone())),
        SaydModule::modular_pair(&z2, &[Scalar::ONE, Scalar::ONE], 0).map_err(|e| e.to_string())?,
        SaydModule::modular_pair(&z2, &[Scalar::ONE, Scalar::int(-1)], 0).map_err(|e| e.to_string())?,
    ];
    for g in [Arc::new(FinGroup::trivial()), z2.clone(), z3.clone(), s3] {
        valid.push(SaydModule::adjoint_diagonal(&g));
        valid.push(SaydModule::multiplication_adjoint(&g));
    }
    for m in &valid {
        check_sayd(m.graded(), m.action()).map_err(|e| e.to_string())?;
        check_sayd(m.dual_flip().graded(), m.dual_flip().action()).map_err(|e| e.to_string())?;
    }
    // k in degree g ≠ e with g acting by −1 is not stable at g
    let unstable = check_sayd(&GradedSpace::concentrated(z2.clone(), 1, 1), &sign(&z2));
    ensure(unstable == Err(SaydViolation::Stability { g: 1 }), format!("{unstable:?}"))?;
    // sign at the generator: χ(x) = −1
    let mpi = SaydModule::modular_pair(&z2, &[Scalar::ONE, Scalar::int(-1)], 1);
    ensure(matches!(mpi, Err(SaydError::CharacterNotOne { x: 1, .. })), format!("{mpi:?}"))?;
    Ok(format!("{} valid modules pass, both invalid ones rejected with witnesses", valid.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let morita_start = Instant::now();
    let mut suites = run_all(&[Suite::Morita], 4, DEFAULT_BUDGET);
    let morita_seconds = morita_start.elapsed().as_secs_f64();
    let others: Vec<Suite> = Suite::ALL.into_iter().filter(|&s| s != Suite::Morita).collect();
    suites.extend(run_all(&others, 4, DEFAULT_BUDGET));

    type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("structural identities up to N = 4", Box::new(|| structural(&suites))),
        ("cyclic cohomology of the unit algebra", Box::new(unit_algebra)),
        ("cyclic cohomology of kZ/2 in Vec", Box::new(group_algebra_z2)),
        ("Morita invariance", Box::new(|| morita(&suites, morita_seconds))),
        ("independence of the admissible pair", Box::new(|| pair_independence(&suites))),
        ("type A / type B duality", Box::new(|| ab_duality(&suites))),
        ("fiber functor examples", Box::new(|| fiber_examples(&suites))),
        ("finite de Rham comparison", Box::new(|| derham(&suites))),
        ("dual numbers against the dense oracle", Box::new(dual_numbers)),
        ("chain homotopy between lifts", Box::new(homotopy)),
        ("SAYD checkers", Box::new(sayd_checkers)),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.1} s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
