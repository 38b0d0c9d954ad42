//! The two backends: Rep(G) and G-graded vector spaces, their objects,
//! tensor powers and hom spaces, and algebras living in them.

use std::sync::Arc;

use cyclic_sayd::algebra::AlgebraData;
use cyclic_sayd::category::{Category, Obj};
use cyclic_sayd::group::FinGroup;
use cyclic_sayd::rep::{GradedSpace, Rep};

fn main() {
    let z3 = Arc::new(FinGroup::cyclic(3).expect("Z/3"));
    let rep = Category::rep(z3.clone());
    let graded = Category::graded(z3.clone());

    let regular = Obj::Rep(Rep::regular(z3.clone()));
    println!("Rep(Z/3): dim Hom(kG ⊗ kG, 1) = {}", regular.tensor(&regular).unwrap().hom_space(&rep.unit_object()).unwrap().dim());

    let v = Obj::Graded(GradedSpace::new(z3.clone(), vec![0, 1, 2]).unwrap());
    let v3 = v.tensor_power(3);
    println!("Vec_Z/3: V^⊗3 has dim {}, degree-e part {:?}", v3.dim(), v3.as_graded().unwrap().component(0).len());

    for (name, cat) in [("Rep(Z/3)", &rep), ("Vec_Z/3", &graded)] {
        let kg = AlgebraData::group_algebra(cat, &z3).unwrap();
        println!("{name}: kZ/3 passes the algebra axioms: {}", kg.check().is_none());
    }
    let crossed = AlgebraData::unit_algebra(&rep).crossed_product().unwrap();
    println!("k ⋊ Z/3 lives in Vec_Z/3 with dim {}", crossed.dim());
    let m2 = AlgebraData::dual_numbers(&Category::vect()).unwrap().matrix_amplify(2).unwrap();
    println!("M_2(dual numbers) has dim {} and a {}-dimensional center", m2.dim(), m2.center_dim());
}
