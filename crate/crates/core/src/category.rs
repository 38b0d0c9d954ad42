//! The two monoidal categories: representations `Rep(G)` and graded spaces `Vec_G`.
//!
//! Both are strict: tensor products of objects use Kronecker indexing, so the
//! monoidal unit and associativity hold on the nose. In `Vec_G` the basis of
//! `V ⊗ W` keeps Kronecker order and records a degree per basis vector;
//! [`GradedSpace::component_order`] lists it grouped by degree, with pairs
//! `(x, y)` of the same product degree in lexicographic order.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FinGroup;
use crate::linalg::{Matrix, Subspace};
use crate::rep::{same_group, GradedSpace, Rep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatKind {
    /// `Rep(G)`: G-representations with the diagonal tensor product
    Rep,
    /// `Vec_G`: G-graded spaces with the convolution tensor product
    Graded,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Category {
    kind: CatKind,
    group: Arc<FinGroup>,
}

impl Category {
    pub fn new(kind: CatKind, group: Arc<FinGroup>) -> Self {
        Category { kind, group }
    }

    pub fn rep(group: Arc<FinGroup>) -> Self {
        Category::new(CatKind::Rep, group)
    }

    pub fn graded(group: Arc<FinGroup>) -> Self {
        Category::new(CatKind::Graded, group)
    }

    /// Plain vector spaces, realized as graded spaces over the trivial group.
    pub fn vect() -> Self {
        Category::graded(Arc::new(FinGroup::trivial()))
    }

    pub fn kind(&self) -> CatKind {
        self.kind
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        &self.group
    }

    pub fn same_as(&self, other: &Category) -> bool {
        self.kind == other.kind && same_group(&self.group, &other.group)
    }

    pub fn unit_object(&self) -> Obj {
        self.trivial_object(1)
    }

    /// `dim` copies of the unit object.
    pub fn trivial_object(&self, dim: usize) -> Obj {
        match self.kind {
            CatKind::Rep => Obj::Rep(Rep::trivial(self.group.clone(), dim)),
            CatKind::Graded => Obj::Graded(GradedSpace::concentrated(self.group.clone(), self.group.identity(), dim)),
        }
    }
}

impl fmt::Debug for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            CatKind::Rep => "Rep",
            CatKind::Graded => "Vec",
        };
        write!(f, "{k}(G of order {})", self.group.order())
    }
}

/// An object of one of the two categories.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obj {
    Rep(Rep),
    Graded(GradedSpace),
}

impl Obj {
    pub fn category(&self) -> Category {
        match self {
            Obj::Rep(r) => Category::rep(r.group().clone()),
            Obj::Graded(g) => Category::graded(g.group().clone()),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Obj::Rep(r) => r.dim(),
            Obj::Graded(g) => g.dim(),
        }
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        match self {
            Obj::Rep(r) => r.group(),
            Obj::Graded(g) => g.group(),
        }
    }

    pub fn as_rep(&self) -> Option<&Rep> {
        match self {
            Obj::Rep(r) => Some(r),
            Obj::Graded(_) => None,
        }
    }

    pub fn as_graded(&self) -> Option<&GradedSpace> {
        match self {
            Obj::Graded(g) => Some(g),
            Obj::Rep(_) => None,
        }
    }

    pub fn tensor(&self, other: &Obj) -> Result<Obj> {
        match (self, other) {
            (Obj::Rep(a), Obj::Rep(b)) => Ok(Obj::Rep(a.tensor(b)?)),
            (Obj::Graded(a), Obj::Graded(b)) => Ok(Obj::Graded(a.tensor(b)?)),
            _ => Err(Error::CategoryMismatch("tensor of objects from different categories".into())),
        }
    }

    /// `self^{⊗n}`; the zeroth power is the unit object.
    pub fn tensor_power(&self, n: usize) -> Obj {
        let mut out = self.category().unit_object();
        for _ in 0..n {
            out = out.tensor(self).expect("same category");
        }
        out
    }

    pub fn direct_sum(&self, other: &Obj) -> Result<Obj> {
        match (self, other) {
            (Obj::Rep(a), Obj::Rep(b)) => Ok(Obj::Rep(a.direct_sum(b)?)),
            (Obj::Graded(a), Obj::Graded(b)) => Ok(Obj::Graded(a.direct_sum(b)?)),
            _ => Err(Error::CategoryMismatch("direct sum of objects from different categories".into())),
        }
    }

    /// Whether the linear map `f: self → target` is a morphism of the category.
    pub fn is_morphism(&self, f: &Matrix, target: &Obj) -> bool {
        match (self, target) {
            (Obj::Rep(a), Obj::Rep(b)) => a.is_equivariant(f, b),
            (Obj::Graded(a), Obj::Graded(b)) => a.is_graded_map(f, b),
            _ => false,
        }
    }

    /// Morphisms `self → target`, as flattened `dim target × dim self` matrices.
    pub fn hom_space(&self, target: &Obj) -> Result<Subspace> {
        match (self, target) {
            (Obj::Rep(a), Obj::Rep(b)) => Ok(crate::rep::hom_space(a, b)?),
            (Obj::Graded(a), Obj::Graded(b)) => Ok(a.hom_space(b)),
            _ => Err(Error::CategoryMismatch("hom between different categories".into())),
        }
    }

    /// Restriction of the structure to an invariant subspace presented by a
    /// projection `p` and section `s` (`p s = id`).
    pub(crate) fn subquotient(&self, p: &Matrix, s: &Matrix) -> Obj {
        match self {
            Obj::Rep(r) => {
                let rho = r.matrices().iter().map(|m| p.mul(m).mul(s)).collect();
                Obj::Rep(Rep::new(r.group().clone(), p.rows(), rho).expect("invariant subquotient"))
            }
            Obj::Graded(g) => {
                // sections used here send basis vectors to homogeneous vectors
                let degrees = s
                    .columns()
                    .iter()
                    .map(|c| g.degree(c.first().expect("nonzero section column").0))
                    .collect();
                Obj::Graded(GradedSpace::new(g.group().clone(), degrees).expect("degrees in range"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Scalar;

    fn z2() -> Arc<FinGroup> {
        Arc::new(FinGroup::cyclic(2).unwrap())
    }

    #[test]
    fn unit_is_strict() {
        for cat in [Category::rep(z2()), Category::graded(z2())] {
            let v = match cat.kind() {
                CatKind::Rep => Obj::Rep(Rep::regular(z2())),
                CatKind::Graded => Obj::Graded(GradedSpace::from_dims(z2(), &[1, 2]).unwrap()),
            };
            assert_eq!(v.tensor(&cat.unit_object()).unwrap(), v);
            assert_eq!(cat.unit_object().tensor(&v).unwrap(), v);
        }
    }

    #[test]
    fn tensor_is_strictly_associative() {
        let a = Obj::Graded(GradedSpace::from_dims(z2(), &[1, 1]).unwrap());
        let b = Obj::Graded(GradedSpace::from_dims(z2(), &[0, 2]).unwrap());
        let l = a.tensor(&b).unwrap().tensor(&a).unwrap();
        let r = a.tensor(&b.tensor(&a).unwrap()).unwrap();
        assert_eq!(l, r);
        let s = Obj::Rep(Rep::character(z2(), &[Scalar::ONE, Scalar::int(-1)]).unwrap());
        let reg = Obj::Rep(Rep::regular(z2()));
        assert_eq!(
            s.tensor(&reg).unwrap().tensor(&s).unwrap(),
            s.tensor(&reg.tensor(&s).unwrap()).unwrap()
        );
    }

    #[test]
    fn hom_dims() {
        let cat = Category::rep(z2());
        assert_eq!(cat.unit_object().hom_space(&cat.unit_object()).unwrap().dim(), 1);
        let one = Obj::Graded(GradedSpace::concentrated(z2(), 1, 1));
        let e = Category::graded(z2()).unit_object();
        assert_eq!(one.tensor(&one).unwrap(), e);
        assert_eq!(one.hom_space(&e).unwrap().dim(), 0);
    }

    #[test]
    fn mixed_categories_are_rejected() {
        let a = Category::rep(z2()).unit_object();
        let b = Category::graded(z2()).unit_object();
        assert!(matches!(a.tensor(&b), Err(Error::CategoryMismatch(_))));
        assert!(!a.is_morphism(&Matrix::identity(1), &b));
    }
}
