//! Unital associative algebras in `Rep(G)` and `Vec_G`, given by structure matrices.

use std::fmt;
use std::sync::Arc;

use crate::category::{CatKind, Category, Obj};
use crate::error::{Error, Result};
use crate::group::FinGroup;
use crate::linalg::{Matrix, Scalar, SparseVec};
use crate::rep::{same_group, GradedSpace, Rep};

/// First failed algebra axiom, with a witness where one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraViolation {
    Shape { mult: (usize, usize), unit: usize, dim: usize },
    /// `(e_i e_j) e_k != e_i (e_j e_k)`
    NotAssociative { i: usize, j: usize, k: usize },
    LeftUnit { i: usize },
    RightUnit { i: usize },
    MultNotMorphism,
    UnitNotMorphism,
}

impl fmt::Display for AlgebraViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraViolation::Shape { mult, unit, dim } => {
                write!(f, "multiplication is {}x{} and unit has length {unit} for dimension {dim}", mult.0, mult.1)
            }
            AlgebraViolation::NotAssociative { i, j, k } => write!(f, "(e{i} e{j}) e{k} != e{i} (e{j} e{k})"),
            AlgebraViolation::LeftUnit { i } => write!(f, "1 e{i} != e{i}"),
            AlgebraViolation::RightUnit { i } => write!(f, "e{i} 1 != e{i}"),
            AlgebraViolation::MultNotMorphism => write!(f, "multiplication is not a morphism"),
            AlgebraViolation::UnitNotMorphism => write!(f, "unit is not a morphism"),
        }
    }
}

/// An algebra object: `mult: A ⊗ A → A` as a `dim × dim²` matrix and a unit vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    obj: Obj,
    mult: Matrix,
    unit: SparseVec,
}

impl AlgebraData {
    /// Checked constructor.
    pub fn new(obj: Obj, mult: Matrix, unit: SparseVec) -> Result<Self> {
        let a = AlgebraData { obj, mult, unit };
        match a.check() {
            None => Ok(a),
            Some(v) => Err(Error::InvalidAlgebra(v.to_string())),
        }
    }

    /// Unchecked constructor, for diagnostics on deliberately broken data.
    pub fn new_unchecked(obj: Obj, mult: Matrix, unit: SparseVec) -> Self {
        AlgebraData { obj, mult, unit }
    }

    /// Builds the multiplication from `e_i e_j = Σ c e_k` triples `(i, j, [(k, c)])`.
    pub fn from_products(obj: Obj, unit: SparseVec, products: impl IntoIterator<Item = (usize, usize, Vec<(usize, Scalar)>)>) -> Result<Self> {
        let n = obj.dim();
        let mult = Matrix::from_triplets(
            n,
            n * n,
            products
                .into_iter()
                .flat_map(|(i, j, out)| out.into_iter().map(move |(k, c)| (k, i * n + j, c))),
        );
        AlgebraData::new(obj, mult, unit)
    }

    pub fn obj(&self) -> &Obj {
        &self.obj
    }

    pub fn dim(&self) -> usize {
        self.obj.dim()
    }

    pub fn category(&self) -> Category {
        self.obj.category()
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    /// The unit as a morphism `1 → A`.
    pub fn unit_matrix(&self) -> Matrix {
        Matrix::from_columns(self.dim(), vec![self.unit.clone()])
    }

    pub fn multiply(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut pairs = Vec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                pairs.push((i * n + j, a * b));
            }
        }
        self.mult.mul_vec(&SparseVec::from_pairs(pairs))
    }

    /// `A^{⊗(n+1)} → A^{⊗n}` multiplying tensor factors `i` and `i+1`.
    pub fn mult_at(&self, n: usize, i: usize) -> Matrix {
        assert!(i < n, "factor index out of range");
        let d = self.dim();
        self.mult.pad(d.pow(i as u32), d.pow((n - 1 - i) as u32))
    }

    /// `A^{⊗n} → A^{⊗(n+1)}` inserting the unit as factor `j`.
    pub fn unit_at(&self, n: usize, j: usize) -> Matrix {
        assert!(j <= n, "slot out of range");
        let d = self.dim();
        self.unit_matrix().pad(d.pow(j as u32), d.pow((n - j) as u32))
    }

    /// First violated axiom, or `None` if `A` is a unital associative algebra in its category.
    pub fn check(&self) -> Option<AlgebraViolation> {
        let n = self.dim();
        if self.mult.shape() != (n, n * n) || self.unit.max_index().is_some_and(|i| i >= n) {
            return Some(AlgebraViolation::Shape { mult: self.mult.shape(), unit: self.unit.max_index().map_or(0, |i| i + 1), dim: n });
        }
        let left = self.mult.mul(&self.mult.pad(1, n));
        let right = self.mult.mul(&self.mult.pad(n, 1));
        if let Some(c) = (0..n * n * n).find(|&c| left.col(c) != right.col(c)) {
            return Some(AlgebraViolation::NotAssociative { i: c / (n * n), j: (c / n) % n, k: c % n });
        }
        let u = self.unit_matrix();
        let lu = self.mult.mul(&u.kron(&Matrix::identity(n)));
        if let Some(i) = (0..n).find(|&i| *lu.col(i) != SparseVec::unit(i)) {
            return Some(AlgebraViolation::LeftUnit { i });
        }
        let ru = self.mult.mul(&Matrix::identity(n).kron(&u));
        if let Some(i) = (0..n).find(|&i| *ru.col(i) != SparseVec::unit(i)) {
            return Some(AlgebraViolation::RightUnit { i });
        }
        let aa = self.obj.tensor(&self.obj).expect("same category");
        if !aa.is_morphism(&self.mult, &self.obj) {
            return Some(AlgebraViolation::MultNotMorphism);
        }
        if !self.category().unit_object().is_morphism(&u, &self.obj) {
            return Some(AlgebraViolation::UnitNotMorphism);
        }
        None
    }

    /// The unit object `1` with its canonical multiplication.
    pub fn unit_algebra(cat: &Category) -> Self {
        AlgebraData {
            obj: cat.unit_object(),
            mult: Matrix::identity(1),
            unit: SparseVec::unit(0),
        }
    }

    /// The group algebra `kH`. In `Vec_H` the basis vector `h` has degree `h`;
    /// in `Rep(H)` the group acts by conjugation; over the trivial group it is
    /// a plain algebra.
    pub fn group_algebra(cat: &Category, h: &Arc<FinGroup>) -> Result<Self> {
        let n = h.order();
        let obj = if cat.group().is_trivial() {
            cat.trivial_object(n)
        } else if same_group(cat.group(), h) {
            match cat.kind() {
                CatKind::Graded => Obj::Graded(GradedSpace::new(h.clone(), (0..n).collect())?),
                CatKind::Rep => {
                    let g = h.clone();
                    Obj::Rep(Rep::permutation(h.clone(), n, move |x, y| g.conj(x, y))?)
                }
            }
        } else {
            return Err(Error::CategoryMismatch("group algebra of a group other than the category's".into()));
        };
        let mult = Matrix::from_triplets(n, n * n, (0..n).flat_map(|x| (0..n).map(move |y| (h.mul(x, y), x * n + y, Scalar::ONE))));
        AlgebraData::new(obj, mult, SparseVec::unit(h.identity()))
    }

    /// Functions on a finite set with pointwise product, on the basis of
    /// point indicators. `obj` fixes the category structure on that basis.
    pub fn functions_on(obj: Obj) -> Result<Self> {
        let n = obj.dim();
        let mult = Matrix::from_triplets(n, n * n, (0..n).map(|y| (y, y * n + y, Scalar::ONE)));
        let unit = SparseVec::from_pairs((0..n).map(|y| (y, Scalar::ONE)).collect());
        AlgebraData::new(obj, mult, unit)
    }

    /// Functions on a finite set with trivial structure (all in degree `e`, trivial action).
    pub fn function_algebra(cat: &Category, points: usize) -> Result<Self> {
        AlgebraData::functions_on(cat.trivial_object(points))
    }

    /// Functions on a G-set in `Rep(G)`; `action(g, y) = g·y`, so `g` sends the
    /// indicator of `y` to the indicator of `g·y`.
    pub fn function_algebra_on_gset(group: &Arc<FinGroup>, points: usize, action: impl Fn(usize, usize) -> usize) -> Result<Self> {
        AlgebraData::functions_on(Obj::Rep(Rep::permutation(group.clone(), points, action)?))
    }

    /// `k[ε]/(ε²)` on the basis `1, ε`, with trivial structure.
    pub fn dual_numbers(cat: &Category) -> Result<Self> {
        let mult = Matrix::from_triplets(2, 4, [(0, 0, Scalar::ONE), (1, 1, Scalar::ONE), (1, 2, Scalar::ONE)]);
        AlgebraData::new(cat.trivial_object(2), mult, SparseVec::unit(0))
    }

    /// `M_n(A) = A ⊗ End(kⁿ)`; basis `(a, (i, j))` at `a n² + i n + j`, with
    /// matrix units carrying trivial structure.
    pub fn matrix_amplify(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidAlgebra("matrix size must be at least 1".into()));
        }
        let d = self.dim();
        let nn = n * n;
        let obj = self.obj.tensor(&self.category().trivial_object(nn))?;
        let big = d * nn;
        let mut trip = Vec::new();
        for a in 0..d {
            for b in 0..d {
                for (k, c) in self.mult.col(a * d + b).iter() {
                    for i in 0..n {
                        for j in 0..n {
                            for l in 0..n {
                                let x = a * nn + i * n + j;
                                let y = b * nn + j * n + l;
                                trip.push((k * nn + i * n + l, x * big + y, c.clone()));
                            }
                        }
                    }
                }
            }
        }
        let mult = Matrix::from_triplets(big, big * big, trip);
        let unit = SparseVec::from_pairs(
            self.unit
                .iter()
                .flat_map(|(a, c)| (0..n).map(move |i| (a * nn + i * n + i, c.clone())))
                .collect(),
        );
        AlgebraData::new(obj, mult, unit)
    }

    /// Crossed product `A ⋊ G` of an algebra in `Rep(G)`: the graded algebra
    /// on `A ⊗ kG` (basis `(a, g)` at `a |G| + g`, degree `g`) with
    /// `(a ⊗ g)(b ⊗ h) = a (g·b) ⊗ gh`.
    pub fn crossed_product(&self) -> Result<Self> {
        let rep = self
            .obj
            .as_rep()
            .ok_or_else(|| Error::CategoryMismatch("crossed product needs an algebra in Rep(G)".into()))?;
        let grp = rep.group().clone();
        let (d, m) = (self.dim(), grp.order());
        let big = d * m;
        let degrees = (0..big).map(|x| x % m).collect();
        let obj = Obj::Graded(GradedSpace::new(grp.clone(), degrees)?);
        let mut trip = Vec::new();
        for a in 0..d {
            for g in 0..m {
                for b in 0..d {
                    let gb = rep.rho(g).col(b);
                    let prod = self.mult.mul_vec(&SparseVec::from_pairs(gb.iter().map(|(bb, c)| (a * d + bb, c.clone())).collect()));
                    for h in 0..m {
                        let gh = grp.mul(g, h);
                        for (k, c) in prod.iter() {
                            trip.push((k * m + gh, (a * m + g) * big + b * m + h, c.clone()));
                        }
                    }
                }
            }
        }
        let mult = Matrix::from_triplets(big, big * big, trip);
        let unit = SparseVec::from_pairs(self.unit.iter().map(|(a, c)| (a * m + grp.identity(), c.clone())).collect());
        AlgebraData::new(obj, mult, unit)
    }

    /// The same structure constants viewed in plain vector spaces.
    pub fn forget(&self) -> Self {
        AlgebraData {
            obj: Category::vect().trivial_object(self.dim()),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
        }
    }

    /// Dimension of the center, by linear solving.
    pub fn center_dim(&self) -> usize {
        let n = self.dim();
        // rows: coefficient of e_k in z e_j - e_j z, for each j
        let mut trip = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.mult.col(i * n + j).iter() {
                    trip.push((j * n + k, i, c.clone()));
                }
                for (k, c) in self.mult.col(j * n + i).iter() {
                    trip.push((j * n + k, i, -c));
                }
            }
        }
        let m = Matrix::from_triplets(n * n, n, trip);
        n - m.rank()
    }
}
