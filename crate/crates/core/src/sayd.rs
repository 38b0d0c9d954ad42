//! Stable anti-Yetter-Drinfeld modules over `kG`.
//!
//! Over a group algebra a SAYD module is a G-graded space `M = ⊕ M_g` with a
//! G-action such that `h` maps `M_g` to `M_{hgh⁻¹}` and `g` fixes `M_g`
//! pointwise. The same data serves as the coefficient of both trace types:
//! type A reads the action, type B reads the grading as the coaction.

use std::fmt;
use std::sync::Arc;

use crate::group::FinGroup;
use crate::linalg::{Matrix, Scalar, SparseVec};
use crate::rep::{same_group, EquivariantGraded, GradedSpace, Rep, RepError};

/// The first failed SAYD condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SaydViolation {
    /// `h` sends a vector of degree `g` outside degree `hgh⁻¹`.
    Ayd { h: usize, g: usize },
    /// `g` does not act as the identity on `M_g`.
    Stability { g: usize },
    /// Grading and action do not fit together at all.
    Malformed(String),
}

impl fmt::Display for SaydViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SaydViolation::Ayd { h, g } => write!(f, "element {h} does not map degree {g} to its conjugate degree"),
            SaydViolation::Stability { g } => write!(f, "element {g} does not act trivially on its own component"),
            SaydViolation::Malformed(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for SaydViolation {}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SaydError {
    #[error(transparent)]
    Violation(#[from] SaydViolation),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("element {0} is not central")]
    NotCentral(usize),
    #[error("character value at {x} is {value}, not 1")]
    CharacterNotOne { x: usize, value: Scalar },
}

/// Checks the AYD block condition and stability for a grading plus an action.
pub fn check_sayd(graded: &GradedSpace, action: &Rep) -> Result<(), SaydViolation> {
    if !same_group(graded.group(), action.group()) {
        return Err(SaydViolation::Malformed("grading and action use different groups".into()));
    }
    if graded.dim() != action.dim() {
        return Err(SaydViolation::Malformed("grading and action have different dimensions".into()));
    }
    let grp = graded.group();
    for h in grp.elements() {
        for (j, col) in action.rho(h).columns().iter().enumerate() {
            let g = graded.degree(j);
            let target = grp.conj(h, g);
            if col.indices().any(|i| graded.degree(i) != target) {
                return Err(SaydViolation::Ayd { h, g });
            }
        }
    }
    for j in 0..graded.dim() {
        let g = graded.degree(j);
        if *action.rho(g).col(j) != SparseVec::unit(j) {
            return Err(SaydViolation::Stability { g });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaydModule {
    base: EquivariantGraded,
}

impl SaydModule {
    pub fn new(graded: GradedSpace, action: Rep) -> Result<Self, SaydError> {
        check_sayd(&graded, &action)?;
        Ok(SaydModule { base: EquivariantGraded::new(graded, action)? })
    }

    /// `V_e`: the representation `V` placed in degree `e`.
    pub fn concentrated_at_identity(v: &Rep) -> Self {
        let g = v.group().clone();
        let graded = GradedSpace::concentrated(g.clone(), g.identity(), v.dim());
        SaydModule::new(graded, v.clone()).expect("modules in degree e are always SAYD")
    }

    /// The trivial one-dimensional coefficient `k_e`.
    pub fn trivial(group: &Arc<FinGroup>) -> Self {
        SaydModule::concentrated_at_identity(&Rep::trivial(group.clone(), 1))
    }

    /// `kG` with `g` in degree `g` and the conjugation action.
    pub fn adjoint_diagonal(group: &Arc<FinGroup>) -> Self {
        let g = group.clone();
        let action = Rep::permutation(group.clone(), group.order(), move |h, x| g.conj(h, x)).expect("conjugation action");
        let graded = GradedSpace::new(group.clone(), group.elements().collect()).expect("degrees in range");
        SaydModule::new(graded, action).expect("conjugation module is SAYD")
    }

    /// `kG` entirely in degree `e` with the left regular action.
    pub fn multiplication_adjoint(group: &Arc<FinGroup>) -> Self {
        SaydModule::concentrated_at_identity(&Rep::regular(group.clone()))
    }

    /// The one-dimensional module `k_{χ,x}`: degree `x`, action `χ`.
    pub fn modular_pair(group: &Arc<FinGroup>, chi: &[Scalar], x: usize) -> Result<Self, SaydError> {
        let action = Rep::character(group.clone(), chi)?;
        if x >= group.order() || !group.is_central(x) {
            return Err(SaydError::NotCentral(x));
        }
        if !chi[x].is_one() {
            return Err(SaydError::CharacterNotOne { x, value: chi[x].clone() });
        }
        SaydModule::new(GradedSpace::concentrated(group.clone(), x, 1), action)
    }

    /// `M^∨`: the dual of `M_{g⁻¹}` placed in degree `g`, with the contragredient action.
    pub fn dual_flip(&self) -> Self {
        let grp = self.group().clone();
        let degrees = self.graded().degrees().iter().map(|&g| grp.inv(g)).collect();
        let graded = GradedSpace::new(grp, degrees).expect("degrees in range");
        SaydModule::new(graded, self.action().dual()).expect("dual flip of a SAYD module is SAYD")
    }

    /// `M̂`: the underlying representation, grading forgotten.
    pub fn forget_grading(&self) -> Rep {
        self.action().clone()
    }

    pub fn graded(&self) -> &GradedSpace {
        self.base.graded()
    }

    pub fn action(&self) -> &Rep {
        self.base.action()
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        self.base.group()
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.graded().degree(i)
    }

    /// `ρ(g)` on the total space.
    pub fn rho(&self, g: usize) -> &Matrix {
        self.action().rho(g)
    }
}
