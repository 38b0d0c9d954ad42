use thiserror::Error;

use crate::group::GroupError;
use crate::rep::RepError;
use crate::sayd::SaydError;

/// Failures raised while building or checking algebraic data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("differentials do not compose to zero at degree {degree}")]
    NotAComplex { degree: usize },

    #[error("vector does not lie in the expected subspace ({0})")]
    NotInSubspace(String),

    #[error("invalid group: {0}")]
    Group(#[from] GroupError),

    #[error("invalid representation or grading: {0}")]
    Rep(#[from] RepError),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("not a stable anti-Yetter-Drinfeld module: {0}")]
    Sayd(#[from] SaydError),

    #[error("not a morphism: {0}")]
    NotAMorphism(String),

    #[error("category mismatch: {0}")]
    CategoryMismatch(String),

    #[error("map is not well defined: {0}")]
    NotWellDefined(String),

    #[error("ambient dimension {required} exceeds budget {budget}")]
    BudgetExceeded { required: usize, budget: usize },

    #[error("identity check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
