//! Precocyclic objects from algebras and admissible pairs, and their
//! Hochschild and cyclic cohomology.

mod cohomology;
mod homotopy;
mod new;
mod object;
mod old;
mod pair;

pub use cohomology::{cohomology, cyclic_lambda, hochschild, hochschild_differentials, CohomologyReport};
pub use homotopy::{augmentation_lifts, homotopy_check, solve_homotopy, Augmented};
pub use new::{build_new_precocyclic, new_ambient};
pub use object::{PrecocyclicObject, RelationFailure, RelationReport};
pub use old::{build_old_cocyclic, old_ambient};
pub use pair::{default_augmentation, AdmissiblePair, PairKind};

use crate::error::{Error, Result};

/// Ambient-dimension ceiling used when none is configured.
pub const DEFAULT_BUDGET: usize = 100_000;

/// Truncation degree used when none is configured.
pub const DEFAULT_MAX_DEGREE: usize = 4;

fn check_budget(required: usize, budget: usize) -> Result<()> {
    if required > budget {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

fn check_degree(n_max: usize) -> Result<()> {
    if n_max == 0 {
        Err(Error::CheckFailed("truncation degree must be at least 1".into()))
    } else {
        Ok(())
    }
}
