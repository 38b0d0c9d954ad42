//! Invariance suites: each instance computes two dimension vectors by
//! independent routes and passes when they agree in every degree below `N`.

mod suites;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraData;
use crate::category::Obj;
use crate::contratrace::Contratrace;
use crate::cyclic::{
    build_new_precocyclic, build_old_cocyclic, cohomology, default_augmentation, AdmissiblePair, CohomologyReport,
    PrecocyclicObject, RelationReport,
};
use crate::error::Result;

pub use suites::instances;

/// How a precocyclic object is produced.
#[derive(Clone, Debug)]
pub enum Pipeline {
    Old,
    NewCanonical,
    /// new construction on `A ⊗ Q ⊗ A` with the default augmentation of `Q`
    NewFree(Obj),
}

/// One cohomology computation: a trace, an algebra, and a construction.
#[derive(Clone, Debug)]
pub struct Side {
    pub trace: Contratrace,
    pub algebra: Arc<AlgebraData>,
    pub pipeline: Pipeline,
}

impl Side {
    pub fn new(trace: Contratrace, algebra: AlgebraData, pipeline: Pipeline) -> Self {
        Side { trace, algebra: Arc::new(algebra), pipeline }
    }

    /// Builds the precocyclic object this side computes with.
    pub fn build(&self, n_max: usize, budget: usize) -> Result<PrecocyclicObject> {
        Ok(match &self.pipeline {
            Pipeline::Old => build_old_cocyclic(&self.trace, &self.algebra, n_max, budget)?,
            Pipeline::NewCanonical => {
                let pair = AdmissiblePair::canonical(&self.algebra)?;
                build_new_precocyclic(&self.trace.lift(self.algebra.clone())?, &pair, n_max, budget)?
            }
            Pipeline::NewFree(q) => {
                let pair = AdmissiblePair::free_on(&self.algebra, q, &default_augmentation(q)?)?;
                build_new_precocyclic(&self.trace.lift(self.algebra.clone())?, &pair, n_max, budget)?
            }
        })
    }

    pub fn run(&self, n_max: usize, budget: usize) -> Result<CohomologyReport> {
        cohomology(&self.build(n_max, budget)?)
    }
}

/// The right-hand side of an instance.
#[derive(Clone, Debug)]
pub enum Expected {
    Computed(Side),
    /// `even` in even degrees and `odd` in odd ones
    Periodic { even: usize, odd: usize },
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub description: String,
    pub left: Side,
    pub right: Expected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub description: String,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub relations: RelationReport,
    pub error: Option<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub max_degree: usize,
    pub instances: Vec<InstanceResult>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(|i| i.passed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    OldVsNew,
    PairIndependence,
    Morita,
    AbDuality,
    FiberExamples,
    DerhamFinite,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::OldVsNew, Suite::PairIndependence, Suite::Morita, Suite::AbDuality, Suite::FiberExamples, Suite::DerhamFinite];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OldVsNew => "old_vs_new",
            Suite::PairIndependence => "pair_independence",
            Suite::Morita => "morita",
            Suite::AbDuality => "ab_duality",
            Suite::FiberExamples => "fiber_examples",
            Suite::DerhamFinite => "derham_finite",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

fn run_instance(inst: &Instance, n_max: usize, budget: usize) -> InstanceResult {
    let mut relations = RelationReport::default();
    let mut run = |side: &Side| -> std::result::Result<Vec<usize>, String> {
        let r = side.run(n_max, budget).map_err(|e| e.to_string())?;
        relations.merge(r.relations);
        Ok(r.hc)
    };
    let left = run(&inst.left);
    let right = match &inst.right {
        Expected::Computed(side) => run(side),
        Expected::Periodic { even, odd } => Ok((0..n_max).map(|n| if n % 2 == 0 { *even } else { *odd }).collect()),
    };
    match (left, right) {
        (Ok(l), Ok(r)) => InstanceResult {
            description: inst.description.clone(),
            passed: l == r && relations.passed(),
            left: l,
            right: r,
            relations,
            error: None,
        },
        (l, r) => InstanceResult {
            description: inst.description.clone(),
            left: l.clone().unwrap_or_default(),
            right: r.clone().unwrap_or_default(),
            relations,
            error: l.err().or(r.err()),
            passed: false,
        },
    }
}

/// Runs every instance of a suite; instances run in parallel, results keep their order.
pub fn run_suite(suite: Suite, n_max: usize, budget: usize) -> SuiteResult {
    let list = instances(suite);
    let results = list.par_iter().map(|inst| run_instance(inst, n_max, budget)).collect();
    SuiteResult { suite: suite.name().to_string(), max_degree: n_max, instances: results }
}

pub fn run_all(suites: &[Suite], n_max: usize, budget: usize) -> Vec<SuiteResult> {
    suites.iter().map(|&s| run_suite(s, n_max, budget)).collect()
}
