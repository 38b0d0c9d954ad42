//! JSON computation configs (schema version 1) and their validation.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "group": { "kind": "cyclic", "n": 2 },
//!   "category": "rep",
//!   "algebra": { "kind": "group_algebra" },
//!   "coefficient": { "kind": "trivial" },
//!   "trace": "A",
//!   "max_degree": 4,
//!   "pipeline": "all",
//!   "pair": { "kind": "free", "q": { "kind": "regular" } }
//! }
//! ```
//!
//! Scalars are JSON integers or strings such as `"-3/4"`. Matrices are lists of rows.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraData;
use crate::category::{CatKind, Category, Obj};
use crate::contratrace::{Contratrace, TraceKind};
use crate::cyclic::{new_ambient, old_ambient, AdmissiblePair, DEFAULT_BUDGET, DEFAULT_MAX_DEGREE};
use crate::error::Error;
use crate::group::FinGroup;
use crate::harness::{Pipeline, Side};
use crate::linalg::{Matrix, Scalar, SparseVec};
use crate::rep::{GradedSpace, Rep};
use crate::sayd::{SaydError, SaydModule};

pub const SCHEMA_VERSION: u32 = 1;

const MAX_SYMMETRIC: usize = 5;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("unsupported schema version {0}, expected {SCHEMA_VERSION}")]
    Schema(u32),
    #[error("{0}")]
    Invalid(String),
    #[error("coefficient is not SAYD: {0}")]
    Sayd(#[from] SaydError),
    #[error(transparent)]
    Engine(#[from] Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarLit {
    Int(i64),
    Text(String),
}

impl ScalarLit {
    fn value(&self) -> Result<Scalar, ConfigError> {
        match self {
            ScalarLit::Int(n) => Ok(Scalar::int(*n)),
            ScalarLit::Text(s) => s.parse().map_err(|_| ConfigError::Invalid(format!("`{s}` is not a rational number"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Trivial {},
    Cyclic { n: usize },
    Symmetric { n: usize },
    /// multiplication table with `table[a][b] = ab`
    Table { table: Vec<Vec<usize>> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CategorySpec {
    Rep,
    Graded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TraceSpec {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorImage {
    pub element: usize,
    pub matrix: Vec<Vec<ScalarLit>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ObjectSpec {
    Unit {},
    /// `dim` copies of the unit
    Trivial { dim: usize },
    /// the regular representation, or `kG` graded by element
    Regular {},
    /// a representation given on generators
    Rep { dim: usize, generators: Vec<GeneratorImage> },
    Character { values: Vec<ScalarLit> },
    Graded { degrees: Vec<usize> },
    Sum { parts: Vec<ObjectSpec> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductSpec {
    pub left: usize,
    pub right: usize,
    /// coordinates of the product
    pub value: Vec<ScalarLit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraSpec {
    Unit {},
    /// `kH`; `H` defaults to the config group, another group needs the trivial one
    GroupAlgebra {
        #[serde(default)]
        of: Option<GroupSpec>,
    },
    /// functions on `points` points with trivial structure
    Functions { points: usize },
    /// functions on the group, acted on by left multiplication
    FunctionsOnGroup {},
    DualNumbers {},
    Matrix { n: usize, inner: Box<AlgebraSpec> },
    /// `A ⋊ G` for `inner` built in `Rep(G)`
    Crossed { inner: Box<AlgebraSpec> },
    /// structure constants on the basis of `object`; unspecified products vanish
    Explicit { object: ObjectSpec, unit: Vec<ScalarLit>, products: Vec<ProductSpec> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CoefficientSpec {
    Trivial {},
    /// a representation placed in degree `e`
    AtIdentity { rep: ObjectSpec },
    AdjointDiagonal {},
    MultiplicationAdjoint {},
    ModularPair { chi: Vec<ScalarLit>, x: usize },
    DualFlip { of: Box<CoefficientSpec> },
    Explicit { degrees: Vec<usize>, generators: Vec<GeneratorImage> },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum PipelineSpec {
    #[default]
    Old,
    /// the new construction with the configured pair
    New,
    /// old, new on the canonical pair, and new on the configured free pair if any
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PairSpec {
    Canonical {},
    Free { q: ObjectSpec },
}

impl Default for PairSpec {
    fn default() -> Self {
        PairSpec::Canonical {}
    }
}

fn default_max_degree() -> usize {
    DEFAULT_MAX_DEGREE
}

fn default_budget() -> usize {
    DEFAULT_BUDGET
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComputationConfig {
    pub schema: u32,
    #[serde(default)]
    pub name: Option<String>,
    pub group: GroupSpec,
    pub category: CategorySpec,
    pub algebra: AlgebraSpec,
    pub coefficient: CoefficientSpec,
    pub trace: TraceSpec,
    #[serde(default = "default_max_degree")]
    pub max_degree: usize,
    #[serde(default = "default_budget")]
    pub budget: usize,
    #[serde(default)]
    pub pipeline: PipelineSpec,
    #[serde(default)]
    pub pair: PairSpec,
}

/// Parses and schema-checks a config; the first error carries its JSON path.
pub fn parse_config(text: &str) -> Result<ComputationConfig, ConfigError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let cfg: ComputationConfig = serde_path_to_error::deserialize(de).map_err(|e| ConfigError::Parse {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })?;
    if cfg.schema != SCHEMA_VERSION {
        return Err(ConfigError::Schema(cfg.schema));
    }
    Ok(cfg)
}

fn matrix(rows: &[Vec<ScalarLit>], dim: usize) -> Result<Matrix, ConfigError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(ConfigError::Invalid(format!("expected a {dim}x{dim} matrix")));
    }
    let values = rows.iter().map(|r| r.iter().map(ScalarLit::value).collect::<Result<Vec<_>, _>>()).collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(&values))
}

fn vector(v: &[ScalarLit]) -> Result<Vec<Scalar>, ConfigError> {
    v.iter().map(ScalarLit::value).collect()
}

fn rep_from_generators(group: &Arc<FinGroup>, dim: usize, gens: &[GeneratorImage]) -> Result<Rep, ConfigError> {
    let images = gens
        .iter()
        .map(|g| {
            if g.element >= group.order() {
                return Err(ConfigError::Invalid(format!("element {} out of range", g.element)));
            }
            Ok((g.element, matrix(&g.matrix, dim)?))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Rep::from_generators(group.clone(), dim, &images).map_err(Error::from)?)
}

/// A config with every construction validated, ready to compute.
#[derive(Clone, Debug)]
pub struct Computation {
    pub name: String,
    pub max_degree: usize,
    pub budget: usize,
    pub trace: Contratrace,
    pub algebra: Arc<AlgebraData>,
    pub sides: Vec<(String, Side)>,
}

impl ComputationConfig {
    pub fn build_group(&self) -> Result<Arc<FinGroup>, ConfigError> {
        build_group(&self.group)
    }

    fn category(&self, group: &Arc<FinGroup>) -> Category {
        match self.category {
            CategorySpec::Rep => Category::rep(group.clone()),
            CategorySpec::Graded => Category::graded(group.clone()),
        }
    }

    /// Validates every construction and sizes every requested pipeline
    /// against the budget before any matrix work.
    pub fn build(&self) -> Result<Computation, ConfigError> {
        let group = self.build_group()?;
        let cat = self.category(&group);
        let kind = match self.trace {
            TraceSpec::A => TraceKind::A,
            TraceSpec::B => TraceKind::B,
        };
        if kind.category_kind() != cat.kind() {
            return Err(ConfigError::Invalid("trace type A needs category rep, type B needs graded".into()));
        }
        let coeff = build_coefficient(&self.coefficient, &group)?;
        let trace = Contratrace::new(kind, coeff, cat.clone())?;
        let algebra = Arc::new(build_algebra(&self.algebra, &cat)?);
        if let Some(v) = algebra.check() {
            return Err(ConfigError::Invalid(format!("algebra check failed: {v}")));
        }
        let free_q = match &self.pair {
            PairSpec::Canonical {} => None,
            PairSpec::Free { q } => Some(build_object(q, &cat)?),
        };
        let mut sides = Vec::new();
        let mut add = |label: &str, pipeline: Pipeline| {
            sides.push((label.to_string(), Side { trace: trace.clone(), algebra: algebra.clone(), pipeline }));
        };
        match (self.pipeline, &free_q) {
            (PipelineSpec::Old, _) => add("old", Pipeline::Old),
            (PipelineSpec::New, None) => add("new-canonical", Pipeline::NewCanonical),
            (PipelineSpec::New, Some(q)) => add("new-free", Pipeline::NewFree(q.clone())),
            (PipelineSpec::All, q) => {
                add("old", Pipeline::Old);
                add("new-canonical", Pipeline::NewCanonical);
                if let Some(q) = q {
                    add("new-free", Pipeline::NewFree(q.clone()));
                }
            }
        }
        let comp = Computation {
            name: self.name.clone().unwrap_or_else(|| "computation".to_string()),
            max_degree: self.max_degree,
            budget: self.budget,
            trace,
            algebra,
            sides,
        };
        for (_, side) in &comp.sides {
            let required = side_ambient(side, self.max_degree)?;
            if required > self.budget {
                return Err(Error::BudgetExceeded { required, budget: self.budget }.into());
            }
        }
        Ok(comp)
    }
}

/// Largest ambient dimension a side touches at truncation `n_max`.
pub fn side_ambient(side: &Side, n_max: usize) -> Result<usize, ConfigError> {
    Ok(match &side.pipeline {
        Pipeline::Old => old_ambient(&side.trace, &side.algebra, n_max),
        Pipeline::NewCanonical => new_ambient(&side.trace.lift(side.algebra.clone())?, &AdmissiblePair::canonical(&side.algebra)?, n_max),
        Pipeline::NewFree(q) => {
            let (da, dq) = (side.algebra.dim(), q.dim());
            side.trace
                .coeff()
                .dim()
                .saturating_mul(da * da)
                .saturating_mul((dq * da).saturating_pow(n_max as u32 + 1))
        }
    })
}

pub fn build_group(spec: &GroupSpec) -> Result<Arc<FinGroup>, ConfigError> {
    let g = match spec {
        GroupSpec::Trivial {} => FinGroup::trivial(),
        GroupSpec::Cyclic { n } => FinGroup::cyclic(*n).map_err(Error::from)?,
        GroupSpec::Symmetric { n } if *n > MAX_SYMMETRIC => {
            return Err(ConfigError::Invalid(format!("symmetric groups are limited to n <= {MAX_SYMMETRIC}")))
        }
        GroupSpec::Symmetric { n } => FinGroup::symmetric(*n).map_err(Error::from)?,
        GroupSpec::Table { table } => FinGroup::from_table(table.clone()).map_err(Error::from)?,
    };
    Ok(Arc::new(g))
}

pub fn build_object(spec: &ObjectSpec, cat: &Category) -> Result<Obj, ConfigError> {
    let g = cat.group();
    let wrong = |what: &str| ConfigError::Invalid(format!("{what} objects need the other category"));
    Ok(match spec {
        ObjectSpec::Unit {} => cat.unit_object(),
        ObjectSpec::Trivial { dim } => cat.trivial_object(*dim),
        ObjectSpec::Regular {} => match cat.kind() {
            CatKind::Rep => Obj::Rep(Rep::regular(g.clone())),
            CatKind::Graded => Obj::Graded(GradedSpace::new(g.clone(), g.elements().collect()).map_err(Error::from)?),
        },
        ObjectSpec::Rep { dim, generators } => {
            if cat.kind() != CatKind::Rep {
                return Err(wrong("representation"));
            }
            Obj::Rep(rep_from_generators(g, *dim, generators)?)
        }
        ObjectSpec::Character { values } => {
            if cat.kind() != CatKind::Rep {
                return Err(wrong("character"));
            }
            Obj::Rep(Rep::character(g.clone(), &vector(values)?).map_err(Error::from)?)
        }
        ObjectSpec::Graded { degrees } => {
            if cat.kind() != CatKind::Graded {
                return Err(wrong("graded"));
            }
            Obj::Graded(GradedSpace::new(g.clone(), degrees.clone()).map_err(Error::from)?)
        }
        ObjectSpec::Sum { parts } => {
            let mut it = parts.iter();
            let first = it.next().ok_or_else(|| ConfigError::Invalid("empty direct sum".into()))?;
            it.try_fold(build_object(first, cat)?, |acc, p| Ok::<_, ConfigError>(acc.direct_sum(&build_object(p, cat)?)?))?
        }
    })
}

pub fn build_algebra(spec: &AlgebraSpec, cat: &Category) -> Result<AlgebraData, ConfigError> {
    let g = cat.group();
    Ok(match spec {
        AlgebraSpec::Unit {} => AlgebraData::unit_algebra(cat),
        AlgebraSpec::GroupAlgebra { of: None } => AlgebraData::group_algebra(cat, g)?,
        AlgebraSpec::GroupAlgebra { of: Some(h) } => AlgebraData::group_algebra(cat, &build_group(h)?)?,
        AlgebraSpec::Functions { points } => AlgebraData::function_algebra(cat, *points)?,
        AlgebraSpec::FunctionsOnGroup {} => {
            if cat.kind() != CatKind::Rep {
                return Err(ConfigError::Invalid("functions on the group need category rep".into()));
            }
            let grp = g.clone();
            AlgebraData::function_algebra_on_gset(g, g.order(), move |x, y| grp.mul(x, y))?
        }
        AlgebraSpec::DualNumbers {} => AlgebraData::dual_numbers(cat)?,
        AlgebraSpec::Matrix { n, inner } => build_algebra(inner, cat)?.matrix_amplify(*n)?,
        AlgebraSpec::Crossed { inner } => {
            if cat.kind() != CatKind::Graded {
                return Err(ConfigError::Invalid("a crossed product lives in category graded".into()));
            }
            build_algebra(inner, &Category::rep(g.clone()))?.crossed_product()?
        }
        AlgebraSpec::Explicit { object, unit, products } => {
            let obj = build_object(object, cat)?;
            let n = obj.dim();
            if unit.len() != n {
                return Err(ConfigError::Invalid(format!("unit has {} coordinates, expected {n}", unit.len())));
            }
            let unit = SparseVec::from_dense(&vector(unit)?);
            let entries = products
                .iter()
                .map(|p| {
                    if p.left >= n || p.right >= n || p.value.len() != n {
                        return Err(ConfigError::Invalid(format!("product ({}, {}) does not fit dimension {n}", p.left, p.right)));
                    }
                    let v = vector(&p.value)?;
                    Ok((p.left, p.right, v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            AlgebraData::from_products(obj, unit, entries)?
        }
    })
}

pub fn build_coefficient(spec: &CoefficientSpec, g: &Arc<FinGroup>) -> Result<SaydModule, ConfigError> {
    Ok(match spec {
        CoefficientSpec::Trivial {} => SaydModule::trivial(g),
        CoefficientSpec::AtIdentity { rep } => {
            let obj = build_object(rep, &Category::rep(g.clone()))?;
            SaydModule::concentrated_at_identity(obj.as_rep().expect("built in Rep(G)"))
        }
        CoefficientSpec::AdjointDiagonal {} => SaydModule::adjoint_diagonal(g),
        CoefficientSpec::MultiplicationAdjoint {} => SaydModule::multiplication_adjoint(g),
        CoefficientSpec::ModularPair { chi, x } => SaydModule::modular_pair(g, &vector(chi)?, *x)?,
        CoefficientSpec::DualFlip { of } => build_coefficient(of, g)?.dual_flip(),
        CoefficientSpec::Explicit { degrees, generators } => {
            let graded = GradedSpace::new(g.clone(), degrees.clone()).map_err(Error::from)?;
            let action = rep_from_generators(g, degrees.len(), generators)?;
            SaydModule::new(graded, action)?
        }
    })
}
