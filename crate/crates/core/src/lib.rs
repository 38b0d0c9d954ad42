pub mod algebra;
pub mod bimodule;
pub mod category;
pub mod config;
pub mod contratrace;
pub mod cyclic;
pub mod error;
pub mod group;
pub mod harness;
pub mod linalg;
pub mod report;
pub mod rep;
pub mod sayd;

pub use error::{Error, Result};
