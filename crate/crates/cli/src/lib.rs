//! Spec parsing, analysis reports and table reproduction behind the `spinhol` binary.

pub mod error;
pub mod json;
pub mod report;
pub mod spec;
pub mod tables;

pub use error::{CliError, CliResult};
pub use report::{analyze, AnalysisReport};
pub use spec::{from_catalog, parse_spec, Input};
pub use tables::{reproduce_table, su2_table, Table};
