//! Registry, runner and reports for every certificate of the workspace.
//!
//! Checks are registered with stable ids such as `masterH.diagram.m=1.k=2.n=3.d=[2,3]`, grouped
//! into suites, and executed in parallel with results kept in registry order.

pub mod bounds;
pub mod config;
pub mod manifest;
pub mod oracle;
pub mod registry;
pub mod report;
pub mod run;

pub use bounds::{Bounds, DPolicy};
pub use config::{Config, CONFIG_ENV};
pub use registry::{registry, CheckSpec, Ctx, Suite};
pub use report::{CheckResult, Format, Report, Status, Summary};
pub use run::{list_checks, run_suite, RunOptions};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
