//! Configuration, verification suites and reports behind the `mixedf4` command.

pub mod checks;
pub mod config;
pub mod report;
pub mod tau;

pub use checks::{run_named, run_verify, Ctx};
pub use config::{FieldConfig, RunConfig, Suite};
pub use report::{Record, Report, Status, SCHEMA_VERSION};
