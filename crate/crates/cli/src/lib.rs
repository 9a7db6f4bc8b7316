//! Convergence harness around the `tfrde` solvers: JSON run configurations,
//! refinement ladders, error/rate tables and solution snapshots.

pub mod config;
pub mod error;
pub mod format;
pub mod harness;
pub mod inline;

pub use config::{Format, LadderMode, RunConfig};
pub use error::{CliError, CliResult};
pub use harness::{run_convergence, run_single, ConvergenceRow, ConvergenceTable, SingleRun};
