//! Scenario runner behind the `vortspin` binary.

pub mod commands;
pub mod error;
pub mod format;
pub mod scenario;

pub use error::{CliError, CliResult};
pub use scenario::{Format, Scenario};
