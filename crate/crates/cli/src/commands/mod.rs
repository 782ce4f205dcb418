pub mod classify;
pub mod profile;
pub mod validate;
pub mod vorticity;

use std::path::Path;

use crate::error::{CliError, CliResult};

/// Writes `text` to `path`, or to stdout when no path is set.
pub fn emit(text: &str, path: Option<&Path>) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::config(format!("cannot write {}: {e}", p.display()))),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Failed(format!("stdout: {e}")))
        }
    }
}
