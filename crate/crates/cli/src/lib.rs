//! Batch sessions for the `cmreg` engine: parse a session file, run its
//! commands and collect JSON-lines records plus a human-readable summary.

mod app;
pub mod session;

pub use app::run_cli;
pub use session::{parse_session, run_session, RunOptions, SessionOutcome, SessionSpec};

/// Exit status for a session that failed to parse.
pub const EXIT_PARSE: i32 = 2;
