//! Command-line front end for `rank2p3-core`: profile reports, table-file
//! verification, identity checks and parameter sweeps.

mod cli;
pub mod format;

pub use cli::{run, Outcome};
pub use format::{parse_table, parse_table_bytes, serialize, ParseError, ParseErrorKind};
