//! Library side of the `ggconn` command: loading groups and tables,
//! building reports, and running the reproduction manifest.

pub mod commands;
pub mod error;
pub mod load;
pub mod manifest;
pub mod report;

pub use commands::{AnalyzeArgs, CoeffQuery, Format, Outcome};
pub use error::CliError;
pub use manifest::{parse_manifest, run_manifest, Manifest, Status, Tier};
pub use report::Report;
