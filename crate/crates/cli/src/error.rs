use std::path::PathBuf;

use chartab::TableError;
use classops::ClassError;
use gggraph::GraphError;
use permcore::PermError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0:?} is neither a readable file nor a built-in group name")]
    UnknownGroup(String),
    #[error("no class of order {p} matches {selector:?}")]
    UnknownClass { selector: String, p: u64 },
    #[error("manifest: {0}")]
    Manifest(String),
    #[error("{0}")]
    Usage(String),
}
