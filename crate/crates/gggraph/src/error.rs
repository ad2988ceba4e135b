use classops::ClassError;
use permcore::PermError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("element is not in the class union")]
    NotInUnion,
    #[error("no elements of order {0} in the group")]
    NoClasses(u64),
    #[error("class index {0} out of range")]
    NoSuchClass(usize),
    #[error("{what} has {size} elements, above the bound {bound}")]
    TooLarge { what: &'static str, size: u128, bound: u128 },
    #[error("subgroup is not central")]
    NotCentral,
    #[error("{0}")]
    BadSubgroup(String),
}
