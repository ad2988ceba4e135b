use permcore::PermError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("group of order {order} is not a {p}-group")]
    NotPGroup { order: u128, p: u64 },
    #[error("sylow-not-found: reached a {p}-subgroup of order {reached}, wanted {wanted}")]
    SylowNotFound { p: u64, reached: u128, wanted: u128 },
    #[error("group of order {order} exceeds the enumeration bound {bound}")]
    TooLarge { order: u128, bound: u128 },
}
