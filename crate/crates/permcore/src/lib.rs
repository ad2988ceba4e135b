//! Permutation group engine: permutations, stabilizer chains, orbits,
//! membership, uniform random elements and normal closures.
//!
//! Points are 0-based internally and act on the right (see [`perm`]).

pub mod builtin;
pub mod chain;
pub mod error;
pub mod field;
pub mod group;
pub mod grpfile;
pub mod perm;
pub mod random;

pub use chain::StabChain;
pub use error::PermError;
pub use group::{PermGroup, DEFAULT_SEED};
pub use grpfile::{parse_grp, GroupFile};
pub use perm::Perm;

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u128, p: u128) -> u128 {
    let mut n = n;
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
