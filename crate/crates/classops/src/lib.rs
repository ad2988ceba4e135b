//! Conjugacy machinery over `permcore`: centralizers and conjugators by
//! backtrack search, classes of elements of prime order, Sylow subgroups,
//! `Omega_1` and small structural probes.

pub mod backtrack;
pub mod classes;
pub mod error;
pub mod structure;
pub mod sylow;

pub use classes::{classes_of_order_p, classes_of_order_p_with, prime_divisors, Certificate, ClassList, ClassOptions, ConjClassRep};
pub use backtrack::{centralizer, conjugator, conjugator_with};
pub use error::ClassError;
pub use structure::{omega1, structure_probe, StructureInfo};
pub use sylow::sylow_p;
