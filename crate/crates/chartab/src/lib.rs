//! Character tables over exact cyclotomic arithmetic, and the class
//! multiplication coefficients
//! `n(C1, C2, C3) = |C1||C2|/|G| * sum_chi chi(g1) chi(g2) conj(chi(g3)) / chi(1)`,
//! the number of ways to write a fixed element of `C3` as `xy` with
//! `x` in `C1` and `y` in `C2`.

pub mod brute;
pub mod coeff;
pub mod cyclotomic;
pub mod error;
pub mod table;

pub use brute::{all_classes, brute_force_coeff, match_table_to_group, GroupClass};
pub use coeff::{class_mult_coeff, class_mult_coeff_idx, clique_test, edge_exists, multiclass_lift_test, CliqueVerdict, LiftOutcome};
pub use cyclotomic::Cyclotomic;
pub use error::TableError;
pub use table::{parse_table, parse_unchecked, CharacterTable, ClassInfo};
