//! Class multiplication coefficients and the criteria built on them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cyclotomic::Accumulator;
use crate::error::TableError;
use crate::table::CharacterTable;

/// `n(C1, C2, C3)` by column index.
pub fn class_mult_coeff_idx(t: &CharacterTable, i1: usize, i2: usize, i3: usize) -> Result<BigInt, TableError> {
    let n = t.num_classes();
    if i1 >= n || i2 >= n || i3 >= n {
        return Err(TableError::Precondition(format!("class index out of range for {} classes", n)));
    }
    let (o1, o2, o3) = (
        t.classes[i1].elt_order,
        t.classes[i2].elt_order,
        t.classes[i3].elt_order,
    );
    let l12 = o1 / o1.gcd(&o2) * o2;
    let mut acc = Accumulator::new(l12 / l12.gcd(&o3) * o3);
    for row in &t.irr {
        let d = row[0]
            .to_rational()
            .ok_or_else(|| TableError::DataIntegrity(format!("degree {}", row[0])))?;
        let xy = &row[i1] * &row[i2];
        acc.add_product(&xy, &row[i3].conj(), &d.recip());
    }
    let sum = acc.finish();
    let scale = BigRational::new(&t.classes[i1].size * &t.classes[i2].size, t.order.clone());
    let value = sum.scale(&scale);
    match value.to_integer() {
        Some(k) if !k.is_negative() => Ok(k),
        _ => Err(TableError::DataIntegrity(format!(
            "n({}, {}, {}) = {}",
            t.classes[i1].label, t.classes[i2].label, t.classes[i3].label, value
        ))),
    }
}

/// Number of ways a fixed element of `c3` is a product `xy` with `x` in
/// `c1` and `y` in `c2`.
pub fn class_mult_coeff(t: &CharacterTable, c1: &str, c2: &str, c3: &str) -> Result<BigInt, TableError> {
    class_mult_coeff_idx(t, t.class_index(c1)?, t.class_index(c2)?, t.class_index(c3)?)
}

fn involution_class(t: &CharacterTable, c: &str) -> Result<usize, TableError> {
    let i = t.class_index(c)?;
    if t.classes[i].elt_order != 2 {
        return Err(TableError::Precondition(format!("class {c} does not consist of involutions")));
    }
    Ok(i)
}

/// For an involution class, the graph on it has an edge exactly when
/// `n(C, C, C)` is nonzero.
pub fn edge_exists(t: &CharacterTable, c: &str) -> Result<bool, TableError> {
    let i = involution_class(t, c)?;
    Ok(!class_mult_coeff_idx(t, i, i, i)?.is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliqueVerdict {
    /// The component of `t` is the complete graph on `p - 1` vertices.
    Complete,
    /// `p = 2` and `t` has a neighbour.
    Nontrivial,
    /// `p = 2` and the graph is edgeless.
    Singleton,
    Inconclusive,
}

impl CliqueVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            CliqueVerdict::Complete => "component-is-K_{p-1}",
            CliqueVerdict::Nontrivial => "nontrivial-component",
            CliqueVerdict::Singleton => "component-is-singleton",
            CliqueVerdict::Inconclusive => "inconclusive",
        }
    }
}

/// `rational` asserts that the class is closed under taking generators of
/// `<t>`. The table is consulted as well: a class on which some character
/// is irrational cannot be rational.
pub fn clique_test(t: &CharacterTable, c: &str, p: u64, rational: bool) -> Result<CliqueVerdict, TableError> {
    let i = t.class_index(c)?;
    if !permcore::is_prime(p) || t.classes[i].elt_order != p {
        return Err(TableError::Precondition(format!("class {c} does not have prime order {p}")));
    }
    if rational && !t.is_rational_class(i) {
        return Err(TableError::Precondition(format!("class {c} has irrational character values")));
    }
    let n = class_mult_coeff_idx(t, i, i, i)?;
    if p == 2 {
        return Ok(if n.is_zero() {
            CliqueVerdict::Singleton
        } else {
            CliqueVerdict::Nontrivial
        });
    }
    if rational && n == BigInt::from(p - 2) {
        Ok(CliqueVerdict::Complete)
    } else {
        Ok(CliqueVerdict::Inconclusive)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftOutcome {
    /// One lifted class: nothing to separate, the single-class argument for
    /// central 2-extensions applies instead.
    Degenerate,
    /// The first class gives a connected graph and the others are edgeless.
    Separated { connected: String, edgeless: Vec<String> },
    /// Some `n(C1, C1, Cj)` is nonzero; `j` and its value are reported.
    Inconclusive { blocking: Vec<(String, BigInt)> },
}

/// `lifted` are the classes of `G` over a connected involution class of
/// `G/Z`, with `C1` first. `quotient_connected` records that the graph
/// on the image class is connected.
pub fn multiclass_lift_test(
    t: &CharacterTable,
    lifted: &[&str],
    quotient_connected: bool,
) -> Result<LiftOutcome, TableError> {
    let idx = lifted
        .iter()
        .map(|l| involution_class(t, l))
        .collect::<Result<Vec<_>, _>>()?;
    if idx.len() <= 1 {
        return Ok(LiftOutcome::Degenerate);
    }
    if !quotient_connected {
        return Err(TableError::Precondition("the graph on the image class must be connected".into()));
    }
    let mut blocking = Vec::new();
    for (k, &j) in idx.iter().enumerate().skip(1) {
        let n = class_mult_coeff_idx(t, idx[0], idx[0], j)?;
        if !n.is_zero() {
            blocking.push((lifted[k].to_string(), n));
        }
    }
    if blocking.is_empty() {
        Ok(LiftOutcome::Separated {
            connected: lifted[0].to_string(),
            edgeless: lifted[1..].iter().map(|s| s.to_string()).collect(),
        })
    } else {
        Ok(LiftOutcome::Inconclusive { blocking })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::parse_table;
    use crate::table::tests::{ALT5, SYM3};

    #[test]
    fn small_coefficients() {
        let a5 = parse_table(ALT5).unwrap();
        assert_eq!(class_mult_coeff(&a5, "2a", "2a", "2a").unwrap(), BigInt::from(2));
        assert_eq!(class_mult_coeff(&a5, "2a", "2a", "1a").unwrap(), BigInt::from(15));
        assert!(edge_exists(&a5, "2a").unwrap());
        assert!(edge_exists(&a5, "3a").is_err());
        let s3 = parse_table(SYM3).unwrap();
        assert_eq!(class_mult_coeff(&s3, "2a", "2a", "1a").unwrap(), BigInt::from(3));
        assert!(class_mult_coeff(&s3, "2a", "2a", "2a").unwrap().is_zero());
        assert_eq!(clique_test(&s3, "2a", 2, true).unwrap(), CliqueVerdict::Singleton);
        assert_eq!(clique_test(&a5, "2a", 2, true).unwrap(), CliqueVerdict::Nontrivial);
        // 3-cycles of Alt(5): n(3a,3a,3a) is not 1
        assert_eq!(clique_test(&a5, "3a", 3, true).unwrap(), CliqueVerdict::Inconclusive);
        assert!(clique_test(&a5, "5a", 5, true).is_err());
    }

    #[test]
    fn cyclic_symmetry() {
        for text in [SYM3, ALT5] {
            let t = parse_table(text).unwrap();
            let n = t.num_classes();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let lhs = class_mult_coeff_idx(&t, a, b, c).unwrap() * &t.classes[c].size;
                        let binv = t.classes[b].inverse;
                        let rhs = class_mult_coeff_idx(&t, c, binv, a).unwrap() * &t.classes[a].size;
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn lift_outcomes() {
        let a5 = parse_table(ALT5).unwrap();
        assert_eq!(multiclass_lift_test(&a5, &["2a"], true).unwrap(), LiftOutcome::Degenerate);
        let s3 = parse_table(SYM3).unwrap();
        assert!(multiclass_lift_test(&s3, &["2a", "3a"], true).is_err());
        assert!(matches!(
            multiclass_lift_test(&a5, &["2a", "2a"], true).unwrap(),
            LiftOutcome::Inconclusive { .. }
        ));
    }
}
