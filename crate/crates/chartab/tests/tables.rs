mod common;

use chartab::{class_mult_coeff, edge_exists, multiclass_lift_test, LiftOutcome};
use num_bigint::BigInt;

fn check(file: &str, expected: &[(&str, u64)]) {
    let Some(t) = common::table(file) else {
        eprintln!("{file}: skipped (data unavailable)");
        return;
    };
    for &(c, n) in expected {
        assert_eq!(class_mult_coeff(&t, c, c, c).unwrap(), BigInt::from(n), "{file} {c}");
    }
}

#[test]
fn double_cover_coefficients() {
    check("2m12.ctbl", &[("2b", 24), ("2c", 6)]);
    check("2j2.ctbl", &[("2b", 10), ("2c", 0)]);
    check("2hs.ctbl", &[("2b", 80), ("2c", 30)]);
    check("2ru.ctbl", &[("2b", 1120), ("2c", 270)]);
    check("2suz.ctbl", &[("2b", 54), ("2c", 360)]);
}

#[test]
fn j4_involutions() {
    check("j4.ctbl", &[("2A", 112266)]);
    if let Some(t) = common::table("j4.ctbl") {
        assert!(edge_exists(&t, "2A").unwrap());
    }
}

#[test]
fn baby_monster_2a_is_edgeless() {
    let Some(t) = common::table("bm.ctbl") else {
        return;
    };
    assert!(!edge_exists(&t, "2A").unwrap());
    assert_eq!(class_mult_coeff(&t, "2B", "2B", "2B").unwrap(), BigInt::from(7379550u64));
    assert_eq!(class_mult_coeff(&t, "2C", "2C", "2C").unwrap(), BigInt::from(184246272u64));
}

#[test]
fn f42_cover_lifts_separate() {
    let Some(t) = common::table("2f42.ctbl") else {
        return;
    };
    for (c1, c2) in [("2b", "2c"), ("2d", "2e")] {
        assert_eq!(
            multiclass_lift_test(&t, &[c1, c2], true).unwrap(),
            LiftOutcome::Separated {
                connected: c1.to_string(),
                edgeless: vec![c2.to_string()],
            }
        );
    }
}

#[test]
fn fi22_cover() {
    check("2fi22.ctbl", &[("2b", 0), ("2c", 0), ("2d", 1512), ("2e", 270)]);
}
