mod common;

use common::{rational, single};
use classops::classes_of_order_p;
use gggraph::{analyze, component_stabilizer_sylow, strongly_p_embedded, Method, SpeVerdict, Verdict};
use permcore::builtin::alternating;

#[test]
fn m11_3a() {
    let cu = single("m11", 3, "3A");
    let r = analyze(&cu).unwrap();
    // second column of the C_p x C_p table: |Λ| = p^2 - 1
    assert_eq!(r.lambda_size, 8);
    assert_eq!(r.stabilizer_order, 144);
    assert_eq!(r.delta.order, 9);
    assert!(r.delta.is_elementary_abelian);
    assert_eq!(r.connected, Verdict::Disconnected);
    assert_eq!(r.method, Method::StabilizerAlgorithm);
    assert_eq!(component_stabilizer_sylow(&cu).unwrap().order(), 144);
}

#[test]
fn j2_5c_and_rational_closure() {
    let r = analyze(&single("j2", 5, "5C")).unwrap();
    assert_eq!((r.lambda_size, r.stabilizer_order, r.delta.order), (6, 300, 25));
    let r = analyze(&rational("j2", 5, "5C")).unwrap();
    assert_eq!(r.lambda_size, 12);
    assert_eq!(r.connected, Verdict::Disconnected);
}

#[test]
fn j2_3a() {
    let r = analyze(&single("j2", 3, "3A")).unwrap();
    assert_eq!(r.lambda_size, 2);
    assert_eq!(r.delta.order, 3);
}

#[test]
fn hs_5a_5c() {
    let r = analyze(&single("hs", 5, "5A")).unwrap();
    assert_eq!(r.lambda_size, 4);
    assert_eq!(r.delta.order, 5);
    assert_eq!(r.connected, Verdict::Disconnected);
    let r = analyze(&single("hs", 5, "5C")).unwrap();
    assert_eq!((r.lambda_size, r.stabilizer_order, r.delta.order), (20, 500, 25));
}

#[test]
fn triple_covers() {
    for label in ["3c", "3d"] {
        let r = analyze(&single("3a6", 3, label)).unwrap();
        assert_eq!((r.lambda_size, r.stabilizer_order, r.delta.order), (6, 54, 9), "3.A6 {label}");
    }
    // 3c lies over the 3-cycles and has a centralizer of order 36, so its
    // stabilizer is the 3^2.Sym(4) of the pair
    let r = analyze(&single("3a7", 3, "3c")).unwrap();
    assert_eq!((r.lambda_size, r.stabilizer_order, r.delta.order), (6, 216, 9));
    let r = analyze(&single("3a7", 3, "3d")).unwrap();
    assert_eq!((r.lambda_size, r.stabilizer_order, r.delta.order), (6, 54, 9));
}

#[test]
fn covers_p2() {
    let r = analyze(&single("22l34", 2, "2d")).unwrap();
    assert_eq!((r.lambda_size, r.stabilizer_order, r.delta.order), (3, 768, 4));
    let r = analyze(&single("2s62", 2, "2c")).unwrap();
    assert_eq!((r.lambda_size, r.stabilizer_order, r.delta.order), (56, 21504, 128));
}

#[test]
fn strongly_embedded() {
    let (_, m11) = common::data_group("m11");
    let spe = |g: &permcore::PermGroup, p| strongly_p_embedded(classes_of_order_p(g, p).unwrap()).unwrap();
    assert_eq!(spe(&m11, 3), SpeVerdict::True);
    assert_eq!(spe(&alternating(5), 2), SpeVerdict::True);
    assert_eq!(spe(&alternating(6), 3), SpeVerdict::True);
    assert_eq!(spe(&alternating(7), 3), SpeVerdict::False);
}
