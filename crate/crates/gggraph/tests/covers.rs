use classops::classes_of_order_p;
use gggraph::{is_pure, lex_product_check, quotient_transfer, ClassUnion, GraphError, LexOutcome};
use permcore::builtin::{alternating, cyclic, direct_product, hyperoctahedral, sl2};
use permcore::{Perm, PermGroup};

fn perm(n: usize, s: &str) -> Perm {
    Perm::parse_cycles(n, s).unwrap()
}

fn centre(g: &PermGroup) -> PermGroup {
    let z: Vec<Perm> = g
        .elements()
        .into_iter()
        .filter(|x| g.gens().iter().all(|s| s.commutes_with(x)))
        .collect();
    g.subgroup(z)
}

#[test]
fn triple_times_a5() {
    let g = direct_product(&cyclic(3), &alternating(5));
    let z = g.subgroup(vec![perm(8, "(1 2 3)")]);
    let cert = quotient_transfer(&g, &z, 2).unwrap();
    assert!(cert.holds());
    assert!(cert.pairs_checked > 100);
    let cert = quotient_transfer(&g, &z, 5).unwrap();
    assert!(cert.holds());
    assert_eq!(cert.classes_checked, 2);
    assert!(quotient_transfer(&g, &z, 3).is_err());
}

#[test]
fn trivial_quotient() {
    let g = alternating(5);
    let z = g.subgroup(Vec::new());
    assert!(quotient_transfer(&g, &z, 2).unwrap().holds());
    let t = perm(5, "(1 2)(3 4)");
    assert_eq!(lex_product_check(&g, &z, &t).unwrap(), LexOutcome::Holds);
}

#[test]
fn not_central() {
    let g = alternating(5);
    let z = g.subgroup(vec![perm(5, "(1 2)(3 4)")]);
    assert!(matches!(quotient_transfer(&g, &z, 3), Err(GraphError::NotCentral)));
}

#[test]
fn signed_permutations() {
    let g = hyperoctahedral(4);
    let z = g.subgroup(vec![perm(8, "(1 5)(2 6)(3 7)(4 8)")]);
    let t = perm(8, "(1 5)(2 6)");
    assert_eq!(lex_product_check(&g, &z, &t).unwrap(), LexOutcome::Holds);
    // t and -t have different numbers of fixed points
    let t = perm(8, "(1 2)(5 6)");
    assert_eq!(lex_product_check(&g, &z, &t).unwrap(), LexOutcome::HypothesisFailed);
}

#[test]
fn lexicographic_product_on_every_qualifying_class() {
    let mut holds = 0;
    for n in 2..=5 {
        let g = hyperoctahedral(n);
        let minus = Perm::from_cycles(2 * n, &(0..n).map(|i| vec![i, i + n]).collect::<Vec<_>>()).unwrap();
        let z = g.subgroup(vec![minus]);
        for c in classes_of_order_p(&g, 2).unwrap().classes {
            if c.rep == z.gens()[0] {
                continue;
            }
            let out = lex_product_check(&g, &z, &c.rep).unwrap();
            assert_ne!(out, LexOutcome::Fails, "W(B{n}) {}", c.fingerprint);
            holds += (out == LexOutcome::Holds) as usize;
        }
    }
    assert!(holds >= 3);
}

#[test]
fn hypothesis_failures() {
    let g = direct_product(&cyclic(2), &alternating(5));
    let z = g.subgroup(vec![perm(7, "(1 2)")]);
    let t = perm(7, "(3 4)(5 6)");
    assert_eq!(lex_product_check(&g, &z, &t).unwrap(), LexOutcome::HypothesisFailed);

    let g = sl2(5).unwrap();
    let z = centre(&g);
    assert_eq!(z.order(), 2);
    let t = g
        .elements()
        .into_iter()
        .find(|x| x.order() == 4)
        .unwrap();
    assert_eq!(lex_product_check(&g, &z, &t).unwrap(), LexOutcome::HypothesisFailed);
}

#[test]
fn purity() {
    let g = alternating(5);
    let l2 = classes_of_order_p(&g, 2).unwrap();
    let inv = ClassUnion::single(l2, 0).unwrap();
    let klein = g.subgroup(vec![perm(5, "(1 2)(3 4)"), perm(5, "(1 3)(2 4)")]);
    assert!(is_pure(&inv, &klein).unwrap());
    let l5 = classes_of_order_p(&g, 5).unwrap();
    let t = l5.classes[0].rep.clone();
    let cyc = g.subgroup(vec![t]);
    assert!(is_pure(&ClassUnion::rational(l5.clone(), 0).unwrap(), &cyc).unwrap());
    assert!(!is_pure(&ClassUnion::single(l5, 0).unwrap(), &cyc).unwrap());
}
