use permcore::group::closure_elements;
use permcore::{Perm, PermGroup, StabChain};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn product_is_associative(a in perm(7), b in perm(7), c in perm(7)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn inverse_and_order(a in perm(9)) {
        prop_assert!((&a * &a.inverse()).is_identity());
        prop_assert!(a.pow(a.order() as i64).is_identity());
        prop_assert_eq!(a.pow(-1), a.inverse());
        let total: usize = a.cycle_type().iter().sum();
        prop_assert_eq!(total, 9);
    }

    #[test]
    fn conjugation_is_an_action(t in perm(6), g in perm(6), h in perm(6)) {
        prop_assert_eq!(t.conj(&(&g * &h)), t.conj(&g).conj(&h));
        prop_assert_eq!(t.conj(&g).cycle_type(), t.cycle_type());
    }

    #[test]
    fn cycle_notation_roundtrip(a in perm(10)) {
        let text = a.to_string();
        prop_assert_eq!(Perm::parse_cycles(10, &text).unwrap(), a);
    }

    #[test]
    fn chain_matches_closure(gens in prop::collection::vec(perm(6), 1..3), seed in any::<u64>()) {
        let elts = closure_elements(&gens, 6);
        let chain = StabChain::build(6, &gens, &[], None, seed);
        prop_assert_eq!(chain.order(), elts.len() as u128);
        for g in elts.iter().take(50) {
            prop_assert!(chain.contains(g));
        }
    }

    #[test]
    fn prefix_base_is_respected(gens in prop::collection::vec(perm(6), 1..3), start in 0usize..6) {
        let g = PermGroup::new(6, gens).unwrap();
        let prefix: Vec<usize> = (0..6).map(|i| (i + start) % 6).collect();
        let chain = g.chain_with_base(&prefix);
        prop_assert_eq!(chain.order(), g.order());
        let base = chain.base();
        let mut pos = base.iter().map(|b| prefix.iter().position(|x| x == b).unwrap());
        let mut last = None;
        for p in pos.by_ref() {
            prop_assert!(last.is_none_or(|l| l < p));
            last = Some(p);
        }
    }

    #[test]
    fn enumeration_is_exact(gens in prop::collection::vec(perm(5), 1..3)) {
        let g = PermGroup::new(5, gens.clone()).unwrap();
        let mut seen = std::collections::HashSet::new();
        g.for_each_element(|x| { seen.insert(x.clone()); });
        prop_assert_eq!(seen, closure_elements(&gens, 5));
    }
}
