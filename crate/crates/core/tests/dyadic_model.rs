use rcc_core::dyadic::*;
use rcc_core::relalg::{golden_table, BaseRel};

#[test]
fn axioms_at_depth_three() {
    let rep = check_axioms(3, 5).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.a5_found, 254);
}

#[test]
fn exhaustive_depth_three() {
    let s = exhaustive_sweep(3).unwrap();
    assert!(s.passed(), "{s:?}");
    assert_eq!(s.triples, 254 * 254 * 254);
}

#[test]
fn sampled_depth_five() {
    let (v, j) = sampled_soundness(5, 20_000, 7).unwrap();
    assert_eq!((v, j), (0, 0));
}

#[test]
fn chains_at_depth_five_and_four() {
    for k in 1..=4 {
        let c = standard_chain(k, 5).unwrap();
        for w in c.windows(2) {
            assert_eq!(classify11(&w[0], &w[1]).unwrap(), BaseRel::Ntpp);
        }
    }
    for k in 1..=2usize {
        let a = BwRegion::cell(&"0".repeat(k + 1), 4).unwrap();
        let b = BwRegion::cell("0", 4).unwrap();
        assert!(chain_exists(&a, &b, k, 4).unwrap());
        assert!(!chain_exists(&a, &b, k + 1, 4).unwrap());
    }
}

#[test]
fn pody_at_depths_three_and_four() {
    for d in [3, 4] {
        let r = pody_counterexample(d).unwrap();
        assert_eq!(r.relation, BaseRel::Pody);
        assert_eq!(r.tpp_witnesses + r.ntpp_witnesses, 0);
        assert!(r.control_holds);
    }
}

#[test]
fn triads_in_the_model() {
    let g = golden_table();
    for &(r, t, s) in POSITIVE_TRIADS.iter() {
        assert!(g.get(r, s).contains(t));
        let rep = search_triad(r, t, s, 3).unwrap();
        assert!(rep.instances > 0 && rep.with_witness > 0, "{rep:?}");
        let (a, b, c) = rep.example.unwrap();
        assert_eq!(classify11(&a, &b).unwrap(), r);
        assert_eq!(classify11(&b, &c).unwrap(), s);
        assert_eq!(classify11(&a, &c).unwrap(), t);
    }
    // Both negative triads are realisable on some instances, just not on all.
    for &(r, t, s) in NEGATIVE_TRIADS.iter() {
        let rep = search_triad(r, t, s, 3).unwrap();
        assert!(rep.with_witness < rep.instances);
    }
}
