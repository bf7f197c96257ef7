mod common;

use semiring_core::census::{enumerate_semirings, scan, CensusConfig};
use semiring_core::complement::orthogonal_complement;
use semiring_core::construct::{
    boolean_semiring, direct_product, poly_quotient, zmod,
};
use semiring_core::iso::isomorphic;
use semiring_core::lift::lift_nilidempotent;
use semiring_core::peirce::{peirce_decompose, FactorClass};
use semiring_core::theorem::{check_theorem, Profile, Theorem, Verdict};
use semiring_core::FiniteSemiring;

fn main_hypotheses_hold(s: &FiniteSemiring) -> bool {
    Profile::compute(s)
        .report(Theorem::Main)
        .hypotheses
        .iter()
        .all(|c| c.holds)
}

#[test]
fn no_theorem_is_violated_anywhere() {
    for s in common::everything() {
        for t in Theorem::ALL {
            let r = check_theorem(&s, t);
            assert_ne!(r.verdict, Verdict::Violation, "{t} on {:?}", s.labels());
        }
    }
}

#[test]
fn complements_kill_mixed_products_and_centralise_idempotents() {
    for s in common::everything().iter().filter(|s| main_hypotheses_hold(s)) {
        for e in s.elements().filter(|&e| s.is_idempotent(e)) {
            let f = orthogonal_complement(s, e).unwrap().expect("hypothesis").f;
            for x in s.elements() {
                assert_eq!(s.product([e, x, f]), s.zero());
                assert_eq!(s.mul(x, e), s.mul(e, x));
            }
        }
    }
}

#[test]
fn perturbed_idempotent_keeps_a_complement() {
    for s in common::everything().iter().filter(|s| main_hypotheses_hold(s)) {
        for e in s.elements().filter(|&e| s.is_idempotent(e)) {
            let f = orthogonal_complement(s, e).unwrap().unwrap().f;
            for x in s.elements() {
                let e2 = s.add(e, s.product([e, x, f]));
                assert!(s.is_idempotent(e2));
                let g = orthogonal_complement(s, e2).unwrap().expect("complement").f;
                assert_eq!(s.sum([e2, g]), s.one());
            }
        }
    }
}

#[test]
fn lifts_are_idempotent_and_respect_nilpotent_products() {
    let mut lifted = 0;
    for s in common::everything() {
        let classes = s.classify();
        if !classes.nil_in_invertible_center() {
            continue;
        }
        for g in classes.nilidempotents.iter() {
            let trace = lift_nilidempotent(&s, g).unwrap();
            assert!(trace.check(&s));
            assert_eq!(s.add(g, trace.correction), trace.f);
            lifted += 1;
            for e in classes.idempotents.iter() {
                let nil = |a| s.is_nilpotent(a);
                if nil(s.mul(e, g)) && nil(s.mul(g, e)) {
                    assert!(nil(s.mul(e, trace.f)) && nil(s.mul(trace.f, e)));
                }
            }
        }
    }
    assert!(lifted > 50);
}

#[test]
fn peirce_factors_multiply_out_and_are_two_element() {
    let mut decomposed = 0;
    for s in common::everything().iter().filter(|s| main_hypotheses_hold(s)) {
        let p = peirce_decompose(s).unwrap();
        assert!(p.verify(s));
        let product: usize = p.factors.iter().map(|f| f.semiring.order()).product();
        assert_eq!(product, s.order());
        for f in &p.factors {
            assert!(matches!(
                f.classification,
                FactorClass::IsoToBoolean | FactorClass::IsoToZ2
            ));
        }
        decomposed += 1;
    }
    assert!(decomposed >= 5);
}

#[test]
fn peirce_splits_the_crt_ring() {
    let s = poly_quotient(&zmod(3).unwrap(), &[2, 0, 1]).unwrap();
    let p = peirce_decompose(&s).unwrap();
    assert!(p.verify(&s));
    assert_eq!(p.factors.len(), 2);
    for f in &p.factors {
        assert_eq!(f.semiring.order(), 3);
        assert_eq!(f.classification, FactorClass::OtherNoNontrivialIdempotents);
    }
}

#[test]
fn scan_is_independent_of_worker_count() {
    let one = CensusConfig {
        workers: Some(1),
        ..CensusConfig::default()
    };
    let many = CensusConfig {
        workers: Some(4),
        ..CensusConfig::default()
    };
    let a = scan(&[2, 3, 4], &Theorem::ALL, &one).unwrap();
    let b = scan(&[2, 3, 4], &Theorem::ALL, &many).unwrap();
    assert_eq!(a, b);
    assert!(a.violations.is_empty());
    for tally in a.tallies.values() {
        assert_eq!(tally.confirmed + tally.vacuous, a.entries.len());
    }
}

#[test]
fn census_reaches_the_small_constructions() {
    let two = enumerate_semirings(2).unwrap();
    let b = boolean_semiring();
    let z2 = zmod(2).unwrap();
    assert!(two.iter().any(|s| isomorphic(s, &b).is_some()));
    assert!(two.iter().any(|s| isomorphic(s, &z2).is_some()));

    let four = enumerate_semirings(4).unwrap();
    let targets = [
        direct_product(&b, &b).unwrap(),
        direct_product(&z2, &z2).unwrap(),
        zmod(4).unwrap(),
        poly_quotient(&z2, &[0, 0, 1]).unwrap(),
    ];
    for t in &targets {
        assert_eq!(four.iter().filter(|s| isomorphic(s, t).is_some()).count(), 1);
    }
}
