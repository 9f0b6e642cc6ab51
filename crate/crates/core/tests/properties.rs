mod common;

use knotcomp::cycles::is_admissible;
use knotcomp::{
    close_braid, enumerate_cycles, BraidWord, Diagram, Exps, HomflyEvaluator, LaurentPoly,
    MonomialMap,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(
        ((-3i32..=3, -2i32..=2, -2i32..=2, -3i32..=3), -5i64..=5),
        0..5,
    )
    .prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for ((a, a1, a2, q), c) in terms {
            p += &LaurentPoly::monomial(Exps([a, a1, a2, q]), BigInt::from(c));
        }
        p
    })
}

/// A braid word on 2 or 3 strands with up to `max_len` letters.
fn word(max_len: usize) -> impl Strategy<Value = (usize, Vec<i32>)> {
    (2usize..=3).prop_flat_map(move |s| {
        let letter = (1..s as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
        (Just(s), prop::collection::vec(letter, 0..=max_len))
    })
}

fn closure(s: usize, letters: &[i32]) -> Diagram {
    close_braid(&BraidWord::new(s, letters.to_vec()).unwrap())
}

/// Every edge subset avoiding the marked edge that is balanced at every
/// crossing, by exhaustion.
fn brute_force_cycles(d: &Diagram) -> Vec<Vec<usize>> {
    let n = d.edge_count();
    let marked = d.marked_edge();
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        let has = |e: usize| mask >> e & 1 == 1;
        if marked.is_some_and(has) {
            continue;
        }
        let balanced = d
            .crossings()
            .iter()
            .all(|c| has(c.k) as u8 + has(c.l) as u8 == has(c.i) as u8 + has(c.j) as u8);
        if balanced {
            out.push((0..n).filter(|&e| has(e)).collect());
        }
    }
    out.sort();
    out
}

/// No `{k, i}` turn at a positive crossing and no `{l, j}` turn at a negative
/// one.
fn brute_force_admissible(d: &Diagram, edges: &[usize]) -> bool {
    d.crossings().iter().all(|c| {
        let has = |e: usize| edges.contains(&e);
        let slots = (has(c.i), has(c.j), has(c.k), has(c.l));
        match c.sign {
            s if s > 0 => slots != (true, false, true, false),
            _ => slots != (false, true, false, true),
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn substitution_is_a_ring_map(a in laurent(), b in laurent()) {
        for m in [MonomialMap::a_times_q(), MonomialMap::a_to_q_pow(2), MonomialMap::invert_a_q()] {
            prop_assert_eq!((&a * &b).substitute(&m), &a.substitute(&m) * &b.substitute(&m));
            prop_assert_eq!((&a + &b).substitute(&m), &a.substitute(&m) + &b.substitute(&m));
        }
    }

    #[test]
    fn skein_relation((s, letters) in word(6), pick in any::<prop::sample::Index>()) {
        prop_assume!(!letters.is_empty());
        prop_assert!(common::skein_holds(s, &letters, pick.index(letters.len())));
    }

    #[test]
    fn mirror_inverts_a_and_q((s, letters) in word(6)) {
        let d = closure(s, &letters);
        let mut h = HomflyEvaluator::new();
        prop_assert_eq!(h.homfly(&d.mirror()).unwrap(), h.homfly(&d).unwrap().invert_a_q());
    }

    #[test]
    fn conjugation_invariance((s, letters) in word(5), g in 1i32..=2, positive in any::<bool>()) {
        let g = if g >= s as i32 { 1 } else { g };
        let g = if positive { g } else { -g };
        let mut conj = vec![g];
        conj.extend(&letters);
        conj.push(-g);
        let mut h = HomflyEvaluator::new();
        prop_assert_eq!(h.homfly(&closure(s, &conj)).unwrap(), h.homfly(&closure(s, &letters)).unwrap());
    }

    #[test]
    fn stabilization_invariance((s, letters) in word(5), positive in any::<bool>()) {
        let mut stab = letters.clone();
        stab.push(if positive { s as i32 } else { -(s as i32) });
        let mut h = HomflyEvaluator::new();
        prop_assert_eq!(h.homfly(&closure(s + 1, &stab)).unwrap(), h.homfly(&closure(s, &letters)).unwrap());
    }

    #[test]
    fn cycle_enumeration_matches_exhaustion((s, letters) in word(6)) {
        let d = closure(s, &letters);
        let brute = brute_force_cycles(&d);
        let mut found: Vec<Vec<usize>> = enumerate_cycles(&d, false).iter().map(|z| z.edges().to_vec()).collect();
        found.sort();
        prop_assert_eq!(&found, &brute);
        let mut admissible: Vec<Vec<usize>> = enumerate_cycles(&d, true).iter().map(|z| z.edges().to_vec()).collect();
        admissible.sort();
        let expected: Vec<Vec<usize>> = brute.into_iter().filter(|z| brute_force_admissible(&d, z)).collect();
        prop_assert_eq!(&admissible, &expected);
        for z in enumerate_cycles(&d, false) {
            prop_assert_eq!(is_admissible(&d, &z), brute_force_admissible(&d, z.edges()));
        }
    }

    #[test]
    fn closure_edge_count((s, letters) in word(6)) {
        let d = closure(s, &letters);
        let used: std::collections::BTreeSet<usize> =
            letters.iter().flat_map(|l| { let p = l.unsigned_abs() as usize - 1; [p, p + 1] }).collect();
        prop_assert_eq!(d.edge_count(), 2 * letters.len() + (s - used.len()));
        prop_assert_eq!(d.writhe(), letters.iter().map(|l| l.signum() as i64).sum::<i64>());
    }
}
