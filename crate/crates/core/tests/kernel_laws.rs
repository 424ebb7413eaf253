mod common;

use proptest::prelude::*;
use qlogic::truth::{bald_membership, luk_conj, luk_disj, luk_neg, max_disj, min_conj, xor_crisp, xor_fold, TruthValue};

fn truth_value() -> impl Strategy<Value = TruthValue> {
    (1i64..=1_000_000).prop_flat_map(|d| (0..=d, Just(d))).prop_map(|(n, d)| TruthValue::new(n, d).unwrap())
}

proptest! {
    #[test]
    fn de_morgan(a in truth_value(), b in truth_value()) {
        prop_assert_eq!(luk_neg(&luk_conj(&a, &b)), luk_disj(&luk_neg(&a), &luk_neg(&b)));
        prop_assert_eq!(luk_neg(&luk_disj(&a, &b)), luk_conj(&luk_neg(&a), &luk_neg(&b)));
        prop_assert_eq!(luk_neg(&min_conj(&a, &b)), max_disj(&luk_neg(&a), &luk_neg(&b)));
    }

    #[test]
    fn excluded_middle_and_contradiction(a in truth_value()) {
        prop_assert_eq!(luk_disj(&a, &luk_neg(&a)), TruthValue::one());
        prop_assert_eq!(luk_conj(&a, &luk_neg(&a)), TruthValue::zero());
        prop_assert_eq!(luk_neg(&luk_neg(&a)), a);
    }

    #[test]
    fn commutative_and_associative(a in truth_value(), b in truth_value(), c in truth_value()) {
        prop_assert_eq!(luk_conj(&a, &b), luk_conj(&b, &a));
        prop_assert_eq!(luk_disj(&a, &b), luk_disj(&b, &a));
        prop_assert_eq!(luk_conj(&luk_conj(&a, &b), &c), luk_conj(&a, &luk_conj(&b, &c)));
        prop_assert_eq!(luk_disj(&luk_disj(&a, &b), &c), luk_disj(&a, &luk_disj(&b, &c)));
    }

    #[test]
    fn monotone(a in truth_value(), b in truth_value(), c in truth_value()) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(luk_conj(&lo, &c) <= luk_conj(&hi, &c));
        prop_assert!(luk_disj(&lo, &c) <= luk_disj(&hi, &c));
        prop_assert!(luk_conj(&c, &lo) <= luk_conj(&c, &hi));
        prop_assert!(luk_disj(&c, &lo) <= luk_disj(&c, &hi));
    }

    #[test]
    fn results_stay_in_unit_interval(a in truth_value(), b in truth_value()) {
        for v in [luk_conj(&a, &b), luk_disj(&a, &b), luk_neg(&a)] {
            prop_assert!(v >= TruthValue::zero() && v <= TruthValue::one());
        }
    }

    #[test]
    fn non_crisp_xor_is_rejected(a in truth_value()) {
        prop_assert_eq!(xor_crisp(&a, &TruthValue::one()).is_ok(), a.is_crisp());
    }
}

#[test]
fn lattice_connectives_break_the_laws_at_one_half() {
    let half = TruthValue::half();
    assert_eq!(max_disj(&half, &luk_neg(&half)), half);
    assert_ne!(max_disj(&half, &luk_neg(&half)), TruthValue::one());
    assert_ne!(min_conj(&half, &half), TruthValue::zero());
    // Every non-crisp value is a counterexample.
    for v in common::farey_grid(12).into_iter().filter(|v| !v.is_crisp()) {
        assert_ne!(max_disj(&v, &luk_neg(&v)), TruthValue::one());
        assert_ne!(min_conj(&v, &luk_neg(&v)), TruthValue::zero());
    }
}

#[test]
fn xor_folds_compute_parity() {
    let (z, o) = (TruthValue::zero(), TruthValue::one());
    for n in 0..=6u32 {
        for bits in 0..(1u32 << n) {
            let values: Vec<TruthValue> = (0..n).map(|i| if bits >> i & 1 == 1 { o.clone() } else { z.clone() }).collect();
            let expected = TruthValue::from_bool(bits.count_ones() % 2 == 1);
            assert_eq!(xor_fold(&values).unwrap(), expected);
            // Right fold agrees: associativity.
            let right = values.iter().rev().try_fold(z.clone(), |acc, v| xor_crisp(v, &acc)).unwrap();
            assert_eq!(right, expected);
        }
    }
    for a in [&z, &o] {
        for b in [&z, &o] {
            assert_eq!(xor_crisp(a, b).unwrap(), xor_crisp(b, a).unwrap());
        }
    }
}

#[test]
fn bald_membership_is_non_increasing() {
    let mut prev = bald_membership(0);
    for n in 1..=1200 {
        let cur = bald_membership(n);
        assert!(cur <= prev, "increase at {n}");
        prev = cur;
    }
}
