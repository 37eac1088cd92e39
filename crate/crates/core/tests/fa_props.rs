// SPDX-License-Identifier: Apache-2.0

//! Automaton operations against direct simulation on every word up to a horizon.

mod common;

use common::{
    alphabet, concat_star_member, extendable, order_key, random_nfa, random_subset, universe,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use supctl::fa::{
    complement, concat_star, determinize, enumerate_language, init_closure, intersect, is_prefix_closed,
    language_equivalent, language_includes, normalize, pref_largest, prefix_closure_violation, trim, union,
    Automaton, Inclusion,
};

const H: usize = 5;

fn instance(seed: u64) -> (Automaton, Automaton) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigma = alphabet(1 + (seed % 3) as usize);
    (random_nfa(&mut rng, &sigma, 5), random_nfa(&mut rng, &sigma, 5))
}

proptest! {
    #![proptest_config(common::cases(150))]

    #[test]
    fn language_preserving_forms(seed in any::<u64>()) {
        let (a, _) = instance(seed);
        let base = enumerate_language(&a, H);
        let d = determinize(&a).to_automaton();
        let n = normalize(&a);
        prop_assert!(d.is_deterministic() && n.is_deterministic());
        prop_assert!(common::trim_or_empty(&n) && common::trim_or_empty(&trim(&a)));
        for other in [d, n, trim(&a)] {
            prop_assert_eq!(&enumerate_language(&other, H), &base);
        }
    }

    #[test]
    fn boolean_operations(seed in any::<u64>()) {
        let (a, b) = instance(seed);
        let c = complement(&a).to_automaton();
        let i = intersect(&a, &b).unwrap();
        let u = union(&a, &b).unwrap();
        for w in universe(&a, H) {
            prop_assert_eq!(c.accepts(&w), !a.accepts(&w));
            prop_assert_eq!(i.accepts(&w), a.accepts(&w) && b.accepts(&w));
            prop_assert_eq!(u.accepts(&w), a.accepts(&w) || b.accepts(&w));
        }
    }

    #[test]
    fn closure_operators(seed in any::<u64>()) {
        let (a, _) = instance(seed);
        let init = init_closure(&a);
        let pref = pref_largest(&a);
        prop_assert!(is_prefix_closed(&init) && is_prefix_closed(&pref));
        for w in universe(&a, H) {
            prop_assert_eq!(init.accepts(&w), extendable(&a, &w), "init {}", w);
            prop_assert_eq!(pref.accepts(&w), w.prefixes().all(|v| a.accepts(&v)), "pref {}", w);
        }
        match prefix_closure_violation(&a) {
            None => {
                for w in enumerate_language(&a, H).iter() {
                    prop_assert!(w.prefixes().all(|v| a.accepts(&v)));
                }
            }
            Some(w) => prop_assert!(!a.accepts(&w) && extendable(&a, &w)),
        }
    }

    #[test]
    fn inclusion_witness_is_the_least(seed in any::<u64>()) {
        let (a, b) = instance(seed);
        let sigma = a.alphabet().clone();
        match language_includes(&a, &b).unwrap() {
            Inclusion::Holds => {
                for w in enumerate_language(&b, H).iter() {
                    prop_assert!(a.accepts(w));
                }
            }
            Inclusion::Fails(w) => {
                prop_assert!(b.accepts(&w) && !a.accepts(&w));
                for v in universe(&a, w.len()) {
                    if order_key(&sigma, &v) < order_key(&sigma, &w) {
                        prop_assert!(!(b.accepts(&v) && !a.accepts(&v)), "{} precedes {}", v, w);
                    }
                }
            }
        }
        prop_assert!(language_equivalent(&a, &normalize(&a)).unwrap());
    }

    #[test]
    fn concatenation_with_a_star(seed in any::<u64>()) {
        let (a, _) = instance(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let b = random_subset(&mut rng, a.alphabet());
        let mask: Vec<bool> = a.alphabet().symbols().map(|s| b.contains(s)).collect();
        let z = concat_star(&a, &mask);
        for w in universe(&a, H) {
            prop_assert_eq!(z.accepts(&w), concat_star_member(&a, &b, &w), "{}", w);
        }
    }
}
