// SPDX-License-Identifier: Apache-2.0

//! Partial controllability: extension invariants, the solvability test
//! against constructive and exhaustive evidence, and the interval results.

mod common;

use common::{
    alphabet, brute_force_solutions, random_control, random_equation, random_nfa, random_prefix_closed,
    random_subset, verdict,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use supctl::controllability::{
    check_progressive_under_pc, check_solution_under_pc, largest_progressive_solution_under_pc,
    largest_solution_under_pc, solvable_under_pc, supervisor_interval_pc_prefix_closed, uc_extension,
    ControlAlphabet,
};
use supctl::fa::{is_prefix_closed, language_equivalent, language_includes};
use supctl::solver::{check_progressive_supervisor, check_solution, largest_supervisor};
use supctl::Error;

proptest! {
    #![proptest_config(common::cases(150))]

    #[test]
    fn extension_invariants(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sigma = alphabet(2);
        let c = random_nfa(&mut rng, &sigma, 4);
        let uc = random_subset(&mut rng, &sigma);
        let e = uc_extension(&c, &uc).unwrap();
        prop_assert!(language_includes(&e, &c).unwrap().holds());
        prop_assert!(language_equivalent(&uc_extension(&e, &uc).unwrap(), &e).unwrap());
        for q in 0..e.num_states() {
            for a in &uc {
                prop_assert!(!e.successors(q, sigma.index_of(a).unwrap()).is_empty());
            }
        }
    }

    #[test]
    fn nothing_uncontrollable_is_the_plain_check(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sigma = alphabet(2);
        let (p, s) = random_equation(&mut rng, &sigma, 4);
        let c = random_prefix_closed(&mut rng, &sigma, 3);
        let ca = ControlAlphabet::full(sigma);
        let plain = check_solution(&p, &s, &c).unwrap();
        match check_solution_under_pc(&p, &s, &c, &ca) {
            Ok(check) => prop_assert_eq!(check, plain),
            Err(Error::NotASolution { witness }) => prop_assert_eq!(plain.witness(), Some(&witness)),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn solvability_matches_construction_and_search(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sigma = alphabet(2);
        let (p, s) = random_equation(&mut rng, &sigma, 4);
        let ca = random_control(&mut rng, &sigma, false);
        let Some(_) = largest_supervisor(&p, &s).unwrap().largest().cloned() else { return Ok(()) };
        let test = solvable_under_pc(&p, &s, &ca).unwrap();
        let v = largest_solution_under_pc(&p, &s, &ca).unwrap();
        prop_assert!(v.rounds() <= v.start_states());
        let found = brute_force_solutions(&p, &s, 2, |c| verdict(check_solution_under_pc(&p, &s, c, &ca)));
        prop_assert_eq!(test.holds(), v.is_solvable());
        if let Some(c) = v.largest() {
            prop_assert!(verdict(check_solution_under_pc(&p, &s, c, &ca)));
            for f in &found {
                prop_assert!(language_includes(c, f).unwrap().holds());
            }
        } else {
            prop_assert!(found.is_empty());
            let w = test.witness().unwrap();
            prop_assert!(p.accepts(w) && !s.accepts(w));
        }
    }

    #[test]
    fn interval_for_prefix_closed_instances(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sigma = alphabet(2);
        let p = random_prefix_closed(&mut rng, &sigma, 4);
        let x = random_prefix_closed(&mut rng, &sigma, 3);
        let s = supctl::fa::trim(&supctl::fa::intersect(&p, &x).unwrap());
        let ca = random_control(&mut rng, &sigma, false);
        if !solvable_under_pc(&p, &s, &ca).unwrap().holds() {
            return Ok(());
        }
        for _ in 0..4 {
            let c = random_prefix_closed(&mut rng, &sigma, 3);
            let c = supctl::fa::union(&c, &supctl::fa::init_closure(&s)).unwrap();
            supervisor_interval_pc_prefix_closed(&p, &s, &c, &ca).unwrap();
        }
        prop_assert!(supervisor_interval_pc_prefix_closed(&p, &s, &supctl::fa::init_closure(&s), &ca).unwrap());
    }

    #[test]
    fn progressive_under_pc(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sigma = alphabet(2);
        let (p, s) = random_equation(&mut rng, &sigma, 4);
        let ca = random_control(&mut rng, &sigma, false);
        if largest_supervisor(&p, &s).unwrap().largest().is_none() {
            return Ok(());
        }
        let v = largest_progressive_solution_under_pc(&p, &s, &ca).unwrap();
        if let Some(c) = v.largest() {
            prop_assert!(check_progressive_under_pc(&p, &s, c, &ca).unwrap().passed());
        }
        let solutions = brute_force_solutions(&p, &s, 2, |c| check_solution(&p, &s, c).unwrap().passed());
        for c in &solutions {
            prop_assert!(is_prefix_closed(c));
            let verdict = check_progressive_under_pc(&p, &s, c, &ca).unwrap();
            if verdict.passed() {
                prop_assert!(v.is_solvable());
                prop_assert!(language_includes(v.largest().unwrap(), c).unwrap().holds());
            }
        }
        let none = ControlAlphabet::full(sigma.clone());
        let c = supctl::fa::init_closure(&s);
        let plain = check_progressive_supervisor(&p, &s, &c).unwrap();
        prop_assert_eq!(check_progressive_under_pc(&p, &s, &c, &none).unwrap().passed(), plain.passed());
    }
}
