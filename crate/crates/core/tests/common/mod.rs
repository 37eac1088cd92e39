// SPDX-License-Identifier: Apache-2.0

//! Shared helpers for the integration tests: random automata and naive
//! reference implementations that never determinize.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::path::PathBuf;

use rand::Rng;
use supctl::fa::{all_words, Alphabet, Automaton, Symbol, Word};
use supctl::io::load_automaton;

pub fn fixture(name: &str) -> Automaton {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"));
    load_automaton(&path).unwrap_or_else(|e| panic!("{e}"))
}

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

pub fn alphabet(k: usize) -> Alphabet {
    Alphabet::from_chars(&"abc"[..k]).unwrap()
}

pub fn lang(sigma: &Alphabet, words: &[&str]) -> Automaton {
    Automaton::from_strs(sigma, words).unwrap()
}

pub fn syms(sigma: &Alphabet, names: &[&str]) -> Vec<Symbol> {
    sigma.resolve(names).unwrap()
}

/// A random NFA with at most `max_states` states over `sigma`.
pub fn random_nfa<R: Rng>(rng: &mut R, sigma: &Alphabet, max_states: usize) -> Automaton {
    let n = rng.gen_range(1..=max_states);
    let density = rng.gen_range(0.15..0.6);
    let names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    let finals: Vec<String> = names.iter().filter(|_| rng.gen_bool(0.45)).cloned().collect();
    let mut transitions = Vec::new();
    for p in &names {
        for a in sigma.names() {
            for q in &names {
                if rng.gen_bool(density / n as f64 * 1.6) {
                    transitions.push((p.clone(), a.clone(), q.clone()));
                }
            }
        }
    }
    let initial = names[0].clone();
    Automaton::from_named(sigma.clone(), &names, &initial, &finals, &transitions).unwrap()
}

/// A random prefix-closed automaton: a random NFA with every state final.
pub fn random_prefix_closed<R: Rng>(rng: &mut R, sigma: &Alphabet, max_states: usize) -> Automaton {
    let a = random_nfa(rng, sigma, max_states);
    let names: Vec<String> = (0..a.num_states()).map(|q| a.label(q).to_string()).collect();
    let t: Vec<(String, String, String)> =
        a.transitions().map(|(p, x, q)| (a.label(p).to_string(), x.to_string(), a.label(q).to_string())).collect();
    Automaton::from_named(sigma.clone(), &names, a.label(a.initial()), &names, &t).unwrap()
}

/// Random subset of the alphabet.
pub fn random_subset<R: Rng>(rng: &mut R, sigma: &Alphabet) -> Vec<Symbol> {
    sigma.symbols().filter(|_| rng.gen_bool(0.4)).cloned().collect()
}

fn step(a: &Automaton, set: &BTreeSet<usize>, x: usize) -> BTreeSet<usize> {
    set.iter().flat_map(|&q| a.successors(q, x).iter().copied()).collect()
}

/// States reached on `w` by direct simulation.
pub fn reach(a: &Automaton, w: &Word) -> BTreeSet<usize> {
    let mut set = BTreeSet::from([a.initial()]);
    for s in w.symbols() {
        let x = a.alphabet().index_of(s).expect("symbol in alphabet");
        set = step(a, &set, x);
    }
    set
}

/// Whether some final state is reachable from a state of `set`.
pub fn can_finish(a: &Automaton, set: &BTreeSet<usize>) -> bool {
    let mut seen: HashSet<usize> = set.iter().copied().collect();
    let mut stack: Vec<usize> = set.iter().copied().collect();
    while let Some(q) = stack.pop() {
        if a.is_final(q) {
            return true;
        }
        for x in 0..a.alphabet().len() {
            for &t in a.successors(q, x) {
                if seen.insert(t) {
                    stack.push(t);
                }
            }
        }
    }
    false
}

/// `w` is a prefix of some accepted word.
pub fn extendable(a: &Automaton, w: &Word) -> bool {
    can_finish(a, &reach(a, w))
}

/// `w` has an accepted preimage under erasure of the symbols outside `keep`.
pub fn projected_member(a: &Automaton, keep: &Alphabet, w: &Word) -> bool {
    let hidden: Vec<usize> = (0..a.alphabet().len()).filter(|&x| !keep.contains(a.alphabet().symbol(x))).collect();
    let target: Vec<usize> = w.symbols().iter().map(|s| a.alphabet().index_of(s).expect("kept symbol")).collect();
    let mut seen = HashSet::from([(a.initial(), 0usize)]);
    let mut queue = VecDeque::from([(a.initial(), 0usize)]);
    while let Some((q, i)) = queue.pop_front() {
        if i == target.len() && a.is_final(q) {
            return true;
        }
        let mut moves: Vec<(usize, usize)> =
            hidden.iter().flat_map(|&x| a.successors(q, x).iter().map(move |&t| (t, i))).collect();
        if i < target.len() {
            moves.extend(a.successors(q, target[i]).iter().map(|&t| (t, i + 1)));
        }
        for m in moves {
            if seen.insert(m) {
                queue.push_back(m);
            }
        }
    }
    false
}

/// Membership in `(P⇑Σ2 ∩ C⇑Σ1)⇓E` by a search over joint configurations.
pub fn composed_member(p: &Automaton, c: &Automaton, external: &Alphabet, w: &Word) -> bool {
    let total = p.alphabet().union(c.alphabet());
    let target: Vec<&Symbol> = w.symbols().iter().collect();
    let start = (p.initial(), c.initial(), 0usize);
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((x, y, i)) = queue.pop_front() {
        if i == target.len() && p.is_final(x) && c.is_final(y) {
            return true;
        }
        for sym in total.symbols() {
            let visible = external.contains(sym);
            if visible && (i >= target.len() || target[i] != sym) {
                continue;
            }
            let next_i = if visible { i + 1 } else { i };
            let xs: Vec<usize> = match p.alphabet().index_of(sym) {
                Some(k) => p.successors(x, k).to_vec(),
                None => vec![x],
            };
            let ys: Vec<usize> = match c.alphabet().index_of(sym) {
                Some(k) => c.successors(y, k).to_vec(),
                None => vec![y],
            };
            for &nx in &xs {
                for &ny in &ys {
                    let cfg = (nx, ny, next_i);
                    if seen.insert(cfg) {
                        queue.push_back(cfg);
                    }
                }
            }
        }
    }
    false
}

/// Words of length at most `h` over the automaton's alphabet.
pub fn universe(a: &Automaton, h: usize) -> Vec<Word> {
    all_words(a.alphabet(), h)
}

/// `L(p) ∩ L(x) = L(s)` on all words up to `h`, by direct simulation.
pub fn solves_up_to(p: &Automaton, s: &Automaton, x: &Automaton, h: usize) -> bool {
    universe(p, h).iter().all(|w| (p.accepts(w) && x.accepts(w)) == s.accepts(w))
}

/// Membership of `w ∈ Σ2*` in `overline(P ◇ overline(S))`: no interleaving `u`
/// with `u⇓Σ2 = w` and `u⇓Σ1 ∈ L(P)` has `u⇓E ∉ L(S)`.
pub fn general_m_member(p: &Automaton, s: &Automaton, sigma2: &Alphabet, external: &Alphabet, w: &Word) -> bool {
    let total = p.alphabet().union(sigma2);
    let target: Vec<&Symbol> = w.symbols().iter().collect();
    let start = (p.initial(), BTreeSet::from([s.initial()]), 0usize);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some((x, sset, i)) = queue.pop_front() {
        if i == target.len() && p.is_final(x) && !sset.iter().any(|&q| s.is_final(q)) {
            return false;
        }
        for sym in total.symbols() {
            let in2 = sigma2.contains(sym);
            if in2 && (i >= target.len() || target[i] != sym) {
                continue;
            }
            let next_i = if in2 { i + 1 } else { i };
            let xs: Vec<usize> = match p.alphabet().index_of(sym) {
                Some(k) => p.successors(x, k).to_vec(),
                None => vec![x],
            };
            let next_s = match s.alphabet().index_of(sym) {
                Some(k) if external.contains(sym) => step(s, &sset, k),
                _ => sset.clone(),
            };
            for nx in xs {
                let cfg = (nx, next_s.clone(), next_i);
                if seen.insert(cfg.clone()) {
                    queue.push_back(cfg);
                }
            }
        }
    }
    true
}

/// `w ∈ L·B*` by trying every split.
pub fn concat_star_member(a: &Automaton, b: &[Symbol], w: &Word) -> bool {
    (0..=w.len()).any(|k| {
        a.accepts(&Word(w.symbols()[..k].to_vec())) && w.symbols()[k..].iter().all(|x| b.contains(x))
    })
}

/// Shortest-then-declaration-lexicographic order key.
pub fn order_key(sigma: &Alphabet, w: &Word) -> (usize, Vec<usize>) {
    (w.len(), w.symbols().iter().map(|s| sigma.index_of(s).unwrap()).collect())
}

/// Alphabet made of a subset of `sigma`'s symbols, in `sigma`'s order.
pub fn sub_alphabet(sigma: &Alphabet, keep: &[Symbol]) -> Option<Alphabet> {
    let names: Vec<String> = sigma.symbols().filter(|s| keep.contains(s)).map(|s| s.to_string()).collect();
    Alphabet::new(names).ok()
}

/// Proptest configuration with `cases` cases and no regression files.
pub fn cases(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config { cases, failure_persistence: None, ..Default::default() }
}

/// Trim, or the canonical automaton of the empty language.
pub fn trim_or_empty(a: &Automaton) -> bool {
    supctl::fa::is_trim(a) || (a.num_states() == 1 && a.finals().next().is_none() && a.num_transitions() == 0)
}

/// A random plant and a specification `P ∩ X` for a random prefix-closed `X`,
/// so the plain equation is solvable. One time in five the specification is
/// an arbitrary random automaton instead.
pub fn random_equation<R: Rng>(rng: &mut R, sigma: &Alphabet, max_states: usize) -> (Automaton, Automaton) {
    let p = random_nfa(rng, sigma, max_states);
    let s = if rng.gen_bool(0.2) {
        random_nfa(rng, sigma, 3)
    } else {
        let x = random_prefix_closed(rng, sigma, 3);
        supctl::fa::trim(&supctl::fa::intersect(&p, &x).unwrap())
    };
    (p, s)
}

/// A random control alphabet; with `uo_within_uc` every unobservable event is
/// also uncontrollable.
pub fn random_control<R: Rng>(rng: &mut R, sigma: &Alphabet, uo_within_uc: bool) -> supctl::controllability::ControlAlphabet {
    let uc = random_subset(rng, sigma);
    let uo: Vec<Symbol> = if uo_within_uc {
        uc.iter().filter(|_| rng.gen_bool(0.6)).cloned().collect()
    } else {
        random_subset(rng, sigma)
    };
    supctl::controllability::ControlAlphabet::new(sigma.clone(), &uc, &uo).unwrap()
}

/// Every candidate `Init(S) ∪ F` with `F` a prefix-closed set of words of
/// the largest supervisor up to `horizon`, that satisfies `pred`.
pub fn brute_force_solutions(
    p: &Automaton,
    s: &Automaton,
    horizon: usize,
    mut pred: impl FnMut(&Automaton) -> bool,
) -> Vec<Automaton> {
    let k = supctl::solver::supervisor_upper_bound(p, s).unwrap();
    let lower = supctl::fa::init_closure(s);
    let mut found = Vec::new();
    supctl::search::for_each_candidate(&lower, &k, horizon, usize::MAX, |c| {
        if pred(c) {
            found.push(c.clone());
        }
        false
    })
    .unwrap();
    found
}

/// Collapses the "not even a plain solution" error into `false`.
pub fn verdict(r: supctl::Result<supctl::solver::Check>) -> bool {
    match r {
        Ok(c) => c.passed(),
        Err(supctl::Error::NotASolution { .. }) => false,
        Err(e) => panic!("unexpected error: {e}"),
    }
}
