// SPDX-License-Identifier: Apache-2.0

//! Language inclusion and equivalence with shortest counterexamples.
//!
//! Counterexamples are shortest first, then lexicographic in the alphabet's
//! declaration order. Breadth-first search that expands symbols in that order
//! discovers states in exactly this order, so the first hit is the answer.

use std::collections::{HashMap, VecDeque};

use crate::error::Result;
use crate::fa::automaton::{Automaton, StateId};
use crate::fa::dfa::{determinize, Dfa};
use crate::fa::ops::check_same_alphabet;
use crate::fa::symbol::Word;

/// Outcome of an inclusion test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inclusion {
    Holds,
    /// Shortest word in the smaller side that the larger side rejects.
    Fails(Word),
}

impl Inclusion {
    pub fn holds(&self) -> bool {
        matches!(self, Inclusion::Holds)
    }

    pub fn witness(&self) -> Option<&Word> {
        match self {
            Inclusion::Holds => None,
            Inclusion::Fails(w) => Some(w),
        }
    }

    pub fn into_witness(self) -> Option<Word> {
        match self {
            Inclusion::Holds => None,
            Inclusion::Fails(w) => Some(w),
        }
    }
}

/// Shortest word leading from the initial state to a state satisfying `target`.
pub(crate) fn shortest_word_to(a: &Automaton, target: impl Fn(StateId) -> bool) -> Option<Word> {
    let n = a.num_states();
    let mut parent: Vec<Option<(StateId, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[a.initial()] = true;
    let mut queue = VecDeque::from([a.initial()]);
    while let Some(q) = queue.pop_front() {
        if target(q) {
            let mut syms = Vec::new();
            let mut cur = q;
            while let Some((p, x)) = parent[cur] {
                syms.push(x);
                cur = p;
            }
            syms.reverse();
            return Some(a.alphabet().word(&syms));
        }
        for x in 0..a.alphabet().len() {
            for &t in a.successors(q, x) {
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((q, x));
                    queue.push_back(t);
                }
            }
        }
    }
    None
}

type Pair = (StateId, StateId);

/// Breadth-first search over the product of two complete DFAs for the first
/// pair satisfying `bad`.
fn product_search(small: &Dfa, large: &Dfa, bad: impl Fn(bool, bool) -> bool) -> Option<Word> {
    let k = small.alphabet().len();
    let start = (small.initial(), large.initial());
    let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
    parent.insert(start, None);
    let mut queue = VecDeque::from([start]);
    while let Some(pair) = queue.pop_front() {
        if bad(small.is_final(pair.0), large.is_final(pair.1)) {
            let mut syms = Vec::new();
            let mut cur = pair;
            while let Some(&Some((prev, x))) = parent.get(&cur) {
                syms.push(x);
                cur = prev;
            }
            syms.reverse();
            return Some(small.alphabet().word(&syms));
        }
        for x in 0..k {
            let next = (small.next(pair.0, x), large.next(pair.1, x));
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                e.insert(Some((pair, x)));
                queue.push_back(next);
            }
        }
    }
    None
}

/// Tests `L(smaller) ⊆ L(larger)`.
pub fn language_includes(larger: &Automaton, smaller: &Automaton) -> Result<Inclusion> {
    check_same_alphabet(larger.alphabet(), smaller.alphabet())?;
    let larger = larger.reindexed(smaller.alphabet())?;
    let (ds, dl) = (determinize(smaller), determinize(&larger));
    Ok(match product_search(&ds, &dl, |s, l| s && !l) {
        None => Inclusion::Holds,
        Some(w) => Inclusion::Fails(w),
    })
}

pub fn language_equivalent(a: &Automaton, b: &Automaton) -> Result<bool> {
    Ok(symmetric_difference_witness(a, b)?.is_none())
}

/// Shortest word accepted by exactly one of the automata.
pub fn symmetric_difference_witness(a: &Automaton, b: &Automaton) -> Result<Option<Word>> {
    check_same_alphabet(a.alphabet(), b.alphabet())?;
    let b = b.reindexed(a.alphabet())?;
    let (da, db) = (determinize(a), determinize(&b));
    Ok(product_search(&da, &db, |x, y| x != y))
}

/// Shortest accepted word.
pub fn shortest_accepted(a: &Automaton) -> Option<Word> {
    let co = crate::fa::ops::coreachable(a);
    if !co[a.initial()] {
        return None;
    }
    shortest_word_to(a, |q| a.is_final(q))
}
