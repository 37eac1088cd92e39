// SPDX-License-Identifier: Apache-2.0

//! Complete deterministic automata and the subset construction.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::fa::automaton::{Automaton, StateId};
use crate::fa::symbol::{Alphabet, Word};

/// A complete deterministic automaton. Every state has exactly one successor
/// per symbol. Each state remembers the set of source states it stands for.
#[derive(Debug, Clone)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: StateId,
    finals: Vec<bool>,
    delta: Vec<Vec<StateId>>,
    subsets: Vec<BTreeSet<StateId>>,
}

impl Dfa {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.finals.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn next(&self, q: StateId, a: usize) -> StateId {
        self.delta[q][a]
    }

    /// Source states represented by `q` (empty for the sink).
    pub fn subset(&self, q: StateId) -> &BTreeSet<StateId> {
        &self.subsets[q]
    }

    pub fn accepts(&self, word: &Word) -> bool {
        match self.alphabet.indices(word) {
            Some(idx) => self.finals[idx.iter().fold(self.initial, |q, &a| self.delta[q][a])],
            None => false,
        }
    }

    /// Same transition structure with finality flipped.
    pub fn complemented(mut self) -> Dfa {
        for f in &mut self.finals {
            *f = !*f;
        }
        self
    }

    pub fn to_automaton(&self) -> Automaton {
        let edges = self
            .delta
            .iter()
            .enumerate()
            .flat_map(|(q, row)| row.iter().enumerate().map(move |(a, &t)| (q, a, t)));
        Automaton::from_parts(self.alphabet.clone(), self.num_states(), self.initial, self.finals.clone(), edges)
    }
}

impl From<Dfa> for Automaton {
    fn from(d: Dfa) -> Automaton {
        d.to_automaton()
    }
}

/// Subset construction over the kept symbols, closing every subset under the
/// dropped ones. With nothing dropped this is plain determinization.
pub(crate) struct SubsetTable {
    pub kept: Vec<usize>,
    pub subsets: Vec<BTreeSet<StateId>>,
    /// `next[q][i]` is the successor of subset `q` under `kept[i]`.
    pub next: Vec<Vec<StateId>>,
}

fn closure(a: &Automaton, dropped: &[usize], seed: impl IntoIterator<Item = StateId>) -> BTreeSet<StateId> {
    let mut set: BTreeSet<StateId> = BTreeSet::new();
    let mut stack: Vec<StateId> = seed.into_iter().collect();
    while let Some(q) = stack.pop() {
        if set.insert(q) {
            for &x in dropped {
                stack.extend(a.successors(q, x).iter().copied());
            }
        }
    }
    set
}

pub(crate) fn subset_construction(a: &Automaton, keep: &[bool]) -> SubsetTable {
    let kept: Vec<usize> = (0..a.alphabet().len()).filter(|&x| keep[x]).collect();
    let dropped: Vec<usize> = (0..a.alphabet().len()).filter(|&x| !keep[x]).collect();
    let start = closure(a, &dropped, [a.initial()]);
    let mut index: HashMap<BTreeSet<StateId>, StateId> = HashMap::from([(start.clone(), 0)]);
    let mut subsets = vec![start];
    let mut next: Vec<Vec<StateId>> = Vec::new();
    let mut queue = VecDeque::from([0]);
    while let Some(q) = queue.pop_front() {
        let mut row = Vec::with_capacity(kept.len());
        for &x in &kept {
            let step: Vec<StateId> = subsets[q].iter().flat_map(|&s| a.successors(s, x).iter().copied()).collect();
            let target = closure(a, &dropped, step);
            let id = match index.get(&target) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    index.insert(target.clone(), id);
                    subsets.push(target);
                    queue.push_back(id);
                    id
                }
            };
            row.push(id);
        }
        if next.len() <= q {
            next.resize(q + 1, Vec::new());
        }
        next[q] = row;
    }
    next.resize(subsets.len(), Vec::new());
    SubsetTable { kept, subsets, next }
}

impl SubsetTable {
    /// Packages the table as a [`Dfa`] over `alphabet` (the kept symbols, in order).
    pub(crate) fn into_dfa(self, source: &Automaton, alphabet: Alphabet) -> Dfa {
        let finals = self.subsets.iter().map(|s| s.iter().any(|&q| source.is_final(q))).collect();
        Dfa { alphabet, initial: 0, finals, delta: self.next, subsets: self.subsets }
    }
}

/// Subset construction. The result is complete: a partial input yields the
/// empty subset as a sink.
pub fn determinize(a: &Automaton) -> Dfa {
    let keep = vec![true; a.alphabet().len()];
    subset_construction(a, &keep).into_dfa(a, a.alphabet().clone())
}
