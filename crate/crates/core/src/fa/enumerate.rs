// SPDX-License-Identifier: Apache-2.0

//! Bounded language enumeration. It walks the raw transition relation one
//! `(word, state)` configuration at a time and never determinizes, so it can
//! serve as an oracle for the constructions elsewhere in the crate.

use std::collections::BTreeSet;

use crate::fa::automaton::{Automaton, StateId};
use crate::fa::symbol::{Alphabet, Word};

/// Every accepted word of length at most `horizon`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageSample {
    pub words: BTreeSet<Word>,
    pub horizon: usize,
}

impl LanguageSample {
    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    /// Words in shortest-first, then declaration-order lexicographic, order.
    pub fn sorted(&self, alphabet: &Alphabet) -> Vec<Word> {
        let mut v: Vec<Word> = self.words.iter().cloned().collect();
        v.sort_by_key(|w| (w.len(), alphabet.indices(w).unwrap_or_default()));
        v
    }
}

/// All words over `alphabet` of length at most `horizon`.
pub fn all_words(alphabet: &Alphabet, horizon: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..horizon {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for s in alphabet.symbols() {
                let mut v = w.clone();
                v.0.push(s.clone());
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn enumerate_language(a: &Automaton, horizon: usize) -> LanguageSample {
    let mut words = BTreeSet::new();
    let mut frontier: BTreeSet<(Vec<usize>, StateId)> = BTreeSet::from([(Vec::new(), a.initial())]);
    for depth in 0..=horizon {
        for (w, q) in &frontier {
            if a.is_final(*q) {
                words.insert(a.alphabet().word(w));
            }
        }
        if depth == horizon {
            break;
        }
        let mut next = BTreeSet::new();
        for (w, q) in &frontier {
            for (src, x, t) in a.edges() {
                if src == *q {
                    let mut v = w.clone();
                    v.push(x);
                    next.insert((v, t));
                }
            }
        }
        frontier = next;
    }
    LanguageSample { words, horizon }
}
