// SPDX-License-Identifier: Apache-2.0

//! The nondeterministic acceptor `(states, alphabet, initial, transitions, finals)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::fa::symbol::{Alphabet, Symbol, Word};

pub type StateId = usize;

/// A finite automaton, possibly nondeterministic and partial.
///
/// States are dense indices `0..num_states()`. Each state carries a label used
/// as its id in files and DOT output. Transitions are stored per state and per
/// symbol index, with sorted and deduplicated targets.
#[derive(Debug, Clone)]
pub struct Automaton {
    alphabet: Alphabet,
    labels: Vec<String>,
    initial: StateId,
    finals: Vec<bool>,
    delta: Vec<Vec<Vec<StateId>>>,
}

impl Automaton {
    /// Builds an automaton from named states and `(source, symbol, target)` triples.
    pub fn from_named<S: AsRef<str>>(
        alphabet: Alphabet,
        states: &[S],
        initial: &str,
        finals: &[S],
        transitions: &[(S, S, S)],
    ) -> Result<Self> {
        if states.is_empty() {
            return Err(Error::Malformed("automaton has no states".into()));
        }
        let mut index = HashMap::new();
        for (i, s) in states.iter().enumerate() {
            if index.insert(s.as_ref(), i).is_some() {
                return Err(Error::Malformed(format!("duplicate state {:?}", s.as_ref())));
            }
        }
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Malformed(format!("unknown state {name:?}")))
        };
        let init = lookup(initial)?;
        let mut fin = vec![false; states.len()];
        for f in finals {
            fin[lookup(f.as_ref())?] = true;
        }
        let mut edges = Vec::with_capacity(transitions.len());
        for (src, sym, dst) in transitions {
            let a = alphabet
                .index_of_name(sym.as_ref())
                .ok_or_else(|| Error::UnknownSymbol(sym.as_ref().to_string()))?;
            edges.push((lookup(src.as_ref())?, a, lookup(dst.as_ref())?));
        }
        let mut aut = Automaton::from_parts(alphabet, states.len(), init, fin, edges);
        aut.labels = states.iter().map(|s| s.as_ref().to_string()).collect();
        Ok(aut)
    }

    /// Builds an automaton from dense parts; states get fresh labels `q0, q1, ...`.
    pub(crate) fn from_parts(
        alphabet: Alphabet,
        num_states: usize,
        initial: StateId,
        finals: Vec<bool>,
        edges: impl IntoIterator<Item = (StateId, usize, StateId)>,
    ) -> Self {
        debug_assert!(initial < num_states && finals.len() == num_states);
        let mut delta = vec![vec![Vec::new(); alphabet.len()]; num_states];
        for (q, a, t) in edges {
            delta[q][a].push(t);
        }
        for row in &mut delta {
            for targets in row {
                targets.sort_unstable();
                targets.dedup();
            }
        }
        Automaton {
            alphabet,
            labels: (0..num_states).map(|i| format!("q{i}")).collect(),
            initial,
            finals,
            delta,
        }
    }

    /// The canonical empty automaton: one non-final state and no transitions.
    pub fn empty(alphabet: &Alphabet) -> Self {
        Automaton::from_parts(alphabet.clone(), 1, 0, vec![false], [])
    }

    /// Accepts exactly the empty word.
    pub fn epsilon(alphabet: &Alphabet) -> Self {
        Automaton::from_parts(alphabet.clone(), 1, 0, vec![true], [])
    }

    /// Accepts every word over the alphabet.
    pub fn universal(alphabet: &Alphabet) -> Self {
        Automaton::from_parts(alphabet.clone(), 1, 0, vec![true], (0..alphabet.len()).map(|a| (0, a, 0)))
    }

    /// The trie recognising a finite set of words.
    pub fn from_words<I>(alphabet: &Alphabet, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = Word>,
    {
        let mut children: Vec<BTreeMap<usize, StateId>> = vec![BTreeMap::new()];
        let mut finals = vec![false];
        for word in words {
            let mut node = 0;
            for sym in word.symbols() {
                let a = alphabet
                    .index_of(sym)
                    .ok_or_else(|| Error::UnknownSymbol(sym.to_string()))?;
                node = match children[node].get(&a) {
                    Some(&next) => next,
                    None => {
                        let next = children.len();
                        children.push(BTreeMap::new());
                        finals.push(false);
                        children[node].insert(a, next);
                        next
                    }
                };
            }
            finals[node] = true;
        }
        let edges: Vec<_> = children
            .iter()
            .enumerate()
            .flat_map(|(q, m)| m.iter().map(move |(&a, &t)| (q, a, t)))
            .collect();
        Ok(Automaton::from_parts(alphabet.clone(), children.len(), 0, finals, edges))
    }

    /// Shorthand for [`Automaton::from_words`] with one-character symbols.
    pub fn from_strs(alphabet: &Alphabet, words: &[&str]) -> Result<Self> {
        Automaton::from_words(alphabet, words.iter().map(|w| Word::from_chars(w)))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.finals.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.delta.iter().flatten().map(Vec::len).sum()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals.iter().enumerate().filter(|(_, &f)| f).map(|(q, _)| q)
    }

    pub fn label(&self, q: StateId) -> &str {
        &self.labels[q]
    }

    /// Targets of `q` under the symbol with index `a`.
    pub fn successors(&self, q: StateId, a: usize) -> &[StateId] {
        &self.delta[q][a]
    }

    /// `(source, symbol index, target)` triples in state then symbol order.
    pub fn edges(&self) -> impl Iterator<Item = (StateId, usize, StateId)> + '_ {
        self.delta.iter().enumerate().flat_map(|(q, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(a, ts)| ts.iter().map(move |&t| (q, a, t)))
        })
    }

    /// `(source, symbol, target)` triples in state then symbol order.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, &Symbol, StateId)> + '_ {
        self.edges().map(|(q, a, t)| (q, self.alphabet.symbol(a), t))
    }

    pub fn is_deterministic(&self) -> bool {
        self.delta.iter().flatten().all(|ts| ts.len() <= 1)
    }

    /// Whether the automaton accepts `word`, by direct simulation.
    pub fn accepts(&self, word: &Word) -> bool {
        let Some(indices) = self.alphabet.indices(word) else {
            return false;
        };
        let mut current = BTreeSet::from([self.initial]);
        for a in indices {
            current = current.iter().flat_map(|&q| self.delta[q][a].iter().copied()).collect();
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|&q| self.finals[q])
    }

    /// [`Automaton::accepts`] for a word spelled with one-character symbols.
    pub fn accepts_str(&self, word: &str) -> bool {
        self.accepts(&Word::from_chars(word))
    }

    /// The same automaton with its symbols renumbered to follow `alphabet`,
    /// which must contain exactly the same symbols.
    pub fn reindexed(&self, alphabet: &Alphabet) -> Result<Automaton> {
        if !self.alphabet.same_symbols(alphabet) {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.names(),
                right: alphabet.names(),
            });
        }
        if self.alphabet == *alphabet {
            return Ok(self.clone());
        }
        let map: Vec<usize> = self
            .alphabet
            .symbols()
            .map(|s| alphabet.index_of(s).expect("same symbols"))
            .collect();
        let mut out = Automaton::from_parts(
            alphabet.clone(),
            self.num_states(),
            self.initial,
            self.finals.clone(),
            self.edges().map(|(q, a, t)| (q, map[a], t)),
        );
        out.labels = self.labels.clone();
        Ok(out)
    }

    /// The same automaton over a larger alphabet, without transitions on the new symbols.
    pub(crate) fn widened(&self, alphabet: &Alphabet) -> Automaton {
        debug_assert!(self.alphabet.is_subset_of(alphabet));
        let map: Vec<usize> = self
            .alphabet
            .symbols()
            .map(|s| alphabet.index_of(s).expect("subset"))
            .collect();
        let mut out = Automaton::from_parts(
            alphabet.clone(),
            self.num_states(),
            self.initial,
            self.finals.clone(),
            self.edges().map(|(q, a, t)| (q, map[a], t)),
        );
        out.labels = self.labels.clone();
        out
    }

    /// Copy with every state marked final or non-final by `f`.
    pub(crate) fn with_finals(&self, f: impl Fn(StateId) -> bool) -> Automaton {
        let mut out = self.clone();
        out.finals = (0..self.num_states()).map(f).collect();
        out
    }

    /// Copy with extra edges added.
    pub(crate) fn with_edges(&self, extra: impl IntoIterator<Item = (StateId, usize, StateId)>) -> Automaton {
        let mut out = Automaton::from_parts(
            self.alphabet.clone(),
            self.num_states(),
            self.initial,
            self.finals.clone(),
            self.edges().chain(extra),
        );
        out.labels = self.labels.clone();
        out
    }

    /// Copy whose edges are rewritten by `f`; `None` drops the edge.
    pub(crate) fn map_edges(
        &self,
        f: impl Fn(StateId, usize, StateId) -> Option<(StateId, usize, StateId)>,
    ) -> Automaton {
        let mut out = Automaton::from_parts(
            self.alphabet.clone(),
            self.num_states(),
            self.initial,
            self.finals.clone(),
            self.edges().filter_map(|(q, a, t)| f(q, a, t)),
        );
        out.labels = self.labels.clone();
        out
    }

    /// Keeps the states in `keep` (which must contain the initial state), renumbering densely.
    pub(crate) fn induced(&self, keep: &[bool]) -> Automaton {
        debug_assert!(keep[self.initial]);
        let mut map = vec![usize::MAX; self.num_states()];
        let mut next = 0;
        for q in 0..self.num_states() {
            if keep[q] {
                map[q] = next;
                next += 1;
            }
        }
        let finals = (0..self.num_states()).filter(|&q| keep[q]).map(|q| self.finals[q]).collect();
        let edges = self
            .edges()
            .filter(|&(q, _, t)| keep[q] && keep[t])
            .map(|(q, a, t)| (map[q], a, map[t]));
        let mut out = Automaton::from_parts(self.alphabet.clone(), next, map[self.initial], finals, edges);
        out.labels = (0..self.num_states())
            .filter(|&q| keep[q])
            .map(|q| self.labels[q].clone())
            .collect();
        out
    }

    pub fn stats(&self) -> AutomatonStats {
        AutomatonStats {
            states: self.num_states(),
            transitions: self.num_transitions(),
            finals: self.finals().count(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct AutomatonStats {
    pub states: usize,
    pub transitions: usize,
    pub finals: usize,
}
