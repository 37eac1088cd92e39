// SPDX-License-Identifier: Apache-2.0

//! Boolean operations and the trim / Init / pref operators.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::fa::automaton::{Automaton, StateId};
use crate::fa::dfa::{determinize, Dfa};
use crate::fa::symbol::{Alphabet, Word};

pub(crate) fn check_same_alphabet(a: &Alphabet, b: &Alphabet) -> Result<()> {
    if a.same_symbols(b) {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch { left: a.names(), right: b.names() })
    }
}

/// States reachable from the initial state.
pub(crate) fn reachable(a: &Automaton) -> Vec<bool> {
    let mut seen = vec![false; a.num_states()];
    let mut stack = vec![a.initial()];
    seen[a.initial()] = true;
    while let Some(q) = stack.pop() {
        for x in 0..a.alphabet().len() {
            for &t in a.successors(q, x) {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
    }
    seen
}

/// States from which some final state is reachable.
pub(crate) fn coreachable(a: &Automaton) -> Vec<bool> {
    let n = a.num_states();
    let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for (q, _, t) in a.edges() {
        preds[t].push(q);
    }
    let mut seen = vec![false; n];
    let mut stack: Vec<StateId> = a.finals().collect();
    for &f in &stack {
        seen[f] = true;
    }
    while let Some(q) = stack.pop() {
        for &p in &preds[q] {
            if !seen[p] {
                seen[p] = true;
                stack.push(p);
            }
        }
    }
    seen
}

/// Drops unreachable states.
pub(crate) fn accessible(a: &Automaton) -> Automaton {
    let keep = reachable(a);
    if keep.iter().all(|&k| k) {
        a.clone()
    } else {
        a.induced(&keep)
    }
}

/// Complement relative to the automaton's own alphabet.
pub fn complement(a: &Automaton) -> Dfa {
    determinize(a).complemented()
}

/// Synchronous product restricted to pairs reachable from the initial pair.
/// The result is not trimmed.
pub fn intersect(a: &Automaton, b: &Automaton) -> Result<Automaton> {
    check_same_alphabet(a.alphabet(), b.alphabet())?;
    let b = b.reindexed(a.alphabet())?;
    let k = a.alphabet().len();
    let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut pairs = vec![(a.initial(), b.initial())];
    index.insert(pairs[0], 0);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0]);
    while let Some(id) = queue.pop_front() {
        let (p, q) = pairs[id];
        for x in 0..k {
            for &p2 in a.successors(p, x) {
                for &q2 in b.successors(q, x) {
                    let id2 = *index.entry((p2, q2)).or_insert_with(|| {
                        pairs.push((p2, q2));
                        queue.push_back(pairs.len() - 1);
                        pairs.len() - 1
                    });
                    edges.push((id, x, id2));
                }
            }
        }
    }
    let finals = pairs.iter().map(|&(p, q)| a.is_final(p) && b.is_final(q)).collect();
    Ok(Automaton::from_parts(a.alphabet().clone(), pairs.len(), 0, finals, edges))
}

/// Disjoint sum of both automata behind a fresh initial state.
pub fn union(a: &Automaton, b: &Automaton) -> Result<Automaton> {
    check_same_alphabet(a.alphabet(), b.alphabet())?;
    let b = b.reindexed(a.alphabet())?;
    let (na, nb) = (a.num_states(), b.num_states());
    let k = a.alphabet().len();
    let mut edges: Vec<(StateId, usize, StateId)> = Vec::new();
    edges.extend(a.edges().map(|(q, x, t)| (1 + q, x, 1 + t)));
    edges.extend(b.edges().map(|(q, x, t)| (1 + na + q, x, 1 + na + t)));
    for x in 0..k {
        edges.extend(a.successors(a.initial(), x).iter().map(|&t| (0, x, 1 + t)));
        edges.extend(b.successors(b.initial(), x).iter().map(|&t| (0, x, 1 + na + t)));
    }
    let mut finals = vec![a.is_final(a.initial()) || b.is_final(b.initial())];
    finals.extend((0..na).map(|q| a.is_final(q)));
    finals.extend((0..nb).map(|q| b.is_final(q)));
    Ok(accessible(&Automaton::from_parts(a.alphabet().clone(), 1 + na + nb, 0, finals, edges)))
}

/// Keeps the states that are reachable from the initial state and can reach a
/// final state. An empty language yields [`Automaton::empty`].
pub fn trim(a: &Automaton) -> Automaton {
    let reach = reachable(a);
    let coreach = coreachable(a);
    let keep: Vec<bool> = reach.iter().zip(&coreach).map(|(&r, &c)| r && c).collect();
    if !keep[a.initial()] {
        return Automaton::empty(a.alphabet());
    }
    if keep.iter().all(|&k| k) {
        return a.clone();
    }
    a.induced(&keep)
}

/// Every state is reachable from the initial state and co-reachable to a final one.
pub fn is_trim(a: &Automaton) -> bool {
    reachable(a).iter().zip(coreachable(a)).all(|(&r, c)| r && c)
}

/// Trim automaton for the prefix closure of the language.
pub fn init_closure(a: &Automaton) -> Automaton {
    let t = trim(a);
    if t.finals().next().is_none() {
        return t;
    }
    t.with_finals(|_| true)
}

/// The largest prefix-closed sublanguage: words all of whose prefixes are accepted.
pub fn pref_largest(a: &Automaton) -> Automaton {
    let d = determinize(a);
    if !d.is_final(d.initial()) {
        return Automaton::empty(a.alphabet());
    }
    let keep: Vec<bool> = (0..d.num_states()).map(|q| d.is_final(q)).collect();
    accessible(&d.to_automaton().induced(&keep))
}

/// Trimmed determinization; the normal form used whenever a check depends on
/// automaton structure rather than language alone.
pub fn normalize(a: &Automaton) -> Automaton {
    trim(&determinize(a).to_automaton())
}

/// Shortest word outside the language that is a prefix of an accepted word, if any.
pub fn prefix_closure_violation(a: &Automaton) -> Option<Word> {
    let t = normalize(a);
    t.finals().next()?;
    crate::fa::compare::shortest_word_to(&t, |q| !t.is_final(q))
}

pub fn is_prefix_closed(a: &Automaton) -> bool {
    prefix_closure_violation(a).is_none()
}

/// Concatenation `L(a) · B*` for a symbol set `B`, spliced onto a fresh
/// accepting state carrying a self-loop for every symbol in `B`.
pub fn concat_star(a: &Automaton, symbols: &[bool]) -> Automaton {
    let n = a.num_states();
    let sink = n;
    let mut edges: Vec<_> = a.edges().collect();
    for x in (0..symbols.len()).filter(|&x| symbols[x]) {
        edges.push((sink, x, sink));
        edges.extend(a.finals().map(|f| (f, x, sink)));
    }
    let mut finals: Vec<bool> = (0..n).map(|q| a.is_final(q)).collect();
    finals.push(true);
    if symbols.iter().any(|&s| s) && a.finals().next().is_some() {
        accessible(&Automaton::from_parts(a.alphabet().clone(), n + 1, a.initial(), finals, edges))
    } else {
        a.clone()
    }
}
