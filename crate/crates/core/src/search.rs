// SPDX-License-Identifier: Apache-2.0

//! Bounded enumeration of prefix-closed candidates `lower ∪ F`, where `F`
//! ranges over prefix-closed sets of words of `upper` of length at most the
//! horizon. Words of `lower` are always included. Used to find witnesses and
//! to audit solvability verdicts on small instances.

use crate::error::Result;
use crate::fa::{enumerate_language, union, Automaton, Word};

/// How an enumeration ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchStats {
    pub tried: usize,
    /// The visitor asked to stop.
    pub stopped: bool,
    /// The budget ran out before every candidate was visited.
    pub truncated: bool,
}

struct Tree {
    words: Vec<Word>,
    children: Vec<Vec<usize>>,
    forced: Vec<bool>,
}

fn build_tree(lower: &Automaton, upper: &Automaton, horizon: usize) -> Tree {
    let up = enumerate_language(upper, horizon);
    let low = enumerate_language(lower, horizon);
    let mut words = vec![Word::empty()];
    let mut children = vec![Vec::new()];
    let mut layer = vec![0usize];
    for _ in 0..horizon {
        let mut next = Vec::new();
        for &node in &layer {
            for sym in upper.alphabet().symbols() {
                let mut w = words[node].clone();
                w.0.push(sym.clone());
                if up.contains(&w) {
                    let id = words.len();
                    words.push(w);
                    children.push(Vec::new());
                    children[node].push(id);
                    next.push(id);
                }
            }
        }
        layer = next;
    }
    let forced = words.iter().map(|w| low.contains(w)).collect();
    Tree { words, children, forced }
}

struct Walker<'a, F: FnMut(&Automaton) -> bool> {
    tree: &'a Tree,
    lower: &'a Automaton,
    visit: F,
    budget: usize,
    stats: SearchStats,
}

impl<F: FnMut(&Automaton) -> bool> Walker<'_, F> {
    /// Returns `false` once the walk must end.
    fn walk(&mut self, chosen: &mut Vec<usize>, pending: &[usize]) -> Result<bool> {
        let Some((&node, rest)) = pending.split_first() else {
            if self.stats.tried >= self.budget {
                self.stats.truncated = true;
                return Ok(false);
            }
            self.stats.tried += 1;
            let words: Vec<Word> = chosen.iter().map(|&i| self.tree.words[i].clone()).collect();
            let finite = Automaton::from_words(self.lower.alphabet(), words)?;
            let candidate = union(self.lower, &finite)?;
            if (self.visit)(&candidate) {
                self.stats.stopped = true;
                return Ok(false);
            }
            return Ok(true);
        };
        if !self.tree.forced[node] && !self.walk(chosen, rest)? {
            return Ok(false);
        }
        chosen.push(node);
        let mut next: Vec<usize> = rest.to_vec();
        next.extend(&self.tree.children[node]);
        let go_on = self.walk(chosen, &next)?;
        chosen.pop();
        Ok(go_on)
    }
}

/// Visits candidates until `visit` returns `true` or `budget` candidates have
/// been seen. `upper` should be prefix-closed; otherwise only words whose
/// every prefix is in `upper` are used.
pub fn for_each_candidate(
    lower: &Automaton,
    upper: &Automaton,
    horizon: usize,
    budget: usize,
    visit: impl FnMut(&Automaton) -> bool,
) -> Result<SearchStats> {
    let tree = build_tree(lower, upper, horizon);
    let mut walker = Walker { tree: &tree, lower, visit, budget, stats: SearchStats { tried: 0, stopped: false, truncated: false } };
    if tree.words.is_empty() || !enumerate_language(upper, 0).contains(&Word::empty()) {
        walker.stats.tried = 1;
        if (walker.visit)(lower) {
            walker.stats.stopped = true;
        }
        return Ok(walker.stats);
    }
    walker.walk(&mut Vec::new(), &[0])?;
    Ok(walker.stats)
}

/// First candidate satisfying `pred`, or `None` when the enumeration ends.
pub fn find_candidate(
    lower: &Automaton,
    upper: &Automaton,
    horizon: usize,
    budget: usize,
    mut pred: impl FnMut(&Automaton) -> bool,
) -> Result<(Option<Automaton>, SearchStats)> {
    let mut found = None;
    let stats = for_each_candidate(lower, upper, horizon, budget, |c| {
        if pred(c) {
            found = Some(c.clone());
            true
        } else {
            false
        }
    })?;
    Ok((found, stats))
}
