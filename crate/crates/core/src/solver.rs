// SPDX-License-Identifier: Apache-2.0

//! The same-alphabet equation `P ∩ X ≅ S`: supervisors, the largest
//! supervisor `(overline(P) ∪ S)^pref`, and progressive supervisors.
//!
//! Progressiveness is a property of the product automaton, not of languages
//! alone. Both plant and candidate are brought to [`normalize`]d form (trimmed
//! DFAs) before the product is built, so the verdict does not depend on how
//! an input happens to be drawn. A reachable product state that cannot reach a
//! final pair is a deadlock or livelock.

use crate::error::{Error, Result};
use crate::fa::compare::shortest_word_to;
use crate::fa::ops::{check_same_alphabet, coreachable};
use crate::fa::{
    complement, init_closure, intersect, language_includes, normalize, pref_largest, prefix_closure_violation,
    symmetric_difference_witness, union, Automaton, Inclusion, Word,
};

/// Pass, or fail with a replayable witness word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail(Word),
}

impl Check {
    pub fn passed(&self) -> bool {
        matches!(self, Check::Pass)
    }

    pub fn witness(&self) -> Option<&Word> {
        match self {
            Check::Pass => None,
            Check::Fail(w) => Some(w),
        }
    }

    pub(crate) fn from_witness(w: Option<Word>) -> Check {
        w.map_or(Check::Pass, Check::Fail)
    }
}

impl From<Inclusion> for Check {
    fn from(i: Inclusion) -> Check {
        Check::from_witness(i.into_witness())
    }
}

/// Result of a synthesis run.
///
/// `candidate` is always populated: for solvable instances it is the largest
/// solution of the requested kind, otherwise it is the closest automaton the
/// construction reached and `closed_loop` (its product with the plant) is the
/// best behavior achievable. Exactly one of "solvable" and `witness` holds.
#[derive(Debug, Clone)]
pub struct SupervisorVerdict {
    candidate: Automaton,
    closed_loop: Automaton,
    witness: Option<Word>,
    rounds: usize,
    start_states: usize,
}

impl SupervisorVerdict {
    pub(crate) fn evaluate(p: &Automaton, s: &Automaton, candidate: Automaton) -> Result<SupervisorVerdict> {
        let closed_loop = intersect(p, &candidate)?;
        let witness = symmetric_difference_witness(&closed_loop, s)?;
        let start_states = candidate.num_states();
        Ok(SupervisorVerdict { candidate, closed_loop, witness, rounds: 0, start_states })
    }

    pub(crate) fn new(candidate: Automaton, closed_loop: Automaton, witness: Option<Word>) -> SupervisorVerdict {
        let start_states = candidate.num_states();
        SupervisorVerdict { candidate, closed_loop, witness, rounds: 0, start_states }
    }

    pub(crate) fn with_rounds(mut self, rounds: usize, start_states: usize) -> Self {
        self.rounds = rounds;
        self.start_states = start_states;
        self
    }

    pub fn is_solvable(&self) -> bool {
        self.witness.is_none()
    }

    pub fn largest(&self) -> Option<&Automaton> {
        self.is_solvable().then_some(&self.candidate)
    }

    pub fn candidate(&self) -> &Automaton {
        &self.candidate
    }

    pub fn closed_loop(&self) -> &Automaton {
        &self.closed_loop
    }

    /// A word of `L(S)` missing from the closed loop, when unsolvable.
    pub fn witness(&self) -> Option<&Word> {
        self.witness.as_ref()
    }

    /// Elimination rounds that removed at least one state.
    pub fn rounds(&self) -> usize {
        self.rounds
    }

    /// Size of the automaton the elimination started from.
    pub fn start_states(&self) -> usize {
        self.start_states
    }
}

/// `(overline(P) ∪ S)^pref`.
pub fn supervisor_upper_bound(p: &Automaton, s: &Automaton) -> Result<Automaton> {
    let cp = complement(p).to_automaton();
    Ok(pref_largest(&union(&cp, s)?))
}

/// `(overline(Init(P)) ∪ Init(S))^pref`.
pub fn progressive_upper_bound(p: &Automaton, s: &Automaton) -> Result<Automaton> {
    let cp = complement(&init_closure(p)).to_automaton();
    Ok(pref_largest(&union(&cp, &init_closure(s))?))
}

pub fn largest_supervisor(p: &Automaton, s: &Automaton) -> Result<SupervisorVerdict> {
    check_same_alphabet(p.alphabet(), s.alphabet())?;
    SupervisorVerdict::evaluate(p, s, supervisor_upper_bound(p, s)?)
}

/// The largest supervisor, or [`Error::Unsolvable`].
pub(crate) fn require_solvable(p: &Automaton, s: &Automaton) -> Result<Automaton> {
    let v = largest_supervisor(p, s)?;
    match v.witness {
        None => Ok(v.candidate),
        Some(witness) => Err(Error::Unsolvable { witness }),
    }
}

/// Shortest word on which `P ∩ X` and `S` disagree.
pub fn solution_gap(p: &Automaton, s: &Automaton, x: &Automaton) -> Result<Option<Word>> {
    symmetric_difference_witness(&intersect(p, x)?, s)
}

/// `P ∩ X ≅ S`, without any prefix-closure requirement on `X`.
pub fn check_solution(p: &Automaton, s: &Automaton, x: &Automaton) -> Result<Check> {
    Ok(Check::from_witness(solution_gap(p, s, x)?))
}

pub(crate) fn require_prefix_closed(c: &Automaton) -> Result<()> {
    match prefix_closure_violation(c) {
        None => Ok(()),
        Some(witness) => Err(Error::NotPrefixClosed { witness }),
    }
}

/// `lower ≤ c ≤ upper`.
pub fn interval_contains(lower: &Automaton, c: &Automaton, upper: &Automaton) -> Result<bool> {
    Ok(language_includes(c, lower)?.holds() && language_includes(upper, c)?.holds())
}

/// Whether the prefix-closed `c` is a supervisor. The direct check is
/// confirmed against the interval `Init(S) ≤ C ≤ (overline(P) ∪ S)^pref`
/// whenever the equation is solvable.
pub fn check_supervisor(p: &Automaton, s: &Automaton, c: &Automaton) -> Result<Check> {
    require_prefix_closed(c)?;
    let direct = check_solution(p, s, c)?;
    let verdict = largest_supervisor(p, s)?;
    if let Some(k) = verdict.largest() {
        let in_interval = interval_contains(&init_closure(s), c, k)?;
        if in_interval != direct.passed() {
            return Err(Error::Inconsistent(format!(
                "direct supervisor check says {} but interval membership says {in_interval}",
                direct.passed()
            )));
        }
    }
    Ok(direct)
}

pub fn is_supervisor(p: &Automaton, s: &Automaton, c: &Automaton) -> Result<bool> {
    check_supervisor(p, s, c).map(|c| c.passed())
}

/// Shortest word driving the normalized product of `p` and `c` into a state
/// that cannot reach a final pair.
pub fn blocking_word(p: &Automaton, c: &Automaton) -> Result<Option<Word>> {
    check_same_alphabet(p.alphabet(), c.alphabet())?;
    let product = intersect(&normalize(p), &normalize(c))?;
    let live = coreachable(&product);
    Ok(shortest_word_to(&product, |q| !live[q]))
}

/// `x` solves the equation and its product with the plant is trim.
pub fn check_progressive_solution(p: &Automaton, s: &Automaton, x: &Automaton) -> Result<Check> {
    let sol = check_solution(p, s, x)?;
    if !sol.passed() {
        return Ok(sol);
    }
    Ok(Check::from_witness(blocking_word(p, x)?))
}

pub fn check_progressive_supervisor(p: &Automaton, s: &Automaton, c: &Automaton) -> Result<Check> {
    let sup = check_supervisor(p, s, c)?;
    if !sup.passed() {
        return Ok(sup);
    }
    Ok(Check::from_witness(blocking_word(p, c)?))
}

pub fn is_progressive_supervisor(p: &Automaton, s: &Automaton, c: &Automaton) -> Result<bool> {
    check_progressive_supervisor(p, s, c).map(|c| c.passed())
}

/// The largest progressive supervisor. Requires the plain equation to be solvable.
pub fn largest_progressive_supervisor(p: &Automaton, s: &Automaton) -> Result<SupervisorVerdict> {
    check_same_alphabet(p.alphabet(), s.alphabet())?;
    require_solvable(p, s)?;
    let verdict = SupervisorVerdict::evaluate(p, s, progressive_upper_bound(p, s)?)?;
    if let Some(w) = verdict.witness() {
        return Err(Error::Inconsistent(format!(
            "progressive bound fails the equation on {w} although the equation is solvable"
        )));
    }
    Ok(verdict)
}
