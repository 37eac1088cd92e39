// SPDX-License-Identifier: Apache-2.0

//! Partial controllability.
//!
//! A supervisor cannot disable an uncontrollable event. Its effective
//! behavior is the Σuc-extension: at every state that has no transition on
//! an uncontrollable event, that event self-loops. A solution `C` is a
//! solution under partial controllability when its extension still solves
//! the equation.
//!
//! Extensions are structural, so candidates are normalized (trimmed and
//! determinized) before extending; a state "has no transition on `a`" is then
//! well defined and independent of how the candidate was drawn.

use crate::error::{Error, Result};
use crate::fa::ops::accessible;
use crate::fa::{complement, concat_star, init_closure, Alphabet, Automaton, Inclusion, StateId, Symbol};
use crate::fa::{is_prefix_closed, language_includes, normalize, union};
use crate::solver::{
    check_progressive_solution, check_solution, interval_contains, progressive_upper_bound, require_prefix_closed, require_solvable,
    supervisor_upper_bound, Check, SupervisorVerdict,
};

/// An alphabet with its uncontrollable and unobservable subsets.
#[derive(Debug, Clone)]
pub struct ControlAlphabet {
    alphabet: Alphabet,
    uncontrollable: Vec<Symbol>,
    unobservable: Vec<Symbol>,
}

impl ControlAlphabet {
    pub fn new(alphabet: Alphabet, uncontrollable: &[Symbol], unobservable: &[Symbol]) -> Result<Self> {
        let pick = |syms: &[Symbol]| -> Result<Vec<Symbol>> {
            let mask = alphabet.mask(syms)?;
            Ok(alphabet.symbols().zip(mask).filter(|(_, m)| *m).map(|(s, _)| s.clone()).collect())
        };
        let uncontrollable = pick(uncontrollable)?;
        let unobservable = pick(unobservable)?;
        Ok(ControlAlphabet { alphabet, uncontrollable, unobservable })
    }

    /// Everything controllable and observable.
    pub fn full(alphabet: Alphabet) -> Self {
        ControlAlphabet { alphabet, uncontrollable: Vec::new(), unobservable: Vec::new() }
    }

    pub fn from_names<S: AsRef<str>>(alphabet: Alphabet, uncontrollable: &[S], unobservable: &[S]) -> Result<Self> {
        let uc = alphabet.resolve(uncontrollable)?;
        let uo = alphabet.resolve(unobservable)?;
        ControlAlphabet::new(alphabet, &uc, &uo)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn uncontrollable(&self) -> &[Symbol] {
        &self.uncontrollable
    }

    pub fn unobservable(&self) -> &[Symbol] {
        &self.unobservable
    }

    pub fn controllable(&self) -> Vec<Symbol> {
        self.alphabet.symbols().filter(|s| !self.uncontrollable.contains(s)).cloned().collect()
    }

    pub fn observable(&self) -> Vec<Symbol> {
        self.alphabet.symbols().filter(|s| !self.unobservable.contains(s)).cloned().collect()
    }

    /// Σuo ⊆ Σuc.
    pub fn unobservable_within_uncontrollable(&self) -> bool {
        self.unobservable.iter().all(|s| self.uncontrollable.contains(s))
    }

    pub(crate) fn check_automaton(&self, a: &Automaton) -> Result<()> {
        if a.alphabet().same_symbols(&self.alphabet) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch { left: self.alphabet.names(), right: a.alphabet().names() })
        }
    }
}

/// Adds a self-loop on each `a ∈ uc` at every state without an `a`-transition.
pub fn uc_extension(c: &Automaton, uc: &[Symbol]) -> Result<Automaton> {
    let mask = c.alphabet().mask(uc)?;
    let loops: Vec<_> = (0..c.num_states())
        .flat_map(|q| {
            let mask = &mask;
            (0..mask.len()).filter(move |&x| mask[x] && c.successors(q, x).is_empty()).map(move |x| (q, x, q))
        })
        .collect();
    Ok(c.with_edges(loops))
}

/// The supervisor's effective behavior under partial controllability.
pub fn effective_pc(c: &Automaton, ca: &ControlAlphabet) -> Result<Automaton> {
    uc_extension(&normalize(c), ca.uncontrollable())
}

pub(crate) fn require_plain_solution(p: &Automaton, s: &Automaton, c: &Automaton) -> Result<()> {
    match check_solution(p, s, c)? {
        Check::Pass => Ok(()),
        Check::Fail(witness) => Err(Error::NotASolution { witness }),
    }
}

pub fn check_solution_under_pc(p: &Automaton, s: &Automaton, c: &Automaton, ca: &ControlAlphabet) -> Result<Check> {
    ca.check_automaton(p)?;
    require_plain_solution(p, s, c)?;
    check_solution(p, s, &effective_pc(c, ca)?)
}

pub fn is_solution_under_pc(p: &Automaton, s: &Automaton, c: &Automaton, ca: &ControlAlphabet) -> Result<bool> {
    check_solution_under_pc(p, s, c, ca).map(|c| c.passed())
}

/// `Init(L(S))·(Σuc)*` as an automaton.
pub fn init_uc_closure(s: &Automaton, uc: &[Symbol]) -> Result<Automaton> {
    let mask = s.alphabet().mask(uc)?;
    Ok(concat_star(&init_closure(s), &mask))
}

/// Decides solvability under partial controllability by the inclusion
/// `Init(L(S))·(Σuc)* ⊆ L(overline(P)) ∪ L(S)`. The witness lies in `L(P) \ L(S)`.
pub fn solvable_under_pc(p: &Automaton, s: &Automaton, ca: &ControlAlphabet) -> Result<Inclusion> {
    ca.check_automaton(p)?;
    require_solvable(p, s)?;
    let z = init_uc_closure(s, ca.uncontrollable())?;
    let allowed = union(&complement(p).to_automaton(), s)?;
    language_includes(&allowed, &z)
}

/// Deletes, round by round, every state lacking a transition on some required
/// symbol into a surviving state. `a` must be deterministic. Returns the
/// surviving subautomaton (or `None` when the initial state falls) and the
/// number of rounds that deleted something.
pub(crate) fn eliminate(a: &Automaton, required: &[bool], mut alive: Vec<bool>) -> (Option<Automaton>, usize) {
    let mut rounds = usize::from(alive.iter().any(|&x| !x));
    loop {
        let doomed: Vec<StateId> = (0..a.num_states())
            .filter(|&q| alive[q])
            .filter(|&q| {
                (0..required.len())
                    .filter(|&x| required[x])
                    .any(|x| !a.successors(q, x).iter().any(|&t| alive[t]))
            })
            .collect();
        if doomed.is_empty() {
            break;
        }
        for q in doomed {
            alive[q] = false;
        }
        rounds += 1;
    }
    if !alive[a.initial()] {
        return (None, rounds);
    }
    (Some(accessible(&a.induced(&alive))), rounds)
}

/// Largest solution under partial controllability: eliminate from the
/// largest supervisor every state missing an uncontrollable transition, until
/// none is left; then substitute the result back into the equation.
pub fn largest_solution_under_pc(p: &Automaton, s: &Automaton, ca: &ControlAlphabet) -> Result<SupervisorVerdict> {
    ca.check_automaton(p)?;
    let k = require_solvable(p, s)?;
    eliminate_and_evaluate(p, s, &k, ca)
}

fn eliminate_and_evaluate(p: &Automaton, s: &Automaton, k: &Automaton, ca: &ControlAlphabet) -> Result<SupervisorVerdict> {
    let required = k.alphabet().mask(ca.uncontrollable())?;
    let start = k.num_states();
    let (survivor, rounds) = eliminate(k, &required, vec![true; start]);
    let candidate = survivor.unwrap_or_else(|| Automaton::empty(k.alphabet()));
    Ok(SupervisorVerdict::evaluate(p, s, candidate)?.with_rounds(rounds, start))
}

/// Membership in `Init(S) ≤ C ≤ (overline(P) ∪ S)^pref` for prefix-closed
/// plant and specification, where this interval is exactly the set of
/// solutions under partial controllability. The direct definition is
/// evaluated too and must agree.
pub fn supervisor_interval_pc_prefix_closed(
    p: &Automaton,
    s: &Automaton,
    c: &Automaton,
    ca: &ControlAlphabet,
) -> Result<bool> {
    ca.check_automaton(p)?;
    if !is_prefix_closed(p) || !is_prefix_closed(s) {
        return Err(Error::PreconditionViolated("plant and specification must be prefix-closed".into()));
    }
    require_prefix_closed(c)?;
    if let Inclusion::Fails(w) = solvable_under_pc(p, s, ca)? {
        return Err(Error::PreconditionViolated(format!("not solvable under partial controllability (witness {w})")));
    }
    let k = supervisor_upper_bound(p, s)?;
    let in_interval = interval_contains(&init_closure(s), c, &k)?;
    let direct = match check_solution_under_pc(p, s, c, ca) {
        Ok(check) => check.passed(),
        Err(Error::NotASolution { .. }) => false,
        Err(e) => return Err(e),
    };
    if direct != in_interval {
        return Err(Error::Inconsistent(format!(
            "interval membership {in_interval} disagrees with the direct check {direct}"
        )));
    }
    Ok(in_interval)
}

/// Largest progressive solution under partial controllability: the same
/// elimination, started from the largest progressive supervisor. It exists
/// iff the verdict is solvable. With an empty specification and a nonempty
/// plant nothing is progressive; the witness is then the blocking word `ε`.
pub fn largest_progressive_solution_under_pc(
    p: &Automaton,
    s: &Automaton,
    ca: &ControlAlphabet,
) -> Result<SupervisorVerdict> {
    ca.check_automaton(p)?;
    require_solvable(p, s)?;
    let k = progressive_upper_bound(p, s)?;
    let verdict = eliminate_and_evaluate(p, s, &k, ca)?;
    if let Some(c) = verdict.largest() {
        if let Check::Fail(w) = check_progressive_solution(p, s, &effective_pc(c, ca)?)? {
            if normalize(s).finals().next().is_some() {
                return Err(Error::Inconsistent(format!("eliminated progressive bound blocks on {w}")));
            }
            let (candidate, closed_loop) = (verdict.candidate().clone(), verdict.closed_loop().clone());
            return Ok(SupervisorVerdict::new(candidate, closed_loop, Some(w)).with_rounds(verdict.rounds(), verdict.start_states()));
        }
    }
    Ok(verdict)
}

/// Whether the extension of `c` is a progressive solution.
///
/// When a progressive solution under partial controllability exists and `c`
/// is a prefix-closed solution, the verdict is confirmed against plain
/// progressiveness of `c` and against the interval
/// `Init(S) ≤ C ≤ (overline(Init(P)) ∪ Init(S))^pref`.
pub fn check_progressive_under_pc(p: &Automaton, s: &Automaton, c: &Automaton, ca: &ControlAlphabet) -> Result<Check> {
    ca.check_automaton(p)?;
    let plain = check_solution(p, s, c)?;
    if !plain.passed() {
        return Ok(plain);
    }
    let verdict = check_progressive_solution(p, s, &effective_pc(c, ca)?)?;
    if is_prefix_closed(c) && require_solvable(p, s).is_ok() {
        let exists = largest_progressive_solution_under_pc(p, s, ca)?.is_solvable();
        if exists {
            let progressive = check_progressive_solution(p, s, c)?.passed();
            let in_interval = interval_contains(&init_closure(s), c, &progressive_upper_bound(p, s)?)?;
            if progressive != verdict.passed() || in_interval != verdict.passed() {
                return Err(Error::Inconsistent(format!(
                    "progressive under partial controllability {} but plain progressive {progressive}, interval {in_interval}",
                    verdict.passed()
                )));
            }
        }
    }
    Ok(verdict)
}

pub fn is_progressive_under_pc(p: &Automaton, s: &Automaton, c: &Automaton, ca: &ControlAlphabet) -> Result<bool> {
    check_progressive_under_pc(p, s, c, ca).map(|c| c.passed())
}
