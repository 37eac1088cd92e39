// SPDX-License-Identifier: Apache-2.0

//! Partial observability, alone and combined with partial controllability.
//!
//! A supervisor that cannot see an unobservable event stays where it is: the
//! Σuo-folding turns every unobservable transition into a self-loop at its
//! source. The combined effective behavior is the Σuc-extension of the
//! folding; the two operations commute on any automaton, since both only
//! decide, state by state and symbol by symbol, whether to put a self-loop.
//!
//! The realization `C_real` is the subset construction over the observable
//! symbols (each subset closed under unobservable moves), decorated with an
//! unobservable self-loop wherever some member of the subset can move on that
//! symbol.
//!
//! When every unobservable event is also uncontrollable, a largest solution
//! exists. It is computed over the observable alphabet: keep the observable
//! words all of whose unobservable paddings stay inside the largest
//! supervisor, restrict to the largest prefix-closed part, eliminate states
//! missing an uncontrollable observable event, and lift back.

use std::collections::BTreeSet;

use crate::composition::restrict_dfa;
use crate::controllability::{eliminate, init_uc_closure, require_plain_solution, uc_extension, ControlAlphabet};
use crate::error::{Error, Result};
use crate::fa::dfa::subset_construction;
use crate::fa::{
    complement, intersect, language_equivalent, language_includes, normalize, pref_largest, Alphabet, Automaton,
    Inclusion, StateId, Symbol, Word,
};
use crate::fa::{init_closure, union};
use crate::solver::{
    check_progressive_solution, check_solution, progressive_upper_bound, require_solvable, solution_gap,
    supervisor_upper_bound, Check, SupervisorVerdict,
};

/// Replaces each transition on a symbol of `uo` with a self-loop at its source.
pub fn uo_folding(c: &Automaton, uo: &[Symbol]) -> Result<Automaton> {
    let mask = c.alphabet().mask(uo)?;
    Ok(c.map_edges(|q, x, t| Some(if mask[x] { (q, x, q) } else { (q, x, t) })))
}

/// The supervisor's effective behavior under partial observability.
pub fn effective_po(c: &Automaton, ca: &ControlAlphabet) -> Result<Automaton> {
    uo_folding(&normalize(c), ca.unobservable())
}

/// The effective behavior under both limitations, `(C⇓Σuo)⇑Σuc`.
pub fn effective_pco(c: &Automaton, ca: &ControlAlphabet) -> Result<Automaton> {
    uc_extension(&effective_po(c, ca)?, ca.uncontrollable())
}

/// The same behavior computed in the other order, `(C⇑Σuc)⇓Σuo`.
pub fn effective_pco_commuted(c: &Automaton, ca: &ControlAlphabet) -> Result<Automaton> {
    uo_folding(&uc_extension(&normalize(c), ca.uncontrollable())?, ca.unobservable())
}

/// `C_real`: a deterministic automaton over the observable symbols whose
/// states are subsets of source states, with justified unobservable loops.
#[derive(Debug, Clone)]
pub struct RealizedAutomaton {
    alphabet: Alphabet,
    observable: Vec<usize>,
    subsets: Vec<BTreeSet<StateId>>,
    finals: Vec<bool>,
    next: Vec<Vec<StateId>>,
    loops: Vec<(StateId, Symbol)>,
}

impl RealizedAutomaton {
    pub fn num_states(&self) -> usize {
        self.subsets.len()
    }

    pub fn subset(&self, q: StateId) -> &BTreeSet<StateId> {
        &self.subsets[q]
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    /// Successor of `q` under the observable symbol `sym`, if any.
    pub fn observable_next(&self, q: StateId, sym: &Symbol) -> Option<StateId> {
        let x = self.alphabet.index_of(sym)?;
        let i = self.observable.iter().position(|&o| o == x)?;
        Some(self.next[q][i])
    }

    /// The added unobservable self-loops.
    pub fn loops(&self) -> &[(StateId, Symbol)] {
        &self.loops
    }

    /// An ordinary automaton over the full alphabet with the observable
    /// transitions and the unobservable self-loops. The empty subset is dropped.
    pub fn flatten(&self) -> Automaton {
        let mut edges = Vec::new();
        for (q, row) in self.next.iter().enumerate() {
            for (i, &t) in row.iter().enumerate() {
                if !self.subsets[t].is_empty() {
                    edges.push((q, self.observable[i], t));
                }
            }
        }
        for (q, sym) in &self.loops {
            edges.push((*q, self.alphabet.index_of(sym).expect("loop symbol in alphabet"), *q));
        }
        Automaton::from_parts(self.alphabet.clone(), self.num_states(), 0, self.finals.clone(), edges)
    }
}

pub fn realize(c: &Automaton, ca: &ControlAlphabet) -> Result<RealizedAutomaton> {
    ca.check_automaton(c)?;
    let c = c.reindexed(ca.alphabet())?;
    let uo = c.alphabet().mask(ca.unobservable())?;
    let keep: Vec<bool> = uo.iter().map(|&u| !u).collect();
    let table = subset_construction(&c, &keep);
    let finals = table.subsets.iter().map(|s| s.iter().any(|&q| c.is_final(q))).collect();
    let mut loops = Vec::new();
    for (q, subset) in table.subsets.iter().enumerate() {
        for x in (0..uo.len()).filter(|&x| uo[x]) {
            if subset.iter().any(|&m| !c.successors(m, x).is_empty()) {
                loops.push((q, c.alphabet().symbol(x).clone()));
            }
        }
    }
    Ok(RealizedAutomaton {
        alphabet: c.alphabet().clone(),
        observable: table.kept,
        subsets: table.subsets,
        finals,
        next: table.next,
        loops,
    })
}

fn allowed(p: &Automaton, s: &Automaton) -> Result<Automaton> {
    union(&complement(p).to_automaton(), s)
}

/// Whether the folding of the plain solution `c` is a solution. Errors with
/// [`Error::NotASolution`] when `c` itself is not.
pub fn check_solution_under_po(p: &Automaton, s: &Automaton, c: &Automaton, ca: &ControlAlphabet) -> Result<Check> {
    ca.check_automaton(p)?;
    require_plain_solution(p, s, c)?;
    check_solution(p, s, &effective_po(c, ca)?)
}

pub fn is_solution_under_po(p: &Automaton, s: &Automaton, c: &Automaton, ca: &ControlAlphabet) -> Result<bool> {
    check_solution_under_po(p, s, c, ca).map(|c| c.passed())
}

/// Decides solvability under partial observability by the inclusion
/// `Init(L(S))_real ⊆ L(overline(P)) ∪ L(S)`.
pub fn solvable_under_po(p: &Automaton, s: &Automaton, ca: &ControlAlphabet) -> Result<Inclusion> {
    ca.check_automaton(p)?;
    require_solvable(p, s)?;
    let real = realize(&init_closure(s), ca)?.flatten();
    language_includes(&allowed(p, s)?, &real)
}

/// A verified solution under partial observability.
///
/// The first candidate is the flattened realization of `Init(S)`. Should it
/// fail, every prefix-closed extension of `Init(S)` by words of the largest
/// supervisor up to length `horizon` is tried, each saturated with the
/// unobservable self-loops of its realization.
pub fn witness_solution_under_po(
    p: &Automaton,
    s: &Automaton,
    ca: &ControlAlphabet,
    horizon: usize,
) -> Result<Automaton> {
    ca.check_automaton(p)?;
    let k = require_solvable(p, s)?;
    let lower = init_closure(s);
    let passes = |c: &Automaton| -> Result<bool> {
        match check_solution_under_po(p, s, c, ca) {
            Ok(check) => Ok(check.passed()),
            Err(Error::NotASolution { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    };
    let first = normalize(&realize(&lower, ca)?.flatten());
    if passes(&first)? {
        return Ok(first);
    }
    let mut found = None;
    let mut failure = None;
    crate::search::for_each_candidate(&lower, &k, horizon, usize::MAX, |c| {
        let saturated = match realize(c, ca) {
            Ok(r) => normalize(&r.flatten()),
            Err(e) => {
                failure = Some(e);
                return true;
            }
        };
        for cand in [c.clone(), saturated] {
            match passes(&cand) {
                Ok(true) => {
                    found = Some(cand);
                    return true;
                }
                Ok(false) => {}
                Err(e) => {
                    failure = Some(e);
                    return true;
                }
            }
        }
        false
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    found.ok_or_else(|| {
        Error::NoWitnessFound(format!("no solution under partial observability up to length {horizon}"))
    })
}

/// Outcome of testing whether the union of two solutions under partial
/// observability is again one.
#[derive(Debug, Clone)]
pub struct UnionReport {
    pub union_is_solution: bool,
    /// A word of `P ∩ (C1 ∪ C2)⇓Σuo` outside `L(S)`, or a word of `L(S)` it misses.
    pub leak: Option<Word>,
    pub union: Automaton,
}

pub fn no_largest_po_demo(
    p: &Automaton,
    s: &Automaton,
    ca: &ControlAlphabet,
    c1: &Automaton,
    c2: &Automaton,
) -> Result<UnionReport> {
    for (name, c) in [("first", c1), ("second", c2)] {
        let ok = match check_solution_under_po(p, s, c, ca) {
            Ok(check) => check.passed(),
            Err(Error::NotASolution { .. }) => false,
            Err(e) => return Err(e),
        };
        if !ok {
            return Err(Error::PreconditionViolated(format!(
                "{name} candidate is not a solution under partial observability"
            )));
        }
    }
    let union = union(c1, c2)?;
    let leak = match check_solution_under_po(p, s, &union, ca) {
        Ok(check) => check.witness().cloned(),
        Err(Error::NotASolution { witness }) => Some(witness),
        Err(e) => return Err(e),
    };
    Ok(UnionReport { union_is_solution: leak.is_none(), leak, union })
}

fn require_commutation(c: &Automaton, ca: &ControlAlphabet) -> Result<Automaton> {
    let one = effective_pco(c, ca)?;
    let other = effective_pco_commuted(c, ca)?;
    if !language_equivalent(&one, &other)? {
        return Err(Error::Inconsistent("folding and extension do not commute".into()));
    }
    Ok(one)
}

/// Whether `(C⇓Σuo)⇑Σuc` of the plain solution `c` is a solution. Both
/// orders of folding and extension are evaluated and must agree.
pub fn check_solution_under_pco(p: &Automaton, s: &Automaton, c: &Automaton, ca: &ControlAlphabet) -> Result<Check> {
    ca.check_automaton(p)?;
    require_plain_solution(p, s, c)?;
    check_solution(p, s, &require_commutation(c, ca)?)
}

pub fn is_solution_under_pco(p: &Automaton, s: &Automaton, c: &Automaton, ca: &ControlAlphabet) -> Result<bool> {
    check_solution_under_pco(p, s, c, ca).map(|c| c.passed())
}

/// Whether the folding of `c` is a progressive solution. Non-solutions fail
/// with their gap word.
pub fn check_progressive_under_po(p: &Automaton, s: &Automaton, c: &Automaton, ca: &ControlAlphabet) -> Result<Check> {
    ca.check_automaton(p)?;
    let plain = check_solution(p, s, c)?;
    if !plain.passed() {
        return Ok(plain);
    }
    check_progressive_solution(p, s, &effective_po(c, ca)?)
}

/// Whether `(C⇓Σuo)⇑Σuc` is a progressive solution. Non-solutions fail with
/// their gap word.
pub fn check_progressive_under_pco(p: &Automaton, s: &Automaton, c: &Automaton, ca: &ControlAlphabet) -> Result<Check> {
    ca.check_automaton(p)?;
    let plain = check_solution(p, s, c)?;
    if !plain.passed() {
        return Ok(plain);
    }
    check_progressive_solution(p, s, &require_commutation(c, ca)?)
}

pub fn is_progressive_under_pco(p: &Automaton, s: &Automaton, c: &Automaton, ca: &ControlAlphabet) -> Result<bool> {
    check_progressive_under_pco(p, s, c, ca).map(|c| c.passed())
}

fn require_uo_within_uc(ca: &ControlAlphabet) -> Result<()> {
    if ca.unobservable_within_uncontrollable() {
        Ok(())
    } else {
        Err(Error::PreconditionViolated("every unobservable event must be uncontrollable".into()))
    }
}

/// Decides solvability under both limitations, for `Σuo ⊆ Σuc`, by the
/// inclusion `L(Z_real) ⊆ L(overline(P)) ∪ L(S)` with
/// `L(Z) = Init(L(S))·(Σuc)*`.
pub fn solvable_under_pco(p: &Automaton, s: &Automaton, ca: &ControlAlphabet) -> Result<Inclusion> {
    ca.check_automaton(p)?;
    require_uo_within_uc(ca)?;
    require_solvable(p, s)?;
    let z = init_uc_closure(s, ca.uncontrollable())?;
    let real = realize(&z, ca)?.flatten();
    language_includes(&allowed(p, s)?, &real)
}

/// Observable part of the construction: the largest prefix-closed language
/// `W_o` over `Σo`, closed under the uncontrollable observable events, whose
/// every unobservable padding lies in `bound`. Returns `W_o` over the full
/// alphabet (observable transitions only), the elimination rounds and the
/// size of the automaton the elimination started from.
fn observable_core(bound: &Automaton, ca: &ControlAlphabet) -> Result<(Automaton, usize, usize)> {
    let sigma = ca.alphabet();
    let observable = ca.observable();
    if observable.is_empty() {
        let all = language_includes(bound, &Automaton::universal(sigma))?.holds();
        let core = if all { Automaton::epsilon(sigma) } else { Automaton::empty(sigma) };
        return Ok((core, 0, 1));
    }
    let so = Alphabet::new(observable.iter().map(|s| s.as_str()))?;
    let outside = complement(bound).to_automaton();
    let padded_outside = restrict_dfa(&outside, &so)?.to_automaton();
    let forall = pref_largest(&complement(&padded_outside).to_automaton());
    let required: Vec<bool> = so.symbols().map(|x| ca.uncontrollable().contains(x)).collect();
    let start = forall.num_states();
    let (core, rounds) = eliminate(&forall, &required, vec![true; start]);
    let core = core.unwrap_or_else(|| Automaton::empty(&so));
    Ok((core.widened(sigma), rounds, start))
}

/// `W_o ∪ W_o·Σuo·Σ*`: words whose longest unobservable-free prefix is in `W_o`.
fn observable_prefix_gate(core: &Automaton, ca: &ControlAlphabet) -> Result<Automaton> {
    let sigma = ca.alphabet();
    if core.finals().next().is_none() {
        return Ok(Automaton::empty(sigma));
    }
    let uo = sigma.mask(ca.unobservable())?;
    let free = core.num_states();
    let mut finals: Vec<bool> = (0..free).map(|q| core.is_final(q)).collect();
    finals.push(true);
    let mut edges: Vec<_> = core.edges().collect();
    for q in 0..free {
        for x in (0..uo.len()).filter(|&x| uo[x]) {
            edges.push((q, x, free));
        }
    }
    for x in 0..sigma.len() {
        edges.push((free, x, free));
    }
    Ok(Automaton::from_parts(sigma.clone(), free + 1, core.initial(), finals, edges))
}

fn pco_construction(
    p: &Automaton,
    s: &Automaton,
    ca: &ControlAlphabet,
    bound: &Automaton,
) -> Result<(Automaton, Automaton, Option<Word>, usize, usize)> {
    let k = supervisor_upper_bound(p, s)?;
    let (core, rounds, start) = observable_core(bound, ca)?;
    let gate = observable_prefix_gate(&core, ca)?;
    let candidate = normalize(&intersect(&k, &gate)?);
    let effective = require_commutation(&candidate, ca)?;
    let closed_loop = intersect(p, &effective)?;
    let mut witness = solution_gap(p, s, &candidate)?;
    if witness.is_none() {
        witness = solution_gap(p, s, &effective)?;
    }
    Ok((candidate, closed_loop, witness, rounds, start))
}

/// Largest solution under partial controllability and observability, for
/// `Σuo ⊆ Σuc`. `closed_loop` is the plant under the effective supervisor.
pub fn largest_solution_under_pco(p: &Automaton, s: &Automaton, ca: &ControlAlphabet) -> Result<SupervisorVerdict> {
    ca.check_automaton(p)?;
    require_uo_within_uc(ca)?;
    let k = require_solvable(p, s)?;
    let (candidate, closed_loop, witness, rounds, start) = pco_construction(p, s, ca, &k)?;
    Ok(SupervisorVerdict::new(candidate, closed_loop, witness).with_rounds(rounds, start))
}

/// Largest progressive solution under partial controllability and
/// observability, for `Σuo ⊆ Σuc`: the same construction, bounded by the
/// largest progressive supervisor.
pub fn largest_progressive_solution_under_pco(
    p: &Automaton,
    s: &Automaton,
    ca: &ControlAlphabet,
) -> Result<SupervisorVerdict> {
    ca.check_automaton(p)?;
    require_uo_within_uc(ca)?;
    require_solvable(p, s)?;
    let bound = progressive_upper_bound(p, s)?;
    let (candidate, closed_loop, mut witness, rounds, start) = pco_construction(p, s, ca, &bound)?;
    if witness.is_none() {
        if let Check::Fail(w) = check_progressive_under_pco(p, s, &candidate, ca)? {
            witness = Some(w);
        }
    }
    Ok(SupervisorVerdict::new(candidate, closed_loop, witness).with_rounds(rounds, start))
}
