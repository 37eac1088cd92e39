// SPDX-License-Identifier: Apache-2.0

//! Finite automata algebra.

pub mod automaton;
pub mod compare;
pub mod dfa;
pub mod enumerate;
pub mod ops;
pub mod symbol;

pub use automaton::{Automaton, AutomatonStats, StateId};
pub use compare::{language_equivalent, language_includes, shortest_accepted, symmetric_difference_witness, Inclusion};
pub use dfa::{determinize, Dfa};
pub use enumerate::{all_words, enumerate_language, LanguageSample};
pub use ops::{
    complement, concat_star, init_closure, intersect, is_prefix_closed, is_trim, normalize, pref_largest,
    prefix_closure_violation, trim, union,
};
pub use symbol::{Alphabet, Symbol, Word};
