// SPDX-License-Identifier: Apache-2.0

//! Supervisor synthesis for discrete-event plants.
//!
//! A supervisor `C` for a plant `P` and a specification `S`, all over one
//! alphabet, is a prefix-closed automaton with `P ∩ C ≅ S`. This crate solves
//! that automata equation: it decides solvability, builds the largest
//! supervisor, and handles progressive (non-blocking) supervisors and
//! supervisors that cannot disable uncontrollable events or cannot see
//! unobservable ones.
//!
//! ```
//! use supctl::fa::{Alphabet, Automaton};
//! use supctl::solver::largest_supervisor;
//!
//! let sigma = Alphabet::from_chars("abc").unwrap();
//! let plant = Automaton::from_strs(&sigma, &["a", "abc"]).unwrap();
//! let spec = Automaton::from_strs(&sigma, &["a"]).unwrap();
//! let verdict = largest_supervisor(&plant, &spec).unwrap();
//! let c = verdict.largest().unwrap();
//! assert!(c.accepts_str("bb"));
//! assert!(!c.accepts_str("abc"));
//! ```

pub mod cli;
pub mod composition;
pub mod controllability;
pub mod error;
pub mod fa;
pub mod io;
pub mod observability;
pub mod search;
pub mod solver;

pub use error::{Error, Result};
