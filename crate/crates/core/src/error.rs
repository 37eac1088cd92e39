// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use thiserror::Error;

use crate::fa::Word;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid symbol {0:?}: symbols must be non-empty and contain no whitespace")]
    InvalidSymbol(String),
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(String),
    #[error("alphabet must not be empty")]
    EmptyAlphabet,
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(String),
    #[error("malformed automaton: {0}")]
    Malformed(String),
    #[error("alphabet mismatch: {left:?} vs {right:?}")]
    AlphabetMismatch { left: Vec<String>, right: Vec<String> },
    #[error("bad restriction: {0}")]
    BadRestriction(String),
    #[error("bad composition: {0}")]
    BadComposition(String),
    #[error("candidate is not prefix-closed (witness {witness})")]
    NotPrefixClosed { witness: Word },
    #[error("candidate is not a solution of the plain equation (witness {witness})")]
    NotASolution { witness: Word },
    #[error("the plain equation has no solution (witness {witness})")]
    Unsolvable { witness: Word },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no witness found: {0}")]
    NoWitnessFound(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("{}:{line}: {message}", path.display())]
    Parse { path: PathBuf, line: usize, message: String },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
