// SPDX-License-Identifier: Apache-2.0

//! Automaton files and DOT export.
//!
//! The file format is JSON:
//!
//! ```json
//! {
//!   "alphabet": ["a", "b"],
//!   "states": ["q0", "q1"],
//!   "initial": "q0",
//!   "finals": ["q1"],
//!   "transitions": [["q0", "a", "q1"]]
//! }
//! ```

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fa::{Alphabet, Automaton};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AutomatonFile {
    alphabet: Vec<String>,
    states: Vec<String>,
    initial: String,
    finals: Vec<String>,
    transitions: Vec<(String, String, String)>,
}

/// Line of the `nth` (0-based) occurrence of `"token"`, or 1.
fn locate(text: &str, token: &str, nth: usize) -> usize {
    let quoted = format!("\"{token}\"");
    text.match_indices(&quoted)
        .nth(nth)
        .or_else(|| text.match_indices(&quoted).next())
        .map_or(1, |(pos, _)| text[..pos].matches('\n').count() + 1)
}

fn quoted_token(message: &str) -> Option<&str> {
    let start = message.find('"')? + 1;
    let len = message[start..].find('"')?;
    Some(&message[start..start + len])
}

fn locate_error(text: &str, err: &Error) -> usize {
    let (token, nth) = match err {
        Error::InvalidSymbol(s) | Error::UnknownSymbol(s) => (s.as_str(), 0),
        Error::DuplicateSymbol(s) => (s.as_str(), 1),
        Error::Malformed(m) => match quoted_token(m) {
            Some(t) => (t, usize::from(m.starts_with("duplicate"))),
            None => return 1,
        },
        Error::EmptyAlphabet => ("alphabet", 0),
        _ => return 1,
    };
    locate(text, token, nth)
}

/// Parses automaton JSON. `origin` names the source in error messages.
pub fn parse_automaton(text: &str, origin: &Path) -> Result<Automaton> {
    let parse_err = |line: usize, message: String| Error::Parse { path: origin.to_path_buf(), line, message };
    let file: AutomatonFile = serde_json::from_str(text).map_err(|e| parse_err(e.line().max(1), e.to_string()))?;
    let build = || -> Result<Automaton> {
        let alphabet = Alphabet::new(&file.alphabet)?;
        let transitions: Vec<(&str, &str, &str)> =
            file.transitions.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect();
        let states: Vec<&str> = file.states.iter().map(String::as_str).collect();
        let finals: Vec<&str> = file.finals.iter().map(String::as_str).collect();
        Automaton::from_named(alphabet, &states, &file.initial, &finals, &transitions)
    };
    build().map_err(|e| parse_err(locate_error(text, &e), e.to_string()))
}

pub fn load_automaton(path: &Path) -> Result<Automaton> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    parse_automaton(&text, path)
}

fn j<T: serde::Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

/// JSON with one transition per line, states in index order and
/// transitions sorted by source, symbol order and target.
pub fn automaton_to_json(a: &Automaton) -> String {
    let states: Vec<String> = (0..a.num_states()).map(|q| a.label(q).to_string()).collect();
    let finals: Vec<String> = a.finals().map(|q| a.label(q).to_string()).collect();
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"alphabet\": {},", j(&a.alphabet().names()));
    let _ = writeln!(out, "  \"states\": {},", j(&states));
    let _ = writeln!(out, "  \"initial\": {},", j(&a.label(a.initial()).to_string()));
    let _ = writeln!(out, "  \"finals\": {},", j(&finals));
    out.push_str("  \"transitions\": [");
    let rows: Vec<String> = a
        .transitions()
        .map(|(q, sym, t)| format!("    {}", j(&[a.label(q), sym.as_str(), a.label(t)].map(str::to_string))))
        .collect();
    if !rows.is_empty() {
        out.push('\n');
        out.push_str(&rows.join(",\n"));
        out.push_str("\n  ");
    }
    out.push_str("]\n}\n");
    out
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io { path: PathBuf::from(path), source })
}

pub fn save_automaton(a: &Automaton, path: &Path) -> Result<()> {
    write_file(path, &automaton_to_json(a))
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz source: final states are double circles, each transition is one labeled arrow.
pub fn to_dot(a: &Automaton, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", dot_id(name));
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  __start [shape=point];");
    for q in 0..a.num_states() {
        let shape = if a.is_final(q) { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  {} [shape={shape}];", dot_id(a.label(q)));
    }
    let _ = writeln!(out, "  __start -> {};", dot_id(a.label(a.initial())));
    for (q, sym, t) in a.transitions() {
        let _ = writeln!(out, "  {} -> {} [label={}];", dot_id(a.label(q)), dot_id(a.label(t)), dot_id(sym.as_str()));
    }
    out.push_str("}\n");
    out
}

pub fn save_dot(a: &Automaton, name: &str, path: &Path) -> Result<()> {
    write_file(path, &to_dot(a, name))
}
