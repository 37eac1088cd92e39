// SPDX-License-Identifier: Apache-2.0

//! Symbols, alphabets and words.

use std::fmt;

use indexmap::IndexSet;

use crate::error::{Error, Result};

/// An event name. Printable, non-empty and free of whitespace.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(String);

impl Symbol {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c.is_control()) {
            return Err(Error::InvalidSymbol(name));
        }
        Ok(Symbol(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An ordered set of symbols. Iteration follows declaration order, and two
/// alphabets are equal only if they list the same symbols in the same order
/// (use [`Alphabet::same_symbols`] to ignore order).
#[derive(Debug, Clone)]
pub struct Alphabet {
    symbols: IndexSet<Symbol>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Alphabet) -> bool {
        self.symbols.iter().eq(other.symbols.iter())
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    /// Builds an alphabet from symbol names, rejecting duplicates and the empty set.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut symbols = IndexSet::new();
        for name in names {
            let sym = Symbol::new(name)?;
            if !symbols.insert(sym.clone()) {
                return Err(Error::DuplicateSymbol(sym.0));
            }
        }
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Alphabet { symbols })
    }

    /// One symbol per character, e.g. `"abc"` gives `{a, b, c}`.
    pub fn from_chars(chars: &str) -> Result<Self> {
        Alphabet::new(chars.chars().map(String::from))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> impl ExactSizeIterator<Item = &Symbol> + '_ {
        self.symbols.iter()
    }

    pub fn symbol(&self, index: usize) -> &Symbol {
        &self.symbols[index]
    }

    pub fn index_of(&self, sym: &Symbol) -> Option<usize> {
        self.symbols.get_index_of(sym)
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.0 == name)
    }

    pub fn contains(&self, sym: &Symbol) -> bool {
        self.symbols.contains(sym)
    }

    /// Same symbols, irrespective of declaration order.
    pub fn same_symbols(&self, other: &Alphabet) -> bool {
        self.len() == other.len() && other.symbols().all(|s| self.contains(s))
    }

    pub fn is_subset_of(&self, other: &Alphabet) -> bool {
        self.symbols().all(|s| other.contains(s))
    }

    /// `self` followed by the symbols of `other` not already present.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut symbols = self.symbols.clone();
        symbols.extend(other.symbols().cloned());
        Alphabet { symbols }
    }

    /// Symbols of `self` that also occur in `other`, in `self`'s order.
    /// `None` when the intersection is empty.
    pub fn intersection(&self, other: &Alphabet) -> Option<Alphabet> {
        let symbols: IndexSet<Symbol> = self.symbols().filter(|s| other.contains(s)).cloned().collect();
        (!symbols.is_empty()).then_some(Alphabet { symbols })
    }

    pub fn names(&self) -> Vec<String> {
        self.symbols().map(|s| s.0.clone()).collect()
    }

    /// Resolves symbol names against this alphabet.
    pub fn resolve<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<Symbol>> {
        names
            .iter()
            .map(|n| {
                let n = n.as_ref();
                self.index_of_name(n)
                    .map(|i| self.symbol(i).clone())
                    .ok_or_else(|| Error::UnknownSymbol(n.to_string()))
            })
            .collect()
    }

    /// Membership mask over this alphabet's indices.
    pub(crate) fn mask(&self, syms: &[Symbol]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.len()];
        for s in syms {
            let i = self.index_of(s).ok_or_else(|| Error::UnknownSymbol(s.0.clone()))?;
            mask[i] = true;
        }
        Ok(mask)
    }

    /// The word spelled by the symbol indices.
    pub(crate) fn word(&self, indices: &[usize]) -> Word {
        Word(indices.iter().map(|&i| self.symbol(i).clone()).collect())
    }

    /// Symbol indices of `word`, or `None` if it uses a foreign symbol.
    pub(crate) fn indices(&self, word: &Word) -> Option<Vec<usize>> {
        word.0.iter().map(|s| self.index_of(s)).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names().join(", "))
    }
}

/// A finite sequence of symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// One symbol per character; `""` is the empty word.
    pub fn from_chars(chars: &str) -> Self {
        Word(chars.chars().map(|c| Symbol(c.to_string())).collect())
    }

    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        names.iter().map(|n| Symbol::new(n.as_ref())).collect::<Result<_>>().map(Word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn names(&self) -> Vec<String> {
        self.0.iter().map(|s| s.0.clone()).collect()
    }

    /// All prefixes, from the empty word up to the word itself.
    pub fn prefixes(&self) -> impl Iterator<Item = Word> + '_ {
        (0..=self.0.len()).map(|k| Word(self.0[..k].to_vec()))
    }

    /// Drops every symbol not satisfying `keep`.
    pub fn erase(&self, keep: impl Fn(&Symbol) -> bool) -> Word {
        Word(self.0.iter().filter(|s| keep(s)).cloned().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        let sep = if self.0.iter().all(|s| s.0.chars().count() == 1) { "" } else { " " };
        let parts: Vec<&str> = self.0.iter().map(|s| s.as_str()).collect();
        f.write_str(&parts.join(sep))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_symbols_and_alphabets() {
        assert!(Symbol::new("").is_err());
        assert!(Symbol::new("a b").is_err());
        assert!(matches!(Alphabet::new(["a", "a"]), Err(Error::DuplicateSymbol(_))));
        assert!(matches!(Alphabet::new(Vec::<String>::new()), Err(Error::EmptyAlphabet)));
    }

    #[test]
    fn union_keeps_declaration_order() {
        let ab = Alphabet::from_chars("ab").unwrap();
        let ca = Alphabet::from_chars("ca").unwrap();
        assert_eq!(ab.union(&ca).names(), ["a", "b", "c"]);
        assert!(ab.same_symbols(&Alphabet::from_chars("ba").unwrap()));
    }

    #[test]
    fn word_display() {
        assert_eq!(Word::empty().to_string(), "ε");
        assert_eq!(Word::from_chars("abc").to_string(), "abc");
        assert_eq!(Word::from_names(&["go", "stop"]).unwrap().to_string(), "go stop");
    }
}
