// SPDX-License-Identifier: Apache-2.0

//! Alphabet lifting and the parallel composition `P ◇_E C = (P⇑Σ2 ∩ C⇑Σ1)⇓E`.
//!
//! `expand` here is the classic lifting: every state gets a self-loop on every
//! foreign symbol. It is not the uncontrollable-event extension of
//! [`crate::controllability::uc_extension`], which adds a loop only where the
//! event is otherwise disabled.

use crate::error::{Error, Result};
use crate::fa::dfa::subset_construction;
use crate::fa::{complement, intersect, Alphabet, Automaton, Dfa};

/// Alphabets of the two components and the external alphabet `E` of their composition.
#[derive(Debug, Clone)]
pub struct CompositionSpec {
    sigma1: Alphabet,
    sigma2: Alphabet,
    external: Alphabet,
}

impl CompositionSpec {
    pub fn new(sigma1: Alphabet, sigma2: Alphabet, external: Alphabet) -> Result<Self> {
        if !external.is_subset_of(&sigma1.union(&sigma2)) {
            return Err(Error::BadComposition(format!(
                "external alphabet {external} is not contained in {} ∪ {}",
                sigma1, sigma2
            )));
        }
        Ok(CompositionSpec { sigma1, sigma2, external })
    }

    /// `E = Σ1 ∪ Σ2`.
    pub fn with_full_external(sigma1: Alphabet, sigma2: Alphabet) -> Self {
        let external = sigma1.union(&sigma2);
        CompositionSpec { sigma1, sigma2, external }
    }

    /// `E = Σ1 = Σ2`, where composition coincides with intersection.
    pub fn same_alphabet(sigma: Alphabet) -> Self {
        CompositionSpec { sigma1: sigma.clone(), sigma2: sigma.clone(), external: sigma }
    }

    pub fn sigma1(&self) -> &Alphabet {
        &self.sigma1
    }

    pub fn sigma2(&self) -> &Alphabet {
        &self.sigma2
    }

    pub fn external(&self) -> &Alphabet {
        &self.external
    }
}

/// Lifts `a` to `a.alphabet ∪ extra` with self-loops on the new symbols at every state.
pub fn expand(a: &Automaton, extra: &Alphabet) -> Automaton {
    let target = a.alphabet().union(extra);
    let new: Vec<usize> = (a.alphabet().len()..target.len()).collect();
    let wide = a.widened(&target);
    let loops: Vec<_> = (0..wide.num_states())
        .flat_map(|q| new.iter().map(move |&x| (q, x, q)))
        .collect();
    wide.with_edges(loops)
}

/// Projection onto `keep` as a complete DFA; each state records the source
/// subset it stands for.
pub fn restrict_dfa(a: &Automaton, keep: &Alphabet) -> Result<Dfa> {
    if !keep.is_subset_of(a.alphabet()) {
        return Err(Error::BadRestriction(format!("{keep} is not contained in {}", a.alphabet())));
    }
    let mask: Vec<bool> = a.alphabet().symbols().map(|s| keep.contains(s)).collect();
    let alphabet = a.alphabet().intersection(keep).expect("keep is non-empty");
    Ok(subset_construction(a, &mask).into_dfa(a, alphabet))
}

/// `{ w⇓keep : w ∈ L(a) }`, determinized after erasing the dropped symbols.
pub fn restrict(a: &Automaton, keep: &Alphabet) -> Result<Automaton> {
    restrict_dfa(a, keep).map(|d| d.to_automaton())
}

fn check_alphabet(a: &Automaton, expected: &Alphabet, role: &str) -> Result<()> {
    if a.alphabet().same_symbols(expected) {
        Ok(())
    } else {
        Err(Error::BadComposition(format!(
            "{role} alphabet {} does not match {expected}",
            a.alphabet()
        )))
    }
}

/// `(P⇑Σ2 ∩ C⇑Σ1)⇓E`.
pub fn parallel_compose(p: &Automaton, c: &Automaton, spec: &CompositionSpec) -> Result<Automaton> {
    check_alphabet(p, &spec.sigma1, "first component")?;
    check_alphabet(c, &spec.sigma2, "second component")?;
    let lp = expand(p, &spec.sigma2);
    let lc = expand(c, &spec.sigma1);
    restrict(&intersect(&lp, &lc)?, &spec.external)
}

/// `M = overline(P ◇ overline(S))`, the candidate largest solution of
/// `P ◇_E X ≅ S` over `Σ2`. Every solution is contained in `M`, but the
/// equation itself may still be unsolvable; substitute `M` back to decide.
pub fn general_largest_solution(p: &Automaton, s: &Automaton, spec: &CompositionSpec) -> Result<Automaton> {
    check_alphabet(p, &spec.sigma1, "plant")?;
    check_alphabet(s, &spec.external, "specification")?;
    let total = spec.sigma1.union(&spec.sigma2);
    let bad = complement(s).to_automaton();
    let lp = expand(p, &total);
    let lbad = expand(&bad, &total);
    let hidden = restrict(&intersect(&lp, &lbad)?, &spec.sigma2)?;
    Ok(complement(&hidden).to_automaton())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fa::{language_equivalent, Word};

    #[test]
    fn expand_adds_loops_on_new_symbols() {
        let b = Alphabet::from_chars("b").unwrap();
        let a = Automaton::from_strs(&b, &["b"]).unwrap();
        let e = expand(&a, &Alphabet::from_chars("a").unwrap());
        for w in ["b", "ab", "ba", "aaba"] {
            assert!(e.accepts_str(w), "{w}");
        }
        assert!(!e.accepts_str("a") && !e.accepts_str("bb"));
        assert!(language_equivalent(&expand(&a, &b), &a).unwrap());
    }

    #[test]
    fn restrict_erases_symbols() {
        let ab = Alphabet::from_chars("ab").unwrap();
        let a = Automaton::from_strs(&ab, &["ab"]).unwrap();
        let r = restrict(&a, &Alphabet::from_chars("b").unwrap()).unwrap();
        assert!(r.accepts(&Word::from_chars("b")) && !r.accepts(&Word::empty()));
        assert!(language_equivalent(&restrict(&a, &ab).unwrap(), &a).unwrap());
        assert!(matches!(
            restrict(&a, &Alphabet::from_chars("c").unwrap()),
            Err(Error::BadRestriction(_))
        ));
    }

    #[test]
    fn composition_over_one_alphabet_is_intersection() {
        let abc = Alphabet::from_chars("abc").unwrap();
        let p = Automaton::from_strs(&abc, &["a", "abc"]).unwrap();
        let c = Automaton::from_strs(&abc, &["a"]).unwrap();
        let pc = parallel_compose(&p, &c, &CompositionSpec::same_alphabet(abc.clone())).unwrap();
        assert!(language_equivalent(&pc, &c).unwrap());
    }

    #[test]
    fn unconstrained_partner_leaves_plant_unchanged() {
        let abc = Alphabet::from_chars("abc").unwrap();
        let ab = Alphabet::from_chars("ab").unwrap();
        let p = Automaton::from_strs(&abc, &["a", "abc", "cb"]).unwrap();
        let spec = CompositionSpec::new(abc.clone(), ab.clone(), abc.clone()).unwrap();
        let pc = parallel_compose(&p, &Automaton::universal(&ab), &spec).unwrap();
        assert!(language_equivalent(&pc, &p).unwrap());
    }

    #[test]
    fn external_alphabet_must_be_covered() {
        let a = Alphabet::from_chars("a").unwrap();
        let b = Alphabet::from_chars("b").unwrap();
        assert!(CompositionSpec::new(a.clone(), a, b).is_err());
    }
}
