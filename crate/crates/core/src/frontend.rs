//! Validated presentations bundled with their FC tree, and the decision
//! procedures built on canonical coset words.

use crate::amalgam::{build_fc_tree, BuildOptions, Element, FcTree};
use crate::error::{Error, Result};
use crate::oracle;
use crate::parabolic::{enumerate_spherical_parabolics, is_parabolic, SphericalParabolics};
use crate::presentation::{
    check_graph_coincidence, derive_complements, parse_presentation, validate_atoms,
    ComplementPair, PresentationSpec,
};
use crate::presets;
use crate::word::{self, AtomId, AtomSet, SimpleTable, SimpleWord};

#[derive(Debug)]
pub struct Session {
    pub spec: PresentationSpec,
    pub cp: ComplementPair,
    pub table: SimpleTable,
    pub tree: FcTree,
    pub spherical: SphericalParabolics,
    pub options: BuildOptions,
}

impl Session {
    pub fn from_text(text: &str, options: BuildOptions) -> Result<Session> {
        Session::from_spec(parse_presentation(text)?, options)
    }

    pub fn preset(name: &str, options: BuildOptions) -> Result<Session> {
        let text = presets::lookup(name)
            .ok_or_else(|| Error::InvalidInput(format!("unknown preset `{name}`")))?;
        let mut spec = parse_presentation(text)?;
        spec.name = Some(name.to_ascii_uppercase());
        Session::from_spec(spec, options)
    }

    pub fn from_spec(spec: PresentationSpec, options: BuildOptions) -> Result<Session> {
        let cp = derive_complements(&spec)?;
        let report = validate_atoms(&spec, &cp);
        if !report.all_atoms() {
            return Err(Error::NonAtomGenerators(
                report
                    .non_atoms()
                    .into_iter()
                    .map(|a| spec.atoms[a].clone())
                    .collect(),
            ));
        }
        if !check_graph_coincidence(&cp) {
            return Err(Error::GraphMismatch);
        }
        let mut table = SimpleTable::new(&spec.atoms);
        let tree = build_fc_tree(&spec, &cp, options, &mut table)?;
        let mut spherical = enumerate_spherical_parabolics(
            &spec,
            &cp,
            options.max_garside_len,
            options.oracle_budget,
        )?;
        for gs in &mut spherical.structures {
            gs.register(&mut table);
        }
        Ok(Session {
            spec,
            cp,
            table,
            tree,
            spherical,
            options,
        })
    }

    pub fn parse_word(&self, text: &str) -> Result<SimpleWord> {
        self.table.parse(text)
    }

    /// Parses `a,b` and checks that the atoms generate a parabolic submonoid.
    pub fn parse_parabolic(&self, text: &str) -> Result<AtomSet> {
        let p = self.spec.parse_subset(text)?;
        if !is_parabolic(p, &self.cp) {
            return Err(Error::NotParabolic(p.display(&self.spec.atoms).to_string()));
        }
        Ok(p)
    }

    pub fn format(&self, w: &[word::Letter]) -> String {
        self.table.format(w)
    }

    pub fn atoms_of(&self, w: &[word::Letter]) -> SimpleWord {
        self.table.expand(w)
    }

    /// Canonical word of the coset `w̄·G(P)`, by reduction of pre-expressions.
    pub fn m_star(&self, w: &[word::Letter], p: AtomSet) -> SimpleWord {
        self.tree.m_star(&self.table, w, p)
    }

    /// The same canonical word through the amalgam normal-form recursion.
    pub fn coset_rep(&self, w: &[word::Letter], p: AtomSet) -> SimpleWord {
        self.tree.coset_rep(&self.table, w, p)
    }

    pub fn normal_form(&self, w: &[word::Letter]) -> Element {
        self.tree.group_element(&self.table, w)
    }

    pub fn monoid_normal_form(&self, w: &[word::Letter]) -> Result<Element> {
        if !word::is_positive(w) {
            return Err(Error::InvalidInput("word has inverse letters".into()));
        }
        Ok(self.tree.monoid_element(&self.table, w))
    }

    pub fn word_problem(&self, w1: &[word::Letter], w2: &[word::Letter]) -> bool {
        let w = word::concat(&[w1, &word::inverse(w2)]);
        self.coset_rep(&w, AtomSet::EMPTY).is_empty()
    }

    pub fn monoid_membership(&self, w: &[word::Letter]) -> bool {
        word::is_positive(&self.coset_rep(w, AtomSet::EMPTY))
    }

    pub fn coset_membership(&self, w: &[word::Letter], p: AtomSet) -> bool {
        self.coset_rep(w, p).is_empty()
    }

    /// True iff `w̄^k ≠ 1` for `2 ≤ k ≤ k_max`; `w̄` itself must be nontrivial.
    pub fn torsion_probe(&self, w: &[word::Letter], k_max: usize) -> Result<bool> {
        if self.coset_rep(w, AtomSet::EMPTY).is_empty() {
            return Err(Error::InvalidInput(
                "torsion probe needs a nontrivial element".into(),
            ));
        }
        let mut power = w.to_vec();
        for _ in 2..=k_max {
            power.extend_from_slice(w);
            if self.coset_rep(&power, AtomSet::EMPTY).is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn oracle_closure(&self, w: &[AtomId]) -> Result<std::collections::BTreeSet<Vec<AtomId>>> {
        oracle::oracle_closure(w, &self.spec.relations, self.options.oracle_budget)
    }

    pub fn oracle_equal(&self, w1: &[AtomId], w2: &[AtomId]) -> Result<bool> {
        oracle::oracle_equal(w1, w2, &self.spec.relations, self.options.oracle_budget)
    }

    /// Atom ids of a positive word given as letters.
    pub fn positive_atoms(&self, w: &[word::Letter]) -> Option<Vec<AtomId>> {
        word::is_positive(w).then(|| {
            self.table
                .expand(w)
                .iter()
                .map(|l| self.table.word(l.simple)[0])
                .collect()
        })
    }

    /// Letters of a positive atom word.
    pub fn letters(&self, atoms: &[AtomId]) -> SimpleWord {
        atoms
            .iter()
            .map(|&a| word::Letter::pos(self.table.atom(a)))
            .collect()
    }

    /// Letters of a signed atom word.
    pub fn signed_letters(&self, w: &[(AtomId, bool)]) -> SimpleWord {
        w.iter()
            .map(|&(a, inverse)| word::Letter {
                simple: self.table.atom(a),
                inverse,
            })
            .collect()
    }

    /// 𝒮(M) as canonical atom words.
    pub fn simples(&self) -> Vec<Vec<AtomId>> {
        let mut v: Vec<Vec<AtomId>> = self.spherical.simples.iter().cloned().collect();
        v.sort_by(|a, b| oracle::shortlex_cmp(a, b));
        v
    }

    pub fn check_report(&self) -> String {
        let names = &self.spec.atoms;
        let mut out = String::new();
        out.push_str(&format!("atoms: {}\n", names.join(" ")));
        out.push_str(&format!("relations: {}\n", self.spec.relations.len()));
        out.push_str("all generators are atoms: true\n");
        out.push_str("left and right graphs coincide: true\n");
        let edges: Vec<String> = self
            .cp
            .graph_l
            .iter()
            .map(|&(a, b)| format!("{}-{}", names[a], names[b]))
            .collect();
        out.push_str(&format!("edges: {}\n", edges.join(" ")));
        out.push_str(&format!("fc tree leaves: {}\n", self.tree.leaf_count()));
        out.push_str(&format!(
            "spherical parabolics: {}\n",
            self.spherical.handles.len()
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn session(name: &str) -> Session {
        Session::preset(name, BuildOptions::default()).unwrap()
    }

    fn w(s: &Session, text: &str) -> SimpleWord {
        s.parse_word(text).unwrap()
    }

    #[test]
    fn word_problem_examples() {
        let s = session("B3B3");
        assert!(s.word_problem(&w(&s, "a b c b"), &w(&s, "a c b c")));
        assert!(s.word_problem(&w(&s, "a c- b"), &w(&s, "a c- b")));
        let s = session("B3");
        assert!(!s.word_problem(&w(&s, "a b"), &w(&s, "b a")));
    }

    #[test]
    fn membership_examples() {
        let s = session("B3");
        assert!(!s.monoid_membership(&w(&s, "a b a-")));
        assert!(s.monoid_membership(&w(&s, "b a b a-")));
        assert!(s.monoid_membership(&w(&s, "a b")));
    }

    #[test]
    fn coset_examples() {
        let s = session("B3B3");
        let b = s.parse_parabolic("b").unwrap();
        assert!(s.coset_membership(&w(&s, "b b a a-"), b));
        assert!(!s.coset_membership(&w(&s, "a"), b));
        let s = session("B3");
        let b = s.parse_parabolic("b").unwrap();
        assert!(!s.coset_membership(&w(&s, "a- b a"), b));
    }

    #[test]
    fn probe_examples() {
        let s = session("B3");
        assert!(s.torsion_probe(&w(&s, "a b"), 6).unwrap());
        assert!(s.torsion_probe(&w(&s, "a a-"), 6).is_err());
        let s = session("B3B3");
        assert!(s.torsion_probe(&w(&s, "c a"), 6).unwrap());
    }

    #[test]
    fn rejects_bad_presentations() {
        let o = BuildOptions::default();
        assert!(matches!(
            Session::from_text("atoms: a b\nrel: a = b a", o),
            Err(Error::NonAtomGenerators(v)) if v == vec!["a".to_string()]
        ));
        assert!(matches!(
            Session::from_text("atoms: a b c\nrel: a b = b c", o),
            Err(Error::GraphMismatch)
        ));
    }
}
