//! Complemented presentations: parsing, the left/right complements they
//! induce, and the checks that must pass before anything else is built.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::{AtomId, AtomSet, MAX_ATOMS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Vec<AtomId>,
    pub rhs: Vec<AtomId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationSpec {
    pub atoms: Vec<String>,
    pub relations: Vec<Relation>,
    pub name: Option<String>,
}

/// Left and right complements read off the relation list.
///
/// Edges are stored as ordered pairs `(x, y)` with `x < y`; the complement
/// maps are keyed by ordered pairs in both orientations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComplementPair {
    pub graph_l: BTreeSet<(AtomId, AtomId)>,
    pub graph_r: BTreeSet<(AtomId, AtomId)>,
    pub f_l: BTreeMap<(AtomId, AtomId), Vec<AtomId>>,
    pub f_r: BTreeMap<(AtomId, AtomId), Vec<AtomId>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomReport {
    /// `is_atom[x]` for every generator, in file order.
    pub is_atom: Vec<bool>,
}

impl AtomReport {
    pub fn all_atoms(&self) -> bool {
        self.is_atom.iter().all(|&b| b)
    }

    pub fn non_atoms(&self) -> Vec<AtomId> {
        (0..self.is_atom.len())
            .filter(|&x| !self.is_atom[x])
            .collect()
    }
}

fn edge(x: AtomId, y: AtomId) -> (AtomId, AtomId) {
    (x.min(y), x.max(y))
}

impl ComplementPair {
    pub fn has_edge(&self, x: AtomId, y: AtomId) -> bool {
        x != y && self.graph_l.contains(&edge(x, y))
    }

    /// True iff the induced graph (of Γ_L) on `x` is complete.
    pub fn is_complete_on(&self, x: AtomSet) -> bool {
        let v = x.to_vec();
        v.iter()
            .enumerate()
            .all(|(i, &a)| v[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }
}

impl PresentationSpec {
    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn all_atoms(&self) -> AtomSet {
        AtomSet::full(self.atoms.len())
    }

    pub fn atom_id(&self, name: &str) -> Result<AtomId> {
        self.atoms
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }

    /// Parses a comma-separated atom list such as `a,b`.
    pub fn parse_subset(&self, text: &str) -> Result<AtomSet> {
        let mut set = AtomSet::EMPTY;
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            set.insert(self.atom_id(part)?);
        }
        Ok(set)
    }

    /// Relations whose two sides are words over `x`.
    pub fn relations_within(&self, x: AtomSet) -> Vec<Relation> {
        self.relations
            .iter()
            .filter(|r| x.contains_word(&r.lhs) && x.contains_word(&r.rhs))
            .cloned()
            .collect()
    }

    pub fn word_text(&self, w: &[AtomId]) -> String {
        w.iter()
            .map(|&a| self.atoms[a].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Serializes back to the presentation file format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "# {name}");
        }
        let _ = writeln!(out, "atoms: {}", self.atoms.join(" "));
        for r in &self.relations {
            let _ = writeln!(
                out,
                "rel: {} = {}",
                self.word_text(&r.lhs),
                self.word_text(&r.rhs)
            );
        }
        out
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn column_of(line: &str, needle: &str) -> usize {
    line.find(needle).map(|i| i + 1).unwrap_or(1)
}

/// Parses the line-oriented presentation format.
pub fn parse_presentation(text: &str) -> Result<PresentationSpec> {
    let mut atoms: Option<Vec<String>> = None;
    let mut relations = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let trimmed = line.trim_start();
        let indent = line.len() - trimmed.len();
        if let Some(rest) = trimmed.strip_prefix("atoms:") {
            if atoms.is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    column: indent + 1,
                    message: "`atoms:` may appear only once".into(),
                });
            }
            let mut names: Vec<String> = Vec::new();
            for name in rest.split_whitespace() {
                if names.iter().any(|n| n == name) {
                    return Err(Error::DuplicateAtom(name.to_string()));
                }
                if name.contains(['=', ',', '.']) || name.ends_with('-') {
                    return Err(Error::Parse {
                        line: line_no,
                        column: column_of(raw, name),
                        message: format!("invalid atom name `{name}`"),
                    });
                }
                names.push(name.to_string());
            }
            if names.len() > MAX_ATOMS {
                return Err(Error::Parse {
                    line: line_no,
                    column: indent + 1,
                    message: format!("at most {MAX_ATOMS} atoms are supported"),
                });
            }
            atoms = Some(names);
        } else if let Some(rest) = trimmed.strip_prefix("rel:") {
            let names = atoms.as_ref().ok_or_else(|| Error::Parse {
                line: line_no,
                column: indent + 1,
                message: "`atoms:` must be the first line".into(),
            })?;
            let sides: Vec<&str> = rest.split('=').collect();
            if sides.len() != 2 {
                return Err(Error::MalformedRelation {
                    line: line_no,
                    reason: "expected exactly one `=`".into(),
                });
            }
            let mut words = Vec::with_capacity(2);
            for side in sides {
                let mut w = Vec::new();
                for tok in side.split_whitespace() {
                    let id = names
                        .iter()
                        .position(|n| n == tok)
                        .ok_or_else(|| Error::UnknownAtom(tok.to_string()))?;
                    w.push(id);
                }
                if w.is_empty() {
                    return Err(Error::MalformedRelation {
                        line: line_no,
                        reason: "empty side".into(),
                    });
                }
                words.push(w);
            }
            let rhs = words.pop().unwrap();
            let lhs = words.pop().unwrap();
            if lhs == rhs {
                return Err(Error::MalformedRelation {
                    line: line_no,
                    reason: "both sides are the same word".into(),
                });
            }
            if lhs[0] == rhs[0] && lhs.last() == rhs.last() {
                return Err(Error::MalformedRelation {
                    line: line_no,
                    reason: "sides share both their first and their last atom".into(),
                });
            }
            relations.push(Relation { lhs, rhs });
        } else {
            return Err(Error::Parse {
                line: line_no,
                column: indent + 1,
                message: format!("unexpected line `{}`", trimmed.trim_end()),
            });
        }
    }

    let atoms = atoms.ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing `atoms:` line".into(),
    })?;
    Ok(PresentationSpec {
        atoms,
        relations,
        name: None,
    })
}

/// Reads Γ_L, f_L from relation heads and Γ_R, f_R from relation tails.
pub fn derive_complements(spec: &PresentationSpec) -> Result<ComplementPair> {
    let mut cp = ComplementPair::default();
    let names = &spec.atoms;
    for r in &spec.relations {
        let (x, y) = (r.lhs[0], r.rhs[0]);
        if x != y {
            for (key, val) in [((x, y), &r.lhs[1..]), ((y, x), &r.rhs[1..])] {
                if cp.f_l.insert(key, val.to_vec()).is_some() {
                    return Err(Error::ConflictingComplement {
                        side: 'L',
                        x: names[key.0].clone(),
                        y: names[key.1].clone(),
                    });
                }
            }
            cp.graph_l.insert(edge(x, y));
        }
        let (xt, yt) = (*r.lhs.last().unwrap(), *r.rhs.last().unwrap());
        if xt != yt {
            let u = &r.lhs[..r.lhs.len() - 1];
            let v = &r.rhs[..r.rhs.len() - 1];
            for (key, val) in [((yt, xt), u), ((xt, yt), v)] {
                if cp.f_r.insert(key, val.to_vec()).is_some() {
                    return Err(Error::ConflictingComplement {
                        side: 'R',
                        x: names[key.0].clone(),
                        y: names[key.1].clone(),
                    });
                }
            }
            cp.graph_r.insert(edge(xt, yt));
        }
    }
    Ok(cp)
}

/// A generator x is an atom iff no edge {x,y} has an empty left complement f_L(x,y).
pub fn validate_atoms(spec: &PresentationSpec, cp: &ComplementPair) -> AtomReport {
    let n = spec.atom_count();
    let is_atom = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| y != x)
                .all(|y| match cp.f_l.get(&(x, y)) {
                    Some(w) => !w.is_empty(),
                    None => true,
                })
        })
        .collect();
    AtomReport { is_atom }
}

pub fn check_graph_coincidence(cp: &ComplementPair) -> bool {
    cp.graph_l == cp.graph_r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn cp_of(text: &str) -> (PresentationSpec, ComplementPair) {
        let spec = parse_presentation(text).unwrap();
        let cp = derive_complements(&spec).unwrap();
        (spec, cp)
    }

    #[test]
    fn parse_b3_line() {
        let spec = parse_presentation("atoms: a b\nrel: a b a = b a b").unwrap();
        assert_eq!(spec.atoms, vec!["a", "b"]);
        assert_eq!(
            spec.relations,
            vec![Relation {
                lhs: vec![0, 1, 0],
                rhs: vec![1, 0, 1]
            }]
        );
    }

    #[test]
    fn parse_single_atom() {
        let spec = parse_presentation("atoms: a").unwrap();
        assert_eq!(spec.atoms, vec!["a"]);
        assert!(spec.relations.is_empty());
    }

    #[test]
    fn parse_accepts_non_atom_relation_and_validator_rejects() {
        let (spec, cp) = cp_of("atoms: a b\nrel: a = b a");
        let report = validate_atoms(&spec, &cp);
        assert_eq!(report.is_atom, vec![false, true]);
        assert_eq!(report.non_atoms(), vec![0]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_presentation("atoms: a a"),
            Err(Error::DuplicateAtom(_))
        ));
        assert!(matches!(
            parse_presentation("atoms: a\nrel: a = z"),
            Err(Error::UnknownAtom(_))
        ));
        assert!(matches!(
            parse_presentation("atoms: a b\nrel: a b ="),
            Err(Error::MalformedRelation { .. })
        ));
        assert!(matches!(
            parse_presentation("atoms: a b\nrel: a b"),
            Err(Error::MalformedRelation { .. })
        ));
        assert!(matches!(
            parse_presentation("rel: a = b"),
            Err(Error::Parse { line: 1, .. })
        ));
        match parse_presentation("atoms: a b\n  bogus line") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn comments_are_ignored() {
        let spec =
            parse_presentation("# header\natoms: a b # two\n\nrel: a b = b a # commute\n").unwrap();
        assert_eq!(spec.relations.len(), 1);
    }

    #[test]
    fn complements_b3() {
        let (_, cp) = cp_of(presets::B3);
        assert_eq!(cp.graph_l, BTreeSet::from([(0, 1)]));
        assert_eq!(cp.f_l[&(0, 1)], vec![1, 0]);
        assert_eq!(cp.f_l[&(1, 0)], vec![0, 1]);
        assert_eq!(cp.graph_r, BTreeSet::from([(0, 1)]));
        assert_eq!(cp.f_r[&(0, 1)], vec![1, 0]);
        assert_eq!(cp.f_r[&(1, 0)], vec![0, 1]);
    }

    #[test]
    fn complements_free2_empty() {
        let (_, cp) = cp_of(presets::FREE2);
        assert!(cp.graph_l.is_empty() && cp.graph_r.is_empty());
        assert!(cp.f_l.is_empty() && cp.f_r.is_empty());
    }

    #[test]
    fn complements_ra2() {
        let (_, cp) = cp_of(presets::RA2);
        assert_eq!(cp.f_l[&(0, 1)], vec![1]);
        assert_eq!(cp.f_l[&(1, 0)], vec![0]);
        assert_eq!(cp.f_l[&(1, 2)], vec![2]);
        assert_eq!(cp.f_l[&(2, 1)], vec![1]);
        // f_R(x,y)·y = f_R(y,x)·x
        assert_eq!(cp.f_r[&(0, 1)], vec![0]);
        assert_eq!(cp.f_r[&(1, 0)], vec![1]);
        assert_eq!(cp.f_r[&(1, 2)], vec![1]);
        assert_eq!(cp.f_r[&(2, 1)], vec![2]);
    }

    #[test]
    fn conflicting_complement() {
        let spec = parse_presentation("atoms: a b\nrel: a b = b a\nrel: a a b = b b a").unwrap();
        assert!(matches!(
            derive_complements(&spec),
            Err(Error::ConflictingComplement { side: 'L', .. })
        ));
    }

    #[test]
    fn atoms_of_presets() {
        for text in [presets::B3, presets::FREE2] {
            let (spec, cp) = cp_of(text);
            assert!(validate_atoms(&spec, &cp).all_atoms());
        }
    }

    #[test]
    fn graph_coincidence() {
        let (_, cp) = cp_of(presets::B3);
        assert!(check_graph_coincidence(&cp));
        let (_, cp) = cp_of(presets::FREE2);
        assert!(check_graph_coincidence(&cp));
        let (_, cp) = cp_of("atoms: a b c\nrel: a b = b c");
        assert_eq!(cp.graph_l, BTreeSet::from([(0, 1)]));
        assert_eq!(cp.graph_r, BTreeSet::from([(1, 2)]));
        assert!(!check_graph_coincidence(&cp));
    }

    #[test]
    fn complement_words_are_relation_sides() {
        for (_, text) in presets::ALL {
            let (spec, cp) = cp_of(text);
            for &(x, y) in &cp.graph_l {
                let mut l = vec![x];
                l.extend(&cp.f_l[&(x, y)]);
                let mut r = vec![y];
                r.extend(&cp.f_l[&(y, x)]);
                let hits = spec
                    .relations
                    .iter()
                    .filter(|rel| (rel.lhs == l && rel.rhs == r) || (rel.lhs == r && rel.rhs == l))
                    .count();
                assert_eq!(hits, 1);
            }
        }
    }
}
