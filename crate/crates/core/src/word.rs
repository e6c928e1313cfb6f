//! Atoms, atom subsets, simple elements and signed words over them.
//!
//! Every atom is registered as a simple element, so a signed word over
//! atoms is a [`SimpleWord`] whose letters all happen to be atoms.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub type AtomId = usize;

/// Maximum number of atoms supported by [`AtomSet`].
pub const MAX_ATOMS: usize = 64;

/// A subset of the atoms of a presentation, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomSet(u64);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ATOMS);
        if n == MAX_ATOMS {
            AtomSet(u64::MAX)
        } else {
            AtomSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        AtomSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(a: AtomId) -> Self {
        AtomSet(1 << a)
    }

    pub fn contains(self, a: AtomId) -> bool {
        a < MAX_ATOMS && self.0 & (1 << a) != 0
    }

    pub fn insert(&mut self, a: AtomId) {
        self.0 |= 1 << a;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        AtomSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        AtomSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        AtomSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn contains_word(self, word: &[AtomId]) -> bool {
        word.iter().all(|&a| self.contains(a))
    }

    /// Atoms in increasing order.
    pub fn iter(self) -> impl Iterator<Item = AtomId> {
        let bits = self.0;
        (0..MAX_ATOMS).filter(move |&i| bits & (1 << i) != 0)
    }

    pub fn to_vec(self) -> Vec<AtomId> {
        self.iter().collect()
    }

    /// Sorted atom indices, used as the lexicographic tie-break key.
    pub fn lex_key(self) -> Vec<AtomId> {
        self.to_vec()
    }

    pub fn display<'a>(self, names: &'a [String]) -> AtomSetDisplay<'a> {
        AtomSetDisplay { set: self, names }
    }
}

impl FromIterator<AtomId> for AtomSet {
    fn from_iter<I: IntoIterator<Item = AtomId>>(iter: I) -> Self {
        let mut s = AtomSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct AtomSetDisplay<'a> {
    set: AtomSet,
    names: &'a [String],
}

impl fmt::Display for AtomSetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.set.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.names[a])?;
        }
        write!(f, "}}")
    }
}

/// Index of a simple element in a [`SimpleTable`]. Atoms occupy the first ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub simple: SimpleId,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(simple: SimpleId) -> Self {
        Letter {
            simple,
            inverse: false,
        }
    }

    pub fn neg(simple: SimpleId) -> Self {
        Letter {
            simple,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Self {
        Letter {
            simple: self.simple,
            inverse: !self.inverse,
        }
    }
}

pub type SimpleWord = Vec<Letter>;

pub fn inverse(word: &[Letter]) -> SimpleWord {
    word.iter().rev().map(|l| l.inverted()).collect()
}

pub fn concat(parts: &[&[Letter]]) -> SimpleWord {
    let mut out = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
    for p in parts {
        out.extend_from_slice(p);
    }
    out
}

pub fn is_positive(word: &[Letter]) -> bool {
    word.iter().all(|l| !l.inverse)
}

/// Registry of simple elements, each identified by its canonical atom word
/// (the shortlex-least word representing it).
#[derive(Clone, Debug)]
pub struct SimpleTable {
    names: Vec<String>,
    words: Vec<Vec<AtomId>>,
    index: HashMap<Vec<AtomId>, SimpleId>,
}

impl SimpleTable {
    pub fn new(names: &[String]) -> Self {
        let mut t = SimpleTable {
            names: names.to_vec(),
            words: Vec::new(),
            index: HashMap::new(),
        };
        for a in 0..names.len() {
            t.register(vec![a]);
        }
        t
    }

    pub fn register(&mut self, word: Vec<AtomId>) -> SimpleId {
        assert!(!word.is_empty(), "the identity is not a letter");
        if let Some(&id) = self.index.get(&word) {
            return id;
        }
        let id = SimpleId(self.words.len() as u32);
        self.index.insert(word.clone(), id);
        self.words.push(word);
        id
    }

    pub fn lookup(&self, word: &[AtomId]) -> Option<SimpleId> {
        self.index.get(word).copied()
    }

    pub fn atom(&self, a: AtomId) -> SimpleId {
        SimpleId(a as u32)
    }

    pub fn word(&self, s: SimpleId) -> &[AtomId] {
        &self.words[s.0 as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn support(&self, s: SimpleId) -> AtomSet {
        self.word(s).iter().copied().collect()
    }

    pub fn word_support(&self, word: &[Letter]) -> AtomSet {
        word.iter()
            .fold(AtomSet::EMPTY, |acc, l| acc.union(self.support(l.simple)))
    }

    /// Expands every simple letter into its canonical atom word.
    pub fn expand(&self, word: &[Letter]) -> SimpleWord {
        let mut out = Vec::with_capacity(word.len());
        for l in word {
            let atoms = self.word(l.simple);
            if l.inverse {
                out.extend(atoms.iter().rev().map(|&a| Letter::neg(self.atom(a))));
            } else {
                out.extend(atoms.iter().map(|&a| Letter::pos(self.atom(a))));
            }
        }
        out
    }

    /// Parses whitespace-separated tokens: `a` is an atom, `a-` its inverse,
    /// `a.b` the simple element with canonical word `a b`.
    pub fn parse(&self, text: &str) -> Result<SimpleWord> {
        let mut out = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" && !self.names.iter().any(|n| n == "1") {
                continue;
            }
            let (body, inverse) = match token.strip_suffix('-') {
                Some(b) => (b, true),
                None => (token, false),
            };
            let mut atoms = Vec::new();
            for part in body.split('.') {
                let a = self
                    .names
                    .iter()
                    .position(|n| n == part)
                    .ok_or_else(|| Error::UnknownAtom(part.to_string()))?;
                atoms.push(a);
            }
            let simple = self
                .lookup(&atoms)
                .ok_or_else(|| Error::NotSimple(body.to_string()))?;
            out.push(Letter { simple, inverse });
        }
        Ok(out)
    }

    pub fn format(&self, word: &[Letter]) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        word.iter()
            .map(|l| {
                let body: Vec<&str> = self
                    .word(l.simple)
                    .iter()
                    .map(|&a| self.names[a].as_str())
                    .collect();
                let mut s = body.join(".");
                if l.inverse {
                    s.push('-');
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn format_atoms(&self, atoms: &[AtomId]) -> String {
        if atoms.is_empty() {
            return "1".to_string();
        }
        atoms
            .iter()
            .map(|&a| self.names[a].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}
