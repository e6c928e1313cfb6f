//! The reduction system on finite sequences of elements of `M1 ∪ M2`
//! whose irreducible sequences are the amalgam normal forms.

use super::{Element, FcTree, Side};
use crate::word::{self, AtomSet, Letter, SimpleTable, SimpleWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// Replace a same-side pair by the decomposition of its product.
    A,
    /// Split a factor into its stripped part and its N-part.
    B,
    /// Multiply two adjacent elements of N.
    C,
}

/// An element of M1 or M2, given by a positive word and its side.
pub type Entry = (Side, SimpleWord);

pub struct AmalgamSystem<'a> {
    node: &'a FcTree,
    table: &'a SimpleTable,
    n: AtomSet,
}

impl<'a> AmalgamSystem<'a> {
    pub fn new(node: &'a FcTree, table: &'a SimpleTable) -> Option<Self> {
        let n = node.shared_atoms()?;
        Some(AmalgamSystem { node, table, n })
    }

    fn support(&self, w: &[Letter]) -> AtomSet {
        self.table.word_support(w)
    }

    pub fn in_n(&self, e: &Entry) -> bool {
        self.support(&e.1).is_subset(self.n)
    }

    /// Canonical element for comparing entries; elements of N are taken in
    /// the shared tree.
    pub fn key(&self, e: &Entry) -> (usize, Element) {
        let (_, _, shared) = self.node.children().unwrap();
        if self.in_n(e) {
            (0, shared.monoid_element(self.table, &e.1))
        } else {
            (
                e.0.index(),
                self.node.child(e.0).monoid_element(self.table, &e.1),
            )
        }
    }

    pub fn keys(&self, x: &[Entry]) -> Vec<(usize, Element)> {
        x.iter().map(|e| self.key(e)).collect()
    }

    /// One entry per letter of a positive word.
    pub fn initial(&self, w: &[Letter]) -> Vec<Entry> {
        w.iter()
            .map(|&l| (self.node.side_of(self.table, l), vec![l]))
            .collect()
    }

    fn bracket(&self, side: Side, x: &[Letter]) -> Vec<Entry> {
        let (g, h) = self.node.child(side).strip_right(self.table, x, self.n);
        let mut out = Vec::new();
        if !g.is_empty() {
            out.push((side, g));
        }
        if !h.is_empty() {
            out.push((Side::One, h));
        }
        out
    }

    fn common_side(&self, a: &Entry, b: &Entry) -> Option<Side> {
        let (outer, other) = if !self.in_n(a) { (a, b) } else { (b, a) };
        let side = outer.0;
        self.support(&other.1)
            .is_subset(self.node.child(side).atoms)
            .then_some(side)
    }

    /// Every rule application that changes the sequence, with its result.
    pub fn applicable(&self, x: &[Entry]) -> Vec<(Rule, usize, Vec<Entry>)> {
        let mut out = Vec::new();
        for i in 0..x.len() {
            if i + 1 < x.len() {
                let (a, b) = (&x[i], &x[i + 1]);
                let (na, nb) = (self.in_n(a), self.in_n(b));
                if na && nb {
                    let prod = word::concat(&[&a.1, &b.1]);
                    out.push((Rule::C, i, self.splice(x, i, 2, vec![(Side::One, prod)])));
                } else if let Some(side) = self.common_side(a, b) {
                    let prod = word::concat(&[&a.1, &b.1]);
                    let rep = self.bracket(side, &prod);
                    if self.keys(&rep) != self.keys(&x[i..i + 2]) {
                        out.push((Rule::A, i, self.splice(x, i, 2, rep)));
                    }
                }
            }
            let e = &x[i];
            if !self.in_n(e) {
                let rep = self.bracket(e.0, &e.1);
                if rep.len() == 2 {
                    out.push((Rule::B, i, self.splice(x, i, 1, rep)));
                }
            }
        }
        out
    }

    fn splice(&self, x: &[Entry], i: usize, len: usize, rep: Vec<Entry>) -> Vec<Entry> {
        let mut y = x[..i].to_vec();
        y.extend(rep);
        y.extend_from_slice(&x[i + len..]);
        y
    }

    /// Reduces until no rule applies; `choose(k)` picks among `k` options.
    pub fn reduce_with<F: FnMut(usize) -> usize>(
        &self,
        mut x: Vec<Entry>,
        mut choose: F,
    ) -> Vec<Entry> {
        loop {
            let mut opts = self.applicable(&x);
            if opts.is_empty() {
                return x;
            }
            let k = choose(opts.len()) % opts.len();
            x = opts.swap_remove(k).2;
        }
    }

    /// The amalgam normal form read off an irreducible sequence.
    pub fn to_element(&self, x: &[Entry]) -> Element {
        let (_, _, shared) = self.node.children().unwrap();
        let mut factors = Vec::new();
        let mut tail = shared.monoid_element(self.table, &[]);
        for (i, e) in x.iter().enumerate() {
            if i + 1 == x.len() && self.in_n(e) {
                tail = shared.monoid_element(self.table, &e.1);
            } else {
                factors.push((e.0, self.node.child(e.0).monoid_element(self.table, &e.1)));
            }
        }
        Element::Amalgam {
            factors,
            tail: Box::new(tail),
        }
    }
}
