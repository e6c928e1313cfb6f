//! FC trees and normal forms relative to them.
//!
//! Every node answers one question: given a signed word `w` over simple
//! elements of its monoid and a parabolic `P`, return the canonical word of
//! the minimal representative of `w̄·G(P)` ([`FcTree::coset_rep`]). With `P`
//! trivial this is a canonical form for the group element itself.

pub mod confluence;
pub mod reduce;

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use crate::coset::CosetContext;
use crate::error::{Error, Result};
use crate::garside::{find_minimal_garside, GarsideStructure};
use crate::parabolic::{is_parabolic, subsets_ordered};
use crate::presentation::{ComplementPair, PresentationSpec};
use crate::word::{self, AtomSet, Letter, SimpleTable, SimpleWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn index(self) -> usize {
        match self {
            Side::One => 1,
            Side::Two => 2,
        }
    }
}

#[derive(Debug)]
pub struct Leaf {
    pub gs: Arc<GarsideStructure>,
    contexts: HashMap<AtomSet, CosetContext>,
}

impl Leaf {
    pub fn context(&self, p: AtomSet) -> &CosetContext {
        self.contexts
            .get(&p)
            .unwrap_or_else(|| panic!("{p:?} is not parabolic in leaf {:?}", self.gs.atoms))
    }
}

#[derive(Debug)]
pub enum NodeKind {
    Leaf(Leaf),
    Inner {
        left: Box<FcTree>,
        right: Box<FcTree>,
        /// Tree for `N = X1 ∩ X2`, obtained from the left child by
        /// intersecting every label with N.
        shared: Box<FcTree>,
    },
}

#[derive(Debug)]
pub struct FcTree {
    pub atoms: AtomSet,
    pub kind: NodeKind,
}

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    /// Bound on candidate Garside words; `None` means `2·|X|²` per leaf.
    pub max_garside_len: Option<usize>,
    pub oracle_budget: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_garside_len: None,
            oracle_budget: crate::oracle::DEFAULT_BUDGET,
        }
    }
}

struct Builder<'a> {
    spec: &'a PresentationSpec,
    cp: &'a ComplementPair,
    opts: BuildOptions,
    table: &'a mut SimpleTable,
    leaves: HashMap<AtomSet, Arc<GarsideStructure>>,
}

impl Builder<'_> {
    fn leaf(&mut self, x: AtomSet) -> Result<FcTree> {
        let gs = match self.leaves.get(&x) {
            Some(gs) => gs.clone(),
            None => {
                let bound = self.opts.max_garside_len.unwrap_or(2 * x.len() * x.len());
                let mut gs =
                    find_minimal_garside(self.spec, self.cp, x, bound, self.opts.oracle_budget)?;
                gs.register(self.table);
                let gs = Arc::new(gs);
                self.leaves.insert(x, gs.clone());
                gs
            }
        };
        let mut contexts = HashMap::new();
        for p in subsets_ordered(x) {
            if is_parabolic(p, self.cp) {
                contexts.insert(p, CosetContext::new(&gs, p)?);
            }
        }
        Ok(FcTree {
            atoms: x,
            kind: NodeKind::Leaf(Leaf { gs, contexts }),
        })
    }

    fn build(&mut self, x: AtomSet) -> Result<FcTree> {
        if self.cp.is_complete_on(x) {
            return self.leaf(x);
        }
        let (x1, x2) = find_split(x, self.cp)
            .ok_or_else(|| Error::NoValidSplit(x.display(&self.spec.atoms).to_string()))?;
        let left = self.build(x1)?;
        let right = self.build(x2)?;
        let shared = self.restrict(&left, x1.intersection(x2))?;
        Ok(FcTree {
            atoms: x,
            kind: NodeKind::Inner {
                left: Box::new(left),
                right: Box::new(right),
                shared: Box::new(shared),
            },
        })
    }

    fn restrict(&mut self, t: &FcTree, n: AtomSet) -> Result<FcTree> {
        let y = t.atoms.intersection(n);
        match &t.kind {
            NodeKind::Leaf(_) => self.leaf(y),
            NodeKind::Inner {
                left,
                right,
                shared,
            } => {
                let l = self.restrict(left, n)?;
                let r = self.restrict(right, n)?;
                if r.atoms.is_subset(l.atoms) {
                    return Ok(l);
                }
                if l.atoms.is_subset(r.atoms) {
                    return Ok(r);
                }
                let s = self.restrict(shared, n)?;
                Ok(FcTree {
                    atoms: y,
                    kind: NodeKind::Inner {
                        left: Box::new(l),
                        right: Box::new(r),
                        shared: Box::new(s),
                    },
                })
            }
        }
    }
}

/// Intersection size, then the sorted atoms of each side.
type SplitKey = (usize, Vec<usize>, Vec<usize>);

/// Admissible split of `x` with the smallest intersection, ties broken by
/// the sorted atom lists of the two sides.
pub fn find_split(x: AtomSet, cp: &ComplementPair) -> Option<(AtomSet, AtomSet)> {
    let subsets = subsets_ordered(x);
    let mut best: Option<(SplitKey, (AtomSet, AtomSet))> = None;
    for &x1 in &subsets {
        if x1 == x || x1.is_empty() || !is_parabolic(x1, cp) {
            continue;
        }
        let rest = x.difference(x1);
        for &extra in &subsets_ordered(x1) {
            let x2 = rest.union(extra);
            if x2 == x || x1.lex_key() > x2.lex_key() || !is_parabolic(x2, cp) {
                continue;
            }
            let (only1, only2) = (x1.difference(x2), x2.difference(x1));
            if only1
                .iter()
                .any(|a| only2.iter().any(|b| cp.has_edge(a, b)))
            {
                continue;
            }
            let key = (x1.intersection(x2).len(), x1.lex_key(), x2.lex_key());
            if best.as_ref().is_none_or(|b| key < b.0) {
                best = Some((key, (x1, x2)));
            }
        }
    }
    best.map(|b| b.1)
}

pub fn build_fc_tree(
    spec: &PresentationSpec,
    cp: &ComplementPair,
    opts: BuildOptions,
    table: &mut SimpleTable,
) -> Result<FcTree> {
    let mut b = Builder {
        spec,
        cp,
        opts,
        table,
        leaves: HashMap::new(),
    };
    b.build(spec.all_atoms())
}

/// Canonical element relative to a node: right normal form at a leaf,
/// amalgam normal form at an inner node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Leaf {
        /// Left greedy factors of the numerator.
        numerator: Vec<word::SimpleId>,
        denominator: Vec<word::SimpleId>,
    },
    Amalgam {
        factors: Vec<(Side, Element)>,
        tail: Box<Element>,
    },
}

impl Element {
    pub fn is_identity(&self) -> bool {
        match self {
            Element::Leaf {
                numerator,
                denominator,
            } => numerator.is_empty() && denominator.is_empty(),
            Element::Amalgam { factors, tail } => factors.is_empty() && tail.is_identity(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Element::Leaf { denominator, .. } => denominator.is_empty(),
            Element::Amalgam { factors, tail } => {
                factors.iter().all(|(_, f)| f.is_positive()) && tail.is_positive()
            }
        }
    }

    /// Amalgam length ℓ_N; zero at a leaf.
    pub fn ell(&self) -> usize {
        match self {
            Element::Leaf { .. } => 0,
            Element::Amalgam { factors, .. } => factors.len(),
        }
    }

    /// A word representing the element.
    pub fn word(&self) -> SimpleWord {
        match self {
            Element::Leaf {
                numerator,
                denominator,
            } => {
                let mut w: SimpleWord = numerator.iter().map(|&s| Letter::pos(s)).collect();
                w.extend(denominator.iter().rev().map(|&s| Letter::neg(s)));
                w
            }
            Element::Amalgam { factors, tail } => {
                let mut w = SimpleWord::new();
                for (_, f) in factors {
                    w.extend(f.word());
                }
                w.extend(tail.word());
                w
            }
        }
    }

    pub fn display<'a>(&'a self, table: &'a SimpleTable) -> ElementDisplay<'a> {
        ElementDisplay { el: self, table }
    }
}

pub struct ElementDisplay<'a> {
    el: &'a Element,
    table: &'a SimpleTable,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.el {
            Element::Leaf { .. } => {
                let atoms = self.table.expand(&self.el.word());
                write!(f, "{}", self.table.format(&atoms))
            }
            Element::Amalgam { factors, tail } => {
                let mut s = String::from("(");
                for (i, (side, fac)) in factors.iter().enumerate() {
                    if i > 0 {
                        s.push_str(" | ");
                    }
                    let _ = write!(s, "{}:{}", side.index(), fac.display(self.table));
                }
                if !factors.is_empty() {
                    s.push(' ');
                }
                let _ = write!(s, "; {})", tail.display(self.table));
                f.write_str(&s)
            }
        }
    }
}

/// Group amalgam form in words: canonical factor words and tail word.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordForm {
    pub factors: Vec<(Side, SimpleWord)>,
    pub tail: SimpleWord,
}

impl WordForm {
    pub fn flatten(&self) -> SimpleWord {
        let mut w = SimpleWord::new();
        for (_, f) in &self.factors {
            w.extend_from_slice(f);
        }
        w.extend_from_slice(&self.tail);
        w
    }
}

impl FcTree {
    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, NodeKind::Leaf(_))
    }

    pub fn leaf(&self) -> Option<&Leaf> {
        match &self.kind {
            NodeKind::Leaf(l) => Some(l),
            NodeKind::Inner { .. } => None,
        }
    }

    pub fn children(&self) -> Option<(&FcTree, &FcTree, &FcTree)> {
        match &self.kind {
            NodeKind::Leaf(_) => None,
            NodeKind::Inner {
                left,
                right,
                shared,
            } => Some((left, right, shared)),
        }
    }

    /// The split intersection N at an inner node.
    pub fn shared_atoms(&self) -> Option<AtomSet> {
        self.children().map(|(_, _, s)| s.atoms)
    }

    pub fn child(&self, side: Side) -> &FcTree {
        let (l, r, _) = self.children().expect("inner node");
        match side {
            Side::One => l,
            Side::Two => r,
        }
    }

    pub fn side_of(&self, table: &SimpleTable, l: Letter) -> Side {
        let (left, _, _) = self.children().expect("inner node");
        if table.support(l.simple).is_subset(left.atoms) {
            Side::One
        } else {
            Side::Two
        }
    }

    pub fn leaf_count(&self) -> usize {
        match &self.kind {
            NodeKind::Leaf(_) => 1,
            NodeKind::Inner { left, right, .. } => left.leaf_count() + right.leaf_count(),
        }
    }

    pub fn leaves(&self) -> Vec<&Leaf> {
        match &self.kind {
            NodeKind::Leaf(l) => vec![l],
            NodeKind::Inner { left, right, .. } => {
                let mut v = left.leaves();
                v.extend(right.leaves());
                v
            }
        }
    }

    /// Canonical word of `m_{T,P}(w̄)`.
    pub fn coset_rep(&self, table: &SimpleTable, w: &[Letter], p: AtomSet) -> SimpleWord {
        let p = p.intersection(self.atoms);
        match &self.kind {
            NodeKind::Leaf(leaf) => {
                let local = leaf.gs.localize(table, w);
                let ctx = leaf.context(p);
                ctx.m_n_star(&leaf.gs, &local)
            }
            NodeKind::Inner { shared, .. } => {
                let mut form = self.group_form(table, w);
                if p.is_empty() {
                    return form.flatten();
                }
                loop {
                    let Some((side, g)) = form.factors.last().cloned() else {
                        return shared.coset_rep(table, &form.tail, p);
                    };
                    let child = self.child(side);
                    let x = child.coset_rep(table, &word::concat(&[&g, &form.tail]), p);
                    let c = child.coset_rep(table, &x, shared.atoms);
                    let single = form.factors.len() == 1;
                    form.factors.pop();
                    if c.is_empty() {
                        form.tail = self.to_shared(table, side, &x);
                        if single {
                            return form.flatten();
                        }
                    } else {
                        let rest = word::concat(&[&word::inverse(&c), &x]);
                        form.tail = self.to_shared(table, side, &rest);
                        form.factors.push((side, c));
                        return form.flatten();
                    }
                }
            }
        }
    }

    /// Canonical word in the shared tree of an element of G(N) given by a
    /// word over the `side` child.
    fn to_shared(&self, table: &SimpleTable, side: Side, x: &[Letter]) -> SimpleWord {
        let (_, _, shared) = self.children().expect("inner node");
        let inner = self.child(side).coset_rep(table, x, AtomSet::EMPTY);
        shared.coset_rep(table, &inner, AtomSet::EMPTY)
    }

    /// Group amalgam normal form with factors in the transversals given by
    /// the children's coset maps.
    pub fn group_form(&self, table: &SimpleTable, w: &[Letter]) -> WordForm {
        let mut form = WordForm::default();
        let n = self.shared_atoms().expect("inner node");
        let mut i = 0;
        while i < w.len() {
            let side = self.side_of(table, w[i]);
            let mut j = i + 1;
            while j < w.len() && self.side_of(table, w[j]) == side {
                j += 1;
            }
            let mut x = match form.factors.last() {
                Some((s, _)) if *s == side => form.factors.pop().unwrap().1,
                _ => SimpleWord::new(),
            };
            x.extend_from_slice(&form.tail);
            x.extend_from_slice(&w[i..j]);
            let c = self.child(side).coset_rep(table, &x, n);
            if c.is_empty() {
                form.tail = self.to_shared(table, side, &x);
            } else {
                let rest = word::concat(&[&word::inverse(&c), &x]);
                form.tail = self.to_shared(table, side, &rest);
                form.factors.push((side, c));
            }
            i = j;
        }
        form
    }

    /// Canonical element of the group.
    pub fn group_element(&self, table: &SimpleTable, w: &[Letter]) -> Element {
        match &self.kind {
            NodeKind::Leaf(leaf) => {
                let g = leaf.gs.group_from_local(&leaf.gs.localize(table, w));
                Element::Leaf {
                    numerator: leaf.gs.global_word(&g.num),
                    denominator: leaf.gs.global_word(&g.den),
                }
            }
            NodeKind::Inner { shared, .. } => {
                let form = self.group_form(table, w);
                Element::Amalgam {
                    factors: form
                        .factors
                        .iter()
                        .map(|(s, f)| (*s, self.child(*s).group_element(table, f)))
                        .collect(),
                    tail: Box::new(shared.group_element(table, &form.tail)),
                }
            }
        }
    }

    /// `[x]_P = (g', h)` for a positive word: `x = g'·h`, `h ∈ P` maximal.
    pub fn strip_right(
        &self,
        table: &SimpleTable,
        x: &[Letter],
        p: AtomSet,
    ) -> (SimpleWord, SimpleWord) {
        match &self.kind {
            NodeKind::Leaf(leaf) => {
                let gs = &leaf.gs;
                let local = gs.localize(table, x);
                debug_assert!(local.iter().all(|&(_, inv)| !inv));
                let mut g: Vec<u16> = local.iter().map(|&(s, _)| s).collect();
                gs.fwd().normalize(&mut g);
                let (rest, h) = leaf.context(p.intersection(self.atoms)).strip_right(gs, &g);
                let pos = |v: &[u16]| gs.global_word(v).into_iter().map(Letter::pos).collect();
                (pos(&rest), pos(&h))
            }
            NodeKind::Inner { .. } => {
                let g = self.coset_rep(table, x, p);
                let rest = word::concat(&[&word::inverse(&g), x]);
                let h = self.coset_rep(table, &rest, AtomSet::EMPTY);
                (g, h)
            }
        }
    }

    /// Amalgam normal form of a positive word (greedy form at a leaf).
    pub fn monoid_element(&self, table: &SimpleTable, w: &[Letter]) -> Element {
        match &self.kind {
            NodeKind::Leaf(_) => self.group_element(table, w),
            NodeKind::Inner { .. } => {
                let mut b = MonoidBuilder::default();
                let mut i = 0;
                while i < w.len() {
                    let side = self.side_of(table, w[i]);
                    let mut j = i + 1;
                    while j < w.len() && self.side_of(table, w[j]) == side {
                        j += 1;
                    }
                    b.push(self, table, side, &w[i..j]);
                    i = j;
                }
                b.finish(self, table)
            }
        }
    }

    /// Product of two monoid elements in amalgam form, pushing the second
    /// element's blocks through the first one's last factor and tail.
    pub fn amalgam_mul(&self, table: &SimpleTable, u: &Element, v: &Element) -> Element {
        match (&self.kind, u, v) {
            (
                NodeKind::Inner { .. },
                Element::Amalgam {
                    factors: uf,
                    tail: ut,
                },
                Element::Amalgam {
                    factors: vf,
                    tail: vt,
                },
            ) => {
                let mut b = MonoidBuilder {
                    factors: uf.iter().map(|(s, e)| (*s, e.word())).collect(),
                    tail: ut.word(),
                };
                for (s, e) in vf {
                    b.push(self, table, *s, &e.word());
                }
                b.push(self, table, Side::One, &vt.word());
                b.finish(self, table)
            }
            _ => self.monoid_element(table, &word::concat(&[&u.word(), &v.word()])),
        }
    }

    /// m_{T,P} applied to an element.
    pub fn m_t_p(&self, table: &SimpleTable, g: &Element, p: AtomSet) -> Element {
        let w = self.coset_rep(table, &g.word(), p);
        self.group_element(table, &w)
    }

    pub fn render(&self, names: &[String], table: &SimpleTable) -> String {
        let mut out = String::new();
        self.render_into(names, table, 0, "", &mut out);
        out
    }

    fn render_into(
        &self,
        names: &[String],
        table: &SimpleTable,
        depth: usize,
        label: &str,
        out: &mut String,
    ) {
        let pad = "  ".repeat(depth);
        match &self.kind {
            NodeKind::Leaf(l) => {
                let delta = table.format_atoms(l.gs.delta_word());
                let _ = writeln!(
                    out,
                    "{pad}{label}leaf {} delta = {} simples = {}",
                    self.atoms.display(names),
                    delta,
                    l.gs.len()
                );
            }
            NodeKind::Inner {
                left,
                right,
                shared,
            } => {
                let _ = writeln!(
                    out,
                    "{pad}{label}amalgam {} over N = {}",
                    self.atoms.display(names),
                    shared.atoms.display(names)
                );
                left.render_into(names, table, depth + 1, "1: ", out);
                right.render_into(names, table, depth + 1, "2: ", out);
            }
        }
    }
}

#[derive(Default)]
struct MonoidBuilder {
    factors: Vec<(Side, SimpleWord)>,
    tail: SimpleWord,
}

impl MonoidBuilder {
    fn push(&mut self, node: &FcTree, table: &SimpleTable, side: Side, u: &[Letter]) {
        if u.is_empty() {
            return;
        }
        let n = node.shared_atoms().expect("inner node");
        let mut x = match self.factors.last() {
            Some((s, _)) if *s == side => self.factors.pop().unwrap().1,
            _ => SimpleWord::new(),
        };
        x.extend_from_slice(&self.tail);
        x.extend_from_slice(u);
        let (g, h) = node.child(side).strip_right(table, &x, n);
        if !g.is_empty() {
            self.factors.push((side, g));
        }
        self.tail = h;
    }

    fn finish(self, node: &FcTree, table: &SimpleTable) -> Element {
        let (_, _, shared) = node.children().expect("inner node");
        Element::Amalgam {
            factors: self
                .factors
                .into_iter()
                .map(|(s, w)| (s, node.child(s).monoid_element(table, &w)))
                .collect(),
            tail: Box::new(shared.monoid_element(table, &self.tail)),
        }
    }
}

#[cfg(test)]
mod tests;
