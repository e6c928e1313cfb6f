//! Garside leaves: discovery of the minimal Garside element, the table of
//! simple elements, greedy normal forms and lattice operations.
//!
//! Simple elements are indexed by `u16`, with `0` the identity, in shortlex
//! order of their canonical (shortlex-least) words. A monoid element is a
//! `Vec<u16>` in left greedy normal form without identity factors.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::oracle::{closure_set, shortlex_cmp, shortlex_min};
use crate::presentation::{ComplementPair, PresentationSpec, Relation};
use crate::word::{AtomId, AtomSet, Letter, SimpleId, SimpleTable, SimpleWord};

pub const NONE: u16 = u16::MAX;

/// Multiplication data for one orientation. The right-handed operations run
/// through the reversed view, where `prod[s][t]` is the product `t·s`.
#[derive(Clone, Debug)]
pub struct View {
    n: usize,
    prod: Vec<u16>,
    lquot: Vec<u16>,
    lgcd: Vec<u16>,
    comp: Vec<u16>,
}

impl View {
    #[inline]
    pub fn prod(&self, s: u16, t: u16) -> u16 {
        self.prod[s as usize * self.n + t as usize]
    }

    /// `u` with `s·u = t`, or `NONE` when `s` does not divide `t`.
    #[inline]
    pub fn lquot(&self, s: u16, t: u16) -> u16 {
        self.lquot[s as usize * self.n + t as usize]
    }

    #[inline]
    pub fn lgcd(&self, s: u16, t: u16) -> u16 {
        self.lgcd[s as usize * self.n + t as usize]
    }

    /// `∂s` with `s·∂s = δ`.
    #[inline]
    pub fn comp(&self, s: u16) -> u16 {
        self.comp[s as usize]
    }

    /// Rewrites a sequence of simples into greedy normal form.
    pub fn normalize(&self, v: &mut Vec<u16>) {
        loop {
            let mut changed = false;
            for i in 0..v.len().saturating_sub(1) {
                let (s, t) = (v[i], v[i + 1]);
                if t == 0 {
                    continue;
                }
                let x = self.lgcd(self.comp(s), t);
                if x != 0 {
                    v[i] = self.prod(s, x);
                    v[i + 1] = self.lquot(x, t);
                    changed = true;
                }
            }
            v.retain(|&s| s != 0);
            if !changed {
                break;
            }
        }
    }

    pub fn gcd(&self, a: &[u16], b: &[u16]) -> Vec<u16> {
        let mut out = Vec::new();
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while let (Some(&x), Some(&y)) = (a.first(), b.first()) {
            let s = self.lgcd(x, y);
            if s == 0 {
                break;
            }
            out.push(s);
            a = self.divide_simple(s, &a).expect("gcd divides");
            b = self.divide_simple(s, &b).expect("gcd divides");
        }
        self.normalize(&mut out);
        out
    }

    fn divide_simple(&self, s: u16, a: &[u16]) -> Option<Vec<u16>> {
        if s == 0 {
            return Some(a.to_vec());
        }
        let first = *a.first()?;
        let q = self.lquot(s, first);
        if q == NONE {
            return None;
        }
        let mut out = Vec::with_capacity(a.len());
        out.push(q);
        out.extend_from_slice(&a[1..]);
        self.normalize(&mut out);
        Some(out)
    }

    /// `x⁻¹a` when `x` divides `a`.
    pub fn divide(&self, x: &[u16], a: &[u16]) -> Option<Vec<u16>> {
        let mut cur = a.to_vec();
        for &s in x {
            cur = self.divide_simple(s, &cur)?;
        }
        Some(cur)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GroupNf {
    pub num: Vec<u16>,
    pub den: Vec<u16>,
}

impl GroupNf {
    pub fn is_identity(&self) -> bool {
        self.num.is_empty() && self.den.is_empty()
    }

    pub fn inverse(&self) -> GroupNf {
        GroupNf {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GarsideStructure {
    pub atoms: AtomSet,
    /// Canonical atom word of each simple, indexed by local id.
    pub words: Vec<Vec<AtomId>>,
    pub delta: u16,
    pub atom_length: Vec<usize>,
    fwd: View,
    rev: View,
    index: HashMap<Vec<AtomId>, u16>,
    atom_local: HashMap<AtomId, u16>,
    global: Vec<SimpleId>,
    local_of_global: HashMap<SimpleId, u16>,
}

/// Equality classes among `words`, keyed by their shortlex-least member.
fn classes_of(
    words: &HashSet<Vec<AtomId>>,
    relations: &[Relation],
    budget: usize,
) -> Result<HashMap<Vec<AtomId>, HashSet<Vec<AtomId>>>> {
    let mut done: HashSet<&Vec<AtomId>> = HashSet::new();
    let mut out = HashMap::new();
    let mut sorted: Vec<&Vec<AtomId>> = words.iter().collect();
    sorted.sort_by(|a, b| shortlex_cmp(a, b));
    for w in sorted {
        if done.contains(w) {
            continue;
        }
        let cls = closure_set(w, relations, budget)?;
        for m in &cls {
            if let Some(k) = words.get(m) {
                done.insert(k);
            }
        }
        out.insert(shortlex_min(&cls), cls);
    }
    Ok(out)
}

/// Divisor sets of the element represented by `g`, as canonical words:
/// left divisors, right divisors and factors.
pub type DivisorSets = (
    BTreeSet<Vec<AtomId>>,
    BTreeSet<Vec<AtomId>>,
    BTreeSet<Vec<AtomId>>,
);

pub fn divisors(g: &[AtomId], relations: &[Relation], budget: usize) -> Result<DivisorSets> {
    let cl = closure_set(g, relations, budget)?;
    let (l, r, f) = divisor_classes(&cl, relations, budget, true)?;
    let keys = |m: HashMap<Vec<AtomId>, HashSet<Vec<AtomId>>>| m.into_keys().collect();
    Ok((keys(l), keys(r), keys(f.unwrap_or_default())))
}

type Classes = HashMap<Vec<AtomId>, HashSet<Vec<AtomId>>>;

fn divisor_classes(
    closure: &HashSet<Vec<AtomId>>,
    relations: &[Relation],
    budget: usize,
    with_factors: bool,
) -> Result<(Classes, Classes, Option<Classes>)> {
    let mut pre = HashSet::new();
    let mut suf = HashSet::new();
    let mut inf = HashSet::new();
    for w in closure {
        for i in 0..=w.len() {
            pre.insert(w[..i].to_vec());
            suf.insert(w[i..].to_vec());
            if with_factors {
                for j in i..=w.len() {
                    inf.insert(w[i..j].to_vec());
                }
            }
        }
    }
    let l = classes_of(&pre, relations, budget)?;
    let r = classes_of(&suf, relations, budget)?;
    let f = if with_factors {
        Some(classes_of(&inf, relations, budget)?)
    } else {
        None
    };
    Ok((l, r, f))
}

/// Searches words over `x` in length-lexicographic order for the first
/// balanced element whose divisors contain every atom of `x`.
pub fn find_minimal_garside(
    spec: &PresentationSpec,
    cp: &ComplementPair,
    x: AtomSet,
    max_word_length: usize,
    budget: usize,
) -> Result<GarsideStructure> {
    if !cp.is_complete_on(x) {
        return Err(Error::IncompleteGraph(x.display(&spec.atoms).to_string()));
    }
    let relations = spec.relations_within(x);
    let alphabet = x.to_vec();
    let mut layer: Vec<Vec<AtomId>> = vec![Vec::new()];
    for len in 0..=max_word_length {
        if len > 0 {
            layer = layer
                .iter()
                .flat_map(|w| {
                    alphabet.iter().map(move |&a| {
                        let mut v = w.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
        for cand in &layer {
            let cl = closure_set(cand, &relations, budget)?;
            if shortlex_min(&cl) != *cand {
                continue;
            }
            let firsts: AtomSet = cl.iter().filter_map(|w| w.first().copied()).collect();
            let lasts: AtomSet = cl.iter().filter_map(|w| w.last().copied()).collect();
            if firsts != x || lasts != x {
                continue;
            }
            let (left, right, _) = divisor_classes(&cl, &relations, budget, false)?;
            let lk: BTreeSet<&Vec<AtomId>> = left.keys().collect();
            let rk: BTreeSet<&Vec<AtomId>> = right.keys().collect();
            if lk == rk {
                return GarsideStructure::from_classes(x, cand.clone(), left);
            }
        }
    }
    Err(Error::SearchExhausted(max_word_length))
}

impl GarsideStructure {
    fn from_classes(x: AtomSet, delta_word: Vec<AtomId>, classes: Classes) -> Result<Self> {
        let mut entries: Vec<(Vec<AtomId>, HashSet<Vec<AtomId>>)> = classes.into_iter().collect();
        entries.sort_by(|a, b| shortlex_cmp(&a.0, &b.0));
        let n = entries.len();
        if n >= NONE as usize {
            return Err(Error::InvalidInput("too many simple elements".into()));
        }
        let mut index = HashMap::new();
        let mut words = Vec::with_capacity(n);
        let mut atom_length = Vec::with_capacity(n);
        for (i, (canon, members)) in entries.into_iter().enumerate() {
            atom_length.push(members.iter().map(Vec::len).max().unwrap_or(0));
            for m in members {
                index.insert(m, i as u16);
            }
            words.push(canon);
        }
        let delta = index[&delta_word];
        let mut prod = vec![NONE; n * n];
        for s in 0..n {
            for t in 0..n {
                let mut w = words[s].clone();
                w.extend_from_slice(&words[t]);
                if let Some(&p) = index.get(&w) {
                    prod[s * n + t] = p;
                }
            }
        }
        let prod_rev: Vec<u16> = (0..n * n).map(|i| prod[(i % n) * n + i / n]).collect();
        let name = format!("{x:?}");
        let fwd = View::build(n, prod, delta, &atom_length, &name)?;
        let rev = View::build(n, prod_rev, delta, &atom_length, &name)?;
        let atom_local = x.iter().map(|a| (a, index[&vec![a]])).collect();
        Ok(GarsideStructure {
            atoms: x,
            words,
            delta,
            atom_length,
            fwd,
            rev,
            index,
            atom_local,
            global: Vec::new(),
            local_of_global: HashMap::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn fwd(&self) -> &View {
        &self.fwd
    }

    pub fn rev(&self) -> &View {
        &self.rev
    }

    pub fn delta_word(&self) -> &[AtomId] {
        &self.words[self.delta as usize]
    }

    pub fn left_divides(&self, s: u16, t: u16) -> bool {
        self.fwd.lquot(s, t) != NONE
    }

    pub fn right_divides(&self, s: u16, t: u16) -> bool {
        self.rev.lquot(s, t) != NONE
    }

    pub fn product(&self, s: u16, t: u16) -> Option<u16> {
        Some(self.fwd.prod(s, t)).filter(|&p| p != NONE)
    }

    /// Local id of the simple represented by an atom word, if it is simple.
    pub fn simple_of(&self, w: &[AtomId]) -> Option<u16> {
        self.index.get(w).copied()
    }

    pub fn support(&self, s: u16) -> AtomSet {
        self.words[s as usize].iter().copied().collect()
    }

    /// Registers every simple in the global table.
    pub fn register(&mut self, table: &mut SimpleTable) {
        self.global = self
            .words
            .iter()
            .map(|w| {
                if w.is_empty() {
                    SimpleId(u32::MAX)
                } else {
                    table.register(w.clone())
                }
            })
            .collect();
        self.local_of_global = self
            .global
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &g)| (g, i as u16))
            .collect();
    }

    pub fn global(&self, s: u16) -> SimpleId {
        self.global[s as usize]
    }

    pub fn word_of(&self, a: &[u16]) -> Vec<AtomId> {
        a.iter()
            .flat_map(|&s| self.words[s as usize].iter().copied())
            .collect()
    }

    pub fn from_atoms(&self, w: &[AtomId]) -> Vec<u16> {
        let mut v: Vec<u16> = w.iter().map(|a| self.atom_local[a]).collect();
        self.fwd.normalize(&mut v);
        v
    }

    /// Converts global letters to local signed simples; letters unknown to
    /// this leaf are expanded into atoms.
    pub fn localize(&self, table: &SimpleTable, w: &[Letter]) -> Vec<(u16, bool)> {
        let mut out = Vec::with_capacity(w.len());
        for l in w {
            if let Some(&s) = self.local_of_global.get(&l.simple) {
                out.push((s, l.inverse));
            } else {
                let atoms = table.word(l.simple);
                if l.inverse {
                    out.extend(atoms.iter().rev().map(|a| (self.atom_local[a], true)));
                } else {
                    out.extend(atoms.iter().map(|a| (self.atom_local[a], false)));
                }
            }
        }
        out
    }

    pub fn is_local_letter(&self, table: &SimpleTable, l: Letter) -> bool {
        self.local_of_global.contains_key(&l.simple)
            || table.support(l.simple).is_subset(self.atoms)
    }

    pub fn mul(&self, a: &[u16], b: &[u16]) -> Vec<u16> {
        let mut v = a.to_vec();
        v.extend_from_slice(b);
        self.fwd.normalize(&mut v);
        v
    }

    pub fn delta_power(&self, k: usize) -> Vec<u16> {
        vec![self.delta; k]
    }

    pub fn to_rev(&self, a: &[u16]) -> Vec<u16> {
        let mut v: Vec<u16> = a.iter().rev().copied().collect();
        self.rev.normalize(&mut v);
        v
    }

    pub fn from_rev(&self, r: &[u16]) -> Vec<u16> {
        let mut v: Vec<u16> = r.iter().rev().copied().collect();
        self.fwd.normalize(&mut v);
        v
    }

    pub fn gcd_l(&self, a: &[u16], b: &[u16]) -> Vec<u16> {
        self.fwd.gcd(a, b)
    }

    pub fn gcd_r(&self, a: &[u16], b: &[u16]) -> Vec<u16> {
        self.from_rev(&self.rev.gcd(&self.to_rev(a), &self.to_rev(b)))
    }

    /// `x⁻¹a` when `x ≼_L a`.
    pub fn left_quotient(&self, x: &[u16], a: &[u16]) -> Option<Vec<u16>> {
        self.fwd.divide(x, a)
    }

    /// `a·x⁻¹` when `x` right-divides `a`.
    pub fn right_quotient(&self, a: &[u16], x: &[u16]) -> Option<Vec<u16>> {
        let q = self.rev.divide(&self.to_rev(x), &self.to_rev(a))?;
        Some(self.from_rev(&q))
    }

    pub fn left_divides_elem(&self, x: &[u16], a: &[u16]) -> bool {
        self.left_quotient(x, a).is_some()
    }

    pub fn right_divides_elem(&self, x: &[u16], a: &[u16]) -> bool {
        self.right_quotient(a, x).is_some()
    }

    /// Least common right multiple `a ∨_L b`.
    pub fn lcm_l(&self, a: &[u16], b: &[u16]) -> Vec<u16> {
        let k = a.len().max(b.len());
        let d = self.delta_power(k);
        let ca = self.left_quotient(a, &d).expect("a divides Δ^k");
        let cb = self.left_quotient(b, &d).expect("b divides Δ^k");
        let g = self.gcd_r(&ca, &cb);
        self.right_quotient(&d, &g).expect("g divides Δ^k")
    }

    /// Least common left multiple `a ∨_R b`.
    pub fn lcm_r(&self, a: &[u16], b: &[u16]) -> Vec<u16> {
        let k = a.len().max(b.len());
        let d = self.delta_power(k);
        let ca = self.right_quotient(&d, a).expect("a divides Δ^k");
        let cb = self.right_quotient(&d, b).expect("b divides Δ^k");
        let g = self.gcd_l(&ca, &cb);
        self.left_quotient(&g, &d).expect("g divides Δ^k")
    }

    pub fn group_reduce(&self, num: Vec<u16>, den: Vec<u16>) -> GroupNf {
        let g = self.gcd_r(&num, &den);
        if g.is_empty() {
            return GroupNf { num, den };
        }
        GroupNf {
            num: self.right_quotient(&num, &g).unwrap(),
            den: self.right_quotient(&den, &g).unwrap(),
        }
    }

    /// `g·x` for a monoid element `x`.
    pub fn group_mul_pos(&self, g: &GroupNf, x: &[u16]) -> GroupNf {
        if x.is_empty() {
            return g.clone();
        }
        if g.den.is_empty() {
            return GroupNf {
                num: self.mul(&g.num, x),
                den: Vec::new(),
            };
        }
        let l = self.lcm_l(&g.den, x);
        let c = self.left_quotient(&g.den, &l).unwrap();
        let d = self.left_quotient(x, &l).unwrap();
        self.group_reduce(self.mul(&g.num, &c), d)
    }

    /// `g·x⁻¹` for a monoid element `x`.
    pub fn group_mul_neg(&self, g: &GroupNf, x: &[u16]) -> GroupNf {
        if x.is_empty() {
            return g.clone();
        }
        self.group_reduce(g.num.clone(), self.mul(x, &g.den))
    }

    pub fn group_mul(&self, g: &GroupNf, h: &GroupNf) -> GroupNf {
        let t = self.group_mul_pos(g, &h.num);
        self.group_mul_neg(&t, &h.den)
    }

    pub fn group_from_local(&self, w: &[(u16, bool)]) -> GroupNf {
        let mut g = GroupNf::default();
        for &(s, inv) in w {
            g = if inv {
                self.group_mul_neg(&g, &[s])
            } else {
                self.group_mul_pos(&g, &[s])
            };
        }
        g
    }

    /// Right normal form of a signed atom word, `(atom, inverse)` pairs.
    pub fn group_nf(&self, w: &[(AtomId, bool)]) -> GroupNf {
        let local: Vec<(u16, bool)> = w.iter().map(|&(a, i)| (self.atom_local[&a], i)).collect();
        self.group_from_local(&local)
    }

    pub fn simple_length(&self, g: &GroupNf) -> usize {
        g.num.len() + g.den.len()
    }

    pub fn atom_len(&self, a: &[u16]) -> usize {
        a.iter().map(|&s| self.atom_length[s as usize]).sum()
    }

    /// Canonical signed word `a_p⋯a_1·b_1⁻¹⋯b_q⁻¹` built from right greedy
    /// factorizations of numerator and denominator.
    pub fn right_greedy_word(&self, g: &GroupNf) -> SimpleWord {
        let mut out: SimpleWord = self
            .to_rev(&g.num)
            .iter()
            .rev()
            .map(|&s| Letter::pos(self.global(s)))
            .collect();
        out.extend(
            self.to_rev(&g.den)
                .iter()
                .map(|&s| Letter::neg(self.global(s))),
        );
        out
    }

    pub fn global_word(&self, a: &[u16]) -> Vec<SimpleId> {
        a.iter().map(|&s| self.global(s)).collect()
    }

    /// Text block: δ, the simples in order, and both divisibility tables.
    pub fn to_text(&self, names: &[String]) -> String {
        let fmt = |w: &[AtomId]| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.iter()
                    .map(|&a| names[a].as_str())
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        };
        let mut out = String::new();
        let _ = writeln!(out, "delta: {}", fmt(self.delta_word()));
        let _ = writeln!(out, "simples: {}", self.len());
        for w in &self.words {
            let _ = writeln!(out, "{}", fmt(w));
        }
        for (title, view) in [("left", &self.fwd), ("right", &self.rev)] {
            let _ = writeln!(out, "{title}:");
            for s in 0..self.len() as u16 {
                let row: String = (0..self.len() as u16)
                    .map(|t| if view.lquot(s, t) != NONE { '1' } else { '0' })
                    .collect();
                let _ = writeln!(out, "{row}");
            }
        }
        out
    }

    /// Rebuilds a structure from [`to_text`](Self::to_text) output; the
    /// stored tables are checked against the recomputed ones.
    pub fn from_text(
        text: &str,
        spec: &PresentationSpec,
        budget: usize,
    ) -> Result<GarsideStructure> {
        let bad = |m: &str| Error::InvalidInput(format!("garside cache: {m}"));
        let mut lines = text.lines();
        let delta_line = lines.next().ok_or_else(|| bad("empty"))?;
        let delta_text = delta_line
            .strip_prefix("delta:")
            .ok_or_else(|| bad("missing delta"))?
            .trim();
        let parse_word = |t: &str| -> Result<Vec<AtomId>> {
            if t == "1" {
                return Ok(Vec::new());
            }
            t.split_whitespace().map(|a| spec.atom_id(a)).collect()
        };
        let delta_word = parse_word(delta_text)?;
        let count: usize = lines
            .next()
            .and_then(|l| l.strip_prefix("simples:"))
            .and_then(|c| c.trim().parse().ok())
            .ok_or_else(|| bad("missing simples count"))?;
        let words: Vec<Vec<AtomId>> = (0..count)
            .map(|_| parse_word(lines.next().unwrap_or("").trim()))
            .collect::<Result<_>>()?;
        let x: AtomSet = words.iter().flatten().copied().collect();
        let relations = spec.relations_within(x);
        let cl = closure_set(&delta_word, &relations, budget)?;
        let (left, _, _) = divisor_classes(&cl, &relations, budget, false)?;
        let gs = GarsideStructure::from_classes(x, delta_word, left)?;
        if gs.words != words {
            return Err(bad("simple list does not match"));
        }
        if gs.to_text(&spec.atoms) != text {
            return Err(bad("tables do not match"));
        }
        Ok(gs)
    }
}

impl View {
    fn build(
        n: usize,
        prod: Vec<u16>,
        delta: u16,
        atom_length: &[usize],
        name: &str,
    ) -> Result<View> {
        let mut lquot = vec![NONE; n * n];
        for s in 0..n {
            for u in 0..n {
                let p = prod[s * n + u];
                if p != NONE {
                    lquot[s * n + p as usize] = u as u16;
                }
            }
        }
        let mut lgcd = vec![0u16; n * n];
        for s in 0..n {
            for t in s..n {
                let common: Vec<usize> = (0..n)
                    .filter(|&u| lquot[u * n + s] != NONE && lquot[u * n + t] != NONE)
                    .collect();
                let best = *common
                    .iter()
                    .max_by_key(|&&u| (atom_length[u], std::cmp::Reverse(u)))
                    .expect("identity divides everything");
                if common.iter().any(|&c| lquot[c * n + best] == NONE) {
                    return Err(Error::NotALattice(name.to_string()));
                }
                lgcd[s * n + t] = best as u16;
                lgcd[t * n + s] = best as u16;
            }
        }
        let comp: Vec<u16> = (0..n).map(|s| lquot[s * n + delta as usize]).collect();
        if comp.contains(&NONE) {
            return Err(Error::NotALattice(name.to_string()));
        }
        Ok(View {
            n,
            prod,
            lquot,
            lgcd,
            comp,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_BUDGET;
    use crate::presentation::{derive_complements, parse_presentation};
    use crate::presets;

    pub(crate) fn leaf(text: &str, x: &[AtomId]) -> (PresentationSpec, GarsideStructure) {
        let spec = parse_presentation(text).unwrap();
        let cp = derive_complements(&spec).unwrap();
        let x: AtomSet = x.iter().copied().collect();
        let n = x.len();
        let gs = find_minimal_garside(&spec, &cp, x, 2 * n * n, DEFAULT_BUDGET).unwrap();
        (spec, gs)
    }

    #[test]
    fn b3_delta_and_simples() {
        let (_, gs) = leaf(presets::B3, &[0, 1]);
        assert_eq!(gs.delta_word(), &[0, 1, 0]);
        assert_eq!(
            gs.words,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![0, 1],
                vec![1, 0],
                vec![0, 1, 0]
            ]
        );
    }

    #[test]
    fn single_atom_leaf() {
        let (_, gs) = leaf(presets::FREE2, &[0]);
        assert_eq!(gs.delta_word(), &[0]);
        assert_eq!(gs.len(), 2);
    }

    #[test]
    fn b4_delta() {
        let (_, gs) = leaf(presets::B4, &[0, 1, 2]);
        assert_eq!(gs.delta_word(), &[0, 1, 0, 2, 1, 0]);
        assert_eq!(gs.len(), 24);
    }

    #[test]
    fn incomplete_graph_rejected() {
        let spec = parse_presentation(presets::FREE2).unwrap();
        let cp = derive_complements(&spec).unwrap();
        assert!(matches!(
            find_minimal_garside(&spec, &cp, AtomSet::full(2), 8, DEFAULT_BUDGET),
            Err(Error::IncompleteGraph(_))
        ));
    }

    #[test]
    fn search_bound() {
        let spec = parse_presentation(presets::B3).unwrap();
        let cp = derive_complements(&spec).unwrap();
        assert!(matches!(
            find_minimal_garside(&spec, &cp, AtomSet::full(2), 2, DEFAULT_BUDGET),
            Err(Error::SearchExhausted(2))
        ));
    }

    #[test]
    fn divisor_examples() {
        let r = parse_presentation(presets::B3).unwrap().relations;
        let (l, rr, f) = divisors(&[0, 1, 0], &r, DEFAULT_BUDGET).unwrap();
        let expect: BTreeSet<Vec<AtomId>> = [
            vec![],
            vec![0],
            vec![1],
            vec![0, 1],
            vec![1, 0],
            vec![0, 1, 0],
        ]
        .into();
        assert_eq!(l, expect);
        assert_eq!(rr, expect);
        assert_eq!(f, expect);
        let (l, _, _) = divisors(&[], &r, DEFAULT_BUDGET).unwrap();
        assert_eq!(l, BTreeSet::from([vec![]]));
        let (l, _, _) = divisors(&[0, 0], &r, DEFAULT_BUDGET).unwrap();
        assert_eq!(l, BTreeSet::from([vec![], vec![0], vec![0, 0]]));
    }

    #[test]
    fn greedy_examples() {
        let (_, gs) = leaf(presets::B3, &[0, 1]);
        let abab = gs.from_atoms(&[0, 1, 0, 1]);
        assert_eq!(
            abab.iter()
                .map(|&s| gs.words[s as usize].clone())
                .collect::<Vec<_>>(),
            vec![vec![0, 1, 0], vec![1]]
        );
        assert_eq!(gs.from_atoms(&[0, 0]).len(), 2);
        assert!(gs.from_atoms(&[]).is_empty());
    }

    #[test]
    fn lattice_examples() {
        let (_, gs) = leaf(presets::B3, &[0, 1]);
        let a = gs.from_atoms(&[0]);
        let b = gs.from_atoms(&[1]);
        let ab = gs.from_atoms(&[0, 1]);
        assert_eq!(gs.word_of(&gs.lcm_l(&a, &b)), vec![0, 1, 0]);
        assert_eq!(gs.word_of(&gs.lcm_r(&a, &b)), vec![0, 1, 0]);
        assert_eq!(gs.gcd_l(&ab, &a), a);
        assert_eq!(gs.gcd_r(&ab, &a), vec![]);
        assert_eq!(gs.gcd_l(&ab, &[]), vec![]);
        assert_eq!(gs.lcm_l(&ab, &[]), ab);
    }

    #[test]
    fn group_examples() {
        let (_, gs) = leaf(presets::B3, &[0, 1]);
        let g = gs.group_nf(&[(0, false), (1, true)]);
        assert_eq!((gs.word_of(&g.num), gs.word_of(&g.den)), (vec![0], vec![1]));
        let g = gs.group_nf(&[(0, false), (1, false), (0, true)]);
        assert_eq!(
            (gs.word_of(&g.num), gs.word_of(&g.den)),
            (vec![0, 1], vec![0])
        );
        assert_eq!(gs.simple_length(&g), 2);
        let g = gs.group_nf(&[(0, false), (0, true)]);
        assert!(g.is_identity());
        assert_eq!(gs.simple_length(&g), 0);
        let g = gs.group_nf(&[(0, false), (1, false), (0, false), (1, false)]);
        assert_eq!(gs.simple_length(&g), 2);
        // b a b a⁻¹ = a b
        let g = gs.group_nf(&[(1, false), (0, false), (1, false), (0, true)]);
        assert_eq!(g.den, vec![]);
        assert_eq!(gs.word_of(&g.num), vec![0, 1]);
    }

    #[test]
    fn text_round_trip() {
        let (spec, gs) = leaf(presets::B3, &[0, 1]);
        let text = gs.to_text(&spec.atoms);
        assert!(text.starts_with("delta: a b a\nsimples: 6\n1\na\n"));
        let back = GarsideStructure::from_text(&text, &spec, DEFAULT_BUDGET).unwrap();
        assert_eq!(back.words, gs.words);
    }
}
