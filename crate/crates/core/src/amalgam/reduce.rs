//! Word-level coset representatives through elementary reductions of
//! pre-expressions. This is an independent route to the same canonical
//! words as [`FcTree::coset_rep`].

use std::collections::HashMap;

use super::{FcTree, NodeKind, Side};
use crate::word::{self, AtomSet, Letter, SimpleTable, SimpleWord};

type Cache = HashMap<(usize, u64, SimpleWord), SimpleWord>;

/// Pre-expression `((u_1, …, u_ℓ, v), (ε(1), …, ε(ℓ)))`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PreExpression {
    pub us: Vec<(Side, SimpleWord)>,
    pub v: SimpleWord,
}

impl PreExpression {
    pub fn flatten(&self) -> SimpleWord {
        let mut w = SimpleWord::new();
        for (_, u) in &self.us {
            w.extend_from_slice(u);
        }
        w.extend_from_slice(&self.v);
        w
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionType {
    I,
    II,
    III,
    IV,
    V,
    /// With no factors left, reduce the tail modulo `P ∩ N`.
    VI,
}

impl FcTree {
    /// Canonical word of the coset `w̄·G(P)`, by exhaustive reduction.
    pub fn m_star(&self, table: &SimpleTable, w: &[Letter], p: AtomSet) -> SimpleWord {
        let mut cache = Cache::new();
        self.m_star_cached(table, w, p, &mut cache)
    }

    /// Like [`m_star`](Self::m_star), also returning the reduction trace at
    /// this node.
    pub fn m_star_traced(
        &self,
        table: &SimpleTable,
        w: &[Letter],
        p: AtomSet,
    ) -> (SimpleWord, Vec<ReductionType>) {
        let mut cache = Cache::new();
        let p = p.intersection(self.atoms);
        if self.is_leaf() {
            return (self.m_star_cached(table, w, p, &mut cache), Vec::new());
        }
        let mut pre = self.initial(table, w);
        let mut trace = Vec::new();
        while let Some(t) = self.reduce_step(table, &mut pre, p, &mut cache) {
            trace.push(t);
        }
        (pre.flatten(), trace)
    }

    fn m_star_cached(
        &self,
        table: &SimpleTable,
        w: &[Letter],
        p: AtomSet,
        cache: &mut Cache,
    ) -> SimpleWord {
        let p = p.intersection(self.atoms);
        if let NodeKind::Leaf(leaf) = &self.kind {
            return leaf
                .context(p)
                .m_n_star(&leaf.gs, &leaf.gs.localize(table, w));
        }
        let key = (self as *const FcTree as usize, p.bits(), w.to_vec());
        if let Some(r) = cache.get(&key) {
            return r.clone();
        }
        let mut pre = self.initial(table, w);
        while self.reduce_step(table, &mut pre, p, cache).is_some() {}
        let out = pre.flatten();
        cache.insert(key, out.clone());
        out
    }

    /// W_0: one factor per atom letter, atoms of the left child on side 1.
    pub fn initial(&self, table: &SimpleTable, w: &[Letter]) -> PreExpression {
        let (left, _, _) = self.children().expect("inner node");
        let us = table
            .expand(w)
            .into_iter()
            .map(|l| {
                let a = table.word(l.simple)[0];
                let side = if left.atoms.contains(a) {
                    Side::One
                } else {
                    Side::Two
                };
                (side, vec![l])
            })
            .collect();
        PreExpression {
            us,
            v: SimpleWord::new(),
        }
    }

    /// Applies the first applicable elementary reduction, scanning types in
    /// order and positions left to right.
    fn reduce_step(
        &self,
        table: &SimpleTable,
        pre: &mut PreExpression,
        p: AtomSet,
        cache: &mut Cache,
    ) -> Option<ReductionType> {
        let (_, _, shared) = self.children().expect("inner node");
        let n = shared.atoms;
        let l = pre.us.len();

        if let Some(i) = (0..l.saturating_sub(1)).find(|&i| pre.us[i].0 == pre.us[i + 1].0) {
            let (_, next) = pre.us.remove(i + 1);
            pre.us[i].1.extend(next);
            return Some(ReductionType::I);
        }

        for i in 0..l {
            let (side, u) = &pre.us[i];
            let child = self.child(*side);
            if child.m_star_cached(table, u, n, cache).is_empty() {
                let canon = child.m_star_cached(table, u, AtomSet::EMPTY, cache);
                let atoms = table.expand(&canon);
                pre.us.remove(i);
                self.prepend(pre, i, atoms);
                return Some(ReductionType::II);
            }
        }

        for i in 0..l {
            let (side, u) = &pre.us[i];
            let child = self.child(*side);
            let c = child.m_star_cached(table, u, n, cache);
            if !c.is_empty() && &c != u {
                let vi = word::concat(&[&word::inverse(&c), u]);
                let canon = child.m_star_cached(table, &vi, AtomSet::EMPTY, cache);
                let atoms = table.expand(&canon);
                pre.us[i].1 = c;
                self.prepend(pre, i + 1, atoms);
                return Some(ReductionType::III);
            }
        }

        let v2 = shared.m_star_cached(table, &pre.v, AtomSet::EMPTY, cache);
        if v2 != pre.v {
            pre.v = v2;
            return Some(ReductionType::IV);
        }

        if let Some((side, u)) = pre.us.last() {
            let child = self.child(*side);
            let uv = word::concat(&[u, &pre.v]);
            let u2 = child.m_star_cached(table, &uv, p.intersection(child.atoms), cache);
            let before = child.m_star_cached(table, &uv, AtomSet::EMPTY, cache);
            let after = child.m_star_cached(table, &u2, AtomSet::EMPTY, cache);
            if before != after {
                pre.us.last_mut().unwrap().1 = u2;
                pre.v.clear();
                return Some(ReductionType::V);
            }
        } else if !p.intersection(n).is_empty() {
            let v2 = shared.m_star_cached(table, &pre.v, p.intersection(n), cache);
            let before = shared.m_star_cached(table, &pre.v, AtomSet::EMPTY, cache);
            let after = shared.m_star_cached(table, &v2, AtomSet::EMPTY, cache);
            if before != after {
                pre.v = v2;
                return Some(ReductionType::VI);
            }
        }
        None
    }

    /// Puts `atoms` in front of factor `i`, or of the tail when `i = ℓ`.
    fn prepend(&self, pre: &mut PreExpression, i: usize, atoms: SimpleWord) {
        if i < pre.us.len() {
            let mut w = atoms;
            w.extend_from_slice(&pre.us[i].1);
            pre.us[i].1 = w;
        } else {
            let mut w = atoms;
            w.extend_from_slice(&pre.v);
            pre.v = w;
        }
    }
}
