//! Minimal coset representatives modulo a parabolic subgroup inside one
//! Garside leaf.

use std::collections::HashSet;

use crate::error::Result;
use crate::garside::{GarsideStructure, GroupNf};
use crate::parabolic::{parabolic_delta, strip_right};
use crate::word::{AtomSet, SimpleWord};

#[derive(Clone, Debug)]
pub struct CosetContext {
    pub n: AtomSet,
    /// Δ_N in greedy normal form (empty for the trivial subgroup).
    pub delta_n: Vec<u16>,
}

impl CosetContext {
    pub fn new(gs: &GarsideStructure, n: AtomSet) -> Result<Self> {
        Ok(CosetContext {
            n,
            delta_n: parabolic_delta(n, gs)?,
        })
    }

    pub fn delta_power(&self, gs: &GarsideStructure, k: usize) -> Vec<u16> {
        let mut p = self.delta_n.repeat(k);
        gs.fwd().normalize(&mut p);
        p
    }

    pub fn contains(&self, gs: &GarsideStructure, g: &[u16]) -> bool {
        g.iter().all(|&s| gs.support(s).is_subset(self.n))
    }

    /// M_N(g): `g` with its greatest left divisor in N removed.
    pub fn m_strip(&self, gs: &GarsideStructure, g: &[u16]) -> Vec<u16> {
        if self.delta_n.is_empty() {
            return g.to_vec();
        }
        let d = self.delta_power(gs, g.len());
        let p = gs.gcd_l(g, &d);
        gs.left_quotient(&p, g).expect("gcd divides g")
    }

    /// φ_g(h) for `g = a·b⁻¹` and `h ∈ N`.
    pub fn phi(&self, gs: &GarsideStructure, g: &GroupNf, h: &[u16]) -> GroupNf {
        let hb = gs.mul(h, &g.den);
        let c1 = gs.gcd_r(&g.num, &hb);
        let c = gs.right_quotient(&g.num, &c1).expect("c1 right-divides a");
        let rest = gs.right_quotient(&hb, &c1).expect("c1 right-divides hb");
        GroupNf {
            num: c,
            den: self.m_strip(gs, &rest),
        }
    }

    pub fn m_n(&self, gs: &GarsideStructure, g: &GroupNf) -> GroupNf {
        if self.delta_n.is_empty() {
            return g.clone();
        }
        let d = self.delta_power(gs, gs.simple_length(g));
        self.phi(gs, g, &d)
    }

    /// Canonical signed word of m_N of the element given by local letters.
    pub fn m_n_star(&self, gs: &GarsideStructure, w: &[(u16, bool)]) -> SimpleWord {
        let g = gs.group_from_local(w);
        gs.right_greedy_word(&self.m_n(gs, &g))
    }

    pub fn strip_right(&self, gs: &GarsideStructure, g: &[u16]) -> (Vec<u16>, Vec<u16>) {
        strip_right(g, &self.delta_n, gs)
    }

    /// Elements of N with at most `k` greedy factors.
    pub fn elements_up_to(&self, gs: &GarsideStructure, k: usize) -> Vec<Vec<u16>> {
        let gens: Vec<u16> = self.n.iter().filter_map(|a| gs.simple_of(&[a])).collect();
        let mut seen: HashSet<Vec<u16>> = HashSet::from([Vec::new()]);
        let mut frontier = vec![Vec::new()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for e in &frontier {
                for &s in &gens {
                    let f = gs.mul(e, &[s]);
                    if f.len() <= k && seen.insert(f.clone()) {
                        next.push(f);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<Vec<u16>> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// The order ≤_N, decided by a search over witnesses `h1 ∈ N` with at
    /// most `|g1| + |g2|` greedy factors.
    pub fn leq(&self, gs: &GarsideStructure, g1: &GroupNf, g2: &GroupNf) -> bool {
        let Some(a) = gs.left_quotient(&g1.num, &g2.num) else {
            return false;
        };
        let bound = gs.simple_length(g1) + gs.simple_length(g2);
        for h1 in self.elements_up_to(gs, bound) {
            let h1b1 = gs.mul(&h1, &g1.den);
            let x = gs.mul(&h1b1, &a);
            let Some(h2) = gs.right_quotient(&x, &g2.den) else {
                continue;
            };
            if !self.contains(gs, &h2) {
                continue;
            }
            if gs.gcd_l(&h2, &h1) == gs.gcd_l(&h2, &h1b1) {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::find_minimal_garside;
    use crate::oracle::DEFAULT_BUDGET;
    use crate::presentation::{derive_complements, parse_presentation};
    use crate::presets;
    use crate::word::AtomId;

    fn b3() -> GarsideStructure {
        let spec = parse_presentation(presets::B3).unwrap();
        let cp = derive_complements(&spec).unwrap();
        find_minimal_garside(&spec, &cp, AtomSet::full(2), 8, DEFAULT_BUDGET).unwrap()
    }

    fn ctx(gs: &GarsideStructure, n: &[AtomId]) -> CosetContext {
        CosetContext::new(gs, n.iter().copied().collect()).unwrap()
    }

    fn el(gs: &GarsideStructure, w: &[(AtomId, bool)]) -> GroupNf {
        gs.group_nf(w)
    }

    fn pos(w: &[AtomId]) -> Vec<(AtomId, bool)> {
        w.iter().map(|&a| (a, false)).collect()
    }

    #[test]
    fn strip_examples() {
        let gs = b3();
        let c = ctx(&gs, &[0]);
        assert_eq!(
            gs.word_of(&c.m_strip(&gs, &gs.from_atoms(&[0, 1]))),
            vec![1]
        );
        assert_eq!(gs.word_of(&c.m_strip(&gs, &gs.from_atoms(&[1]))), vec![1]);
        assert!(c.m_strip(&gs, &gs.from_atoms(&[0, 0, 0])).is_empty());
    }

    #[test]
    fn phi_examples() {
        let gs = b3();
        let c = ctx(&gs, &[0]);
        // g = b·a⁻¹
        let g = el(&gs, &[(1, false), (0, true)]);
        let r = c.phi(&gs, &g, &[]);
        assert_eq!((gs.word_of(&r.num), r.den.len()), (vec![1], 0));
        // g = (ab)·a⁻¹, h = a
        let g = el(&gs, &[(0, false), (1, false), (0, true)]);
        let r = c.phi(&gs, &g, &gs.from_atoms(&[0]));
        assert_eq!((gs.word_of(&r.num), r.den.len()), (vec![0, 1], 0));
    }

    #[test]
    fn leq_examples() {
        let gs = b3();
        let c = ctx(&gs, &[0]);
        let b = el(&gs, &pos(&[1]));
        let ba = el(&gs, &pos(&[1, 0]));
        assert!(c.leq(&gs, &b, &ba));
        assert!(c.leq(&gs, &ba, &ba));
        assert!(!c.leq(&gs, &ba, &b));
    }

    #[test]
    fn m_n_examples() {
        let gs = b3();
        let c = ctx(&gs, &[0]);
        let r = c.m_n(&gs, &el(&gs, &pos(&[1, 0])));
        assert_eq!((gs.word_of(&r.num), r.den.len()), (vec![1], 0));
        assert!(c
            .m_n(&gs, &el(&gs, &[(0, false), (0, false), (0, true)]))
            .is_identity());
        let r = c.m_n(&gs, &el(&gs, &pos(&[0, 1])));
        assert_eq!(gs.word_of(&r.num), vec![0, 1]);
    }

    #[test]
    fn m_n_star_examples() {
        let mut gs = b3();
        let names = vec!["a".to_string(), "b".to_string()];
        let mut table = crate::word::SimpleTable::new(&names);
        gs.register(&mut table);
        let c = ctx(&gs, &[0]);
        let a = gs.simple_of(&[0]).unwrap();
        let b = gs.simple_of(&[1]).unwrap();
        assert_eq!(
            table.format(&c.m_n_star(&gs, &[(b, false), (a, false)])),
            "b"
        );
        assert!(c.m_n_star(&gs, &[(a, false)]).is_empty());
        // a b a⁻¹ modulo ⟨b⟩: a b a⁻¹ = b⁻¹ a b, whose coset is that of b⁻¹ a.
        let cb = ctx(&gs, &[1]);
        let w = cb.m_n_star(&gs, &[(a, false), (b, false), (a, true)]);
        let v = cb.m_n_star(&gs, &[(b, true), (a, false)]);
        assert_eq!(w, v);
        assert!(!w.is_empty());
    }
}
