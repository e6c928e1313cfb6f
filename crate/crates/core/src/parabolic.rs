//! Standard parabolic submonoids: detection from the complement tables,
//! enumeration of the spherical ones, and right stripping inside a leaf.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::garside::{find_minimal_garside, GarsideStructure};
use crate::presentation::{ComplementPair, PresentationSpec};
use crate::word::{AtomId, AtomSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicHandle {
    pub atoms: AtomSet,
    pub spherical: bool,
    /// Canonical word of Δ_N, present iff spherical.
    pub delta: Option<Vec<AtomId>>,
}

/// Complement-table test for the submonoid generated by `x`.
pub fn is_parabolic(x: AtomSet, cp: &ComplementPair) -> bool {
    let inside = |w: &[AtomId]| x.contains_word(w);
    for &(p, q) in &cp.graph_l {
        match (x.contains(p), x.contains(q)) {
            (true, true) => {
                let words = [
                    cp.f_l.get(&(p, q)),
                    cp.f_l.get(&(q, p)),
                    cp.f_r.get(&(p, q)),
                    cp.f_r.get(&(q, p)),
                ];
                if words.iter().flatten().any(|w| !inside(w)) {
                    return false;
                }
            }
            (true, false) | (false, true) => {
                let (a, b) = if x.contains(p) { (p, q) } else { (q, p) };
                let escapes = |w: Option<&Vec<AtomId>>| w.is_none_or(|w| !inside(w));
                if !escapes(cp.f_l.get(&(a, b))) || !escapes(cp.f_r.get(&(b, a))) {
                    return false;
                }
            }
            (false, false) => {}
        }
    }
    true
}

/// Subsets of `s` ordered by size, then lexicographically in atom order.
pub fn subsets_ordered(s: AtomSet) -> Vec<AtomSet> {
    let atoms = s.to_vec();
    let mut out: Vec<AtomSet> = (0u64..1 << atoms.len())
        .map(|mask| {
            atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &a)| a)
                .collect()
        })
        .collect();
    out.sort_by_key(|x: &AtomSet| (x.len(), x.lex_key()));
    out
}

#[derive(Clone, Debug)]
pub struct SphericalParabolics {
    pub handles: Vec<ParabolicHandle>,
    pub structures: Vec<GarsideStructure>,
    /// Canonical words of the union of all their simple elements.
    pub simples: BTreeSet<Vec<AtomId>>,
}

pub fn enumerate_spherical_parabolics(
    spec: &PresentationSpec,
    cp: &ComplementPair,
    max_word_length: Option<usize>,
    budget: usize,
) -> Result<SphericalParabolics> {
    let mut handles = Vec::new();
    let mut structures = Vec::new();
    let mut simples = BTreeSet::new();
    for x in subsets_ordered(spec.all_atoms()) {
        if !is_parabolic(x, cp) || !cp.is_complete_on(x) {
            continue;
        }
        let bound = max_word_length.unwrap_or(2 * x.len() * x.len());
        let gs = find_minimal_garside(spec, cp, x, bound, budget)?;
        simples.extend(gs.words.iter().cloned());
        handles.push(ParabolicHandle {
            atoms: x,
            spherical: true,
            delta: Some(gs.delta_word().to_vec()),
        });
        structures.push(gs);
    }
    Ok(SphericalParabolics {
        handles,
        structures,
        simples,
    })
}

/// Δ_N as the least common multiple of the simples lying in N; checks that
/// its divisors are exactly those simples.
pub fn parabolic_delta(n: AtomSet, gs: &GarsideStructure) -> Result<Vec<u16>> {
    let inside: Vec<u16> = (0..gs.len() as u16)
        .filter(|&s| gs.support(s).is_subset(n))
        .collect();
    let mut d: Vec<u16> = Vec::new();
    for &s in &inside {
        d = gs.lcm_l(&d, &[s]);
    }
    if d.len() > 1 {
        return Err(Error::NotParabolic(format!("{n:?}")));
    }
    let divs: Vec<u16> = (0..gs.len() as u16)
        .filter(|&s| d.is_empty() && s == 0 || !d.is_empty() && gs.left_divides(s, d[0]))
        .collect();
    if divs != inside {
        return Err(Error::NotParabolic(format!("{n:?}")));
    }
    Ok(d)
}

pub fn intersect_parabolics(
    a: &ParabolicHandle,
    b: &ParabolicHandle,
    cp: &ComplementPair,
) -> Result<ParabolicHandle> {
    let x = a.atoms.intersection(b.atoms);
    if !is_parabolic(x, cp) {
        return Err(Error::IntersectionNotParabolic(format!("{x:?}")));
    }
    Ok(ParabolicHandle {
        atoms: x,
        spherical: a.spherical || b.spherical,
        delta: None,
    })
}

/// `(g', h)` with `g = g'·h`, `h` the greatest right divisor of `g` in N.
pub fn strip_right(g: &[u16], delta_n: &[u16], gs: &GarsideStructure) -> (Vec<u16>, Vec<u16>) {
    if delta_n.is_empty() || g.is_empty() {
        return (g.to_vec(), Vec::new());
    }
    let k = gs.atom_len(g);
    let mut p = delta_n.repeat(k);
    gs.fwd().normalize(&mut p);
    let h = gs.gcd_r(g, &p);
    let rest = gs.right_quotient(g, &h).expect("h right-divides g");
    (rest, h)
}
