//! Brute-force rewriting closure, used to discover simple elements and as an
//! independent check on the normal-form pipeline.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::presentation::Relation;
use crate::word::AtomId;

pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Every positive word reachable from `w` by applying relations in either
/// direction at any position.
pub fn oracle_closure(
    w: &[AtomId],
    relations: &[Relation],
    budget: usize,
) -> Result<BTreeSet<Vec<AtomId>>> {
    Ok(closure_set(w, relations, budget)?.into_iter().collect())
}

pub(crate) fn closure_set(
    w: &[AtomId],
    relations: &[Relation],
    budget: usize,
) -> Result<HashSet<Vec<AtomId>>> {
    let rules: Vec<(&[AtomId], &[AtomId])> = relations
        .iter()
        .flat_map(|r| [(&r.lhs[..], &r.rhs[..]), (&r.rhs[..], &r.lhs[..])])
        .collect();
    let mut seen: HashSet<Vec<AtomId>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.to_vec());
    queue.push_back(w.to_vec());
    while let Some(cur) = queue.pop_front() {
        for &(from, to) in &rules {
            if from.len() > cur.len() {
                continue;
            }
            for i in 0..=cur.len() - from.len() {
                if &cur[i..i + from.len()] != from {
                    continue;
                }
                let mut next = Vec::with_capacity(cur.len() - from.len() + to.len());
                next.extend_from_slice(&cur[..i]);
                next.extend_from_slice(to);
                next.extend_from_slice(&cur[i + from.len()..]);
                if !seen.contains(&next) {
                    if seen.len() >= budget {
                        return Err(Error::ClosureBudgetExceeded(budget));
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen)
}

pub fn oracle_equal(
    w1: &[AtomId],
    w2: &[AtomId],
    relations: &[Relation],
    budget: usize,
) -> Result<bool> {
    if w1 == w2 {
        return Ok(true);
    }
    Ok(closure_set(w1, relations, budget)?.contains(w2))
}

/// Shortlex order: shorter words first, then lexicographic in atom order.
pub fn shortlex_cmp(a: &[AtomId], b: &[AtomId]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Shortlex-least word in a closure.
pub fn shortlex_min<'a, I: IntoIterator<Item = &'a Vec<AtomId>>>(words: I) -> Vec<AtomId> {
    words
        .into_iter()
        .min_by(|a, b| shortlex_cmp(a, b))
        .cloned()
        .unwrap_or_default()
}

/// All words over `alphabet` of length at most `max_len`, in shortlex order.
pub fn words_up_to(alphabet: &[AtomId], max_len: usize) -> Vec<Vec<AtomId>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for &a in alphabet {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Partitions `words` into equality classes under the relations. Returns the
/// class id of each input word; ids are assigned in input order.
pub fn oracle_classes(
    words: &[Vec<AtomId>],
    relations: &[Relation],
    budget: usize,
) -> Result<Vec<usize>> {
    let pos: HashMap<&[AtomId], usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_slice(), i))
        .collect();
    let mut class = vec![usize::MAX; words.len()];
    let mut next = 0;
    for i in 0..words.len() {
        if class[i] != usize::MAX {
            continue;
        }
        for member in closure_set(&words[i], relations, budget)? {
            if let Some(&j) = pos.get(member.as_slice()) {
                class[j] = next;
            }
        }
        next += 1;
    }
    Ok(class)
}
