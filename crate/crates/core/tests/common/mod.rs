#![allow(dead_code)]

use pgk::amalgam::BuildOptions;
use pgk::frontend::Session;
use pgk::word::{AtomId, AtomSet};
use rand::Rng;

pub const PRESETS: [&str; 5] = ["B3", "B4", "B3B3", "FREE2", "RA2"];
pub const AMALGAMS: [&str; 3] = ["B3B3", "FREE2", "RA2"];

pub fn session(name: &str) -> Session {
    Session::preset(name, BuildOptions::default()).unwrap()
}

pub fn random_signed<R: Rng>(rng: &mut R, atoms: &[AtomId], max_len: usize) -> Vec<(AtomId, bool)> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| (atoms[rng.gen_range(0..atoms.len())], rng.gen_bool(0.5)))
        .collect()
}

pub fn random_positive<R: Rng>(rng: &mut R, atoms: &[AtomId], max_len: usize) -> Vec<AtomId> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| atoms[rng.gen_range(0..atoms.len())])
        .collect()
}

/// Inserts `k` trivial pairs `x x⁻¹` or `x⁻¹ x` at random places.
pub fn pad_trivially<R: Rng>(rng: &mut R, w: &mut Vec<(AtomId, bool)>, atoms: &[AtomId], k: usize) {
    for _ in 0..k {
        let x = atoms[rng.gen_range(0..atoms.len())];
        let inv = rng.gen_bool(0.5);
        let i = rng.gen_range(0..=w.len());
        w.splice(i..i, [(x, inv), (x, !inv)]);
    }
}

pub fn all_atoms(s: &Session) -> Vec<AtomId> {
    s.spec.all_atoms().to_vec()
}

pub fn subset(s: &Session, text: &str) -> AtomSet {
    if text.is_empty() {
        AtomSet::EMPTY
    } else {
        s.parse_parabolic(text).unwrap()
    }
}
