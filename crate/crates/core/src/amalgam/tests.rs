use super::confluence::AmalgamSystem;
use super::*;
use crate::frontend::Session;

fn session(name: &str) -> Session {
    Session::preset(name, BuildOptions::default()).unwrap()
}

fn w(s: &Session, text: &str) -> SimpleWord {
    s.parse_word(text).unwrap()
}

fn show(s: &Session, e: &Element) -> String {
    e.display(&s.table).to_string()
}

#[test]
fn tree_shapes() {
    let s = session("B3");
    assert!(s.tree.is_leaf());
    assert_eq!(s.tree.leaf().unwrap().gs.len(), 6);

    let s = session("B3B3");
    let (l, r, sh) = s.tree.children().unwrap();
    let names = &s.spec.atoms;
    assert_eq!(l.atoms.display(names).to_string(), "{a,b}");
    assert_eq!(r.atoms.display(names).to_string(), "{b,c}");
    assert_eq!(sh.atoms.display(names).to_string(), "{b}");

    let s = session("FREE2");
    assert_eq!(s.tree.leaf_count(), 2);
    assert!(s.tree.shared_atoms().unwrap().is_empty());

    let s = session("RA2");
    assert_eq!(s.tree.leaf_count(), 2);
    assert_eq!(
        s.tree
            .shared_atoms()
            .unwrap()
            .display(&s.spec.atoms)
            .to_string(),
        "{b}"
    );

    let s = session("B4");
    assert!(s.tree.is_leaf());
    assert_eq!(s.tree.leaf().unwrap().gs.len(), 24);
}

#[test]
fn monoid_normal_forms() {
    let s = session("B3B3");
    let e = s.monoid_normal_form(&w(&s, "c a")).unwrap();
    assert_eq!(show(&s, &e), "(2:c | 1:a ; 1)");
    assert_eq!(e.ell(), 2);
    let e = s.monoid_normal_form(&w(&s, "a b")).unwrap();
    assert_eq!(show(&s, &e), "(1:a ; b)");
    let e = s.monoid_normal_form(&w(&s, "b")).unwrap();
    assert_eq!(e.ell(), 0);
    assert_eq!(show(&s, &e), "(; b)");
}

#[test]
fn amalgam_products() {
    let s = session("B3B3");
    let t = &s.tree;
    let u = s.monoid_normal_form(&w(&s, "a b")).unwrap();
    let v = s.monoid_normal_form(&w(&s, "c")).unwrap();
    let p = t.amalgam_mul(&s.table, &u, &v);
    assert_eq!(p, s.monoid_normal_form(&w(&s, "a b c")).unwrap());
    assert_eq!(show(&s, &p), "(1:a | 2:b c ; 1)");
    let v = s.monoid_normal_form(&w(&s, "a")).unwrap();
    let p = t.amalgam_mul(&s.table, &u, &v);
    assert_eq!(p, s.monoid_normal_form(&w(&s, "a b a")).unwrap());
    assert_eq!(p.ell(), 1);
}

#[test]
fn coset_maps() {
    let s = session("B3B3");
    let a = s.parse_parabolic("a").unwrap();
    let b = s.parse_parabolic("b").unwrap();
    assert_eq!(s.format(&s.coset_rep(&w(&s, "c a"), a)), "c");
    assert_eq!(s.format(&s.m_star(&w(&s, "c a"), a)), "c");
    assert_eq!(s.format(&s.coset_rep(&w(&s, "a b"), b)), "a");
    let g = s.normal_form(&w(&s, "c a"));
    let m = s.tree.m_t_p(&s.table, &g, a);
    assert_eq!(m, s.normal_form(&w(&s, "c")));
}

#[test]
fn reduction_trace_ends_irreducible() {
    let s = session("B3B3");
    let a = s.parse_parabolic("a").unwrap();
    let (out, trace) = s.tree.m_star_traced(&s.table, &w(&s, "c a"), a);
    assert_eq!(s.format(&out), "c");
    assert!(!trace.is_empty());
}

fn agree(name: &str, words: &[&str], parabolics: &[&str]) {
    let s = session(name);
    for text in words {
        let x = w(&s, text);
        for p in parabolics {
            let p = if p.is_empty() {
                AtomSet::EMPTY
            } else {
                s.parse_parabolic(p).unwrap()
            };
            assert_eq!(
                s.coset_rep(&x, p),
                s.m_star(&x, p),
                "{name}: {text} modulo {p:?}"
            );
        }
    }
}

#[test]
fn routes_agree() {
    agree(
        "B3B3",
        &[
            "c a",
            "a b c b",
            "a c- b",
            "b b a a-",
            "c- b a c",
            "a b a- c b-",
        ],
        &["", "a", "b", "c", "a,b", "b,c", "a,c"],
    );
    agree(
        "RA2",
        &["a c b", "c- a b a", "b a- c a"],
        &["", "a", "b", "c", "a,b", "b,c"],
    );
    agree("FREE2", &["a b a-", "b- a b"], &["", "a", "b"]);
}

#[test]
fn confluence_on_examples() {
    let s = session("B3B3");
    let sys = AmalgamSystem::new(&s.tree, &s.table).unwrap();
    for text in ["a b c b a", "c a b", "b c a b c", "a c a c b b"] {
        let x = sys.initial(&w(&s, text));
        let left = sys.reduce_with(x.clone(), |_| 0);
        let right = sys.reduce_with(x.clone(), |k| k - 1);
        let e = sys.to_element(&left);
        assert_eq!(e, sys.to_element(&right), "{text}");
        assert_eq!(e, s.monoid_normal_form(&w(&s, text)).unwrap(), "{text}");
    }
}
