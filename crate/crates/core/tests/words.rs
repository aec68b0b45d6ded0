mod common;

use common::word;
use operated_groups::{parse_word, Atom, Word};
use proptest::collection::vec;
use proptest::prelude::*;

/// Deletes adjacent inverse pairs at positions chosen by `picks` until
/// none remain.
fn reduce_in_order(mut atoms: Vec<Atom>, picks: &[usize]) -> Vec<Atom> {
    let mut k = 0;
    loop {
        let spots: Vec<usize> =
            (0..atoms.len().saturating_sub(1)).filter(|&i| atoms[i].is_inverse_of(&atoms[i + 1])).collect();
        if spots.is_empty() {
            return atoms;
        }
        let i = spots[picks.get(k).copied().unwrap_or(0) % spots.len()];
        k += 1;
        atoms.drain(i..i + 2);
    }
}

/// Renders with `B(...)`, doubled spaces and inserted cancelling pairs.
fn noisy(w: &Word, salt: &mut impl Iterator<Item = u8>) -> String {
    let mut parts = Vec::new();
    for a in w.atoms() {
        let s = salt.next().unwrap_or(0);
        if s.is_multiple_of(5) {
            parts.push("q q^-1".to_string());
        }
        let body = match a.body() {
            Some(b) => {
                let inner = noisy(b, salt);
                let mut t = if s.is_multiple_of(2) { format!("<{inner}>") } else { format!("B({inner})") };
                if a.is_negative_bracket() {
                    t.push_str("^-1");
                }
                t
            }
            None => a.to_string(),
        };
        parts.push(body);
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("  ")
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reduction_is_confluent(atoms in vec(common::atom(2, 3), 0..10), picks in vec(0usize..100, 0..20)) {
        let mut doubled = atoms.clone();
        // splice in inverses so there is something to cancel
        for a in atoms.iter().rev() {
            doubled.push(a.inverse());
        }
        doubled.extend(atoms.iter().cloned());
        let expected = Word::from_atoms(doubled.clone());
        prop_assert_eq!(reduce_in_order(doubled, &picks), expected.atoms().to_vec());
    }

    #[test]
    fn group_axioms(u in word(3, 6), v in word(3, 6), w in word(3, 6)) {
        prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
        prop_assert_eq!(u.mul(&Word::identity()), u.clone());
        prop_assert_eq!(Word::identity().mul(&u), u.clone());
        prop_assert!(u.mul(&u.inv()).is_identity());
        prop_assert!(u.inv().mul(&u).is_identity());
        prop_assert_eq!(u.inv().inv(), u);
    }

    #[test]
    fn statistics_of_products(u in word(3, 6), v in word(3, 6)) {
        let p = u.mul(&v);
        prop_assert!(p.depth() <= u.depth().max(v.depth()));
        prop_assert!(p.breadth() <= u.breadth() + v.breadth());
        prop_assert_eq!(u.bracket().depth(), u.depth() + 1);
        prop_assert_eq!(u.bracket().breadth(), 1);
    }

    #[test]
    fn print_parse_round_trip(w in word(3, 6)) {
        let text = w.to_string();
        let back = parse_word(&text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, w);
    }

    #[test]
    fn grammatical_variants_normalize(w in word(3, 5), salt in vec(any::<u8>(), 64)) {
        let text = noisy(&w, &mut salt.into_iter());
        let parsed = parse_word(&text).unwrap();
        prop_assert_eq!(&parsed, &w);
        prop_assert_eq!(parse_word(&parsed.to_string()).unwrap(), parsed);
    }
}

#[test]
fn bracket_identifications_are_structural() {
    // <x x^-1 y> and <y> are the same atom once bodies are reduced
    assert_eq!(parse_word("<x x^-1 y>").unwrap(), parse_word("<y>").unwrap());
    assert_eq!(parse_word("<<y>> <<y>>^-1").unwrap(), Word::identity());
    assert_ne!(parse_word("<y>").unwrap(), parse_word("<<y>>").unwrap());
}
