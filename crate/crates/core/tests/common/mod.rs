#![allow(dead_code)]

use operated_groups::differential::{DiffLetter, DiffWord};
use operated_groups::finite::{catalog, enumerate_operators, FiniteOperatedGroup, IdentityKind, DEFAULT_BUDGET};
use operated_groups::rota_baxter::{RbTarget, RbWord};
use operated_groups::{Assignment, Atom, Symbol, Word};
use proptest::collection::vec;
use proptest::prelude::*;

pub fn sym(s: &str) -> Symbol {
    Symbol::new(s).unwrap()
}

const NAMES: [&str; 3] = ["x", "y", "z"];

fn signed(atom: Atom, neg: bool) -> Atom {
    if neg {
        atom.inverse()
    } else {
        atom
    }
}

pub fn atom(depth: u32, breadth: usize) -> BoxedStrategy<Atom> {
    let leaf = (0..NAMES.len(), any::<bool>()).prop_map(|(i, neg)| signed(Atom::gen(sym(NAMES[i])), neg));
    leaf.prop_recursive(depth, 64, breadth as u32, move |inner| {
        (vec(inner, 0..=breadth), any::<bool>())
            .prop_map(|(atoms, neg)| signed(Atom::bracket(Word::from_atoms(atoms)), neg))
    })
    .boxed()
}

/// Reduced words of depth at most `depth`.
pub fn word(depth: u32, breadth: usize) -> impl Strategy<Value = Word> {
    vec(atom(depth, breadth), 0..=breadth).prop_map(Word::from_atoms)
}

/// Drops every atom that would sit next to a same-sign bracket, at all
/// levels, so any word becomes a Rota-Baxter word.
pub fn rb_repair(w: &Word) -> RbWord {
    let mut out: Vec<Atom> = Vec::new();
    for a in w.atoms() {
        let a = match a.body() {
            Some(body) => {
                let b = Atom::bracket(rb_repair(body).into_word());
                if a.is_negative_bracket() {
                    b.inverse()
                } else {
                    b
                }
            }
            None => a.clone(),
        };
        match out.last() {
            Some(top) if top.is_inverse_of(&a) => {
                out.pop();
            }
            Some(top)
                if (top.is_positive_bracket() && a.is_positive_bracket())
                    || (top.is_negative_bracket() && a.is_negative_bracket()) => {}
            _ => out.push(a),
        }
    }
    RbWord::new(Word::from_atoms(out)).expect("repaired word")
}

pub fn rb_word(depth: u32, breadth: usize) -> impl Strategy<Value = RbWord> {
    word(depth, breadth).prop_map(|w| rb_repair(&w))
}

pub fn diff_word(max_order: u32, len: usize) -> impl Strategy<Value = DiffWord> {
    vec((0..NAMES.len(), 0..=max_order, any::<bool>()), 0..=len).prop_map(|ls| {
        DiffWord::from_letters(
            ls.into_iter()
                .map(|(i, n, neg)| {
                    let l = DiffLetter::new(sym(NAMES[i]), n);
                    if neg {
                        l.inverse()
                    } else {
                        l
                    }
                })
                .collect::<Vec<_>>(),
        )
    })
}

/// Every weight-1 Rota-Baxter operator on every fixture group.
pub fn rb_targets() -> Vec<RbTarget<FiniteOperatedGroup>> {
    catalog::fixtures()
        .into_iter()
        .flat_map(|g| {
            enumerate_operators(&g, &IdentityKind::RbPlus1, DEFAULT_BUDGET)
                .unwrap()
                .into_iter()
                .map(move |p| RbTarget::validate(FiniteOperatedGroup::new(g.clone(), p)).unwrap())
        })
        .collect()
}

/// Every assignment of `x, y, z` into a group of order `n`.
pub fn all_assignments(n: usize) -> Vec<Assignment<usize>> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                out.push([(sym("x"), a), (sym("y"), b), (sym("z"), c)].into_iter().collect());
            }
        }
    }
    out
}
