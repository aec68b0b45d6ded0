//! Reference implementation of the diamond product by local rewriting.
//!
//! The two factors are concatenated and the leftmost redex is rewritten until
//! none is left:
//!
//! * `a a^-1` is deleted,
//! * `<a> <b>` becomes the single bracket `<ā ⋄ AD_<a> b̄>`,
//! * `<a>^-1 <b>^-1` becomes `(<b> ⋄ <a>)^-1`.
//!
//! Every product inside those rules is again computed by rewriting a
//! concatenation, so nothing here shares code with the stack machine in
//! `diamond.rs`.

use super::RbWord;
use crate::words::{Atom, Word};

/// Nested rewriting budget. Exceeding it means the rules loop, which would
/// be a bug, so it panics instead of returning an error.
const GUARD: u64 = 5_000_000;

/// `u ⋄ v` by leftmost fixpoint rewriting of `u v`.
pub fn diamond_rewrite(u: &RbWord, v: &RbWord) -> RbWord {
    let mut seq = u.atoms().to_vec();
    seq.extend_from_slice(v.atoms());
    let mut budget = GUARD;
    RbWord::from_word_unchecked(Word::from_reduced(normalize(seq, &mut budget)))
}

enum Redex {
    Cancel,
    Positive,
    Negative,
}

fn redex(a: &Atom, b: &Atom) -> Option<Redex> {
    if a.is_inverse_of(b) {
        Some(Redex::Cancel)
    } else if a.is_positive_bracket() && b.is_positive_bracket() {
        Some(Redex::Positive)
    } else if a.is_negative_bracket() && b.is_negative_bracket() {
        Some(Redex::Negative)
    } else {
        None
    }
}

fn normalize(mut seq: Vec<Atom>, budget: &mut u64) -> Vec<Atom> {
    loop {
        *budget = budget.checked_sub(1).expect("diamond rewriting did not terminate");
        let found = seq.windows(2).enumerate().find_map(|(i, p)| redex(&p[0], &p[1]).map(|r| (i, r)));
        let Some((i, rule)) = found else {
            return seq;
        };
        let replacement = match rule {
            Redex::Cancel => Vec::new(),
            Redex::Positive => vec![case_one(seq[i].body().unwrap(), seq[i + 1].body().unwrap(), budget)],
            Redex::Negative => vec![case_one(seq[i + 1].body().unwrap(), seq[i].body().unwrap(), budget).inverse()],
        };
        seq.splice(i..i + 2, replacement);
    }
}

fn case_one(ubar: &Word, vbar: &Word, budget: &mut u64) -> Atom {
    let u = Atom::bracket(ubar.clone());
    let twisted = ad(&u, vbar, budget);
    let mut body = ubar.atoms().to_vec();
    body.extend(twisted);
    Atom::bracket(Word::from_reduced(normalize(body, budget)))
}

fn ad(u: &Atom, vbar: &Word, budget: &mut u64) -> Vec<Atom> {
    let factors = vbar.atoms();
    let Some(last) = factors.last() else {
        return Vec::new();
    };
    let mut seq = vec![u.clone()];
    if last.is_negative_bracket() {
        seq.extend_from_slice(&factors[..factors.len() - 1]);
        seq.push(case_one(u.body().unwrap(), last.body().unwrap(), budget).inverse());
    } else {
        seq.extend_from_slice(factors);
        seq.push(u.inverse());
    }
    normalize(seq, budget)
}
