//! Random words for property checks and benchmarks.
//!
//! Every sampler draws the number of factors uniformly from `0..=breadth`
//! and makes each factor a bracket with probability one half while depth
//! remains. Bracket bodies are sampled the same way one level down, so the
//! empty body `<1>` does occur.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::differential::{DiffLetter, DiffWord};
use crate::rota_baxter::RbWord;
use crate::words::{Atom, Symbol, Word};

/// A reproducible generator.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The alphabet `x, y, z, x3, x4, …` truncated to `n` symbols.
pub fn alphabet(n: usize) -> Vec<Symbol> {
    const FIRST: [&str; 3] = ["x", "y", "z"];
    (0..n)
        .map(|i| match FIRST.get(i) {
            Some(s) => Symbol::new(s),
            None => Symbol::new(&format!("x{i}")),
        })
        .map(|s| s.expect("valid identifier"))
        .collect()
}

/// Size limits for sampled bracketed words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    pub depth: usize,
    pub breadth: usize,
}

fn random_sign<R: Rng>(rng: &mut R, atom: Atom) -> Atom {
    if rng.gen_bool(0.5) {
        atom.inverse()
    } else {
        atom
    }
}

fn random_atom<R: Rng>(rng: &mut R, alphabet: &[Symbol], shape: Shape, rb: bool) -> Atom {
    let atom = if shape.depth > 0 && rng.gen_bool(0.5) {
        let inner = Shape { depth: shape.depth - 1, ..shape };
        let body =
            if rb { random_rb_word(rng, alphabet, inner).into_word() } else { random_word(rng, alphabet, inner) };
        Atom::bracket(body)
    } else {
        Atom::gen(alphabet[rng.gen_range(0..alphabet.len())].clone())
    };
    random_sign(rng, atom)
}

/// A reduced word with depth at most `shape.depth`. The atom count is drawn
/// before reduction, so breadth is at most `shape.breadth`.
pub fn random_word<R: Rng>(rng: &mut R, alphabet: &[Symbol], shape: Shape) -> Word {
    let n = rng.gen_range(0..=shape.breadth);
    Word::from_atoms((0..n).map(|_| random_atom(rng, alphabet, shape, false)).collect::<Vec<_>>())
}

/// A Rota-Baxter word: each factor is redrawn until it neither cancels nor
/// forms a same-sign bracket pair with its predecessor.
pub fn random_rb_word<R: Rng>(rng: &mut R, alphabet: &[Symbol], shape: Shape) -> RbWord {
    let n = rng.gen_range(0..=shape.breadth);
    let mut atoms: Vec<Atom> = Vec::with_capacity(n);
    for _ in 0..n {
        let atom = loop {
            let a = random_atom(rng, alphabet, shape, true);
            let clash = atoms.last().is_some_and(|prev| {
                prev.is_inverse_of(&a)
                    || (prev.is_positive_bracket() && a.is_positive_bracket())
                    || (prev.is_negative_bracket() && a.is_negative_bracket())
            });
            if !clash {
                break a;
            }
        };
        atoms.push(atom);
    }
    RbWord::new(Word::from_atoms(atoms)).expect("sampler keeps the Rota-Baxter condition")
}

/// A reduced word in derived letters `x.n` with `n <= max_order` and at most
/// `max_len` letters.
pub fn random_diff_word<R: Rng>(rng: &mut R, alphabet: &[Symbol], max_order: u32, max_len: usize) -> DiffWord {
    let n = rng.gen_range(0..=max_len);
    DiffWord::from_letters(
        (0..n)
            .map(|_| {
                let l =
                    DiffLetter::new(alphabet[rng.gen_range(0..alphabet.len())].clone(), rng.gen_range(0..=max_order));
                if rng.gen_bool(0.5) {
                    l.inverse()
                } else {
                    l
                }
            })
            .collect::<Vec<_>>(),
    )
}
