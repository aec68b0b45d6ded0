//! Bracketed group words: the elements of the free operated group.
//!
//! A [`Word`] is a reduced sequence of [`Atom`]s. An atom is a signed
//! generator or a signed bracket whose body is again a reduced word, so a
//! word is a finite tree. The stratification of the free operated group into
//! the free groups `G_0 ⊂ G_1 ⊂ ...` is implicit: the layer an element lives
//! in is its [`Word::depth`].

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid generator name {0:?}")]
pub struct InvalidSymbol(pub String);

/// A generator name: `[A-Za-z_][A-Za-z0-9_]*`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Result<Self, InvalidSymbol> {
        if is_identifier(name) {
            Ok(Symbol(Arc::from(name)))
        } else {
            Err(InvalidSymbol(name.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// Anything that can be a letter of a free-group word.
pub(crate) trait Letter: Clone + PartialEq {
    fn inverse(&self) -> Self;
}

/// Append `letter` to a reduced stack, cancelling against the top.
///
/// Pushing the letters of any sequence one by one yields the leftmost
/// cancellation normal form.
pub(crate) fn push_reduced<L: Letter>(stack: &mut Vec<L>, letter: L) {
    if let Some(top) = stack.last() {
        if *top == letter.inverse() {
            stack.pop();
            return;
        }
    }
    stack.push(letter);
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AtomKind {
    Gen(Symbol),
    Br(Arc<Word>),
}

/// One factor of the standard factorization: `x`, `x^-1`, `<w>` or `<w>^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub kind: AtomKind,
    pub sign: Sign,
}

impl Atom {
    pub fn gen(symbol: Symbol) -> Self {
        Atom { kind: AtomKind::Gen(symbol), sign: Sign::Pos }
    }

    pub fn bracket(body: Word) -> Self {
        Atom { kind: AtomKind::Br(Arc::new(body)), sign: Sign::Pos }
    }

    pub fn inverse(&self) -> Self {
        Atom { kind: self.kind.clone(), sign: self.sign.flip() }
    }

    pub fn is_inverse_of(&self, other: &Atom) -> bool {
        self.sign != other.sign && self.kind == other.kind
    }

    /// The bracket body, if this atom is a bracket of either sign.
    pub fn body(&self) -> Option<&Word> {
        match &self.kind {
            AtomKind::Br(b) => Some(b),
            AtomKind::Gen(_) => None,
        }
    }

    pub fn is_positive_bracket(&self) -> bool {
        self.sign == Sign::Pos && matches!(self.kind, AtomKind::Br(_))
    }

    pub fn is_negative_bracket(&self) -> bool {
        self.sign == Sign::Neg && matches!(self.kind, AtomKind::Br(_))
    }

    pub fn depth(&self) -> usize {
        match &self.kind {
            AtomKind::Gen(_) => 0,
            AtomKind::Br(b) => b.depth() + 1,
        }
    }
}

impl Letter for Atom {
    fn inverse(&self) -> Self {
        Atom::inverse(self)
    }
}

/// A reduced bracketed word. The empty word is the identity `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    atoms: Vec<Atom>,
}

impl Word {
    pub fn identity() -> Self {
        Word { atoms: Vec::new() }
    }

    pub fn gen(symbol: Symbol) -> Self {
        Word { atoms: vec![Atom::gen(symbol)] }
    }

    pub fn atom(atom: Atom) -> Self {
        Word { atoms: vec![atom] }
    }

    /// Reduce an arbitrary atom sequence. Bracket bodies are already reduced
    /// words, so only the top level needs cancelling.
    pub fn from_atoms<I: IntoIterator<Item = Atom>>(atoms: I) -> Self {
        let mut stack = Vec::new();
        for a in atoms {
            push_reduced(&mut stack, a);
        }
        Word { atoms: stack }
    }

    /// Wraps a sequence the caller knows to be reduced.
    pub(crate) fn from_reduced(atoms: Vec<Atom>) -> Self {
        debug_assert!(atoms.windows(2).all(|p| !p[0].is_inverse_of(&p[1])));
        Word { atoms }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn into_atoms(self) -> Vec<Atom> {
        self.atoms
    }

    pub fn is_identity(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut stack = self.atoms.clone();
        for a in &other.atoms {
            push_reduced(&mut stack, a.clone());
        }
        Word { atoms: stack }
    }

    pub fn inv(&self) -> Word {
        Word { atoms: self.atoms.iter().rev().map(Atom::inverse).collect() }
    }

    /// The operator of the free operated group: `w ↦ <w>`.
    pub fn bracket(&self) -> Word {
        Word::atom(Atom::bracket(self.clone()))
    }

    /// Maximal bracket nesting.
    pub fn depth(&self) -> usize {
        self.atoms.iter().map(Atom::depth).max().unwrap_or(0)
    }

    /// Number of factors in the standard factorization.
    pub fn breadth(&self) -> usize {
        self.atoms.len()
    }

    /// Generators occurring anywhere in the word, bracket bodies included.
    pub fn symbols(&self) -> Vec<Symbol> {
        fn walk(w: &Word, out: &mut Vec<Symbol>) {
            for a in &w.atoms {
                match &a.kind {
                    AtomKind::Gen(s) => {
                        if !out.contains(s) {
                            out.push(s.clone());
                        }
                    }
                    AtomKind::Br(b) => walk(b, out),
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

impl std::ops::Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        Word::mul(self, rhs)
    }
}
