//! The free differential group `F{X} = F(ΔX)` on derived letters `x^(n)`.
//!
//! The operator is defined on single letters by
//! `D(x^(n)) = x^(n+1)`, `D((x^(n))^-1) = (x^(n))^-1 (x^(n+1))^-1 x^(n)`,
//! and on longer reduced words by splitting off the first letter:
//! `D(a w) = D(a) a D(w) a^-1`.

use thiserror::Error;

use crate::algebra::{find_differential_violation, Assignment, Enumerable, EvalError, Group, Operated, Violation};
use crate::words::{push_reduced, Letter, Sign, Symbol};

/// `x^(n)` or its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffLetter {
    pub symbol: Symbol,
    pub order: u32,
    pub sign: Sign,
}

impl DiffLetter {
    pub fn new(symbol: Symbol, order: u32) -> Self {
        DiffLetter { symbol, order, sign: Sign::Pos }
    }

    pub fn inverse(&self) -> Self {
        DiffLetter { sign: self.sign.flip(), ..self.clone() }
    }

    fn raised(&self) -> Self {
        DiffLetter { order: self.order + 1, ..self.clone() }
    }
}

impl Letter for DiffLetter {
    fn inverse(&self) -> Self {
        DiffLetter::inverse(self)
    }
}

/// A reduced word over `ΔX`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DiffWord {
    letters: Vec<DiffLetter>,
}

impl DiffWord {
    pub fn identity() -> Self {
        DiffWord::default()
    }

    pub fn letter(l: DiffLetter) -> Self {
        DiffWord { letters: vec![l] }
    }

    /// `x^(0)`
    pub fn gen(symbol: Symbol) -> Self {
        DiffWord::letter(DiffLetter::new(symbol, 0))
    }

    pub fn from_letters<I: IntoIterator<Item = DiffLetter>>(letters: I) -> Self {
        let mut stack = Vec::new();
        for l in letters {
            push_reduced(&mut stack, l);
        }
        DiffWord { letters: stack }
    }

    pub fn letters(&self) -> &[DiffLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &DiffWord) -> DiffWord {
        let mut stack = self.letters.clone();
        for l in &other.letters {
            push_reduced(&mut stack, l.clone());
        }
        DiffWord { letters: stack }
    }

    pub fn inv(&self) -> DiffWord {
        DiffWord { letters: self.letters.iter().rev().map(DiffLetter::inverse).collect() }
    }

    pub fn pow(&self, n: u32) -> DiffWord {
        (0..n).fold(DiffWord::identity(), |acc, _| acc.mul(self))
    }

    fn push(&mut self, l: DiffLetter) {
        push_reduced(&mut self.letters, l);
    }
}

/// Product of a sequence of words.
pub fn product<'a, I: IntoIterator<Item = &'a DiffWord>>(ws: I) -> DiffWord {
    ws.into_iter().fold(DiffWord::identity(), |acc, w| acc.mul(w))
}

fn d_letter(l: &DiffLetter) -> DiffWord {
    match l.sign {
        Sign::Pos => DiffWord::letter(l.raised()),
        Sign::Neg => {
            let base = l.inverse();
            DiffWord::from_letters([l.clone(), base.raised().inverse(), base])
        }
    }
}

/// The differential operator of the free differential group.
pub fn d(w: &DiffWord) -> DiffWord {
    // D(a_1 ... a_m) = D(a_1) a_1 D(a_2 ... a_m) a_1^-1, unrolled from the right.
    let mut acc = DiffWord::identity();
    for l in w.letters().iter().rev() {
        let mut next = d_letter(l);
        next.push(l.clone());
        next = next.mul(&acc);
        next.push(l.inverse());
        acc = next;
    }
    acc
}

/// `d` applied `n` times.
pub fn d_power(w: &DiffWord, n: u32) -> DiffWord {
    (0..n).fold(w.clone(), |acc, _| d(&acc))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("the product formula needs at least one factor")]
    EmptyProduct,
    #[error("the inverse-power formula needs n >= 1")]
    ZeroPower,
}

/// `(∏ d(g_i) g_i) (g_1 ⋯ g_n)^-1`, which equals `d(g_1 ⋯ g_n)` in any
/// differential group.
pub fn product_formula(gs: &[DiffWord]) -> Result<DiffWord, FormulaError> {
    if gs.is_empty() {
        return Err(FormulaError::EmptyProduct);
    }
    let mut acc = DiffWord::identity();
    for g in gs {
        acc = acc.mul(&d(g)).mul(g);
    }
    Ok(acc.mul(&product(gs).inv()))
}

/// `(g^-1 d(g)^-1)^n g^n`, which equals `d(g^-n)`.
pub fn inverse_power_formula(g: &DiffWord, n: u32) -> Result<DiffWord, FormulaError> {
    if n == 0 {
        return Err(FormulaError::ZeroPower);
    }
    let step = g.inv().mul(&d(g).inv());
    Ok(step.pow(n).mul(&g.pow(n)))
}

/// The endomorphism `x^(n) ↦ x^(n+1)` extended multiplicatively.
///
/// Unlike [`d`] this is a group homomorphism; it does not satisfy the
/// differential law.
pub fn shift_endo(w: &DiffWord) -> DiffWord {
    DiffWord { letters: w.letters().iter().map(DiffLetter::raised).collect() }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TargetError<E: std::fmt::Debug> {
    #[error("operator violates d(gh) = d(g) g d(h) g^-1 at ({:?}, {:?})", .0.left, .0.right)]
    Differential(Violation<E>),
}

/// An operated group whose operator is known to satisfy the weight-1
/// differential law.
#[derive(Clone, Debug)]
pub struct DiffTarget<T> {
    inner: T,
}

impl<T: Operated + Enumerable> DiffTarget<T> {
    /// Checks the law over all pairs.
    pub fn validate(inner: T) -> Result<Self, TargetError<T::Elem>> {
        match find_differential_violation(&inner) {
            Some(v) => Err(TargetError::Differential(v)),
            None => Ok(DiffTarget { inner }),
        }
    }
}

impl<T: Operated> DiffTarget<T> {
    /// For carriers that cannot be enumerated. The caller vouches for the law.
    pub fn attested(inner: T) -> Self {
        DiffTarget { inner }
    }

    pub fn inner(&self) -> &T {
        &self.inner
    }
}

/// The unique differential-group homomorphism extending `f`:
/// `x^(n) ↦ d^n(f(x))`.
pub fn eval_diff<T: Operated>(
    w: &DiffWord,
    f: &Assignment<T::Elem>,
    target: &DiffTarget<T>,
) -> Result<T::Elem, EvalError> {
    let t = &target.inner;
    let mut acc = t.identity();
    for l in w.letters() {
        let mut x = f.get(&l.symbol)?.clone();
        for _ in 0..l.order {
            x = t.op(&x);
        }
        if l.sign == Sign::Neg {
            x = t.inv(&x);
        }
        acc = t.mul(&acc, &x);
    }
    Ok(acc)
}

/// `F{X}` with its operator `D`, as a target.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeDifferential;

impl Group for FreeDifferential {
    type Elem = DiffWord;

    fn identity(&self) -> DiffWord {
        DiffWord::identity()
    }

    fn mul(&self, a: &DiffWord, b: &DiffWord) -> DiffWord {
        a.mul(b)
    }

    fn inv(&self, a: &DiffWord) -> DiffWord {
        a.inv()
    }
}

impl Operated for FreeDifferential {
    fn op(&self, a: &DiffWord) -> DiffWord {
        d(a)
    }
}
