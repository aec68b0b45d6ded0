//! The free Rota-Baxter group of weight 1.
//!
//! Its carrier is the set of Rota-Baxter words: reduced bracketed words with
//! no two adjacent brackets of the same sign, at any nesting level. The
//! operator is the bracket and the product is the diamond product of
//! [`diamond`], which merges adjacent same-sign brackets.

mod diamond;
mod rewrite;

use std::fmt;

use thiserror::Error;

use crate::algebra::{find_rota_baxter_violation, Assignment, Enumerable, EvalError, Group, Operated, Violation};
use crate::operated::eval_operated;
use crate::words::{Atom, Word};

pub use diamond::{ad_diamond, diamond, Diamond, DiamondError, DEFAULT_STEP_LIMIT};
pub use rewrite::diamond_rewrite;

/// Two adjacent same-sign brackets, reported with the word they occur in.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("adjacent {kind} brackets {left} {right} in {context}")]
pub struct RbWordViolation {
    pub kind: &'static str,
    pub left: String,
    pub right: String,
    pub context: String,
}

/// First same-sign bracket adjacency, searching the top level before bodies.
pub fn find_rb_violation(w: &Word) -> Option<RbWordViolation> {
    for pair in w.atoms().windows(2) {
        let kind = if pair[0].is_positive_bracket() && pair[1].is_positive_bracket() {
            "positive"
        } else if pair[0].is_negative_bracket() && pair[1].is_negative_bracket() {
            "negative"
        } else {
            continue;
        };
        return Some(RbWordViolation {
            kind,
            left: pair[0].to_string(),
            right: pair[1].to_string(),
            context: w.to_string(),
        });
    }
    w.atoms().iter().filter_map(Atom::body).find_map(find_rb_violation)
}

/// True iff no adjacent same-sign brackets occur at any depth.
pub fn is_rb_word(w: &Word) -> bool {
    find_rb_violation(w).is_none()
}

/// A word known to satisfy [`is_rb_word`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RbWord(Word);

impl RbWord {
    pub fn new(w: Word) -> Result<Self, RbWordViolation> {
        match find_rb_violation(&w) {
            Some(v) => Err(v),
            None => Ok(RbWord(w)),
        }
    }

    pub(crate) fn from_word_unchecked(w: Word) -> Self {
        debug_assert!(is_rb_word(&w), "not a Rota-Baxter word: {w}");
        RbWord(w)
    }

    pub fn identity() -> Self {
        RbWord(Word::identity())
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn atoms(&self) -> &[Atom] {
        self.0.atoms()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }
}

impl fmt::Display for RbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The Rota-Baxter operator of the free object: `w ↦ <w>`.
pub fn rb_op(w: &RbWord) -> RbWord {
    RbWord(w.0.bracket())
}

/// Group inverse. Reversal keeps the same-sign-free condition because
/// flipping every sign maps positive pairs to negative pairs and back.
pub fn rb_inv(w: &RbWord) -> RbWord {
    RbWord(w.0.inv())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RbTargetError<E: std::fmt::Debug> {
    #[error("operator violates B(g)B(h) = B(g B(g) h B(g)^-1) at ({:?}, {:?})", .0.left, .0.right)]
    RotaBaxter(Violation<E>),
}

/// An operated group whose operator satisfies the weight-1 Rota-Baxter
/// relation.
#[derive(Clone, Debug)]
pub struct RbTarget<T> {
    inner: T,
}

impl<T: Operated + Enumerable> RbTarget<T> {
    pub fn validate(inner: T) -> Result<Self, RbTargetError<T::Elem>> {
        match find_rota_baxter_violation(&inner) {
            Some(v) => Err(RbTargetError::RotaBaxter(v)),
            None => Ok(RbTarget { inner }),
        }
    }
}

impl<T: Operated> RbTarget<T> {
    /// For carriers that cannot be enumerated. The caller vouches for the law.
    pub fn attested(inner: T) -> Self {
        RbTarget { inner }
    }

    pub fn inner(&self) -> &T {
        &self.inner
    }
}

/// The unique Rota-Baxter homomorphism extending `f`.
///
/// On a standard factorization this is the same structural recursion as the
/// operated evaluator: `<w> ↦ B(f(w))`, `<w>^-1 ↦ B(f(w))^-1`, factors
/// multiplied in order.
pub fn eval_rb<T: Operated>(w: &RbWord, f: &Assignment<T::Elem>, target: &RbTarget<T>) -> Result<T::Elem, EvalError> {
    eval_operated(&w.0, f, &target.inner)
}

/// `(RBW(X), ⋄, <·>)` as a target. Panics if the diamond step guard fires,
/// which only happens on an implementation bug.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeRotaBaxter;

impl Group for FreeRotaBaxter {
    type Elem = RbWord;

    fn identity(&self) -> RbWord {
        RbWord::identity()
    }

    fn mul(&self, a: &RbWord, b: &RbWord) -> RbWord {
        diamond(a, b).expect("diamond product exceeded its step guard")
    }

    fn inv(&self, a: &RbWord) -> RbWord {
        rb_inv(a)
    }
}

impl Operated for FreeRotaBaxter {
    fn op(&self, a: &RbWord) -> RbWord {
        rb_op(a)
    }
}
