//! The free operated group `(G(X), <·>)` and its evaluator.

use crate::algebra::{Assignment, EvalError, Group, Operated};
use crate::words::{Atom, AtomKind, Sign, Word};

/// `P_X(w) = <w>`. Always a one-atom word, even for `w = 1`.
pub fn bracket(w: &Word) -> Word {
    w.bracket()
}

/// The unique operated-group homomorphism `G(X) → target` extending `f`.
///
/// Generators go through `f`, brackets through the target operator, inverse
/// atoms through carrier inversion and juxtaposition through the carrier
/// product.
pub fn eval_operated<T: Operated>(w: &Word, f: &Assignment<T::Elem>, target: &T) -> Result<T::Elem, EvalError> {
    let mut acc = target.identity();
    for a in w.atoms() {
        let x = eval_atom(a, f, target)?;
        acc = target.mul(&acc, &x);
    }
    Ok(acc)
}

fn eval_atom<T: Operated>(a: &Atom, f: &Assignment<T::Elem>, target: &T) -> Result<T::Elem, EvalError> {
    let positive = match &a.kind {
        AtomKind::Gen(s) => f.get(s)?.clone(),
        AtomKind::Br(body) => target.op(&eval_operated(body, f, target)?),
    };
    Ok(match a.sign {
        Sign::Pos => positive,
        Sign::Neg => target.inv(&positive),
    })
}

/// `G(X)` itself as a target, so the universal property can be exercised on
/// the free object.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeOperated;

impl Group for FreeOperated {
    type Elem = Word;

    fn identity(&self) -> Word {
        Word::identity()
    }

    fn mul(&self, a: &Word, b: &Word) -> Word {
        a.mul(b)
    }

    fn inv(&self, a: &Word) -> Word {
        a.inv()
    }
}

impl Operated for FreeOperated {
    fn op(&self, a: &Word) -> Word {
        a.bracket()
    }
}
