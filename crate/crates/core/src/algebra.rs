//! Group interfaces used as evaluation targets.

use std::collections::HashMap;
use std::fmt::Debug;

use thiserror::Error;

use crate::words::Symbol;

/// A group given by its operations. Elements are opaque handles and equality
/// is whatever the carrier says it is.
pub trait Group {
    type Elem: Clone + PartialEq + Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// `a b a^-1`
    fn conj(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(a, b), &self.inv(a))
    }
}

/// A group with an arbitrary self-map. No law is assumed.
pub trait Operated: Group {
    fn op(&self, a: &Self::Elem) -> Self::Elem;
}

/// Carriers small enough to list, so laws can be checked exhaustively.
pub trait Enumerable: Group {
    fn elements(&self) -> Vec<Self::Elem>;
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("generator {0} has no assigned image")]
    Unassigned(Symbol),
}

/// Images of generators in a target carrier.
#[derive(Clone, Debug)]
pub struct Assignment<E> {
    images: HashMap<Symbol, E>,
}

impl<E> Default for Assignment<E> {
    fn default() -> Self {
        Assignment { images: HashMap::new() }
    }
}

impl<E: Clone> Assignment<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, symbol: Symbol, image: E) -> Self {
        self.images.insert(symbol, image);
        self
    }

    pub fn insert(&mut self, symbol: Symbol, image: E) {
        self.images.insert(symbol, image);
    }

    pub fn get(&self, symbol: &Symbol) -> Result<&E, EvalError> {
        self.images.get(symbol).ok_or_else(|| EvalError::Unassigned(symbol.clone()))
    }
}

impl<E: Clone> FromIterator<(Symbol, E)> for Assignment<E> {
    fn from_iter<I: IntoIterator<Item = (Symbol, E)>>(iter: I) -> Self {
        Assignment { images: iter.into_iter().collect() }
    }
}

/// A pair of elements witnessing that a two-variable law fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation<E> {
    pub left: E,
    pub right: E,
}

/// `D(gh) = D(g) · g D(h) g^-1` for every pair.
pub fn find_differential_violation<G: Operated + Enumerable>(g: &G) -> Option<Violation<G::Elem>> {
    first_violation(g, |a, b| {
        let lhs = g.op(&g.mul(a, b));
        let rhs = g.mul(&g.op(a), &g.conj(a, &g.op(b)));
        lhs == rhs
    })
}

/// `B(a) B(b) = B(a · B(a) b B(a)^-1)` for every pair.
pub fn find_rota_baxter_violation<G: Operated + Enumerable>(g: &G) -> Option<Violation<G::Elem>> {
    first_violation(g, |a, b| {
        let ba = g.op(a);
        let lhs = g.mul(&ba, &g.op(b));
        let rhs = g.op(&g.mul(a, &g.conj(&ba, b)));
        lhs == rhs
    })
}

fn first_violation<G: Enumerable>(g: &G, holds: impl Fn(&G::Elem, &G::Elem) -> bool) -> Option<Violation<G::Elem>> {
    let elems = g.elements();
    for a in &elems {
        for b in &elems {
            if !holds(a, b) {
                return Some(Violation { left: a.clone(), right: b.clone() });
            }
        }
    }
    None
}
