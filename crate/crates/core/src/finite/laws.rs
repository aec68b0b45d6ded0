use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::group::{FiniteGroup, CHECK_BOUND};

/// A self-map of a finite group, `images[i] = P(element i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OperatorMap {
    images: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OperatorError {
    #[error("operator has {found} images, the group has {expected} elements")]
    Length { found: usize, expected: usize },
    #[error("operator image {0:?} is not an element")]
    UnknownImage(String),
}

impl OperatorMap {
    pub fn identity(g: &FiniteGroup) -> Self {
        Self::from_fn(g, |i| i)
    }

    pub fn inversion(g: &FiniteGroup) -> Self {
        Self::from_fn(g, |i| g.inv_idx(i))
    }

    /// Every element goes to the identity.
    pub fn constant_identity(g: &FiniteGroup) -> Self {
        Self::from_fn(g, |_| g.identity_index())
    }

    pub fn from_fn(g: &FiniteGroup, f: impl Fn(usize) -> usize) -> Self {
        let images: Vec<usize> = (0..g.order()).map(f).collect();
        assert!(images.iter().all(|&k| k < g.order()), "operator image out of range");
        OperatorMap { images }
    }

    pub fn from_images(g: &FiniteGroup, images: Vec<usize>) -> Result<Self, OperatorError> {
        if images.len() != g.order() {
            return Err(OperatorError::Length { found: images.len(), expected: g.order() });
        }
        if let Some(k) = images.iter().find(|&&k| k >= g.order()) {
            return Err(OperatorError::UnknownImage(k.to_string()));
        }
        Ok(OperatorMap { images })
    }

    /// Images listed by name, parallel to the element list.
    pub fn from_names(g: &FiniteGroup, names: &[String]) -> Result<Self, OperatorError> {
        let images = names
            .iter()
            .map(|n| g.index_of(n).ok_or_else(|| OperatorError::UnknownImage(n.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_images(g, images)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &OperatorMap) -> OperatorMap {
        OperatorMap { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    /// `name -> name` pairs in element order.
    pub fn describe(&self, g: &FiniteGroup) -> String {
        (0..g.order()).map(|i| format!("{}->{}", g.name(i), g.name(self.images[i]))).collect::<Vec<_>>().join(" ")
    }
}

/// A left action of a finite group on its own carrier, `act(x, α)`, by
/// automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    order: usize,
    table: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ActionError {
    #[error("action table must be {expected}x{expected}")]
    Shape { expected: usize },
    #[error("action entry {0:?} is not an element")]
    UnknownEntry(String),
    #[error("the identity moves {0}")]
    IdentityMoves(String),
    #[error("act({x}{y}, {alpha}) != act({x}, act({y}, {alpha}))")]
    NotCompatible { x: String, y: String, alpha: String },
    #[error("act({x}, -) does not respect the product of {a} and {b}")]
    NotAutomorphism { x: String, a: String, b: String },
}

impl GroupAction {
    /// `rows[x][α] = act(x, α)`, validated exhaustively.
    pub fn new(g: &FiniteGroup, rows: Vec<Vec<usize>>) -> Result<Self, ActionError> {
        let n = g.order();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(ActionError::Shape { expected: n });
        }
        if let Some(k) = rows.iter().flatten().find(|&&k| k >= n) {
            return Err(ActionError::UnknownEntry(k.to_string()));
        }
        let action = GroupAction { order: n, table: rows.into_iter().flatten().collect() };
        action.validate(g)?;
        Ok(action)
    }

    pub fn from_names(g: &FiniteGroup, rows: &[Vec<String>]) -> Result<Self, ActionError> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|n| g.index_of(n).ok_or_else(|| ActionError::UnknownEntry(n.clone())))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(g, rows)
    }

    /// `act(x, α) = x α x^-1`
    pub fn adjoint(g: &FiniteGroup) -> Self {
        let n = g.order();
        let table = (0..n).flat_map(|x| (0..n).map(move |a| (x, a))).map(|(x, a)| g.conj_idx(x, a)).collect();
        GroupAction { order: n, table }
    }

    pub fn act(&self, x: usize, alpha: usize) -> usize {
        self.table[x * self.order + alpha]
    }

    fn validate(&self, g: &FiniteGroup) -> Result<(), ActionError> {
        let n = g.order();
        let e = g.identity_index();
        if let Some(a) = (0..n).find(|&a| self.act(e, a) != a) {
            return Err(ActionError::IdentityMoves(g.name(a).into()));
        }
        for x in 0..n {
            for y in 0..n {
                for a in 0..n {
                    if self.act(g.mul_idx(x, y), a) != self.act(x, self.act(y, a)) {
                        return Err(ActionError::NotCompatible {
                            x: g.name(x).into(),
                            y: g.name(y).into(),
                            alpha: g.name(a).into(),
                        });
                    }
                }
            }
        }
        for x in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if self.act(x, g.mul_idx(a, b)) != g.mul_idx(self.act(x, a), self.act(x, b)) {
                        return Err(ActionError::NotAutomorphism {
                            x: g.name(x).into(),
                            a: g.name(a).into(),
                            b: g.name(b).into(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Which functional equation to test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityKind {
    /// `P(gh) = P(g) P(h)`
    Endo,
    /// `D(gh) = D(g) · g D(h) g^-1`
    DiffPlus1,
    /// `D(gh) = (g D(h) g^-1) · D(g)`
    DiffMinus1,
    /// `B(g)B(h) = B(g · B(g) h B(g)^-1)`
    RbPlus1,
    /// `C(g)C(h) = C(C(g) h C(g)^-1 · g)`
    RbMinus1,
    /// `f(xy) = f(x) · act(x, f(y))`
    Crossed(GroupAction),
}

impl IdentityKind {
    pub fn tag(&self) -> &'static str {
        match self {
            IdentityKind::Endo => "endo",
            IdentityKind::DiffPlus1 => "diff1",
            IdentityKind::DiffMinus1 => "diff-1",
            IdentityKind::RbPlus1 => "rb1",
            IdentityKind::RbMinus1 => "rb-1",
            IdentityKind::Crossed(_) => "crossed",
        }
    }

    /// Whether the law holds at `(a, b)`. `None` when `p` is missing an
    /// image the law needs, which lets enumeration test partial maps.
    pub(crate) fn holds_at(
        &self,
        g: &FiniteGroup,
        p: impl Fn(usize) -> Option<usize>,
        a: usize,
        b: usize,
    ) -> Option<bool> {
        let m = |x, y| g.mul_idx(x, y);
        Some(match self {
            IdentityKind::Endo => p(m(a, b))? == m(p(a)?, p(b)?),
            IdentityKind::DiffPlus1 => p(m(a, b))? == m(p(a)?, g.conj_idx(a, p(b)?)),
            IdentityKind::DiffMinus1 => p(m(a, b))? == m(g.conj_idx(a, p(b)?), p(a)?),
            IdentityKind::RbPlus1 => {
                let ba = p(a)?;
                let lhs = m(ba, p(b)?);
                lhs == p(m(a, g.conj_idx(ba, b)))?
            }
            IdentityKind::RbMinus1 => {
                let ca = p(a)?;
                let lhs = m(ca, p(b)?);
                lhs == p(m(g.conj_idx(ca, b), a))?
            }
            IdentityKind::Crossed(action) => p(m(a, b))? == m(p(a)?, action.act(a, p(b)?)),
        })
    }
}

/// Names accepted on the command line: `endo`, `diff1`, `diff-1`, `rb1`,
/// `rb-1`. `crossed` needs an action and is resolved by the caller.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown identity kind {0:?}")]
pub struct UnknownKind(pub String);

impl FromStr for IdentityKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "endo" => Ok(IdentityKind::Endo),
            "diff1" => Ok(IdentityKind::DiffPlus1),
            "diff-1" => Ok(IdentityKind::DiffMinus1),
            "rb1" => Ok(IdentityKind::RbPlus1),
            "rb-1" => Ok(IdentityKind::RbMinus1),
            _ => Err(UnknownKind(s.to_string())),
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    /// The first failing ordered pair, in element order.
    Counterexample(usize, usize),
}

impl CheckOutcome {
    pub fn passed(self) -> bool {
        self == CheckOutcome::Pass
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("group of order {order} exceeds the check bound {bound}")]
    TooLarge { order: usize, bound: usize },
    #[error("operator has {found} images, the group has {expected} elements")]
    OperatorSize { found: usize, expected: usize },
    #[error("action is for a group of order {found}, expected {expected}")]
    ActionSize { found: usize, expected: usize },
}

/// Tests `kind` on every ordered pair.
pub fn check_identity(g: &FiniteGroup, p: &OperatorMap, kind: &IdentityKind) -> Result<CheckOutcome, CheckError> {
    let n = g.order();
    if n > CHECK_BOUND {
        return Err(CheckError::TooLarge { order: n, bound: CHECK_BOUND });
    }
    if p.images.len() != n {
        return Err(CheckError::OperatorSize { found: p.images.len(), expected: n });
    }
    if let IdentityKind::Crossed(action) = kind {
        if action.order != n {
            return Err(CheckError::ActionSize { found: action.order, expected: n });
        }
    }
    for a in 0..n {
        for b in 0..n {
            if kind.holds_at(g, |i| Some(p.apply(i)), a, b) == Some(false) {
                return Ok(CheckOutcome::Counterexample(a, b));
            }
        }
    }
    Ok(CheckOutcome::Pass)
}
