//! Finite groups given by Cayley tables, operator laws checked exhaustively,
//! brute-force operator enumeration and the projection operator of an exact
//! factorization.

pub mod catalog;
mod construct;
mod enumerate;
mod file;
mod group;
mod laws;

pub use construct::{convert_weight, projection_operator, ProjectionError};
pub use enumerate::{enumerate_operators, EnumerateError, DEFAULT_BUDGET};
pub use file::{load_group_file, FileError, GroupFile, LoadedGroup};
pub use group::{validate_group, FiniteGroup, GroupError, CHECK_BOUND, ENUMERATION_BOUND};
pub use laws::{
    check_identity, ActionError, CheckError, CheckOutcome, GroupAction, IdentityKind, OperatorError, OperatorMap,
    UnknownKind,
};

use crate::algebra::{Enumerable, Group, Operated};

/// A finite group with an operator, usable as an evaluation target.
/// Elements are indices.
#[derive(Clone, Debug)]
pub struct FiniteOperatedGroup {
    group: FiniteGroup,
    op: OperatorMap,
}

impl FiniteOperatedGroup {
    pub fn new(group: FiniteGroup, op: OperatorMap) -> Self {
        assert_eq!(op.images().len(), group.order(), "operator size must match the group");
        FiniteOperatedGroup { group, op }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn operator(&self) -> &OperatorMap {
        &self.op
    }
}

impl Group for FiniteOperatedGroup {
    type Elem = usize;

    fn identity(&self) -> usize {
        self.group.identity_index()
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.group.mul_idx(*a, *b)
    }

    fn inv(&self, a: &usize) -> usize {
        self.group.inv_idx(*a)
    }
}

impl Operated for FiniteOperatedGroup {
    fn op(&self, a: &usize) -> usize {
        self.op.apply(*a)
    }
}

impl Enumerable for FiniteOperatedGroup {
    fn elements(&self) -> Vec<usize> {
        (0..self.group.order()).collect()
    }
}
