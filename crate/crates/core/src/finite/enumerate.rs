use thiserror::Error;

use super::group::{FiniteGroup, ENUMERATION_BOUND};
use super::laws::{IdentityKind, OperatorMap};

/// Default number of candidate extensions the search may try.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("group of order {order} exceeds the enumeration bound {bound}")]
    TooLarge { order: usize, bound: usize },
    #[error("search budget of {0} candidate checks exhausted")]
    BudgetExceeded(u64),
}

/// Every operator satisfying `kind`, in lexicographic order of image vectors.
///
/// Images are assigned in element order. After each assignment every pair
/// whose law is already determined by the partial map is tested, and a
/// failure prunes the whole subtree. Each tried image costs one unit of
/// `budget`.
pub fn enumerate_operators(
    g: &FiniteGroup,
    kind: &IdentityKind,
    budget: u64,
) -> Result<Vec<OperatorMap>, EnumerateError> {
    let n = g.order();
    if n > ENUMERATION_BOUND {
        return Err(EnumerateError::TooLarge { order: n, bound: ENUMERATION_BOUND });
    }
    let mut search = Search { g, kind, budget, spent: 0, partial: vec![None; n], found: Vec::new() };
    search.extend(0)?;
    Ok(search.found)
}

struct Search<'a> {
    g: &'a FiniteGroup,
    kind: &'a IdentityKind,
    budget: u64,
    spent: u64,
    partial: Vec<Option<usize>>,
    found: Vec<OperatorMap>,
}

impl Search<'_> {
    fn extend(&mut self, next: usize) -> Result<(), EnumerateError> {
        let n = self.g.order();
        if next == n {
            let images = self.partial.iter().map(|i| i.expect("complete")).collect();
            self.found.push(OperatorMap::from_images(self.g, images).expect("images in range"));
            return Ok(());
        }
        for image in 0..n {
            self.spent += 1;
            if self.spent > self.budget {
                return Err(EnumerateError::BudgetExceeded(self.budget));
            }
            self.partial[next] = Some(image);
            if self.consistent() {
                self.extend(next + 1)?;
            }
        }
        self.partial[next] = None;
        Ok(())
    }

    fn consistent(&self) -> bool {
        let n = self.g.order();
        let p = |i: usize| self.partial[i];
        (0..n).all(|a| (0..n).all(|b| self.kind.holds_at(self.g, p, a, b) != Some(false)))
    }
}
