//! The diamond product.
//!
//! `u ⋄ v` is computed by pushing the factors of `v` one at a time onto the
//! standard factorization of `u`. Pushing an atom onto a stack whose top is
//! `t` either cancels (`t` is its inverse), merges (both positive or both
//! negative brackets), or appends. Merged atoms are pushed again, so
//! cancellations that expose a new same-sign pair keep collapsing.
//!
//! Merging two positive brackets is
//!
//! ```text
//! <ū> ⋄ <v̄> = <ū ⋄ AD_u v̄>
//! AD_u v̄    = (u ⋄ v̄_1) v̄_2 ⋯ v̄_{k-1} (u ⋄ <w>)^-1   if v̄_k = <w>^-1
//!           = (u ⋄ v̄) u^-1                           otherwise
//! ```
//!
//! and two negative brackets merge as `<ū>^-1 ⋄ <v̄>^-1 = (<v̄> ⋄ <ū>)^-1`.

use thiserror::Error;

use super::RbWord;
use crate::words::{Atom, Word};

/// Per-product step budget.
pub const DEFAULT_STEP_LIMIT: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiamondError {
    #[error("diamond product exceeded its guard of {0} steps")]
    StepLimit(u64),
    #[error("AD twist needs a positive bracket on the left, got {0}")]
    NotPositiveBracket(String),
}

/// A diamond computation with its own step counter.
#[derive(Debug, Clone)]
pub struct Diamond {
    limit: u64,
    steps: u64,
}

impl Default for Diamond {
    fn default() -> Self {
        Diamond::with_limit(DEFAULT_STEP_LIMIT)
    }
}

impl Diamond {
    pub fn with_limit(limit: u64) -> Self {
        Diamond { limit, steps: 0 }
    }

    /// Steps spent so far.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn product(&mut self, u: &RbWord, v: &RbWord) -> Result<RbWord, DiamondError> {
        let atoms = self.product_atoms(u.as_word(), v.atoms())?;
        Ok(RbWord::from_word_unchecked(Word::from_reduced(atoms)))
    }

    /// `AD_u v̄` for a positive bracket `u`.
    pub fn ad(&mut self, u: &Atom, vbar: &RbWord) -> Result<RbWord, DiamondError> {
        if !u.is_positive_bracket() {
            return Err(DiamondError::NotPositiveBracket(u.to_string()));
        }
        let atoms = self.ad_atoms(u, vbar.as_word())?;
        Ok(RbWord::from_word_unchecked(Word::from_reduced(atoms)))
    }

    fn tick(&mut self) -> Result<(), DiamondError> {
        self.steps += 1;
        if self.steps > self.limit {
            Err(DiamondError::StepLimit(self.limit))
        } else {
            Ok(())
        }
    }

    fn product_atoms(&mut self, u: &Word, v: &[Atom]) -> Result<Vec<Atom>, DiamondError> {
        let mut stack = u.atoms().to_vec();
        for a in v {
            self.push(&mut stack, a.clone())?;
        }
        Ok(stack)
    }

    fn push(&mut self, stack: &mut Vec<Atom>, mut atom: Atom) -> Result<(), DiamondError> {
        loop {
            self.tick()?;
            let Some(top) = stack.last() else {
                stack.push(atom);
                return Ok(());
            };
            if top.is_inverse_of(&atom) {
                stack.pop();
                return Ok(());
            }
            if top.is_positive_bracket() && atom.is_positive_bracket() {
                let top = stack.pop().expect("nonempty");
                atom = self.merge_positive(top.body().unwrap(), atom.body().unwrap())?;
            } else if top.is_negative_bracket() && atom.is_negative_bracket() {
                let top = stack.pop().expect("nonempty");
                atom = self.merge_positive(atom.body().unwrap(), top.body().unwrap())?.inverse();
            } else {
                stack.push(atom);
                return Ok(());
            }
        }
    }

    /// `<ubar> ⋄ <vbar>`, always a single positive bracket.
    fn merge_positive(&mut self, ubar: &Word, vbar: &Word) -> Result<Atom, DiamondError> {
        let u = Atom::bracket(ubar.clone());
        let ad = self.ad_atoms(&u, vbar)?;
        let body = self.product_atoms(ubar, &ad)?;
        Ok(Atom::bracket(Word::from_reduced(body)))
    }

    fn ad_atoms(&mut self, u: &Atom, vbar: &Word) -> Result<Vec<Atom>, DiamondError> {
        let factors = vbar.atoms();
        // v̄ = 1: (u ⋄ 1) u^-1 = 1
        let Some(last) = factors.last() else {
            return Ok(Vec::new());
        };
        let (middle, closing) = if last.is_negative_bracket() {
            let ubar = u.body().expect("u is a bracket");
            let merged = self.merge_positive(ubar, last.body().unwrap())?;
            (&factors[..factors.len() - 1], merged.inverse())
        } else {
            (factors, u.inverse())
        };
        let mut stack = vec![u.clone()];
        for a in middle {
            self.push(&mut stack, a.clone())?;
        }
        self.push(&mut stack, closing)?;
        Ok(stack)
    }
}

/// The group product of the free Rota-Baxter group.
pub fn diamond(u: &RbWord, v: &RbWord) -> Result<RbWord, DiamondError> {
    Diamond::default().product(u, v)
}

/// `AD_u v̄` computed by its branch formula.
pub fn ad_diamond(u: &Atom, vbar: &RbWord) -> Result<RbWord, DiamondError> {
    Diamond::default().ad(u, vbar)
}
