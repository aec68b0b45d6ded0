use thiserror::Error;

use super::group::FiniteGroup;
use super::laws::OperatorMap;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProjectionError {
    #[error("the {0} factor is not a subgroup")]
    NotSubgroup(&'static str),
    #[error("factorization not exhaustive: {0} is not a product g1 g2")]
    NotExhaustive(String),
    #[error("the factors intersect nontrivially in {0}")]
    NontrivialIntersection(String),
}

/// For an exact factorization `G = G1 G2`, the map `g1 g2 ↦ g1`.
pub fn projection_operator(g: &FiniteGroup, g1: &[usize], g2: &[usize]) -> Result<OperatorMap, ProjectionError> {
    if !g.is_subgroup(g1) {
        return Err(ProjectionError::NotSubgroup("first"));
    }
    if !g.is_subgroup(g2) {
        return Err(ProjectionError::NotSubgroup("second"));
    }
    let mut first = vec![None; g.order()];
    for &a in g1 {
        for &b in g2 {
            first[g.mul_idx(a, b)] = Some(a);
        }
    }
    if let Some(missing) = first.iter().position(Option::is_none) {
        return Err(ProjectionError::NotExhaustive(g.name(missing).into()));
    }
    if let Some(&shared) = g1.iter().find(|&&a| a != g.identity_index() && g2.contains(&a)) {
        return Err(ProjectionError::NontrivialIntersection(g.name(shared).into()));
    }
    Ok(OperatorMap::from_fn(g, |i| first[i].expect("exhaustive")))
}

/// `C(g) = P(g^-1)`. Swaps weight 1 and weight −1 Rota-Baxter operators and
/// is its own inverse.
pub fn convert_weight(p: &OperatorMap, g: &FiniteGroup) -> OperatorMap {
    OperatorMap::from_fn(g, |i| p.apply(g.inv_idx(i)))
}
