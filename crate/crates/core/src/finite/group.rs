use std::collections::HashMap;

use thiserror::Error;

/// Largest order accepted when validating a table.
pub const CHECK_BOUND: usize = 64;
/// Largest order accepted by operator enumeration.
pub const ENUMERATION_BOUND: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("empty group table")]
    Empty,
    #[error("group of order {order} exceeds the bound {bound}")]
    TooLarge { order: usize, bound: usize },
    #[error("element name {0:?} is declared twice")]
    DuplicateName(String),
    #[error("table has {found} rows, expected {expected}")]
    RowCount { found: usize, expected: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RowLength { row: usize, found: usize, expected: usize },
    #[error("table not closed: entry {entry:?} at row {row}, column {col} is not a declared element")]
    NotClosed { row: usize, col: usize, entry: String },
    #[error("no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    MissingInverse(String),
    #[error("not associative: ({a} {b}) {c} != {a} ({b} {c})")]
    NotAssociative { a: String, b: String, c: String },
}

/// A validated finite group. Elements are indices into `names`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a table given by element names.
    pub fn from_named_table(names: &[String], rows: &[Vec<String>]) -> Result<Self, GroupError> {
        validate_group(names, rows, CHECK_BOUND)
    }

    /// Validates the table `i * j = mul(i, j)` on the given names.
    pub fn from_fn(names: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Result<Self, GroupError> {
        let n = names.len();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let k = mul(i, j);
                if k >= n {
                    return Err(GroupError::NotClosed { row: i, col: j, entry: k.to_string() });
                }
                table.push(k);
            }
        }
        check_axioms(names, table, CHECK_BOUND)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv_idx(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a b a^-1`
    pub fn conj_idx(&self, a: usize, b: usize) -> usize {
        self.mul_idx(self.mul_idx(a, b), self.inv_idx(a))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul_idx(a, b) == self.mul_idx(b, a)))
    }

    /// Nonempty and closed under the product, hence a subgroup.
    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &i in set {
            member[i] = true;
        }
        !set.is_empty() && set.iter().all(|&a| set.iter().all(|&b| member[self.mul_idx(a, b)]))
    }

    /// Rows of element names, the inverse of [`FiniteGroup::from_named_table`].
    pub fn named_rows(&self) -> Vec<Vec<String>> {
        let n = self.order();
        (0..n).map(|i| (0..n).map(|j| self.names[self.mul_idx(i, j)].clone()).collect()).collect()
    }
}

/// Checks a named Cayley table exhaustively: unique names, square shape,
/// closure, identity, inverses and associativity.
pub fn validate_group(names: &[String], rows: &[Vec<String>], bound: usize) -> Result<FiniteGroup, GroupError> {
    let n = names.len();
    if n == 0 {
        return Err(GroupError::Empty);
    }
    if n > bound {
        return Err(GroupError::TooLarge { order: n, bound });
    }
    let mut index = HashMap::with_capacity(n);
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            return Err(GroupError::DuplicateName(name.clone()));
        }
    }
    if rows.len() != n {
        return Err(GroupError::RowCount { found: rows.len(), expected: n });
    }
    let mut table = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(GroupError::RowLength { row: r, found: row.len(), expected: n });
        }
        for (c, entry) in row.iter().enumerate() {
            match index.get(entry.as_str()) {
                Some(&k) => table.push(k),
                None => return Err(GroupError::NotClosed { row: r, col: c, entry: entry.clone() }),
            }
        }
    }
    check_axioms(names.to_vec(), table, bound)
}

fn check_axioms(names: Vec<String>, table: Vec<usize>, bound: usize) -> Result<FiniteGroup, GroupError> {
    let n = names.len();
    if n == 0 {
        return Err(GroupError::Empty);
    }
    if n > bound {
        return Err(GroupError::TooLarge { order: n, bound });
    }
    let mul = |a: usize, b: usize| table[a * n + b];
    let identity = (0..n).find(|&e| (0..n).all(|g| mul(e, g) == g && mul(g, e) == g)).ok_or(GroupError::NoIdentity)?;
    let mut inverse = Vec::with_capacity(n);
    for (g, name) in names.iter().enumerate() {
        let h = (0..n)
            .find(|&h| mul(g, h) == identity && mul(h, g) == identity)
            .ok_or_else(|| GroupError::MissingInverse(name.clone()))?;
        inverse.push(h);
    }
    for a in 0..n {
        for b in 0..n {
            let ab = mul(a, b);
            for c in 0..n {
                if mul(ab, c) != mul(a, mul(b, c)) {
                    return Err(GroupError::NotAssociative {
                        a: names[a].clone(),
                        b: names[b].clone(),
                        c: names[c].clone(),
                    });
                }
            }
        }
    }
    Ok(FiniteGroup { names, table, identity, inverse })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn rows(xs: &[&[&str]]) -> Vec<Vec<String>> {
        xs.iter().map(|r| strings(r)).collect()
    }

    #[test]
    fn z2_validates() {
        let g = FiniteGroup::from_named_table(&strings(&["e", "a"]), &rows(&[&["e", "a"], &["a", "e"]])).unwrap();
        assert_eq!(g.name(g.identity_index()), "e");
        assert_eq!(g.inv_idx(1), 1);
        assert!(g.is_abelian());
    }

    #[test]
    fn identity_need_not_come_first() {
        let g = FiniteGroup::from_named_table(&strings(&["a", "e"]), &rows(&[&["e", "a"], &["a", "e"]])).unwrap();
        assert_eq!(g.identity_index(), 1);
    }

    #[test]
    fn structural_errors() {
        assert_eq!(validate_group(&[], &[], 64), Err(GroupError::Empty));
        assert_eq!(
            FiniteGroup::from_named_table(&strings(&["e", "e"]), &rows(&[&["e", "e"], &["e", "e"]])),
            Err(GroupError::DuplicateName("e".into()))
        );
        assert!(matches!(
            FiniteGroup::from_named_table(&strings(&["e", "a"]), &rows(&[&["e", "a"], &["a", "b"]])),
            Err(GroupError::NotClosed { row: 1, col: 1, .. })
        ));
        assert!(matches!(
            FiniteGroup::from_named_table(&strings(&["e", "a"]), &rows(&[&["e", "a"]])),
            Err(GroupError::RowCount { .. })
        ));
        assert_eq!(
            FiniteGroup::from_named_table(&strings(&["e", "a"]), &rows(&[&["e", "a"], &["a", "a"]])),
            Err(GroupError::MissingInverse("a".into()))
        );
        assert_eq!(
            FiniteGroup::from_named_table(&strings(&["a", "b"]), &rows(&[&["a", "a"], &["b", "b"]])),
            Err(GroupError::NoIdentity)
        );
        let big: Vec<String> = (0..5).map(|i| format!("g{i}")).collect();
        assert!(matches!(validate_group(&big, &[], 4), Err(GroupError::TooLarge { order: 5, bound: 4 })));
    }

    #[test]
    fn nonassociative_loop_reports_a_triple() {
        // Order-5 loop: a Latin square with identity 0 that is not a group.
        let t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]];
        let names: Vec<String> = (0..5).map(|i| format!("q{i}")).collect();
        let table: Vec<Vec<String>> = t.iter().map(|r| r.iter().map(|&k| names[k].clone()).collect()).collect();
        let err = FiniteGroup::from_named_table(&names, &table).unwrap_err();
        let GroupError::NotAssociative { a, b, c } = err else { panic!("{err:?}") };
        let [a, b, c] = [a, b, c].map(|s| names.iter().position(|n| *n == s).unwrap());
        assert_ne!(t[t[a][b]][c], t[a][t[b][c]]);
    }

    #[test]
    fn subgroups() {
        let g = FiniteGroup::from_fn((0..4).map(|i| format!("g{i}")).collect(), |a, b| (a + b) % 4).unwrap();
        assert!(g.is_subgroup(&[0, 2]));
        assert!(!g.is_subgroup(&[0, 1]));
        assert!(!g.is_subgroup(&[]));
    }
}
