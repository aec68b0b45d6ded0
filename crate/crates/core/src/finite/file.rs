//! Group files: TOML documents with `elements`, `table` and optional
//! `operator`, `action` and `subgroups` keys.
//!
//! ```toml
//! elements = ["e", "a"]
//! table = [["e", "a"], ["a", "e"]]
//! operator = ["e", "a"]
//!
//! [subgroups]
//! trivial = ["e"]
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::group::{FiniteGroup, GroupError};
use super::laws::{ActionError, GroupAction, OperatorError, OperatorMap};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroups: Option<BTreeMap<String, Vec<String>>>,
}

#[derive(Debug, Error)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed group file: {0}")]
    Format(#[from] toml::de::Error),
    #[error("invalid group: {0}")]
    Group(#[from] GroupError),
    #[error("invalid operator: {0}")]
    Operator(#[from] OperatorError),
    #[error("invalid action: {0}")]
    Action(#[from] ActionError),
    #[error("subgroup {name} lists unknown element {element:?}")]
    Subgroup { name: String, element: String },
}

/// A validated group file.
#[derive(Debug, Clone)]
pub struct LoadedGroup {
    pub group: FiniteGroup,
    pub operator: Option<OperatorMap>,
    pub action: Option<GroupAction>,
    pub subgroups: BTreeMap<String, Vec<usize>>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(toml::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, FileError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| FileError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupFile { elements: g.names().to_vec(), table: g.named_rows(), operator: None, action: None, subgroups: None }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("group files always serialize")
    }

    pub fn validate(&self) -> Result<LoadedGroup, FileError> {
        let group = FiniteGroup::from_named_table(&self.elements, &self.table)?;
        let operator = self.operator.as_ref().map(|o| OperatorMap::from_names(&group, o)).transpose()?;
        let action = self.action.as_ref().map(|a| GroupAction::from_names(&group, a)).transpose()?;
        let mut subgroups = BTreeMap::new();
        for (name, members) in self.subgroups.iter().flatten() {
            let idx = members
                .iter()
                .map(|m| {
                    group.index_of(m).ok_or_else(|| FileError::Subgroup { name: name.clone(), element: m.clone() })
                })
                .collect::<Result<Vec<_>, _>>()?;
            subgroups.insert(name.clone(), idx);
        }
        Ok(LoadedGroup { group, operator, action, subgroups })
    }
}

/// Reads and validates a group file.
pub fn load_group_file(path: &Path) -> Result<LoadedGroup, FileError> {
    GroupFile::read(path)?.validate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::catalog;

    const Z2: &str = r#"
elements = ["e", "a"]
table = [["e", "a"], ["a", "e"]]
operator = ["e", "e"]

[subgroups]
whole = ["e", "a"]
"#;

    #[test]
    fn parses_and_validates() {
        let loaded = GroupFile::parse(Z2).unwrap().validate().unwrap();
        assert_eq!(loaded.group.order(), 2);
        assert_eq!(loaded.operator.unwrap().images(), [0, 0]);
        assert_eq!(loaded.subgroups["whole"], [0, 1]);
        assert!(loaded.action.is_none());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = format!("{Z2}\nextra = 1\n");
        assert!(matches!(GroupFile::parse(&text), Err(FileError::Format(_))));
        let text = Z2.replace("operator", "operators");
        assert!(GroupFile::parse(&text).is_err());
    }

    #[test]
    fn bad_contents() {
        let text = Z2.replace(r#"operator = ["e", "e"]"#, r#"operator = ["e", "b"]"#);
        assert!(matches!(GroupFile::parse(&text).unwrap().validate(), Err(FileError::Operator(_))));
        let text = Z2.replace(r#"whole = ["e", "a"]"#, r#"whole = ["e", "z"]"#);
        assert!(matches!(GroupFile::parse(&text).unwrap().validate(), Err(FileError::Subgroup { .. })));
        let text = Z2.replace(r#"["a", "e"]]"#, r#"["a", "a"]]"#);
        assert!(matches!(GroupFile::parse(&text).unwrap().validate(), Err(FileError::Group(_))));
    }

    #[test]
    fn round_trip_through_toml() {
        let g = catalog::symmetric3();
        let file = GroupFile::from_group(&g);
        let back = GroupFile::parse(&file.to_toml()).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.validate().unwrap().group, g);
    }
}
