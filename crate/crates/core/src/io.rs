//! JSON file formats for groups and cochains.
//!
//! A group file is `{"name", "order", "table"}` with the table row-major.
//! A cochain file is `{"group", "modulus", "degree", "exponents"}`, values
//! being exponents of a primitive `modulus`-th root of unity.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::group::Group;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub name: String,
    pub order: usize,
    pub table: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleFile {
    pub group: String,
    pub modulus: u32,
    pub degree: usize,
    pub exponents: Vec<u32>,
}

fn json_error(source: &str, e: serde_json::Error) -> Error {
    Error::Parse {
        location: format!("{source}:{}:{}", e.line(), e.column()),
        message: e.to_string(),
    }
}

fn semantic_error(source: &str, field: &str, message: impl Into<String>) -> Error {
    Error::Parse { location: format!("{source}: field `{field}`"), message: message.into() }
}

impl From<&Group> for GroupFile {
    fn from(g: &Group) -> Self {
        GroupFile { name: g.name().to_string(), order: g.order(), table: g.table().to_vec() }
    }
}

impl From<&Cochain> for CocycleFile {
    fn from(c: &Cochain) -> Self {
        CocycleFile {
            group: c.group().name().to_string(),
            modulus: c.modulus(),
            degree: c.degree(),
            exponents: c.exponents().to_vec(),
        }
    }
}

/// Parses a group and checks the group laws. `source` names the input in
/// error locations.
pub fn parse_group(text: &str, source: &str) -> Result<Group> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| json_error(source, e))?;
    if file.table.len() != file.order * file.order {
        return Err(semantic_error(
            source,
            "table",
            format!("{} entries for order {}", file.table.len(), file.order),
        ));
    }
    Group::from_table(file.name, file.order, file.table)
        .map_err(|e| semantic_error(source, "table", e.to_string()))
}

/// Parses a cochain over `group`. The recorded group name must match, and
/// cochains of degree 2 or 3 must satisfy the cocycle condition.
pub fn parse_cocycle(text: &str, source: &str, group: Arc<Group>) -> Result<Cochain> {
    let file: CocycleFile = serde_json::from_str(text).map_err(|e| json_error(source, e))?;
    if file.group != group.name() {
        return Err(semantic_error(
            source,
            "group",
            format!("cocycle is over `{}` but the group is `{}`", file.group, group.name()),
        ));
    }
    if file.modulus == 0 {
        return Err(semantic_error(source, "modulus", "must be positive"));
    }
    let expected = group.order().pow(file.degree as u32);
    if file.exponents.len() != expected {
        return Err(semantic_error(
            source,
            "exponents",
            format!("{} entries, expected {expected}", file.exponents.len()),
        ));
    }
    let c = Cochain::new(group, file.degree, file.modulus, file.exponents)
        .map_err(|e| semantic_error(source, "exponents", e.to_string()))?;
    if let Err(tuple) = c.is_cocycle() {
        return Err(semantic_error(
            source,
            "exponents",
            format!("cocycle condition fails at {tuple:?}"),
        ));
    }
    Ok(c)
}

pub fn load_group(path: &Path) -> Result<Group> {
    let text = std::fs::read_to_string(path)?;
    parse_group(&text, &path.display().to_string())
}

pub fn load_cocycle(path: &Path, group: Arc<Group>) -> Result<Cochain> {
    let text = std::fs::read_to_string(path)?;
    parse_cocycle(&text, &path.display().to_string(), group)
}

pub fn group_to_json(g: &Group) -> String {
    serde_json::to_string(&GroupFile::from(g)).expect("group serializes")
}

pub fn cocycle_to_json(c: &Cochain) -> String {
    serde_json::to_string(&CocycleFile::from(c)).expect("cochain serializes")
}

pub fn save_group(path: &Path, g: &Group) -> Result<()> {
    std::fs::write(path, group_to_json(g))?;
    Ok(())
}

pub fn save_cocycle(path: &Path, c: &Cochain) -> Result<()> {
    std::fs::write(path, cocycle_to_json(c))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{standard_cocycle, StandardType};

    #[test]
    fn group_round_trip() {
        let g = Group::symmetric(3).unwrap();
        let back = parse_group(&group_to_json(&g), "mem").unwrap();
        assert!(back.same_table(&g));
        assert_eq!(back.name(), g.name());
    }

    #[test]
    fn cocycle_round_trip() {
        let w = standard_cocycle(&[3, 3, 3], StandardType::III(1, 2, 3)).unwrap();
        let back = parse_cocycle(&cocycle_to_json(&w), "mem", w.group().clone()).unwrap();
        assert!(back.same_values(&w));
    }

    #[test]
    fn malformed_json_reports_line_and_column() {
        let err = parse_group("{\"name\": \"x\",\n \"order\": }", "g.json").unwrap_err();
        match err {
            Error::Parse { location, .. } => assert!(location.starts_with("g.json:2:"), "{location}"),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // 0 is the identity, but 1·(1·2) ≠ (1·1)·2.
        let text = r#"{"name":"bad","order":3,"table":[0,1,2,1,0,0,2,0,1]}"#;
        assert!(matches!(parse_group(text, "bad"), Err(Error::Parse { .. })));
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let g = Arc::new(Group::cyclic(3).unwrap().renamed("z3"));
        let mut exps = vec![0u32; 27];
        exps[13] = 1;
        let text = serde_json::to_string(&CocycleFile {
            group: "z3".into(),
            modulus: 3,
            degree: 3,
            exponents: exps,
        })
        .unwrap();
        let err = parse_cocycle(&text, "w.json", g).unwrap_err();
        assert!(err.to_string().contains("cocycle condition"), "{err}");
    }
}
