//! Quiver and poset file formats.

use std::fs;
use std::path::Path;

use hhkit_core::combinat::{Arrow, Poset, Quiver, QuiverPresentation};
use hhkit_core::FieldSpec;
use serde::Deserialize;

/// `"Q"`, `"F5"`, or `{"Fp": 5}`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum FieldJson {
    Name(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

impl FieldJson {
    pub fn resolve(&self) -> Result<FieldSpec, String> {
        match self {
            FieldJson::Name(s) => FieldSpec::parse(s).map_err(|e| e.to_string()),
            FieldJson::Prime { fp } => FieldSpec::prime(*fp).map_err(|e| e.to_string()),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    pub field: Option<FieldJson>,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub field: Option<FieldJson>,
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn pick_field(file: Option<&FieldJson>, flag: Option<FieldSpec>) -> Result<FieldSpec, String> {
    match (flag, file) {
        (Some(f), _) => Ok(f),
        (None, Some(f)) => f.resolve(),
        (None, None) => Ok(FieldSpec::Rationals),
    }
}

/// Reads a quiver presentation; `--field` overrides the file.
pub fn load_quiver(path: &Path, flag: Option<FieldSpec>) -> Result<QuiverPresentation, String> {
    let file: QuiverFile = read_json(path)?;
    let field = pick_field(file.field.as_ref(), flag)?;
    let quiver = Quiver::new(file.vertices, file.arrows).map_err(|e| e.to_string())?;
    QuiverPresentation::new(quiver, file.relations, field).map_err(|e| e.to_string())
}

pub fn load_poset(path: &Path, flag: Option<FieldSpec>) -> Result<(Poset, FieldSpec), String> {
    let file: PosetFile = read_json(path)?;
    let field = pick_field(file.field.as_ref(), flag)?;
    let poset = Poset::from_covers(file.elements, &file.covers).map_err(|e| e.to_string())?;
    Ok((poset, field))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_forms() {
        let q: FieldJson = serde_json::from_str("\"Q\"").unwrap();
        assert_eq!(q.resolve().unwrap(), FieldSpec::Rationals);
        let f: FieldJson = serde_json::from_str("{\"Fp\": 3}").unwrap();
        assert_eq!(f.resolve().unwrap(), FieldSpec::Prime(3));
        let bad: FieldJson = serde_json::from_str("{\"Fp\": 4}").unwrap();
        assert!(bad.resolve().is_err());
    }

    #[test]
    fn quiver_file_shape() {
        let text = r#"{"field": "Q", "vertices": ["1","2"], "arrows": [{"name":"a","src":"1","tgt":"2"}], "relations": []}"#;
        let f: QuiverFile = serde_json::from_str(text).unwrap();
        assert_eq!(f.arrows.len(), 1);
        assert!(serde_json::from_str::<QuiverFile>(r#"{"vertices": [], "arrows": [], "extra": 1}"#).is_err());
    }
}
