use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

/// A finite quiver with labelled vertices and named arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    ends: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::BadParameters(format!("duplicate vertex {v}")));
            }
        }
        let mut ends = Vec::with_capacity(arrows.len());
        for (i, a) in arrows.iter().enumerate() {
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::BadParameters(format!("duplicate arrow {}", a.name)));
            }
            let find = |v: &str| {
                vertices
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::UnknownVertex(v.to_string()))
            };
            ends.push((find(&a.src)?, find(&a.tgt)?));
        }
        Ok(Quiver { vertices, arrows, ends })
    }

    /// The cyclic quiver on `n` vertices `1..n` with arrows `a_i: i -> i+1`.
    pub fn crown(n: usize) -> Self {
        let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..=n)
            .map(|i| Arrow {
                name: format!("a{i}"),
                src: i.to_string(),
                tgt: (i % n + 1).to_string(),
            })
            .collect();
        Quiver::new(vertices, arrows).expect("crown quiver is well formed")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn source(&self, arrow: usize) -> usize {
        self.ends[arrow].0
    }

    pub fn target(&self, arrow: usize) -> usize {
        self.ends[arrow].1
    }

    /// Label of a path given in traversal order, written right to left
    /// (the first arrow traversed is the rightmost factor).
    pub fn path_label(&self, path: &[usize]) -> String {
        let short = self.arrows.iter().all(|a| a.name.chars().count() == 1);
        let names: Vec<&str> = path.iter().rev().map(|&a| self.arrows[a].name.as_str()).collect();
        if short {
            names.concat()
        } else {
            names.join("*")
        }
    }
}

/// A quiver with monomial relations, each a path in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    quiver: Quiver,
    relations: Vec<Vec<usize>>,
    field: FieldSpec,
}

impl QuiverPresentation {
    pub fn new(quiver: Quiver, relations: Vec<Vec<String>>, field: FieldSpec) -> Result<Self> {
        let mut rels = Vec::with_capacity(relations.len());
        for r in relations {
            if r.len() < 2 {
                return Err(Error::MalformedPath(format!(
                    "relation [{}] has length below 2",
                    r.join(", ")
                )));
            }
            let idx: Vec<usize> = r
                .iter()
                .map(|name| {
                    quiver
                        .arrow_index(name)
                        .ok_or_else(|| Error::MalformedPath(format!("unknown arrow {name}")))
                })
                .collect::<Result<_>>()?;
            for w in idx.windows(2) {
                if quiver.target(w[0]) != quiver.source(w[1]) {
                    return Err(Error::MalformedPath(format!(
                        "relation [{}] is not composable",
                        r.join(", ")
                    )));
                }
            }
            rels.push(idx);
        }
        Ok(QuiverPresentation { quiver, relations: rels, field })
    }

    /// The crown on `n` vertices modulo all paths of length `l >= 2`.
    pub fn truncated_crown(n: usize, l: usize, field: FieldSpec) -> Result<Self> {
        if n == 0 || l < 2 {
            return Err(Error::BadParameters(format!("crown with n = {n}, l = {l}")));
        }
        let quiver = Quiver::crown(n);
        let relations = (0..n)
            .map(|start| (0..l).map(|k| quiver.arrows()[(start + k) % n].name.clone()).collect())
            .collect();
        QuiverPresentation::new(quiver, relations, field)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Vec<usize>] {
        &self.relations
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Relations with duplicates and non-minimal generators removed: a
    /// relation containing a different relation as a contiguous subpath is
    /// dropped.
    pub fn minimal_relations(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for r in &self.relations {
            if out.contains(r) {
                continue;
            }
            let redundant = self
                .relations
                .iter()
                .any(|s| s.len() < r.len() && r.windows(s.len()).any(|w| w == s.as_slice()));
            if !redundant {
                out.push(r.clone());
            }
        }
        out
    }
}
