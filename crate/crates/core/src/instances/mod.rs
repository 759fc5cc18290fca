//! Instance generators: benchmark families, the padding gadgets, and the
//! hardness reductions from classic problems.

mod bisection;
mod families;
mod gadgets;
mod pclique;
mod sat;
mod vertex_cover;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::error::InvalidInstance;
use crate::model::Instance;

pub use bisection::{bisection_threshold, bisection_witness, bisection_x_a_reach_twice, reduce_min_bisection};
pub use families::{gen_family, FamilyKind};
pub use gadgets::{build_decoration, build_uv_gadget};
pub use pclique::reduce_pclique;
pub use sat::{reduce_34sat, sat34_assignment_ordering, sat34_class_literals, Cnf};
pub use vertex_cover::{reduce_vertex_cover_list, reduce_vertex_cover_maxmin};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("source graph is not cubic (vertex {vertex} has degree {degree})")]
    NotCubic { vertex: usize, degree: usize },
    #[error("source graph has an odd number of vertices ({0})")]
    OddVertexCount(usize),
    #[error("source graph too small for the construction: {0}")]
    Regime(String),
    #[error("malformed formula: {0}")]
    MalformedFormula(String),
    #[error("constructed instance failed validation: {0}")]
    Invalid(#[from] InvalidInstance),
}

/// Role labels of a construction mapped to vertex ids; injective both ways.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NamedVertexMap {
    by_label: BTreeMap<String, usize>,
    by_vertex: BTreeMap<usize, String>,
}

impl NamedVertexMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Panics if the label or the vertex is already named.
    pub fn insert(&mut self, label: impl Into<String>, vertex: usize) {
        let label = label.into();
        assert!(!self.by_label.contains_key(&label), "label {label} named twice");
        if let Some(old) = self.by_vertex.insert(vertex, label.clone()) {
            panic!("vertex {vertex} named both {old} and {label}");
        }
        self.by_label.insert(label, vertex);
    }

    pub fn get(&self, label: &str) -> Option<usize> {
        self.by_label.get(label).copied()
    }

    pub fn label_of(&self, vertex: usize) -> Option<&str> {
        self.by_vertex.get(&vertex).map(String::as_str)
    }

    /// Adds every entry of `other` with `prefix` prepended to its label.
    pub fn merge_prefixed(&mut self, prefix: &str, other: NamedVertexMap) {
        for (label, v) in other.by_label {
            self.insert(format!("{prefix}{label}"), v);
        }
    }

    pub fn len(&self) -> usize {
        self.by_label.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_label.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.by_label.iter().map(|(l, &v)| (l.as_str(), v))
    }

    /// `label vertex` lines sorted by vertex id.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (v, label) in &self.by_vertex {
            let _ = writeln!(s, "{label} {v}");
        }
        s
    }
}

impl std::ops::Index<&str> for NamedVertexMap {
    type Output = usize;

    fn index(&self, label: &str) -> &usize {
        self.by_label.get(label).unwrap_or_else(|| panic!("no vertex labelled {label}"))
    }
}

/// Output of a reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub instance: Instance,
    pub names: NamedVertexMap,
}

pub(crate) fn binomial2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[should_panic(expected = "named both")]
    fn names_are_injective() {
        let mut m = NamedVertexMap::new();
        m.insert("a", 0);
        m.insert("b", 0);
    }

    #[test]
    fn prefixed_merge() {
        let mut inner = NamedVertexMap::new();
        inner.insert("a", 3);
        let mut m = NamedVertexMap::new();
        m.merge_prefixed("g1/", inner);
        assert_eq!(m["g1/a"], 3);
        assert_eq!(m.label_of(3), Some("g1/a"));
        assert_eq!(m.to_text(), "g1/a 3\n");
    }
}
