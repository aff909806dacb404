//! Dense labelings of a grid's vertices and edges.
//!
//! These are candidate labelings: construction only checks that the array
//! has the right length. Bijectivity and the magic property are the
//! verifier's business.

use crate::error::{Error, Result};
use crate::grid::{EdgeId, GridSpec, VertexCoord};
use serde::{Deserialize, Serialize};

pub type Label = i64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelKind {
    Vertex,
    Edge,
    Total,
}

impl LabelKind {
    pub fn as_str(self) -> &'static str {
        match self {
            LabelKind::Vertex => "vertex",
            LabelKind::Edge => "edge",
            LabelKind::Total => "total",
        }
    }
}

impl std::str::FromStr for LabelKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "vertex" => Ok(LabelKind::Vertex),
            "edge" => Ok(LabelKind::Edge),
            "total" => Ok(LabelKind::Total),
            other => Err(format!("unknown labeling kind {other:?}")),
        }
    }
}

fn check_len(what: &str, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::SpecMismatch(format!(
            "{what} has {got} entries, grid needs {want}"
        )));
    }
    Ok(())
}

/// Vertex labels indexed by vertex rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexLabeling {
    spec: GridSpec,
    labels: Vec<Label>,
}

impl VertexLabeling {
    pub fn new(spec: GridSpec, labels: Vec<Label>) -> Result<Self> {
        check_len("vertex labeling", labels.len(), spec.vertex_count())?;
        Ok(VertexLabeling { spec, labels })
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn into_labels(self) -> Vec<Label> {
        self.labels
    }

    pub fn get(&self, v: &VertexCoord) -> Result<Label> {
        Ok(self.labels[self.spec.vertex_rank(v)?])
    }

    /// Shorthand for tests and fixtures: the label at 1-based coordinates.
    pub fn at(&self, x: &[usize]) -> Label {
        self.get(&VertexCoord::new(x)).expect("coordinate in range")
    }

    /// Exchanges the labels of two vertices.
    pub fn swap(&mut self, a: &VertexCoord, b: &VertexCoord) -> Result<()> {
        let (i, j) = (self.spec.vertex_rank(a)?, self.spec.vertex_rank(b)?);
        self.labels.swap(i, j);
        Ok(())
    }
}

/// Edge labels indexed in `GridSpec::enumerate_edges` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabeling {
    spec: GridSpec,
    labels: Vec<Label>,
}

impl EdgeLabeling {
    pub fn new(spec: GridSpec, labels: Vec<Label>) -> Result<Self> {
        check_len("edge labeling", labels.len(), spec.edge_count())?;
        Ok(EdgeLabeling { spec, labels })
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn into_labels(self) -> Vec<Label> {
        self.labels
    }

    pub fn get(&self, e: &EdgeId) -> Result<Label> {
        Ok(self.labels[self.spec.edge_index(e)?])
    }

    /// The label of the edge between two adjacent 1-based points.
    pub fn between(&self, a: &[usize], b: &[usize]) -> Label {
        let e = EdgeId::between(&VertexCoord::new(a), &VertexCoord::new(b)).expect("points are adjacent");
        self.get(&e).expect("edge in range")
    }
}

/// A labeling of `V ∪ E` with vertex labels in `[1, |V|]` and edge labels in
/// `[|V| + 1, |V| + |E|]` when well formed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalLabeling {
    spec: GridSpec,
    vertex_labels: Vec<Label>,
    edge_labels: Vec<Label>,
}

impl TotalLabeling {
    pub fn new(spec: GridSpec, vertex_labels: Vec<Label>, edge_labels: Vec<Label>) -> Result<Self> {
        check_len("vertex labels", vertex_labels.len(), spec.vertex_count())?;
        check_len("edge labels", edge_labels.len(), spec.edge_count())?;
        Ok(TotalLabeling {
            spec,
            vertex_labels,
            edge_labels,
        })
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn vertex_labels(&self) -> &[Label] {
        &self.vertex_labels
    }

    pub fn edge_labels(&self) -> &[Label] {
        &self.edge_labels
    }

    pub fn vertex(&self, v: &VertexCoord) -> Result<Label> {
        Ok(self.vertex_labels[self.spec.vertex_rank(v)?])
    }

    pub fn edge(&self, e: &EdgeId) -> Result<Label> {
        Ok(self.edge_labels[self.spec.edge_index(e)?])
    }
}
