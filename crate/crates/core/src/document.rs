//! On-disk form of a labeling.
//!
//! Documents are single-line JSON with keys in sorted order, integers only,
//! and a trailing newline, so that saving a loaded document reproduces the
//! input byte for byte. Label arrays are stored in canonical-axis order
//! (vertex rank order and `enumerate_edges` order); `dims` keeps the
//! caller's axis order and `axis_permutation` says where each caller axis
//! went.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{canonicalize, AxisPermutation, EdgeId, GridSpec, VertexCoord};
use crate::induction::{build_labelings, combine_supermagic};
use crate::labeling::{EdgeLabeling, Label, LabelKind, TotalLabeling, VertexLabeling};

pub const FORMAT_VERSION: &str = "1";

// Field order is alphabetical: serde_json writes struct fields in declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    axis_permutation: Vec<usize>,
    dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    edge_labels: Option<Vec<Label>>,
    format_version: String,
    kind: LabelKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertex_labels: Option<Vec<Label>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelingDocument {
    dims: Vec<usize>,
    spec: GridSpec,
    permutation: AxisPermutation,
    kind: LabelKind,
    vertex_labels: Option<Vec<Label>>,
    edge_labels: Option<Vec<Label>>,
}

impl LabelingDocument {
    /// Builds the constructed labeling of the requested kind for `dims`
    /// given in any order.
    pub fn generate(dims: &[usize], kind: LabelKind) -> Result<Self> {
        let (spec, permutation) = canonicalize(dims)?;
        let (f, g) = build_labelings(&spec)?;
        let (vertex_labels, edge_labels) = match kind {
            LabelKind::Vertex => (Some(f.into_labels()), None),
            LabelKind::Edge => (None, Some(g.into_labels())),
            LabelKind::Total => {
                let t = combine_supermagic(&f, &g)?;
                (Some(t.vertex_labels().to_vec()), Some(t.edge_labels().to_vec()))
            }
        };
        Ok(LabelingDocument {
            dims: dims.to_vec(),
            spec,
            permutation,
            kind,
            vertex_labels,
            edge_labels,
        })
    }

    /// Wraps arbitrary canonical-order label arrays, checking their lengths.
    pub fn from_parts(
        dims: &[usize],
        kind: LabelKind,
        vertex_labels: Option<Vec<Label>>,
        edge_labels: Option<Vec<Label>>,
    ) -> Result<Self> {
        let (spec, permutation) = canonicalize(dims)?;
        let doc = LabelingDocument {
            dims: dims.to_vec(),
            spec,
            permutation,
            kind,
            vertex_labels,
            edge_labels,
        };
        doc.check_arrays()?;
        Ok(doc)
    }

    fn check_arrays(&self) -> Result<()> {
        let wants_vertices = self.kind != LabelKind::Edge;
        let wants_edges = self.kind != LabelKind::Vertex;
        for (present, want, arr, len, name) in [
            (
                self.vertex_labels.is_some(),
                wants_vertices,
                &self.vertex_labels,
                self.spec.vertex_count(),
                "vertex_labels",
            ),
            (
                self.edge_labels.is_some(),
                wants_edges,
                &self.edge_labels,
                self.spec.edge_count(),
                "edge_labels",
            ),
        ] {
            if present != want {
                return Err(Error::parse(format!(
                    "{name} {} for kind {}",
                    if want { "missing" } else { "not allowed" },
                    self.kind.as_str()
                )));
            }
            if let Some(a) = arr {
                if a.len() != len {
                    return Err(Error::parse(format!(
                        "length mismatch: {name} has {} entries, grid has {len}",
                        a.len()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn permutation(&self) -> &AxisPermutation {
        &self.permutation
    }

    pub fn kind(&self) -> LabelKind {
        self.kind
    }

    pub fn vertex_labels(&self) -> Option<&[Label]> {
        self.vertex_labels.as_deref()
    }

    pub fn edge_labels(&self) -> Option<&[Label]> {
        self.edge_labels.as_deref()
    }

    pub fn vertex_labeling(&self) -> Option<VertexLabeling> {
        let labels = self.vertex_labels.clone()?;
        VertexLabeling::new(self.spec.clone(), labels).ok()
    }

    pub fn edge_labeling(&self) -> Option<EdgeLabeling> {
        let labels = self.edge_labels.clone()?;
        EdgeLabeling::new(self.spec.clone(), labels).ok()
    }

    pub fn total_labeling(&self) -> Option<TotalLabeling> {
        if self.kind != LabelKind::Total {
            return None;
        }
        TotalLabeling::new(
            self.spec.clone(),
            self.vertex_labels.clone()?,
            self.edge_labels.clone()?,
        )
        .ok()
    }

    /// Canonical vertex for a point given in caller axis order.
    pub fn canonical_vertex(&self, caller: &[usize]) -> VertexCoord {
        VertexCoord(self.permutation.to_canonical(caller))
    }

    /// Canonical edge for an edge given in caller axis order.
    pub fn canonical_edge(&self, caller_base: &[usize], caller_axis: usize) -> EdgeId {
        EdgeId::new(
            self.canonical_vertex(caller_base),
            self.permutation.canonical_axis(caller_axis),
        )
    }

    /// Label of a vertex addressed in caller axis order.
    pub fn vertex_label(&self, caller: &[usize]) -> Result<Label> {
        let labels = self
            .vertex_labels
            .as_ref()
            .ok_or_else(|| Error::SpecMismatch("document has no vertex labels".into()))?;
        Ok(labels[self.spec.vertex_rank(&self.canonical_vertex(caller))?])
    }

    /// Label of the edge `{base, base + e_axis}` addressed in caller axis order.
    pub fn edge_label(&self, caller_base: &[usize], caller_axis: usize) -> Result<Label> {
        let labels = self
            .edge_labels
            .as_ref()
            .ok_or_else(|| Error::SpecMismatch("document has no edge labels".into()))?;
        if caller_axis == 0 || caller_axis > self.dims.len() {
            return Err(Error::CoordOutOfRange {
                coord: caller_base.to_vec(),
                dims: self.dims.clone(),
            });
        }
        Ok(labels[self
            .spec
            .edge_index(&self.canonical_edge(caller_base, caller_axis))?])
    }

    pub fn to_json(&self) -> String {
        let raw = RawDocument {
            axis_permutation: self.permutation.as_one_based().to_vec(),
            dims: self.dims.clone(),
            edge_labels: self.edge_labels.clone(),
            format_version: FORMAT_VERSION.to_string(),
            kind: self.kind,
            vertex_labels: self.vertex_labels.clone(),
        };
        let mut out = serde_json::to_string(&raw).expect("document serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        if raw.format_version != FORMAT_VERSION {
            return Err(Error::VersionMismatch {
                found: raw.format_version,
                expected: FORMAT_VERSION.to_string(),
            });
        }
        let (spec, permutation) = canonicalize(&raw.dims)?;
        if permutation.as_one_based() != raw.axis_permutation.as_slice() {
            return Err(Error::parse(format!(
                "axis_permutation {:?} does not match dims {:?} (expected {:?})",
                raw.axis_permutation,
                raw.dims,
                permutation.as_one_based()
            )));
        }
        let doc = LabelingDocument {
            dims: raw.dims,
            spec,
            permutation,
            kind: raw.kind,
            vertex_labels: raw.vertex_labels,
            edge_labels: raw.edge_labels,
        };
        doc.check_arrays()?;
        Ok(doc)
    }

    pub fn save<W: std::io::Write>(&self, mut out: W) -> Result<()> {
        out.write_all(self.to_json().as_bytes())?;
        Ok(())
    }

    pub fn load<R: std::io::Read>(mut input: R) -> Result<Self> {
        let mut text = String::new();
        input.read_to_string(&mut text)?;
        Self::from_json(&text)
    }

    /// One row per element: `kind,x1,...,xd,axis,label`, coordinates and
    /// axis in caller order, `axis` empty for vertices.
    pub fn to_csv(&self) -> String {
        let d = self.dims.len();
        let mut out = String::from("kind");
        for i in 1..=d {
            out.push_str(&format!(",x{i}"));
        }
        out.push_str(",axis,label\n");
        let join = |x: &[usize]| x.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        if let Some(labels) = &self.vertex_labels {
            for (x, l) in self.spec.vertices().zip(labels) {
                out.push_str(&format!(
                    "vertex,{},,{l}\n",
                    join(&self.permutation.to_caller(&x))
                ));
            }
        }
        if let Some(labels) = &self.edge_labels {
            for (e, l) in self.spec.enumerate_edges().zip(labels) {
                out.push_str(&format!(
                    "edge,{},{},{l}\n",
                    join(&self.permutation.to_caller(&e.base.0)),
                    self.permutation.caller_axis(e.axis)
                ));
            }
        }
        out
    }
}
