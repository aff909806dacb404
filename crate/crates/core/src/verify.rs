//! Exhaustive checking of candidate labelings over every unit cube, and the
//! closed-form magic sums the construction is expected to hit.
//!
//! Only axis-aligned unit cubes are scanned: in a grid graph those are
//! exactly the subgraphs isomorphic to `Q_d`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{checked_add, checked_mul, checked_pow2, Error, Result};
use crate::grid::{row_major_strides, unrank, GridSpec};
use crate::labeling::{EdgeLabeling, Label, LabelKind, TotalLabeling, VertexLabeling};

/// Reports list at most this many distinct cube sums.
pub const MAX_REPORTED_SUMS: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagicReport {
    pub kind: LabelKind,
    /// Labels form a bijection onto `[1, count]` for the kind's element set.
    pub bijective: bool,
    /// Total labelings only: vertex labels are exactly `[1, |V|]`.
    pub vertex_range_ok: Option<bool>,
    /// Number of distinct cube sums observed.
    pub distinct_sums: usize,
    /// Smallest distinct cube sums, sorted, capped at [`MAX_REPORTED_SUMS`].
    pub cube_sum_values: Vec<Label>,
    pub magic: bool,
    pub magic_sum: Option<Label>,
    pub predicted_sum: Option<Label>,
    pub matches_prediction: Option<bool>,
}

impl MagicReport {
    /// Bijective, magic, and (for total labelings) supermagic.
    pub fn is_valid(&self) -> bool {
        self.bijective && self.magic && self.vertex_range_ok != Some(false)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PredictedSums {
    pub c_vertex: Label,
    pub c_edge: Label,
    pub c_total: Label,
}

impl PredictedSums {
    pub fn for_kind(&self, kind: LabelKind) -> Label {
        match kind {
            LabelKind::Vertex => self.c_vertex,
            LabelKind::Edge => self.c_edge,
            LabelKind::Total => self.c_total,
        }
    }
}

/// Magic sums of the constructed labelings, by the recursion on `d` alone.
pub fn closed_form_sums(spec: &GridSpec) -> Result<PredictedSums> {
    let dims: Vec<i64> = spec.dims().iter().map(|&n| n as i64).collect();
    let (n1, n2) = (dims[0], dims[1]);
    let area = n1 * n2;
    let mut s = if n1 % 2 == 1 || n2 % 2 == 0 {
        2 * (area + 1)
    } else {
        2 * (area + 2)
    };
    let mut s_edge = (2 * n1 - 1) * (2 * n2 - 1) + 1;

    for (k, &nd) in dims.iter().enumerate().skip(2) {
        let base = GridSpec::new(spec.dims()[..k].to_vec())?;
        let n = base.vertex_count() as i64;
        let m = base.edge_count() as i64;
        let d = k + 1;
        let half = checked_pow2(d - 2, "2^(d-2)")?;

        // 2S + 2^(d-1) (n_d - 1) N
        let lift = checked_mul(checked_mul(2 * half, nd - 1, "vertex sum")?, n, "vertex sum")?;
        let next_s = checked_add(checked_mul(2, s, "vertex sum")?, lift, "vertex sum")?;

        // S + 2S' + 2^(d-2) (n_d - 2) N + 2^(d-2) (2 n_d + (d - 1)(n_d - 1)) M
        let conn = checked_mul(checked_mul(half, nd - 2, "edge sum")?, n, "edge sum")?;
        let spread = checked_add(2 * nd, checked_mul(d as i64 - 1, nd - 1, "edge sum")?, "edge sum")?;
        let layer = checked_mul(checked_mul(half, spread, "edge sum")?, m, "edge sum")?;
        let mut next_edge = checked_add(s, checked_mul(2, s_edge, "edge sum")?, "edge sum")?;
        next_edge = checked_add(next_edge, conn, "edge sum")?;
        next_edge = checked_add(next_edge, layer, "edge sum")?;

        s = next_s;
        s_edge = next_edge;
    }

    let d = spec.dim();
    let cube_edges = checked_mul(d as i64, checked_pow2(d - 1, "2^(d-1)")?, "|E(Q_d)|")?;
    let shift = checked_mul(cube_edges, spec.vertex_count() as i64, "total sum")?;
    let c_total = checked_add(checked_add(s, s_edge, "total sum")?, shift, "total sum")?;
    Ok(PredictedSums {
        c_vertex: s,
        c_edge: s_edge,
        c_total,
    })
}

/// Rank offsets of every element of the unit cube relative to its corner.
struct CubeStencil {
    cube_strides: Vec<usize>,
    vertex_strides: Vec<usize>,
    vertex_offsets: Vec<usize>,
    // per axis: block strides and the absolute offsets of that axis' cube edges
    edge_axes: Vec<(Vec<usize>, Vec<usize>)>,
}

impl CubeStencil {
    fn new(spec: &GridSpec) -> Self {
        let d = spec.dim();
        let masks = 0..1usize << d;
        let bit = |mask: usize, i: usize| (mask >> (d - 1 - i)) & 1;
        let dot = |mask: usize, strides: &[usize]| -> usize {
            strides.iter().enumerate().map(|(i, &s)| bit(mask, i) * s).sum()
        };
        let vertex_offsets = masks.clone().map(|m| dot(m, spec.strides())).collect();
        let edge_axes = (1..=d)
            .map(|axis| {
                let block = spec.edge_block(axis);
                let offsets = masks
                    .clone()
                    .filter(|&m| bit(m, axis - 1) == 0)
                    .map(|m| block.offset + dot(m, &block.strides))
                    .collect();
                (block.strides.clone(), offsets)
            })
            .collect();
        CubeStencil {
            cube_strides: row_major_strides(&spec.cube_bounds()),
            vertex_strides: spec.strides().to_vec(),
            vertex_offsets,
            edge_axes,
        }
    }

    fn sum(&self, cube: usize, vertices: Option<&[Label]>, edges: Option<&[Label]>) -> i128 {
        let corner = unrank(cube, &self.cube_strides);
        let rank =
            |strides: &[usize]| -> usize { corner.iter().zip(strides).map(|(&x, &s)| (x - 1) * s).sum() };
        let mut total: i128 = 0;
        if let Some(labels) = vertices {
            let base = rank(&self.vertex_strides);
            total += self
                .vertex_offsets
                .iter()
                .map(|&o| labels[base + o] as i128)
                .sum::<i128>();
        }
        if let Some(labels) = edges {
            for (strides, offsets) in &self.edge_axes {
                let base = rank(strides);
                total += offsets.iter().map(|&o| labels[base + o] as i128).sum::<i128>();
            }
        }
        total
    }
}

/// Distinct per-cube sums; independent of how the cube range is partitioned.
fn distinct_cube_sums(
    spec: &GridSpec,
    vertices: Option<&[Label]>,
    edges: Option<&[Label]>,
) -> BTreeSet<i128> {
    let stencil = CubeStencil::new(spec);
    (0..spec.cube_count())
        .into_par_iter()
        .fold(BTreeSet::new, |mut acc, cube| {
            acc.insert(stencil.sum(cube, vertices, edges));
            acc
        })
        .reduce(BTreeSet::new, |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            a.extend(b);
            a
        })
}

/// True iff the labels are exactly `lo..=hi`, each once.
fn is_bijection_onto<'a>(labels: impl Iterator<Item = &'a Label>, lo: Label, hi: Label) -> bool {
    let width = (hi - lo + 1) as usize;
    let mut seen = vec![false; width];
    let mut count = 0usize;
    for &l in labels {
        if l < lo || l > hi || std::mem::replace(&mut seen[(l - lo) as usize], true) {
            return false;
        }
        count += 1;
    }
    count == width
}

fn report(
    spec: &GridSpec,
    kind: LabelKind,
    bijective: bool,
    vertex_range_ok: Option<bool>,
    sums: BTreeSet<i128>,
) -> Result<MagicReport> {
    let distinct_sums = sums.len();
    let cube_sum_values = sums
        .into_iter()
        .take(MAX_REPORTED_SUMS)
        .map(|s| Label::try_from(s).map_err(|_| Error::Overflow("cube sum".into())))
        .collect::<Result<Vec<_>>>()?;
    let magic = distinct_sums == 1;
    let magic_sum = magic.then(|| cube_sum_values[0]);
    let predicted_sum = closed_form_sums(spec).ok().map(|p| p.for_kind(kind));
    let matches_prediction = match (magic_sum, predicted_sum) {
        (Some(a), Some(b)) => Some(a == b),
        (None, Some(_)) => Some(false),
        _ => None,
    };
    Ok(MagicReport {
        kind,
        bijective,
        vertex_range_ok,
        distinct_sums,
        cube_sum_values,
        magic,
        magic_sum,
        predicted_sum,
        matches_prediction,
    })
}

fn same_spec(expected: &GridSpec, got: &GridSpec) -> Result<()> {
    if expected != got {
        return Err(Error::SpecMismatch(format!(
            "expected grid {:?}, labeling is for {:?}",
            expected.dims(),
            got.dims()
        )));
    }
    Ok(())
}

pub fn verify_vertex_magic(spec: &GridSpec, f: &VertexLabeling) -> Result<MagicReport> {
    same_spec(spec, f.spec())?;
    let bijective = is_bijection_onto(f.labels().iter(), 1, spec.vertex_count() as Label);
    let sums = distinct_cube_sums(spec, Some(f.labels()), None);
    report(spec, LabelKind::Vertex, bijective, None, sums)
}

pub fn verify_edge_magic(spec: &GridSpec, g: &EdgeLabeling) -> Result<MagicReport> {
    same_spec(spec, g.spec())?;
    let bijective = is_bijection_onto(g.labels().iter(), 1, spec.edge_count() as Label);
    let sums = distinct_cube_sums(spec, None, Some(g.labels()));
    report(spec, LabelKind::Edge, bijective, None, sums)
}

pub fn verify_supermagic(spec: &GridSpec, total: &TotalLabeling) -> Result<MagicReport> {
    same_spec(spec, total.spec())?;
    let v = spec.vertex_count() as Label;
    let all = total.vertex_labels().iter().chain(total.edge_labels());
    let bijective = is_bijection_onto(all, 1, v + spec.edge_count() as Label);
    let vertex_range_ok = is_bijection_onto(total.vertex_labels().iter(), 1, v);
    let sums = distinct_cube_sums(spec, Some(total.vertex_labels()), Some(total.edge_labels()));
    report(spec, LabelKind::Total, bijective, Some(vertex_range_ok), sums)
}
