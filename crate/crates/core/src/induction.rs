//! Lifting labelings of `Grid(n_1, ..., n_{d-1})` to `Grid(n_1, ..., n_d)`.
//!
//! The new grid is `n_d` stacked copies ("layers") of the base grid joined by
//! connecting edges along the last axis. With `N = |V(base)|` and
//! `M = |E(base)|`:
//!
//! * vertex `(x, t)` gets `f(x) + (t - 1) N` when the coordinate sum of `x` is
//!   even and `f(x) + (n_d - t) N` when it is odd;
//! * in-layer edges get the base edge label plus a whole block of `M`, the
//!   block running forward or backward through the layers depending on the
//!   axis parity (or, for the last base axis when `d` is even, on the parity
//!   of the first `d - 2` coordinates);
//! * the connecting edge `(x, t) -- (x, t + 1)` gets
//!   `f(x) + n_d M + block * N`, the block chosen by the parity of `x`.
//!
//! Within every unit cube exactly half of each group lands in a forward block
//! and half in a backward one, which makes the cube sums constant.

use crate::base_case::{base_edge_labeling, base_vertex_labeling};
use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::labeling::{EdgeLabeling, Label, TotalLabeling, VertexLabeling};

/// Vertex and edge counts of the base grid of one extension step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LayerCounts {
    pub vertices: usize,
    pub edges: usize,
}

impl LayerCounts {
    pub fn of(base: &GridSpec) -> Self {
        LayerCounts {
            vertices: base.vertex_count(),
            edges: base.edge_count(),
        }
    }
}

fn extended_spec(base: &GridSpec, nd: usize) -> Result<GridSpec> {
    let mut dims = base.dims().to_vec();
    dims.push(nd);
    GridSpec::new(dims)
}

pub fn extend_vertex_labeling(base: &VertexLabeling, nd: usize) -> Result<VertexLabeling> {
    let spec = extended_spec(base.spec(), nd)?;
    let layer = base.spec().vertex_count();
    let n = layer as Label;
    let mut labels = vec![0; spec.vertex_count()];
    for (rank, x) in base.spec().vertices().enumerate() {
        let f = base.labels()[rank];
        let even = x.iter().sum::<usize>() % 2 == 0;
        for t in 1..=nd {
            let block = if even { t - 1 } else { nd - t };
            labels[rank * nd + t - 1] = f + block as Label * n;
        }
    }
    VertexLabeling::new(spec, labels)
}

pub fn extend_edge_labeling(
    base_f: &VertexLabeling,
    base_g: &EdgeLabeling,
    nd: usize,
) -> Result<EdgeLabeling> {
    let base = base_f.spec();
    if base != base_g.spec() {
        return Err(Error::SpecMismatch(format!(
            "vertex labeling on {:?}, edge labeling on {:?}",
            base.dims(),
            base_g.spec().dims()
        )));
    }
    let spec = extended_spec(base, nd)?;
    let d = spec.dim();
    let LayerCounts { vertices, edges } = LayerCounts::of(base);
    let (n, m) = (vertices as Label, edges as Label);
    let mut labels = vec![0; spec.edge_count()];

    // In-layer edges: base edge index `e` in layer `t` sits at `e * nd + t - 1`.
    for (index, e) in base.enumerate_edges().enumerate() {
        let g = base_g.labels()[index];
        let forward = if d % 2 == 1 || e.axis <= d - 2 {
            e.axis % 2 == 1
        } else {
            e.base.0[..d - 2].iter().sum::<usize>() % 2 == 1
        };
        for t in 1..=nd {
            let block = if forward { t - 1 } else { nd - t };
            labels[index * nd + t - 1] = g + block as Label * m;
        }
    }

    // Connecting edges follow all in-layer edges, base vertex major.
    let offset = nd * edges;
    let top = nd as Label * m;
    for (rank, x) in base.vertices().enumerate() {
        let f = base_f.labels()[rank];
        let odd = x.iter().sum::<usize>() % 2 == 1;
        for t in 1..nd {
            let block = if odd { t - 1 } else { nd - 1 - t };
            labels[offset + rank * (nd - 1) + t - 1] = f + top + block as Label * n;
        }
    }
    EdgeLabeling::new(spec, labels)
}

/// The magic vertex and edge labelings of a canonical grid, built from the
/// two-dimensional case by one extension per extra axis.
pub fn build_labelings(spec: &GridSpec) -> Result<(VertexLabeling, EdgeLabeling)> {
    let dims = spec.dims();
    let mut f = base_vertex_labeling(dims[0], dims[1])?;
    let mut g = base_edge_labeling(dims[0], dims[1])?;
    for &nd in &dims[2..] {
        #[cfg(debug_assertions)]
        level_check(&f, &g);
        let next_g = extend_edge_labeling(&f, &g, nd)?;
        f = extend_vertex_labeling(&f, nd)?;
        g = next_g;
    }
    #[cfg(debug_assertions)]
    level_check(&f, &g);
    Ok((f, g))
}

#[cfg(debug_assertions)]
fn level_check(f: &VertexLabeling, g: &EdgeLabeling) {
    use crate::verify::{verify_edge_magic, verify_vertex_magic};
    let spec = f.spec();
    debug_assert!(verify_vertex_magic(spec, f).is_ok_and(|r| r.is_valid()));
    debug_assert!(verify_edge_magic(spec, g).is_ok_and(|r| r.is_valid()));
}

/// `F(v) = f(v)`, `F(e) = g(e) + |V|`.
pub fn combine_supermagic(f: &VertexLabeling, g: &EdgeLabeling) -> Result<TotalLabeling> {
    if f.spec() != g.spec() {
        return Err(Error::SpecMismatch(format!(
            "vertex labeling on {:?}, edge labeling on {:?}",
            f.spec().dims(),
            g.spec().dims()
        )));
    }
    let shift = f.spec().vertex_count() as Label;
    TotalLabeling::new(
        f.spec().clone(),
        f.labels().to_vec(),
        g.labels().iter().map(|&l| l + shift).collect(),
    )
}
