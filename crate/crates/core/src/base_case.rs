//! Closed-form labelings of the two-dimensional grid `Grid(n1, n2)`.

use crate::error::Result;
use crate::grid::GridSpec;
use crate::labeling::{EdgeLabeling, Label, VertexLabeling};

fn spec_2d(n1: usize, n2: usize) -> Result<GridSpec> {
    GridSpec::new(vec![n1, n2])
}

/// The vertex label of `(i, j)`, 1-based.
///
/// Odd/odd and even/even positions count up (snaking) from the top row;
/// mixed-parity positions count down from the bottom row, shifted by one
/// when `n1` is even and `n2` is odd.
pub fn base_vertex_label(n1: usize, n2: usize, i: usize, j: usize) -> Label {
    let (n1, n2, i, j) = (n1 as i64, n2 as i64, i as i64, j as i64);
    let shift = i64::from(n1 % 2 == 0 && n2 % 2 == 1);
    match (i % 2 == 1, j % 2 == 1) {
        (true, true) => (i - 1) * n2 + j,
        (false, false) => (i - 1) * n2 + (n2 + 1 - j),
        (true, false) => (n1 - i) * n2 + j + shift,
        (false, true) => (n1 - i) * n2 + (n2 + 1 - j) + shift,
    }
}

/// Label of the edge `(i, j) -- (i, j + 1)`.
pub fn base_axis2_edge_label(n2: usize, i: usize, j: usize) -> Label {
    (i as i64 - 1) * (2 * n2 as i64 - 1) + j as i64
}

/// Label of the edge `(i, j) -- (i + 1, j)`.
pub fn base_axis1_edge_label(n1: usize, n2: usize, i: usize, j: usize) -> Label {
    (n1 as i64 - i as i64) * (2 * n2 as i64 - 1) + 1 - j as i64
}

/// The `Q_2`-magic vertex labeling of `Grid(n1, n2)`, `n1 >= n2 >= 2`.
pub fn base_vertex_labeling(n1: usize, n2: usize) -> Result<VertexLabeling> {
    let spec = spec_2d(n1, n2)?;
    let labels = spec
        .vertices()
        .map(|x| base_vertex_label(n1, n2, x[0], x[1]))
        .collect();
    VertexLabeling::new(spec, labels)
}

/// The `Q_2`-magic edge labeling of `Grid(n1, n2)`, `n1 >= n2 >= 2`.
pub fn base_edge_labeling(n1: usize, n2: usize) -> Result<EdgeLabeling> {
    let spec = spec_2d(n1, n2)?;
    let labels = spec
        .enumerate_edges()
        .map(|e| {
            let (i, j) = (e.base.0[0], e.base.0[1]);
            match e.axis {
                1 => base_axis1_edge_label(n1, n2, i, j),
                _ => base_axis2_edge_label(n2, i, j),
            }
        })
        .collect();
    EdgeLabeling::new(spec, labels)
}
