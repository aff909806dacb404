//! The grid graph `Grid(n_1, ..., n_d)`: vertices, unit edges, unit subcubes.
//!
//! Coordinates are 1-based (`x_i` ranges over `1..=n_i`), ranks and indices
//! are 0-based. Vertices are ranked in row-major order with the last axis
//! varying fastest. Edges are grouped by axis (ascending); within an axis
//! group the base endpoints follow row-major order over the box where that
//! axis is shortened by one.

use crate::error::{checked_add, checked_mul, Error, Result};

/// Upper bound on `|V| + |E|` for any grid we are willing to build.
pub const MAX_ELEMENTS: i64 = 1 << 62;

/// A lattice point, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexCoord(pub Vec<usize>);

impl VertexCoord {
    pub fn new(x: impl Into<Vec<usize>>) -> Self {
        VertexCoord(x.into())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    pub fn coord_sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// The point one step further along `axis` (1-based).
    pub fn step(&self, axis: usize) -> VertexCoord {
        let mut x = self.0.clone();
        x[axis - 1] += 1;
        VertexCoord(x)
    }
}

/// The unit edge `{base, base + e_axis}`. `axis` is 1-based and `base` is the
/// lexicographically smaller endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId {
    pub base: VertexCoord,
    pub axis: usize,
}

impl EdgeId {
    pub fn new(base: VertexCoord, axis: usize) -> Self {
        EdgeId { base, axis }
    }

    /// Builds the edge joining two points at L1 distance 1, in either order.
    pub fn between(a: &VertexCoord, b: &VertexCoord) -> Option<EdgeId> {
        if a.dim() != b.dim() {
            return None;
        }
        let mut axis = None;
        for (i, (&p, &q)) in a.0.iter().zip(&b.0).enumerate() {
            if p != q {
                if axis.is_some() || p.abs_diff(q) != 1 {
                    return None;
                }
                axis = Some(i + 1);
            }
        }
        let axis = axis?;
        let base = if a < b { a.clone() } else { b.clone() };
        Some(EdgeId { base, axis })
    }

    pub fn tip(&self) -> VertexCoord {
        self.base.step(self.axis)
    }
}

/// The unit `d`-cube spanned by `corner + {0,1}^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeId {
    pub corner: VertexCoord,
}

impl CubeId {
    pub fn new(corner: VertexCoord) -> Self {
        CubeId { corner }
    }

    /// All `2^d` vertices, offsets enumerated in row-major order of `{0,1}^d`.
    pub fn vertices(&self) -> Vec<VertexCoord> {
        let d = self.corner.dim();
        (0..1usize << d)
            .map(|mask| VertexCoord(self.offset(mask)))
            .collect()
    }

    /// All `d * 2^(d-1)` edges, grouped by axis.
    pub fn edges(&self) -> Vec<EdgeId> {
        let d = self.corner.dim();
        let mut out = Vec::with_capacity(d << (d - 1));
        for axis in 1..=d {
            let bit = 1usize << (d - axis);
            for mask in 0..1usize << d {
                if mask & bit == 0 {
                    out.push(EdgeId::new(VertexCoord(self.offset(mask)), axis));
                }
            }
        }
        out
    }

    // Bit (d - 1 - i) of `mask` is the offset along axis i (0-based).
    fn offset(&self, mask: usize) -> Vec<usize> {
        let d = self.corner.dim();
        self.corner
            .0
            .iter()
            .enumerate()
            .map(|(i, &x)| x + ((mask >> (d - 1 - i)) & 1))
            .collect()
    }
}

/// Row-major odometer over `[1, b_1] x ... x [1, b_k]`, last axis fastest.
#[derive(Clone, Debug)]
pub struct BoxIter {
    bounds: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl BoxIter {
    pub fn new(bounds: Vec<usize>) -> Self {
        let current = if bounds.iter().all(|&b| b >= 1) {
            Some(vec![1; bounds.len()])
        } else {
            None
        };
        BoxIter { bounds, current }
    }
}

impl Iterator for BoxIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.as_mut()?;
        let out = cur.clone();
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.bounds[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 1;
        }
        Some(out)
    }
}

pub(crate) fn row_major_strides(bounds: &[usize]) -> Vec<usize> {
    let mut strides = vec![1; bounds.len()];
    for i in (0..bounds.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * bounds[i + 1];
    }
    strides
}

/// Layout of one axis group inside the edge index space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct EdgeBlock {
    pub offset: usize,
    pub bounds: Vec<usize>,
    pub strides: Vec<usize>,
    pub len: usize,
}

/// A canonical grid: `d >= 2`, every side at least 2, sides non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridSpec {
    dims: Vec<usize>,
    vertex_count: usize,
    edge_count: usize,
    strides: Vec<usize>,
    edge_blocks: Vec<EdgeBlock>,
}

impl GridSpec {
    pub fn new(dims: impl Into<Vec<usize>>) -> Result<Self> {
        let dims = dims.into();
        if dims.len() < 2 || dims.iter().any(|&n| n < 2) {
            return Err(Error::DimensionTooSmall(dims));
        }
        if dims.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::DimensionOrderViolation(dims));
        }

        let overflow = || Error::Overflow(format!("element count of grid {dims:?}"));
        let sides: Vec<i64> = dims
            .iter()
            .map(|&n| i64::try_from(n).map_err(|_| overflow()))
            .collect::<Result<_>>()?;
        let mut vertices = 1i64;
        for &n in &sides {
            vertices = checked_mul(vertices, n, "vertex count")?;
        }
        let mut edges = 0i64;
        for &n in &sides {
            // (n_i - 1) * prod_{j != i} n_j  ==  |V| / n_i * (n_i - 1)
            let per_axis = checked_mul(vertices / n, n - 1, "edge count")?;
            edges = checked_add(edges, per_axis, "edge count")?;
        }
        if checked_add(vertices, edges, "element count")? > MAX_ELEMENTS {
            return Err(overflow());
        }

        let strides = row_major_strides(&dims);
        let mut edge_blocks = Vec::with_capacity(dims.len());
        let mut offset = 0;
        for axis in 0..dims.len() {
            let mut bounds = dims.clone();
            bounds[axis] -= 1;
            let len = bounds.iter().product();
            edge_blocks.push(EdgeBlock {
                offset,
                strides: row_major_strides(&bounds),
                bounds,
                len,
            });
            offset += len;
        }

        Ok(GridSpec {
            vertex_count: vertices as usize,
            edge_count: edges as usize,
            dims,
            strides,
            edge_blocks,
        })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn cube_count(&self) -> usize {
        self.dims.iter().map(|n| n - 1).product()
    }

    pub(crate) fn strides(&self) -> &[usize] {
        &self.strides
    }

    pub(crate) fn edge_block(&self, axis: usize) -> &EdgeBlock {
        &self.edge_blocks[axis - 1]
    }

    /// The grid with the last axis dropped, if that still leaves `d >= 2`.
    pub fn base(&self) -> Option<GridSpec> {
        if self.dim() <= 2 {
            return None;
        }
        GridSpec::new(&self.dims[..self.dim() - 1]).ok()
    }

    fn out_of_range(&self, x: &[usize]) -> Error {
        Error::CoordOutOfRange {
            coord: x.to_vec(),
            dims: self.dims.clone(),
        }
    }

    pub fn contains(&self, v: &VertexCoord) -> bool {
        v.dim() == self.dim() && v.0.iter().zip(&self.dims).all(|(&x, &n)| (1..=n).contains(&x))
    }

    /// Row-major rank: `sum_i (x_i - 1) * prod_{j > i} n_j`.
    pub fn vertex_rank(&self, v: &VertexCoord) -> Result<usize> {
        if !self.contains(v) {
            return Err(self.out_of_range(&v.0));
        }
        Ok(v.0.iter().zip(&self.strides).map(|(&x, &s)| (x - 1) * s).sum())
    }

    pub fn vertex_unrank(&self, rank: usize) -> Result<VertexCoord> {
        if rank >= self.vertex_count {
            return Err(self.out_of_range(&[rank]));
        }
        Ok(VertexCoord(unrank(rank, &self.strides)))
    }

    pub fn vertices(&self) -> BoxIter {
        BoxIter::new(self.dims.clone())
    }

    pub fn contains_edge(&self, e: &EdgeId) -> bool {
        e.axis >= 1
            && e.axis <= self.dim()
            && self.contains(&e.base)
            && e.base.0[e.axis - 1] < self.dims[e.axis - 1]
    }

    /// Position of `e` in [`GridSpec::enumerate_edges`] order.
    pub fn edge_index(&self, e: &EdgeId) -> Result<usize> {
        if !self.contains_edge(e) {
            return Err(self.out_of_range(&e.base.0));
        }
        let block = self.edge_block(e.axis);
        let within: usize = e
            .base
            .0
            .iter()
            .zip(&block.strides)
            .map(|(&x, &s)| (x - 1) * s)
            .sum();
        Ok(block.offset + within)
    }

    pub fn edge_at(&self, index: usize) -> Result<EdgeId> {
        if index >= self.edge_count {
            return Err(self.out_of_range(&[index]));
        }
        let (axis, block) = self
            .edge_blocks
            .iter()
            .enumerate()
            .find(|(_, b)| index < b.offset + b.len)
            .expect("index below edge_count lies in some block");
        Ok(EdgeId::new(
            VertexCoord(unrank(index - block.offset, &block.strides)),
            axis + 1,
        ))
    }

    pub fn enumerate_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edge_blocks.iter().enumerate().flat_map(|(axis, block)| {
            BoxIter::new(block.bounds.clone()).map(move |x| EdgeId::new(VertexCoord(x), axis + 1))
        })
    }

    pub fn cube_bounds(&self) -> Vec<usize> {
        self.dims.iter().map(|n| n - 1).collect()
    }

    pub fn enumerate_cubes(&self) -> impl Iterator<Item = CubeId> {
        BoxIter::new(self.cube_bounds()).map(|x| CubeId::new(VertexCoord(x)))
    }

    pub fn contains_cube(&self, c: &CubeId) -> bool {
        c.corner.dim() == self.dim() && c.corner.0.iter().zip(&self.dims).all(|(&x, &n)| x >= 1 && x < n)
    }

    /// True iff every edge lies in at least one unit cube.
    pub fn check_h_covering(&self) -> bool {
        let mut covered = vec![false; self.edge_count];
        for cube in self.enumerate_cubes() {
            for e in cube.edges() {
                covered[self.edge_index(&e).expect("cube edges lie in the grid")] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }
}

pub(crate) fn unrank(mut rank: usize, strides: &[usize]) -> Vec<usize> {
    strides
        .iter()
        .map(|&s| {
            let x = rank / s;
            rank %= s;
            x + 1
        })
        .collect()
}

/// Maps caller axis order onto the canonical (descending) order.
///
/// Entry `k` (0-based position, holding a 1-based value) is the canonical
/// axis that caller axis `k + 1` lands on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AxisPermutation(Vec<usize>);

impl AxisPermutation {
    pub fn identity(d: usize) -> Self {
        AxisPermutation((1..=d).collect())
    }

    pub fn from_one_based(perm: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p == 0 || p > perm.len() || std::mem::replace(&mut seen[p - 1], true) {
                return None;
            }
        }
        Some(AxisPermutation(perm))
    }

    pub fn as_one_based(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| p == i + 1)
    }

    pub fn canonical_axis(&self, caller_axis: usize) -> usize {
        self.0[caller_axis - 1]
    }

    pub fn caller_axis(&self, canonical_axis: usize) -> usize {
        self.0
            .iter()
            .position(|&p| p == canonical_axis)
            .expect("permutation is total")
            + 1
    }

    pub fn to_canonical(&self, caller: &[usize]) -> Vec<usize> {
        let mut out = vec![0; caller.len()];
        for (k, &x) in caller.iter().enumerate() {
            out[self.0[k] - 1] = x;
        }
        out
    }

    pub fn to_caller(&self, canonical: &[usize]) -> Vec<usize> {
        self.0.iter().map(|&p| canonical[p - 1]).collect()
    }
}

/// Sorts `dims` into non-increasing order (stable on ties) and records where
/// each caller axis went.
pub fn canonicalize(dims: &[usize]) -> Result<(GridSpec, AxisPermutation)> {
    if dims.len() < 2 || dims.iter().any(|&n| n < 2) {
        return Err(Error::DimensionTooSmall(dims.to_vec()));
    }
    let mut order: Vec<usize> = (0..dims.len()).collect();
    order.sort_by(|&a, &b| dims[b].cmp(&dims[a]));
    let mut perm = vec![0; dims.len()];
    for (canonical, &caller) in order.iter().enumerate() {
        perm[caller] = canonical + 1;
    }
    let sorted: Vec<usize> = order.iter().map(|&i| dims[i]).collect();
    Ok((GridSpec::new(sorted)?, AxisPermutation(perm)))
}
