//! Brute-force ground truth for tiny grids.
//!
//! Every assignment of the admissible labels is examined in lexicographic
//! permutation order, with no pruning: the oracle knows nothing about the
//! construction it is used to check beyond the final membership test.
//! Candidate `k` of a supermagic search pairs vertex permutation
//! `k / |E|!` with edge permutation `k % |E|!`.

use std::collections::BTreeMap;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::induction::{build_labelings, combine_supermagic};
use crate::labeling::{EdgeLabeling, Label, TotalLabeling, VertexLabeling};
use crate::verify::{verify_edge_magic, verify_supermagic, verify_vertex_magic};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// At most this many magic labelings are returned verbatim.
pub const MAX_FOUND: usize = 64;

const SHARDS: u64 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchMode {
    Vertex,
    Edge,
    Supermagic,
}

impl FromStr for SearchMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "vertex" => Ok(SearchMode::Vertex),
            "edge" => Ok(SearchMode::Edge),
            "supermagic" | "total" => Ok(SearchMode::Supermagic),
            other => Err(format!("unknown search mode {other:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_assignments: u64,
    pub mode: SearchMode,
}

impl SearchBudget {
    pub fn new(mode: SearchMode, max_assignments: u64) -> Self {
        SearchBudget {
            max_assignments: max_assignments.max(1),
            mode,
        }
    }

    pub fn default_for(mode: SearchMode) -> Self {
        SearchBudget::new(mode, DEFAULT_BUDGET)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundLabeling {
    /// Position in the enumeration order.
    pub index: u64,
    pub digest: u64,
    /// Empty in edge mode.
    pub vertex_labels: Vec<Label>,
    /// Empty in vertex mode.
    pub edge_labels: Vec<Label>,
    pub magic_sum: Label,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub examined: u64,
    pub magic_count: u64,
    /// The first [`MAX_FOUND`] magic labelings in enumeration order.
    pub found: Vec<FoundLabeling>,
    pub sum_histogram: BTreeMap<Label, u64>,
    /// Whether the constructed labeling for this mode was among the magic ones.
    pub construction_found: bool,
}

/// FNV-1a over the little-endian bytes of the label sequence.
pub fn digest(vertex_labels: &[Label], edge_labels: &[Label]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for l in vertex_labels.iter().chain(edge_labels) {
        for b in l.to_le_bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}

/// Number of candidate labelings the mode enumerates.
pub fn search_space(spec: &GridSpec, mode: SearchMode) -> u128 {
    let (v, e) = (factorial(spec.vertex_count()), factorial(spec.edge_count()));
    match mode {
        SearchMode::Vertex => v,
        SearchMode::Edge => e,
        SearchMode::Supermagic => v.saturating_mul(e),
    }
}

/// Steps to the next permutation in lexicographic order; false after the last.
pub fn next_permutation(xs: &mut [Label]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs
        .iter()
        .rposition(|&x| x > xs[i])
        .expect("pivot has a successor");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// The `rank`-th permutation (lexicographic) of `lo..lo + n`.
pub fn permutation_at(n: usize, lo: Label, mut rank: u64) -> Vec<Label> {
    let mut pool: Vec<Label> = (lo..lo + n as Label).collect();
    let mut out = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let f = factorial(k) as u64;
        let i = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(i));
    }
    out
}

/// Cube membership lists: for each cube, the vertex ranks and edge indices.
struct Incidence {
    vertices: Vec<Vec<usize>>,
    edges: Vec<Vec<usize>>,
}

impl Incidence {
    fn new(spec: &GridSpec) -> Self {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for cube in spec.enumerate_cubes() {
            vertices.push(
                cube.vertices()
                    .iter()
                    .map(|v| spec.vertex_rank(v).expect("cube vertex in grid"))
                    .collect(),
            );
            edges.push(
                cube.edges()
                    .iter()
                    .map(|e| spec.edge_index(e).expect("cube edge in grid"))
                    .collect(),
            );
        }
        Incidence { vertices, edges }
    }

    fn sums(members: &[Vec<usize>], labels: &[Label], out: &mut [Label]) {
        for (slot, cube) in out.iter_mut().zip(members) {
            *slot = cube.iter().map(|&i| labels[i]).sum();
        }
    }
}

fn constant(sums: &[Label]) -> Option<Label> {
    let first = *sums.first()?;
    sums.iter().all(|&s| s == first).then_some(first)
}

#[derive(Default)]
struct Shard {
    examined: u64,
    magic_count: u64,
    found: Vec<FoundLabeling>,
    histogram: BTreeMap<Label, u64>,
    target_hit: bool,
}

impl Shard {
    fn record(&mut self, index: u64, vertices: &[Label], edges: &[Label], sum: Label, target: &Target) {
        self.magic_count += 1;
        *self.histogram.entry(sum).or_insert(0) += 1;
        if vertices == target.vertices.as_slice() && edges == target.edges.as_slice() {
            self.target_hit = true;
        }
        if self.found.len() < MAX_FOUND {
            self.found.push(FoundLabeling {
                index,
                digest: digest(vertices, edges),
                vertex_labels: vertices.to_vec(),
                edge_labels: edges.to_vec(),
                magic_sum: sum,
            });
        }
    }

    fn merge(mut self, other: Shard) -> Shard {
        self.examined += other.examined;
        self.magic_count += other.magic_count;
        self.target_hit |= other.target_hit;
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_insert(0) += v;
        }
        self.found.extend(other.found);
        self.found.truncate(MAX_FOUND);
        self
    }
}

struct Target {
    vertices: Vec<Label>,
    edges: Vec<Label>,
}

fn constructed_target(spec: &GridSpec, mode: SearchMode) -> Result<Target> {
    let (f, g) = build_labelings(spec)?;
    Ok(match mode {
        SearchMode::Vertex => Target {
            vertices: f.into_labels(),
            edges: Vec::new(),
        },
        SearchMode::Edge => Target {
            vertices: Vec::new(),
            edges: g.into_labels(),
        },
        SearchMode::Supermagic => {
            let t = combine_supermagic(&f, &g)?;
            Target {
                vertices: t.vertex_labels().to_vec(),
                edges: t.edge_labels().to_vec(),
            }
        }
    })
}

/// Scans outer permutation ranks `[start, end)`.
fn scan_shard(
    spec: &GridSpec,
    mode: SearchMode,
    inc: &Incidence,
    target: &Target,
    start: u64,
    end: u64,
) -> Shard {
    let (nv, ne) = (spec.vertex_count(), spec.edge_count());
    let cubes = spec.cube_count();
    let mut shard = Shard::default();
    let mut outer_sums = vec![0; cubes];
    let mut inner_sums = vec![0; cubes];

    let (outer_len, outer_lo, outer_members) = match mode {
        SearchMode::Edge => (ne, 1, &inc.edges),
        _ => (nv, 1, &inc.vertices),
    };
    let mut outer = permutation_at(outer_len, outer_lo, start);

    for rank in start..end {
        Incidence::sums(outer_members, &outer, &mut outer_sums);
        match mode {
            SearchMode::Vertex | SearchMode::Edge => {
                shard.examined += 1;
                if let Some(sum) = constant(&outer_sums) {
                    let (v, e): (&[Label], &[Label]) = if mode == SearchMode::Vertex {
                        (&outer, &[])
                    } else {
                        (&[], &outer)
                    };
                    shard.record(rank, v, e, sum, target);
                }
            }
            SearchMode::Supermagic => {
                let inner_count = factorial(ne) as u64;
                let mut inner: Vec<Label> = (nv as Label + 1..=(nv + ne) as Label).collect();
                let mut inner_rank = 0u64;
                loop {
                    shard.examined += 1;
                    Incidence::sums(&inc.edges, &inner, &mut inner_sums);
                    for (t, &o) in inner_sums.iter_mut().zip(&outer_sums) {
                        *t += o;
                    }
                    if let Some(sum) = constant(&inner_sums) {
                        shard.record(rank * inner_count + inner_rank, &outer, &inner, sum, target);
                    }
                    inner_rank += 1;
                    if !next_permutation(&mut inner) {
                        break;
                    }
                }
            }
        }
        if !next_permutation(&mut outer) {
            break;
        }
    }
    shard
}

/// Enumerates every candidate labeling of the mode and records the magic ones.
pub fn exhaustive_search(spec: &GridSpec, budget: SearchBudget) -> Result<SearchResult> {
    let mode = budget.mode;
    let required = search_space(spec, mode);
    if required > u128::from(budget.max_assignments) {
        return Err(Error::BudgetExceeded {
            required,
            budget: budget.max_assignments,
        });
    }
    let inc = Incidence::new(spec);
    let target = constructed_target(spec, mode)?;
    let outer_count = match mode {
        SearchMode::Edge => factorial(spec.edge_count()),
        _ => factorial(spec.vertex_count()),
    } as u64;
    let shard_len = outer_count.div_ceil(SHARDS).max(1);
    let starts: Vec<u64> = (0..outer_count).step_by(shard_len as usize).collect();

    let merged = starts
        .par_iter()
        .map(|&s| scan_shard(spec, mode, &inc, &target, s, (s + shard_len).min(outer_count)))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Shard::default(), Shard::merge);

    for found in &merged.found {
        assert!(
            reverify(spec, mode, found)?,
            "oracle and verifier disagree on candidate {}",
            found.index
        );
    }

    Ok(SearchResult {
        examined: merged.examined,
        magic_count: merged.magic_count,
        found: merged.found,
        sum_histogram: merged.histogram,
        construction_found: merged.target_hit,
    })
}

fn reverify(spec: &GridSpec, mode: SearchMode, found: &FoundLabeling) -> Result<bool> {
    let report = match mode {
        SearchMode::Vertex => verify_vertex_magic(
            spec,
            &VertexLabeling::new(spec.clone(), found.vertex_labels.clone())?,
        )?,
        SearchMode::Edge => {
            verify_edge_magic(spec, &EdgeLabeling::new(spec.clone(), found.edge_labels.clone())?)?
        }
        SearchMode::Supermagic => verify_supermagic(
            spec,
            &TotalLabeling::new(
                spec.clone(),
                found.vertex_labels.clone(),
                found.edge_labels.clone(),
            )?,
        )?,
    };
    Ok(report.is_valid() && report.magic_sum == Some(found.magic_sum))
}

/// True iff the constructed labeling is one of the magic labelings the
/// exhaustive scan finds.
pub fn confirm_construction(spec: &GridSpec, budget: SearchBudget) -> Result<bool> {
    Ok(exhaustive_search(spec, budget)?.construction_found)
}

/// The candidate at enumeration position `index` as (vertex, edge) labels,
/// together with the oracle's own verdict (its magic sum, if magic).
pub fn candidate_at(
    spec: &GridSpec,
    mode: SearchMode,
    index: u64,
) -> (Vec<Label>, Vec<Label>, Option<Label>) {
    let (nv, ne) = (spec.vertex_count(), spec.edge_count());
    let inc = Incidence::new(spec);
    let mut sums = vec![0; spec.cube_count()];
    let mut tmp = vec![0; spec.cube_count()];
    let (v, e) = match mode {
        SearchMode::Vertex => (permutation_at(nv, 1, index), Vec::new()),
        SearchMode::Edge => (Vec::new(), permutation_at(ne, 1, index)),
        SearchMode::Supermagic => {
            let inner = factorial(ne) as u64;
            (
                permutation_at(nv, 1, index / inner),
                permutation_at(ne, nv as Label + 1, index % inner),
            )
        }
    };
    if !v.is_empty() {
        Incidence::sums(&inc.vertices, &v, &mut tmp);
        sums.iter_mut().zip(&tmp).for_each(|(s, t)| *s += t);
    }
    if !e.is_empty() {
        Incidence::sums(&inc.edges, &e, &mut tmp);
        sums.iter_mut().zip(&tmp).for_each(|(s, t)| *s += t);
    }
    let verdict = constant(&sums);
    (v, e, verdict)
}
