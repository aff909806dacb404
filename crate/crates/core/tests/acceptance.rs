//! Exit criteria. Run with `cargo test --test acceptance -- --nocapture` to
//! see one PASS/FAIL line per criterion.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use gridmagic::induction::LayerCounts;
use gridmagic::oracle::{exhaustive_search, SearchBudget, SearchMode};
use gridmagic::verify::{verify_edge_magic, verify_supermagic, verify_vertex_magic};
use gridmagic::{
    build_labelings, closed_form_sums, combine_supermagic, CubeId, GridSpec, Label, VertexCoord,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn spec(dims: &[usize]) -> GridSpec {
    GridSpec::new(dims.to_vec()).unwrap()
}

fn within(start: Instant, limit: Duration, what: &str) -> Check {
    let took = start.elapsed();
    ensure!(took < limit, "{what} took {took:?}, limit {limit:?}");
    Ok(())
}

fn triangular(n: usize) -> Label {
    (n * (n + 1) / 2) as Label
}

/// Fixed suite: 240 canonical grids, 2 <= d <= 6, |V| + |E| <= 10^6.
fn suite() -> Vec<GridSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_531);
    let mut out = Vec::new();
    while out.len() < 240 {
        let d = rng.gen_range(2..=6);
        let cap = match d {
            2 => 700,
            3 => 70,
            4 => 24,
            5 => 13,
            _ => 8,
        };
        let mut dims: Vec<usize> = (0..d).map(|_| rng.gen_range(2..=cap)).collect();
        dims.sort_unstable_by(|a, b| b.cmp(a));
        let s = GridSpec::new(dims).unwrap();
        if s.vertex_count() + s.edge_count() <= 1_000_000 {
            out.push(s);
        }
    }
    out
}

fn figure_5x3() -> Check {
    let start = Instant::now();
    let s = spec(&[5, 3]);
    let (f, g) = build_labelings(&s).map_err(|e| e.to_string())?;
    ensure!(
        f.at(&[1, 1]) == 1 && f.at(&[2, 1]) == 12 && f.at(&[2, 2]) == 5,
        "vertex labels"
    );
    let t = combine_supermagic(&f, &g).map_err(|e| e.to_string())?;
    let first = gridmagic::EdgeId::new(VertexCoord::new([1, 1]), 2);
    ensure!(
        t.edge(&first).unwrap() == 16,
        "first edge label {}",
        t.edge(&first).unwrap()
    );
    let rv = verify_vertex_magic(&s, &f).unwrap();
    let re = verify_edge_magic(&s, &g).unwrap();
    let rt = verify_supermagic(&s, &t).unwrap();
    ensure!(
        rv.is_valid() && rv.magic_sum == Some(32),
        "c(f) {:?}",
        rv.magic_sum
    );
    ensure!(
        re.is_valid() && re.magic_sum == Some(46),
        "c'(g) {:?}",
        re.magic_sum
    );
    ensure!(
        rt.is_valid() && rt.magic_sum == Some(138),
        "c(F) {:?}",
        rt.magic_sum
    );
    within(start, Duration::from_secs(1), "Grid(5,3)")
}

fn figure_5x3x3() -> Check {
    let start = Instant::now();
    let s = spec(&[5, 3, 3]);
    let (f, g) = build_labelings(&s).map_err(|e| e.to_string())?;
    let cube = CubeId::new(VertexCoord::new([2, 1, 1]));

    let mut vertex_labels: Vec<Label> = cube.vertices().iter().map(|v| f.get(v).unwrap()).collect();
    vertex_labels.sort_unstable();
    let mut want = vec![42, 27, 7, 22, 5, 20, 38, 23];
    want.sort_unstable();
    ensure!(vertex_labels == want, "cube vertex labels {vertex_labels:?}");
    for (x, l) in [
        ([2, 1, 2], 27),
        ([3, 1, 2], 22),
        ([3, 1, 1], 7),
        ([2, 1, 1], 42),
        ([2, 2, 2], 20),
        ([3, 2, 2], 23),
        ([3, 2, 1], 38),
        ([2, 2, 1], 5),
    ] {
        ensure!(f.at(&x) == l, "f{x:?} = {}, want {l}", f.at(&x));
    }

    for (a, b, l) in [
        ([2, 1, 2], [3, 1, 2], 37),
        ([2, 1, 2], [2, 1, 1], 78),
        ([2, 1, 2], [2, 2, 2], 28),
        ([3, 1, 2], [3, 1, 1], 88),
        ([3, 1, 2], [3, 2, 2], 33),
        ([2, 1, 1], [3, 1, 1], 15),
        ([2, 1, 1], [2, 2, 1], 50),
        ([3, 2, 1], [2, 2, 1], 14),
        ([3, 2, 1], [3, 2, 2], 74),
        ([3, 2, 1], [3, 1, 1], 55),
        ([2, 2, 2], [3, 2, 2], 36),
        ([2, 2, 2], [2, 2, 1], 86),
    ] {
        ensure!(
            g.between(&a, &b) == l,
            "g({a:?},{b:?}) = {}, want {l}",
            g.between(&a, &b)
        );
    }

    let rv = verify_vertex_magic(&s, &f).unwrap();
    let re = verify_edge_magic(&s, &g).unwrap();
    ensure!(
        rv.is_valid() && rv.magic_sum == Some(184),
        "c(f) {:?}",
        rv.magic_sum
    );
    ensure!(
        re.is_valid() && re.magic_sum == Some(594),
        "c'(g) {:?}",
        re.magic_sum
    );
    within(start, Duration::from_secs(1), "Grid(5,3,3)")
}

fn closed_form_agreement(suite: &[GridSpec]) -> Check {
    let start = Instant::now();
    ensure!(suite.len() >= 200, "suite has {} specs", suite.len());
    for s in suite {
        let p = closed_form_sums(s).map_err(|e| e.to_string())?;
        let (f, g) = build_labelings(s).map_err(|e| e.to_string())?;
        let t = combine_supermagic(&f, &g).unwrap();
        let rv = verify_vertex_magic(s, &f).unwrap();
        let re = verify_edge_magic(s, &g).unwrap();
        let rt = verify_supermagic(s, &t).unwrap();
        ensure!(
            rv.is_valid() && rv.magic_sum == Some(p.c_vertex),
            "{:?} vertex {rv:?}",
            s.dims()
        );
        ensure!(
            re.is_valid() && re.magic_sum == Some(p.c_edge),
            "{:?} edge {re:?}",
            s.dims()
        );
        ensure!(
            rt.is_valid() && rt.magic_sum == Some(p.c_total),
            "{:?} total {rt:?}",
            s.dims()
        );
    }
    within(start, Duration::from_secs(60), "suite")
}

fn trivial_cubes() -> Check {
    for d in 2..=5 {
        let s = spec(&vec![2; d]);
        let (f, g) = build_labelings(&s).unwrap();
        let (v, e) = (s.vertex_count(), s.edge_count());
        let rv = verify_vertex_magic(&s, &f).unwrap();
        let re = verify_edge_magic(&s, &g).unwrap();
        let rt = verify_supermagic(&s, &combine_supermagic(&f, &g).unwrap()).unwrap();
        ensure!(
            rv.magic_sum == Some(triangular(v)),
            "d={d} vertex {:?}",
            rv.magic_sum
        );
        ensure!(
            re.magic_sum == Some(triangular(e)),
            "d={d} edge {:?}",
            re.magic_sum
        );
        ensure!(
            rt.magic_sum == Some(triangular(v + e)),
            "d={d} total {:?}",
            rt.magic_sum
        );
        if d == 3 {
            ensure!(
                (rv.magic_sum, re.magic_sum, rt.magic_sum) == (Some(36), Some(78), Some(210)),
                "d=3 sums"
            );
        }
    }
    Ok(())
}

fn oracle_confirmation() -> Check {
    let start = Instant::now();
    let r = exhaustive_search(&spec(&[2, 2]), SearchBudget::default_for(SearchMode::Supermagic))
        .map_err(|e| e.to_string())?;
    ensure!(r.examined == 576, "examined {}", r.examined);
    ensure!(
        r.construction_found,
        "construction missing from Grid(2,2) supermagic scan"
    );
    ensure!(
        r.sum_histogram.get(&36) == Some(&576),
        "histogram {:?}",
        r.sum_histogram
    );

    let r = exhaustive_search(&spec(&[3, 2]), SearchBudget::default_for(SearchMode::Vertex))
        .map_err(|e| e.to_string())?;
    ensure!(r.examined == 720, "examined {}", r.examined);
    ensure!(
        r.construction_found,
        "construction missing from Grid(3,2) vertex scan"
    );
    let (f, _) = build_labelings(&spec(&[3, 2])).unwrap();
    let sum = verify_vertex_magic(&spec(&[3, 2]), &f).unwrap().magic_sum;
    ensure!(sum == Some(14), "constructed sum {sum:?}");
    ensure!(
        r.sum_histogram.contains_key(&14),
        "histogram {:?}",
        r.sum_histogram
    );
    within(start, Duration::from_secs(10), "oracle")
}

fn negative_detection() -> Check {
    let dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures"].iter().collect();
    for name in ["total_5x3_vertex_swap.json", "edge_5x3x3_swap.json"] {
        let o = Command::new(env!("CARGO_BIN_EXE_gridmagic"))
            .arg("verify")
            .arg(dir.join(name))
            .output()
            .map_err(|e| e.to_string())?;
        ensure!(o.status.code() == Some(1), "{name}: exit {:?}", o.status.code());
        let out = String::from_utf8_lossy(&o.stdout);
        let distinct: usize = out
            .lines()
            .find_map(|l| l.strip_prefix("NOT_MAGIC distinct="))
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| format!("{name}: no NOT_MAGIC line in {out}"))?;
        ensure!(distinct >= 2, "{name}: distinct={distinct}");
    }
    Ok(())
}

fn partition_property(suite: &[GridSpec]) -> Check {
    let mut checked = 0;
    for s in suite.iter().filter(|s| s.dim() >= 3) {
        let base = s.base().unwrap();
        let LayerCounts { vertices, edges } = LayerCounts::of(&base);
        let (n, m) = (vertices as Label, edges as Label);
        let nd = *s.dims().last().unwrap() as Label;
        let (_, g) = build_labelings(s).unwrap();
        let d = s.dim();
        let mut connecting = vec![false; ((nd - 1) * n) as usize];
        let mut in_layer = vec![false; (nd * m) as usize];
        for (e, &l) in s.enumerate_edges().zip(g.labels()) {
            let (slots, lo) = if e.axis == d {
                (&mut connecting, nd * m + 1)
            } else {
                (&mut in_layer, 1)
            };
            let i = l - lo;
            ensure!(
                i >= 0 && (i as usize) < slots.len(),
                "{:?}: label {l} out of block",
                s.dims()
            );
            ensure!(
                !std::mem::replace(&mut slots[i as usize], true),
                "{:?}: label {l} repeated",
                s.dims()
            );
        }
        ensure!(
            connecting.iter().chain(&in_layer).all(|&x| x),
            "{:?}: gap",
            s.dims()
        );
        checked += 1;
    }
    ensure!(checked > 0, "no d >= 3 instances");
    Ok(())
}

#[test]
fn acceptance() {
    let suite = suite();
    let criteria: Vec<Criterion> = vec![
        (
            "AC1 Grid(5,3) figure labels and sums 32/46/138",
            Box::new(figure_5x3),
        ),
        (
            "AC2 Grid(5,3,3) figure cube labels and sums 184/594",
            Box::new(figure_5x3x3),
        ),
        (
            "AC3 closed form equals scanned sums on 240 random grids",
            Box::new(|| closed_form_agreement(&suite)),
        ),
        (
            "AC4 single-cube sums are triangular numbers, d = 2..5",
            Box::new(trivial_cubes),
        ),
        (
            "AC5 oracle finds the construction (Grid(2,2) total, Grid(3,2) vertex)",
            Box::new(oracle_confirmation),
        ),
        (
            "AC6 corrupted fixtures rejected with exit 1",
            Box::new(negative_detection),
        ),
        (
            "AC7 connecting / in-layer edge label blocks",
            Box::new(|| partition_property(&suite)),
        ),
    ];
    let mut failed = Vec::new();
    for (name, check) in &criteria {
        match check() {
            Ok(()) => println!("PASS {name}"),
            Err(why) => {
                println!("FAIL {name}: {why}");
                failed.push(*name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
