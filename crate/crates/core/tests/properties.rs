use std::collections::HashMap;

use gridmagic::document::LabelingDocument;
use gridmagic::oracle::{candidate_at, search_space, SearchMode};
use gridmagic::verify::{verify_edge_magic, verify_supermagic, verify_vertex_magic};
use gridmagic::{
    build_labelings, canonicalize, closed_form_sums, combine_supermagic, EdgeId, GridSpec, Label, LabelKind,
    TotalLabeling, VertexCoord,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Side lengths in arbitrary order with a bounded vertex count.
fn dims_strategy(max_d: usize, max_side: usize, max_vertices: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(2..=max_side, 2..=max_d).prop_filter("vertex count", move |d| {
        d.iter().product::<usize>() <= max_vertices
    })
}

fn canonical(dims: &[usize]) -> GridSpec {
    canonicalize(dims).unwrap().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_count_matches_formula(dims in dims_strategy(6, 12, 200_000)) {
        let spec = canonical(&dims);
        let formula: usize = (0..dims.len())
            .map(|i| (dims[i] - 1) * dims.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, n)| n).product::<usize>())
            .sum();
        prop_assert_eq!(spec.edge_count(), formula);
        prop_assert_eq!(spec.enumerate_edges().count(), formula);
        prop_assert_eq!(spec.enumerate_cubes().count(), dims.iter().map(|n| n - 1).product::<usize>());
    }

    #[test]
    fn rank_unrank_round_trip(dims in dims_strategy(5, 9, 20_000), seed in any::<u64>()) {
        let spec = canonical(&dims);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..50 {
            let r = rng.gen_range(0..spec.vertex_count());
            let v = spec.vertex_unrank(r).unwrap();
            prop_assert_eq!(spec.vertex_rank(&v).unwrap(), r);
            let e = rng.gen_range(0..spec.edge_count());
            prop_assert_eq!(spec.edge_index(&spec.edge_at(e).unwrap()).unwrap(), e);
        }
    }

    #[test]
    fn covering_multiplicity(dims in dims_strategy(4, 6, 2_000)) {
        let spec = canonical(&dims);
        let mut hits: HashMap<EdgeId, usize> = HashMap::new();
        for cube in spec.enumerate_cubes() {
            for e in cube.edges() {
                *hits.entry(e).or_default() += 1;
            }
        }
        prop_assert_eq!(hits.len(), spec.edge_count());
        for e in spec.enumerate_edges() {
            // along every other axis the cube may start at x or x - 1 when both fit
            let expected: usize = (1..=spec.dim())
                .filter(|&b| b != e.axis)
                .map(|b| {
                    let (x, n) = (e.base.0[b - 1], spec.dims()[b - 1]);
                    usize::from(x < n) + usize::from(x > 1)
                })
                .product();
            prop_assert!(expected >= 1);
            prop_assert_eq!(hits[&e], expected);
        }
    }

    #[test]
    fn cube_parity_split(dims in dims_strategy(6, 5, 20_000)) {
        let spec = canonical(&dims);
        let d = spec.dim();
        for cube in spec.enumerate_cubes().take(20) {
            let even = cube.vertices().iter().filter(|v| v.coord_sum() % 2 == 0).count();
            prop_assert_eq!(even, 1 << (d - 1));
        }
    }

    #[test]
    fn construction_is_magic_with_predicted_sums(dims in dims_strategy(5, 9, 30_000)) {
        let spec = canonical(&dims);
        let (f, g) = build_labelings(&spec).unwrap();
        let predicted = closed_form_sums(&spec).unwrap();
        let rv = verify_vertex_magic(&spec, &f).unwrap();
        let re = verify_edge_magic(&spec, &g).unwrap();
        let rt = verify_supermagic(&spec, &combine_supermagic(&f, &g).unwrap()).unwrap();
        prop_assert!(rv.is_valid() && re.is_valid() && rt.is_valid());
        prop_assert_eq!(rv.magic_sum, Some(predicted.c_vertex));
        prop_assert_eq!(re.magic_sum, Some(predicted.c_edge));
        prop_assert_eq!(rt.magic_sum, Some(predicted.c_total));
        let d = spec.dim() as Label;
        prop_assert_eq!(
            predicted.c_total,
            predicted.c_vertex + predicted.c_edge + d * (1 << (d - 1)) * spec.vertex_count() as Label
        );
    }

    #[test]
    fn caller_order_maps_onto_canonical(dims in dims_strategy(4, 6, 3_000)) {
        let doc = LabelingDocument::generate(&dims, LabelKind::Total).unwrap();
        let mut sorted = dims.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let canon = LabelingDocument::generate(&sorted, LabelKind::Total).unwrap();
        let perm = doc.permutation();
        for x in gridmagic::grid::BoxIter::new(dims.clone()) {
            let c = perm.to_canonical(&x);
            prop_assert_eq!(doc.vertex_label(&x).unwrap(), canon.vertex_label(&c).unwrap());
            for axis in 1..=dims.len() {
                if x[axis - 1] < dims[axis - 1] {
                    prop_assert_eq!(
                        doc.edge_label(&x, axis).unwrap(),
                        canon.edge_label(&c, perm.canonical_axis(axis)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn save_load_verify_matches_in_memory(dims in dims_strategy(4, 7, 5_000)) {
        let doc = LabelingDocument::generate(&dims, LabelKind::Total).unwrap();
        let mut buf = Vec::new();
        doc.save(&mut buf).unwrap();
        let loaded = LabelingDocument::load(buf.as_slice()).unwrap();
        prop_assert_eq!(&loaded, &doc);
        let mut again = Vec::new();
        loaded.save(&mut again).unwrap();
        prop_assert_eq!(&again, &buf);

        let spec = loaded.spec();
        let from_disk = verify_supermagic(spec, &loaded.total_labeling().unwrap()).unwrap();
        let (f, g) = build_labelings(spec).unwrap();
        let in_memory = verify_supermagic(spec, &combine_supermagic(&f, &g).unwrap()).unwrap();
        prop_assert_eq!(from_disk, in_memory);
    }
}

/// The oracle's verdict on random candidates agrees with the verifier,
/// including on the (overwhelmingly common) rejected ones.
#[test]
fn oracle_and_verifier_agree_on_random_candidates() {
    let spec = GridSpec::new(vec![3, 2]).unwrap();
    let space = search_space(&spec, SearchMode::Supermagic) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(0x51de);
    let mut rejected = 0;
    let mut accepted = 0;
    while rejected < 1000 {
        let index = rng.gen_range(0..space);
        let (v, e, verdict) = candidate_at(&spec, SearchMode::Supermagic, index);
        let t = TotalLabeling::new(spec.clone(), v, e).unwrap();
        let r = verify_supermagic(&spec, &t).unwrap();
        assert!(r.bijective && r.vertex_range_ok == Some(true));
        assert_eq!(r.magic_sum, verdict, "candidate {index}");
        if verdict.is_none() {
            rejected += 1;
        } else {
            accepted += 1;
        }
    }
    // roughly 203328 / 3628800 of candidates are magic
    assert!(accepted < 200);
}

#[test]
fn vertex_rank_of_figure_vertex() {
    let spec = GridSpec::new(vec![5, 3, 3]).unwrap();
    assert_eq!(spec.vertex_rank(&VertexCoord::new([2, 1, 2])).unwrap(), 10);
}
