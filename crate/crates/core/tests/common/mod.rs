#![allow(dead_code)]

use excessive_core::coloring::EdgeColoring;
use excessive_core::oracle::{sweep_graphs, SweepConfig};
use excessive_core::{Edge, SimpleGraph};
use proptest::prelude::*;

/// Every labeled graph on `1..=max_n` vertices.
pub fn all_graphs(max_n: usize) -> Vec<SimpleGraph> {
    sweep_graphs(&SweepConfig {
        max_vertices: max_n,
        ..SweepConfig::default()
    })
}

pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (min_n..=max_n, 0.1f64..0.8).prop_flat_map(|(n, p)| {
        let slots = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(prop::bool::weighted(p), slots).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let chosen = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            SimpleGraph::from_edges(n, chosen).unwrap()
        })
    })
}

/// Builds a proper colouring of a multigraph as a union of `classes.len()`
/// matchings, taking candidate pairs greedily and capping multiplicity.
pub fn greedy_union_of_matchings(
    n: usize,
    candidates: &[Vec<(usize, usize)>],
    max_multiplicity: usize,
) -> EdgeColoring {
    let mut mult = std::collections::BTreeMap::<Edge, usize>::new();
    let mut classes = Vec::new();
    for cand in candidates {
        let mut busy = vec![false; n];
        let mut class = Vec::new();
        for &(u, v) in cand {
            if u == v || busy[u] || busy[v] {
                continue;
            }
            let e = Edge::new(u, v);
            let count = mult.entry(e).or_insert(0);
            if *count == max_multiplicity {
                continue;
            }
            *count += 1;
            busy[u] = true;
            busy[v] = true;
            class.push(e);
        }
        classes.push(class);
    }
    EdgeColoring::from_classes(n, &classes).unwrap()
}

pub fn arb_multigraph_coloring(max_n: usize, max_k: usize) -> impl Strategy<Value = EdgeColoring> {
    (2..=max_n, 1..=max_k).prop_flat_map(|(n, k)| {
        let pair = (0..n, 0..n);
        proptest::collection::vec(proptest::collection::vec(pair, 0..=n), k)
            .prop_map(move |cands| greedy_union_of_matchings(n, &cands, 3))
    })
}
