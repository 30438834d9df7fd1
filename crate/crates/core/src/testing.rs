use proptest::prelude::*;

use crate::graph::Graph;

/// Random connected graph: a random spanning tree plus random extra edges.
pub fn arb_edges(min_n: usize, max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (min_n..=max_n).prop_flat_map(|n| {
        let tree = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = proptest::collection::vec((0..n, 0..n), 0..2 * n);
        (Just(n), tree, extra).prop_map(|(n, tree, extra)| {
            let mut edges: Vec<_> = tree
                .iter()
                .enumerate()
                .map(|(i, ix)| (ix.index(i + 1), i + 1))
                .collect();
            edges.extend(extra.into_iter().filter(|(u, v)| u != v));
            (n, edges)
        })
    })
}

pub fn arb_connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    arb_edges(min_n, max_n).prop_map(|(n, edges)| Graph::from_edges(n, edges).unwrap())
}
