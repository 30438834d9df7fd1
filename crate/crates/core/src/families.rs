//! Standard graph families used as fixtures and by the CLI.
//!
//! Each constructor panics on parameters that would give an order below 2
//! or above [`MAX_ORDER`](crate::graph::MAX_ORDER).

use crate::graph::Graph;

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

/// Star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid complete graph")
}

/// Spider: centre 0 with one leg per entry of `legs`, legs numbered
/// outwards consecutively. Leg tips are returned alongside the graph.
pub fn spider(legs: &[usize]) -> (Graph, Vec<usize>) {
    let mut edges = Vec::new();
    let mut tips = Vec::new();
    let mut next = 1;
    for &len in legs {
        assert!(len >= 1);
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        tips.push(prev);
    }
    (Graph::from_edges(next, edges).expect("valid spider"), tips)
}
