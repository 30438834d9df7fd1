//! A graph refuting the step "a diametral path uses at most `gamma - 1`
//! edges joining the closed neighbourhoods of a minimum dominating set".
//!
//! Six vertices `u, v, 1, 2, 3, 4` with edges `1-2, 2-3, 3-4, u-1, u-3,
//! v-2, v-4`. `{u, v}` is a minimum dominating set, `1-2-3-4` is an induced
//! path of length `diam = 3`, and each of its three edges runs between
//! `N[u]` and `N[v]`, while `gamma - 1 = 1`. Every one of these facts is
//! recomputed by [`fodig_counterexample_demo`].

use serde::Serialize;

use crate::distance::all_pairs_distances;
use crate::domination::{gamma_bruteforce_oracle, gamma_exact, is_dominating_set};
use crate::graph::Graph;

/// Vertex labels, indexed by vertex number.
pub const COUNTEREXAMPLE_LABELS: [&str; 6] = ["u", "v", "1", "2", "3", "4"];

const U: usize = 0;
const V: usize = 1;
const PATH: [usize; 4] = [2, 3, 4, 5];

pub fn counterexample_graph() -> Graph {
    let edges = [(2, 3), (3, 4), (4, 5), (U, 2), (U, 4), (V, 3), (V, 5)];
    Graph::from_edges(6, edges).expect("counterexample graph is connected")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub graph6: String,
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub gamma: usize,
    /// Domination number recomputed by the brute-force oracle.
    pub oracle_gamma: usize,
    pub gamma_set: [usize; 2],
    pub gamma_set_dominates: bool,
    pub diameter: u32,
    pub diametral_path: Vec<usize>,
    pub path_is_induced: bool,
    /// Distance between the path's endpoints.
    pub endpoint_distance: u32,
    pub joining_edges: Vec<(usize, usize)>,
    pub joining_edge_count: usize,
    /// The refuted claim's limit, `gamma - 1`.
    pub fodig_claim_bound: usize,
}

impl CounterexampleReport {
    /// Whether every property needed for the refutation was confirmed.
    pub fn refutes_claim(&self) -> bool {
        self.gamma == 2
            && self.oracle_gamma == self.gamma
            && self.gamma_set_dominates
            && self.path_is_induced
            && self.diametral_path.len() as u32 - 1 == self.diameter
            && self.endpoint_distance == self.diameter
            && self.joining_edge_count > self.fodig_claim_bound
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }
}

/// Whether consecutive vertices of `path` are adjacent, all vertices are
/// distinct, and no other pair of path vertices is adjacent.
pub fn is_induced_path(g: &Graph, path: &[usize]) -> bool {
    let distinct = path.iter().enumerate().all(|(i, v)| !path[..i].contains(v));
    distinct
        && path.iter().all(|&v| v < g.order())
        && path.iter().enumerate().all(|(i, &a)| {
            path.iter()
                .enumerate()
                .skip(i + 1)
                .all(|(j, &b)| g.has_edge(a, b) == (j == i + 1))
        })
}

/// Path edges with one end in `N[u]` and the other in `N[v]`.
pub fn joining_edges(g: &Graph, path: &[usize], u: usize, v: usize) -> Vec<(usize, usize)> {
    let (nu, nv) = (g.closed_neighborhood(u), g.closed_neighborhood(v));
    let inside = |mask: u64, x: usize| mask & (1 << x) != 0;
    path.windows(2)
        .map(|w| (w[0], w[1]))
        .filter(|&(a, b)| (inside(nu, a) && inside(nv, b)) || (inside(nv, a) && inside(nu, b)))
        .collect()
}

pub fn fodig_counterexample_demo() -> CounterexampleReport {
    let g = counterexample_graph();
    let dm = all_pairs_distances(&g);
    let gamma = gamma_exact(&g).gamma;
    let oracle_gamma = gamma_bruteforce_oracle(&g).expect("six vertices").gamma;
    let joining = joining_edges(&g, &PATH, U, V);
    CounterexampleReport {
        graph6: g.to_graph6(),
        labels: COUNTEREXAMPLE_LABELS.iter().map(|s| s.to_string()).collect(),
        edges: g.edges(),
        gamma,
        oracle_gamma,
        gamma_set: [U, V],
        gamma_set_dominates: is_dominating_set(&g, &[U, V]).expect("in range"),
        diameter: dm.diameter(),
        diametral_path: PATH.to_vec(),
        path_is_induced: is_induced_path(&g, &PATH),
        endpoint_distance: dm.get(PATH[0], PATH[3]),
        joining_edge_count: joining.len(),
        joining_edges: joining,
        fodig_claim_bound: gamma.saturating_sub(1),
    }
}
