//! Spanning trees that keep a minimum dominating set minimum.
//!
//! Given a minimum dominating set `M` of `G`, every vertex outside `M` is
//! attached to its lowest-indexed neighbour in `M`. The resulting stars are
//! then joined Kruskal-style with the lexicographically smallest edges of `G`
//! between distinct components. `M` dominates the tree, and no spanning
//! subgraph can have a smaller domination number than `G`, so `M` is a
//! minimum dominating set of the tree.

use serde::Serialize;
use thiserror::Error;

use crate::bits::mask_of;
use crate::domination::{
    gamma_bruteforce_oracle_with_cap, gamma_exact, is_dominating_mask, is_dominating_set, DominationError,
    DEFAULT_ENUMERATION_CAP,
};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftError {
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("set {set:?} does not dominate the graph")]
    NotDominating { set: Vec<usize> },
    #[error("set {set:?} dominates but is not minimum (gamma = {gamma})")]
    NotMinimum { set: Vec<usize>, gamma: usize },
}

impl LiftError {
    /// Both dominance failures mean the input is not a minimum dominating set.
    pub fn is_not_a_gamma_set(&self) -> bool {
        matches!(self, LiftError::NotDominating { .. } | LiftError::NotMinimum { .. })
    }
}

/// Why a lift failed verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum LiftDefect {
    /// The lift was built for a different vertex set or order.
    Mismatch,
    /// A tree edge is not an edge of the graph.
    NotSubgraph { edge: (usize, usize) },
    /// Wrong edge count, repeated edges, or disconnected.
    NotSpanningTree,
    /// A vertex outside the set lacks a tree edge to an assigned dominator in the set.
    DominatorMissing { vertex: usize },
    /// The set does not dominate the tree.
    MNotDominating,
    /// The tree's domination number differs from the set size or from the graph's.
    GammaMismatch {
        tree_gamma: usize,
        graph_gamma: usize,
        set_size: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanningTreeLift {
    pub n: usize,
    /// The minimum dominating set the tree was built around, sorted.
    pub gamma_set: Vec<usize>,
    /// For each vertex outside the set, its dominator in the set.
    pub dominator_of: Vec<Option<usize>>,
    /// Edges `(v, dominator_of[v])` normalised to `(min, max)`.
    pub star_edges: Vec<(usize, usize)>,
    /// Edges added to join the stars, in the order they were chosen.
    pub connector_edges: Vec<(usize, usize)>,
}

impl SpanningTreeLift {
    /// Star and connector edges, sorted.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self.star_edges.iter().chain(&self.connector_edges).copied().collect();
        edges.sort_unstable();
        edges
    }

    pub fn tree(&self) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n, self.tree_edges())
    }
}

fn normalise(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Builds the spanning tree for a minimum dominating set `m` of `g`.
pub fn lift_gamma_set_to_spanning_tree(g: &Graph, m: &[usize]) -> Result<SpanningTreeLift, LiftError> {
    let n = g.order();
    let mut set = m.to_vec();
    set.sort_unstable();
    set.dedup();
    let dominating = is_dominating_set(g, &set).map_err(|e| match e {
        DominationError::VertexOutOfRange { vertex, n } => LiftError::VertexOutOfRange { vertex, n },
        DominationError::TooLarge { .. } => unreachable!(),
    })?;
    if !dominating {
        return Err(LiftError::NotDominating { set });
    }
    let gamma = gamma_exact(g).gamma;
    if set.len() != gamma {
        return Err(LiftError::NotMinimum { set, gamma });
    }

    let in_set = mask_of(&set);
    let mut dominator_of = vec![None; n];
    let mut star_edges = Vec::new();
    let mut component: Vec<usize> = (0..n).collect();
    for v in (0..n).filter(|&v| in_set & (1 << v) == 0) {
        let dom = (g.neighbor_mask(v) & in_set).trailing_zeros() as usize;
        dominator_of[v] = Some(dom);
        star_edges.push(normalise(v, dom));
        component[v] = dom;
    }
    star_edges.sort_unstable();

    let mut components = set.len();
    let mut connector_edges = Vec::new();
    for (u, v) in g.edges() {
        if components == 1 {
            break;
        }
        let (cu, cv) = (component[u], component[v]);
        if cu != cv {
            for c in component.iter_mut().filter(|c| **c == cv) {
                *c = cu;
            }
            connector_edges.push((u, v));
            components -= 1;
        }
    }

    Ok(SpanningTreeLift {
        n,
        gamma_set: set,
        dominator_of,
        star_edges,
        connector_edges,
    })
}

pub fn verify_lift(g: &Graph, lift: &SpanningTreeLift, m: &[usize]) -> Result<(), LiftDefect> {
    verify_lift_with_cap(g, lift, m, DEFAULT_ENUMERATION_CAP)
}

/// Re-checks every property of a lift from scratch. Domination numbers are
/// recomputed by the brute-force oracle up to `oracle_cap` vertices and by
/// the exact solver beyond it.
pub fn verify_lift_with_cap(
    g: &Graph,
    lift: &SpanningTreeLift,
    m: &[usize],
    oracle_cap: usize,
) -> Result<(), LiftDefect> {
    let n = g.order();
    let mut set = m.to_vec();
    set.sort_unstable();
    set.dedup();
    if lift.n != n || lift.gamma_set != set || lift.dominator_of.len() != n {
        return Err(LiftDefect::Mismatch);
    }

    let edges = lift.tree_edges();
    if let Some(&edge) = edges.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Err(LiftDefect::NotSubgraph { edge });
    }
    let distinct = edges.windows(2).all(|w| w[0] != w[1]);
    if edges.len() != n - 1 || !distinct {
        return Err(LiftDefect::NotSpanningTree);
    }
    // n - 1 distinct edges on n vertices: connected iff a tree
    let tree = Graph::from_edges(n, edges.iter().copied()).map_err(|_| LiftDefect::NotSpanningTree)?;

    let in_set = mask_of(&set);
    for v in (0..n).filter(|&v| in_set & (1 << v) == 0) {
        match lift.dominator_of[v] {
            Some(d) if in_set & (1 << d) != 0 && tree.has_edge(v, d) => {}
            _ => return Err(LiftDefect::DominatorMissing { vertex: v }),
        }
    }
    if !is_dominating_mask(&tree, in_set) {
        return Err(LiftDefect::MNotDominating);
    }

    let gamma_of = |h: &Graph| match gamma_bruteforce_oracle_with_cap(h, oracle_cap) {
        Ok(r) => r.gamma,
        Err(_) => gamma_exact(h).gamma,
    };
    let (tree_gamma, graph_gamma) = (gamma_of(&tree), gamma_of(g));
    if tree_gamma != set.len() || graph_gamma != set.len() {
        return Err(LiftDefect::GammaMismatch {
            tree_gamma,
            graph_gamma,
            set_size: set.len(),
        });
    }
    Ok(())
}
