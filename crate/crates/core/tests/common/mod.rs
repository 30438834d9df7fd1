//! Exhaustive generator of connected graphs up to isomorphism, for tests.
//!
//! Every connected graph on `n` vertices has a vertex whose removal leaves
//! it connected, so extending each connected `(n-1)`-vertex graph by a new
//! vertex joined to every non-empty subset reaches all of them. Duplicates
//! are removed with a canonical code: colour refinement orders the vertices
//! coarsely, then a pruned search over the orderings compatible with the
//! colour classes picks the lexicographically least adjacency bitstring.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use domdist::Graph;

/// Connected graphs on 1..=8 vertices, up to isomorphism.
pub const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

fn adjacency(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.neighbor_mask(v)).collect()
}

/// Iterated degree refinement; returns a colour per vertex. Colours are
/// ranks of sorted signatures, so they are invariant under relabelling.
fn refine(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = vec![0; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = sigs
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let next: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let count = ranks.len();
        colour = next;
        if count == classes {
            return colour;
        }
        classes = count;
    }
}

struct Canon<'a> {
    adj: &'a [u64],
    n: usize,
    /// Vertices of each colour class, classes in colour order.
    cells: Vec<Vec<usize>>,
    /// Colour class owning each position.
    cell_of_pos: Vec<usize>,
    order: Vec<usize>,
    used: u64,
    best: Option<u64>,
    total_bits: u32,
}

impl Canon<'_> {
    fn search(&mut self, pos: usize, code: u64) {
        if pos == self.n {
            if self.best.is_none_or(|b| code < b) {
                self.best = Some(code);
            }
            return;
        }
        let cell = self.cell_of_pos[pos];
        for i in 0..self.cells[cell].len() {
            let v = self.cells[cell][i];
            if self.used >> v & 1 == 1 {
                continue;
            }
            // column `pos`: adjacency to each earlier position
            let mut c = code;
            for &u in &self.order {
                c = c << 1 | (self.adj[v] >> u & 1);
            }
            let placed = (pos * (pos + 1) / 2) as u32;
            if let Some(b) = self.best {
                if c > b >> (self.total_bits - placed) {
                    continue;
                }
            }
            self.order.push(v);
            self.used |= 1 << v;
            self.search(pos + 1, c);
            self.used &= !(1 << v);
            self.order.pop();
        }
    }
}

/// Canonical code with the vertex count in the top byte. Needs `n <= 11`.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= 11, "canonical code holds at most 55 adjacency bits");
    let adj = adjacency(g);
    let colour = refine(&adj);
    let classes = colour.iter().max().map_or(0, |&c| c + 1);
    let mut cells = vec![Vec::new(); classes];
    for (v, &c) in colour.iter().enumerate() {
        cells[c].push(v);
    }
    let cell_of_pos = cells
        .iter()
        .enumerate()
        .flat_map(|(i, c)| std::iter::repeat_n(i, c.len()))
        .collect();
    let total_bits = (n * n.saturating_sub(1) / 2) as u32;
    let mut canon = Canon {
        adj: &adj,
        n,
        cells,
        cell_of_pos,
        order: Vec::with_capacity(n),
        used: 0,
        best: None,
        total_bits,
    };
    canon.search(0, 0);
    (n as u64) << 56 | canon.best.unwrap_or(0)
}

/// All connected graphs on exactly `n` vertices (`2 <= n <= 10`), one per
/// isomorphism class, in increasing canonical-code order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((2..=10).contains(&n));
    let mut layer: BTreeMap<u64, Graph> = BTreeMap::new();
    let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
    layer.insert(canonical_code(&k2), k2);
    for order in 3..=n {
        let mut next = BTreeMap::new();
        for g in layer.values() {
            let edges = g.edges();
            for subset in 1u64..(1 << (order - 1)) {
                let mut e = edges.clone();
                e.extend((0..order - 1).filter(|&u| subset >> u & 1 == 1).map(|u| (u, order - 1)));
                let h = Graph::from_edges(order, e).expect("extension stays connected");
                next.entry(canonical_code(&h)).or_insert(h);
            }
        }
        layer = next;
    }
    layer.into_values().collect()
}

/// Every connected graph with `2 <= n <= max_n`.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (2..=max_n).flat_map(connected_graphs).collect()
}

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}
