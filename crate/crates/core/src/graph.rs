//! Simple undirected connected graphs and their text formats.
//!
//! Vertices are the integers `0..n`. Adjacency is kept as one `u64` bit mask
//! per vertex, which caps the order at [`MAX_ORDER`]; that is also the
//! largest order the short graph6 form can express.

use std::fmt;

use thiserror::Error;

use crate::bits::{full_mask, iter_bits};

/// Largest supported order (the short graph6 form stops at 62).
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: malformed input {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph order {0} is below the minimum of 2")]
    OrderTooSmall(usize),
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("invalid graph6 string: {0}")]
    InvalidGraph6(String),
}

/// A finite, simple, undirected, connected graph of order at least 2.
///
/// Immutable once built; every constructor checks connectivity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n < 2 {
            return Err(GraphError::OrderTooSmall(n));
        }
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let g = Graph { n, adj };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = iter_bits(frontier).fold(0, |acc, v| acc | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == full_mask(self.n)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Open neighbourhood `N(v)` as a mask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighbourhood `N[v] = N(v) ∪ {v}` as a mask.
    pub fn closed_neighborhood(&self, v: usize) -> u64 {
        self.adj[v] | (1 << v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        iter_bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| iter_bits(self.adj[u] >> u >> 1).map(move |k| (u, u + 1 + k)))
            .collect()
    }

    pub fn is_tree(&self) -> bool {
        self.size() == self.n - 1
    }

    /// Short-form graph6 encoding.
    pub fn to_graph6(&self) -> String {
        let mut out = String::with_capacity(1 + (self.n * (self.n - 1) / 2).div_ceil(6));
        out.push((self.n as u8 + 63) as char);
        let mut chunk = 0u8;
        let mut filled = 0;
        for j in 1..self.n {
            for i in 0..j {
                chunk = (chunk << 1) | u8::from(self.has_edge(i, j));
                filled += 1;
                if filled == 6 {
                    out.push((chunk + 63) as char);
                    chunk = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(((chunk << (6 - filled)) + 63) as char);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Parses the edge-list text format: an `n <count>` header followed by one
/// `u v` pair per line. Blank lines and `#` comments are ignored.
pub fn parse_edgelist(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let n = match lines.next() {
        Some((line, header)) => parse_header(line, header)?,
        None => {
            return Err(GraphError::MalformedLine {
                line: 0,
                content: String::new(),
            })
        }
    };

    let mut edges = Vec::new();
    for (line, content) in lines {
        let malformed = || GraphError::MalformedLine {
            line,
            content: content.to_string(),
        };
        let mut tokens = content.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(malformed());
        };
        let u: usize = a.parse().map_err(|_| malformed())?;
        let v: usize = b.parse().map_err(|_| malformed())?;
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

fn parse_header(line: usize, header: &str) -> Result<usize, GraphError> {
    let mut tokens = header.split_whitespace();
    match (tokens.next(), tokens.next(), tokens.next()) {
        (Some("n"), Some(count), None) => count.parse().map_err(|_| GraphError::MalformedLine {
            line,
            content: header.to_string(),
        }),
        _ => Err(GraphError::MalformedLine {
            line,
            content: header.to_string(),
        }),
    }
}

/// Decodes one short-form graph6 line (an optional `>>graph6<<` prefix and
/// trailing whitespace are tolerated).
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let text = line.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let invalid = |why: &str| GraphError::InvalidGraph6(format!("{why} in {text:?}"));

    let (&head, body) = bytes.split_first().ok_or_else(|| invalid("empty string"))?;
    if head == b'~' {
        return Err(invalid("long-form header not supported"));
    }
    if !(63..=126).contains(&head) {
        return Err(invalid("bad header character"));
    }
    let n = (head - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    if body.len() != bit_count.div_ceil(6) {
        return Err(invalid("wrong body length"));
    }
    if let Some(&c) = body.iter().find(|c| !(63..=126).contains(*c)) {
        return Err(invalid(&format!("bad character {:?}", c as char)));
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bit_count..body.len() * 6).any(bit) {
        return Err(invalid("nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::arb_connected;
    use proptest::prelude::*;

    #[test]
    fn edgelist_smallest_graph() {
        let g = parse_edgelist("n 2\n0 1").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn edgelist_path() {
        let g = parse_edgelist("# path\nn 4\n0 1\n1 2\n\n2 3\n1 0\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(g.is_tree());
    }

    #[test]
    fn edgelist_errors() {
        assert_eq!(parse_edgelist("n 3\n0 1"), Err(GraphError::Disconnected));
        assert_eq!(parse_edgelist("n 1\n"), Err(GraphError::OrderTooSmall(1)));
        assert_eq!(parse_edgelist("n 3\n0 1\n1 1"), Err(GraphError::SelfLoop { vertex: 1 }));
        assert_eq!(
            parse_edgelist("n 3\n0 1\n1 3"),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(matches!(
            parse_edgelist("n 3\n0 1\n1 x"),
            Err(GraphError::MalformedLine { line: 3, .. })
        ));
        assert!(matches!(
            parse_edgelist("0 1\n"),
            Err(GraphError::MalformedLine { line: 1, .. })
        ));
        assert!(matches!(
            parse_edgelist("n 3\n0 1 2"),
            Err(GraphError::MalformedLine { .. })
        ));
        assert!(matches!(parse_edgelist(""), Err(GraphError::MalformedLine { .. })));
    }

    #[test]
    fn graph6_hand_decoded() {
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        let p3 = parse_graph6("Bg\n").unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap().edges(), vec![(0, 1)]);
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(parse_graph6("A?"), Err(GraphError::Disconnected));
        assert_eq!(parse_graph6("@"), Err(GraphError::OrderTooSmall(1)));
        assert!(matches!(parse_graph6(""), Err(GraphError::InvalidGraph6(_))));
        assert!(matches!(parse_graph6("~?@~"), Err(GraphError::InvalidGraph6(_))));
        assert!(matches!(parse_graph6("Bww"), Err(GraphError::InvalidGraph6(_))));
        assert!(matches!(parse_graph6("B"), Err(GraphError::InvalidGraph6(_))));
        assert!(matches!(parse_graph6("B w"), Err(GraphError::InvalidGraph6(_))));
        // 'x' sets a padding bit for n = 3
        assert!(matches!(parse_graph6("Bx"), Err(GraphError::InvalidGraph6(_))));
    }

    #[test]
    fn graph6_agrees_with_edgelist() {
        let fixtures = [
            ("Bw", "n 3\n0 1\n0 2\n1 2"),
            ("Bg", "n 3\n0 1\n1 2"),
            ("CF", "n 4\n0 3\n1 3\n2 3"),
            ("Ch", "n 4\n0 1\n1 2\n2 3"),
            ("C~", "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3"),
        ];
        for (g6, el) in fixtures {
            let a = parse_graph6(g6).unwrap();
            let b = parse_edgelist(el).unwrap();
            assert_eq!(a, b, "{g6}");
            assert_eq!(b.to_graph6(), g6);
        }
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_connected(2, 20)) {
            prop_assert_eq!(parse_graph6(&g.to_graph6()).unwrap(), g);
        }

        #[test]
        fn adjacency_is_symmetric_and_loop_free(g in arb_connected(2, 20)) {
            for u in 0..g.order() {
                prop_assert!(!g.has_edge(u, u));
                for v in g.neighbors(u) {
                    prop_assert!(g.has_edge(v, u));
                }
            }
        }
    }
}
