//! Breadth-first distances and the invariants derived from them.

use serde::Serialize;

use crate::bits::iter_bits;
use crate::graph::Graph;
use crate::rational::Rational;

/// All-pairs hop distances with per-vertex eccentricities and the diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    ecc: Vec<u32>,
    diam: u32,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, v: usize) -> &[u32] {
        &self.d[v * self.n..(v + 1) * self.n]
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.ecc[v]
    }

    pub fn eccentricities(&self) -> &[u32] {
        &self.ecc
    }

    pub fn diameter(&self) -> u32 {
        self.diam
    }

    /// Lexicographically least pair `(x, y)`, `x < y`, at distance `diam`.
    pub fn diametral_pair(&self) -> (usize, usize) {
        (0..self.n)
            .flat_map(|x| (x + 1..self.n).map(move |y| (x, y)))
            .find(|&(x, y)| self.get(x, y) == self.diam)
            .expect("a connected graph of order >= 2 has a diametral pair")
    }

    /// Sum of pairwise distances over a vertex subset.
    pub fn subset_distance_sum(&self, subset: &[usize]) -> u64 {
        subset
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| subset[i + 1..].iter().map(move |&v| (u, v)))
            .map(|(u, v)| u64::from(self.get(u, v)))
            .sum()
    }

    /// Sum of `d(u, v)` over unordered pairs.
    pub fn wiener_index(&self) -> u64 {
        self.d.iter().map(|&x| u64::from(x)).sum::<u64>() / 2
    }

    /// Average distance `W / (n (n - 1))` as an exact rational.
    pub fn average_distance(&self) -> Rational {
        let n = self.n as i64;
        Rational::new(self.wiener_index() as i64, n * (n - 1))
    }

    /// `d(v, S) = min_{s in S} d(v, s)` for a non-empty set given as a mask.
    pub fn distance_to_set(&self, v: usize, set: u64) -> u32 {
        iter_bits(set)
            .map(|s| self.get(v, s))
            .min()
            .expect("distance to an empty set is undefined")
    }

    /// `ecc(S) = max_v d(v, S)` together with the lowest vertex attaining it.
    pub fn set_eccentricity(&self, set: u64) -> (u32, usize) {
        let mut best = (0, 0);
        for v in 0..self.n {
            let dv = self.distance_to_set(v, set);
            if dv > best.0 {
                best = (dv, v);
            }
        }
        best
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut d = vec![0u32; n * n];
    for source in 0..n {
        let row = &mut d[source * n..(source + 1) * n];
        let mut seen = 1u64 << source;
        let mut frontier = seen;
        let mut depth = 0;
        while frontier != 0 {
            depth += 1;
            let next = iter_bits(frontier).fold(0, |acc, v| acc | g.neighbor_mask(v)) & !seen;
            for v in iter_bits(next) {
                row[v] = depth;
            }
            seen |= next;
            frontier = next;
        }
    }
    let ecc: Vec<u32> = (0..n).map(|v| *d[v * n..(v + 1) * n].iter().max().unwrap()).collect();
    let diam = *ecc.iter().max().unwrap();
    DistanceMatrix { n, d, ecc, diam }
}

pub fn wiener_index(g: &Graph) -> u64 {
    all_pairs_distances(g).wiener_index()
}

/// The boundary `B(G)` (vertices of maximum eccentricity) and its eccentricity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryInfo {
    pub boundary: Vec<usize>,
    /// `ecc(B) = max_v d(v, B)`.
    pub ecc_of_boundary: u32,
    /// Lowest vertex `z` with `d(z, B) = ecc(B)`.
    pub witness: usize,
}

pub fn boundary_and_set_ecc(dm: &DistanceMatrix) -> BoundaryInfo {
    let boundary: Vec<usize> = (0..dm.order())
        .filter(|&v| dm.eccentricity(v) == dm.diameter())
        .collect();
    let mask = crate::bits::mask_of(&boundary);
    let (ecc_of_boundary, witness) = dm.set_eccentricity(mask);
    BoundaryInfo {
        boundary,
        ecc_of_boundary,
        witness,
    }
}
