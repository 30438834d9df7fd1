//! Exact domination number.
//!
//! [`gamma_exact`] solves the set-cover formulation over closed
//! neighbourhoods by branch and bound. [`gamma_bruteforce_oracle`] enumerates
//! subsets in increasing size and shares no code with the solver beyond the
//! [`Graph`] type; it exists to check the solver.

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::bits::{iter_bits, mask_of};
use crate::distance::{all_pairs_distances, boundary_and_set_ecc};
use crate::graph::Graph;

/// Default order cap for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DominationError {
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("order {n} exceeds the enumeration cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub gamma: usize,
    /// A minimum dominating set, sorted ascending.
    pub witness: Vec<usize>,
    /// Every minimum dominating set in lexicographic order, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_min_sets: Option<Vec<Vec<usize>>>,
}

fn check_range(g: &Graph, s: &[usize]) -> Result<(), DominationError> {
    match s.iter().find(|&&v| v >= g.order()) {
        Some(&vertex) => Err(DominationError::VertexOutOfRange { vertex, n: g.order() }),
        None => Ok(()),
    }
}

/// `N[S]` as a mask.
pub fn closed_neighborhood_of_set(g: &Graph, set: u64) -> u64 {
    iter_bits(set).fold(0, |acc, v| acc | g.closed_neighborhood(v))
}

/// Whether `N[S] = V(G)`.
pub fn is_dominating_set(g: &Graph, s: &[usize]) -> Result<bool, DominationError> {
    check_range(g, s)?;
    Ok(closed_neighborhood_of_set(g, mask_of(s)) == g.vertex_mask())
}

/// Lower bound from distances: the diameter and boundary-eccentricity bounds,
/// rounded up.
fn distance_lower_bound(g: &Graph) -> usize {
    let dm = all_pairs_distances(g);
    let by_diameter = (dm.diameter() as usize + 1).div_ceil(3);
    let by_boundary = (boundary_and_set_ecc(&dm).ecc_of_boundary as usize + 1).div_ceil(2);
    by_diameter.max(by_boundary)
}

struct Search {
    closed: Vec<u64>,
    all: u64,
    chosen: Vec<usize>,
    best: Vec<usize>,
    floor: usize,
}

impl Search {
    fn greedy(&self) -> Vec<usize> {
        let mut covered = 0u64;
        let mut picks = Vec::new();
        while covered != self.all {
            let uncovered = self.all & !covered;
            let v = (0..self.closed.len())
                .max_by_key(|&v| ((self.closed[v] & uncovered).count_ones(), std::cmp::Reverse(v)))
                .unwrap();
            picks.push(v);
            covered |= self.closed[v];
        }
        picks
    }

    fn done(&self) -> bool {
        self.best.len() <= self.floor
    }

    /// `excluded` holds vertices already tried at an ancestor's sibling branch;
    /// any cover using them was explored there.
    fn run(&mut self, covered: u64, excluded: u64) {
        if covered == self.all {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        if self.done() || self.chosen.len() + 1 >= self.best.len() {
            return;
        }
        let uncovered = self.all & !covered;
        let max_gain = iter_bits(self.all & !excluded)
            .map(|u| (self.closed[u] & uncovered).count_ones())
            .max()
            .unwrap_or(0);
        if max_gain == 0 {
            return;
        }
        let needed = (uncovered.count_ones().div_ceil(max_gain)) as usize;
        if self.chosen.len() + needed >= self.best.len() {
            return;
        }

        // uncovered vertex with the fewest remaining options, lowest index on ties
        let mut target = None;
        let mut fewest = u32::MAX;
        for v in iter_bits(uncovered) {
            let options = (self.closed[v] & !excluded).count_ones();
            if options == 0 {
                return;
            }
            if options < fewest {
                fewest = options;
                target = Some(v);
            }
        }
        let target = target.unwrap();

        let mut candidates: Vec<usize> = iter_bits(self.closed[target] & !excluded).collect();
        candidates.sort_by_key(|&u| (std::cmp::Reverse((self.closed[u] & uncovered).count_ones()), u));

        let mut excluded = excluded;
        for u in candidates {
            self.chosen.push(u);
            self.run(covered | self.closed[u], excluded);
            self.chosen.pop();
            if self.done() {
                return;
            }
            excluded |= 1 << u;
        }
    }
}

/// Exact domination number with one minimum dominating set.
pub fn gamma_exact(g: &Graph) -> DominationResult {
    let closed: Vec<u64> = (0..g.order()).map(|v| g.closed_neighborhood(v)).collect();
    let mut search = Search {
        closed,
        all: g.vertex_mask(),
        chosen: Vec::new(),
        best: Vec::new(),
        floor: distance_lower_bound(g),
    };
    search.best = search.greedy();
    search.run(0, 0);
    let mut witness = search.best;
    witness.sort_unstable();
    DominationResult {
        gamma: witness.len(),
        witness,
        all_min_sets: None,
    }
}

fn dominates_by_scan(g: &Graph, set: &[usize]) -> bool {
    let mut hit = vec![false; g.order()];
    for &v in set {
        hit[v] = true;
        for w in g.neighbors(v) {
            hit[w] = true;
        }
    }
    hit.into_iter().all(|h| h)
}

pub fn gamma_bruteforce_oracle(g: &Graph) -> Result<DominationResult, DominationError> {
    gamma_bruteforce_oracle_with_cap(g, DEFAULT_ENUMERATION_CAP)
}

/// Tries every subset in order of size, then lexicographically; the first
/// dominating one is returned.
pub fn gamma_bruteforce_oracle_with_cap(g: &Graph, cap: usize) -> Result<DominationResult, DominationError> {
    let n = g.order();
    if n > cap {
        return Err(DominationError::TooLarge { n, cap });
    }
    for k in 1..=n {
        if let Some(witness) = (0..n).combinations(k).find(|s| dominates_by_scan(g, s)) {
            return Ok(DominationResult {
                gamma: k,
                witness,
                all_min_sets: None,
            });
        }
    }
    unreachable!("the full vertex set dominates")
}

pub fn enumerate_min_dominating_sets(g: &Graph) -> Result<Vec<Vec<usize>>, DominationError> {
    enumerate_min_dominating_sets_with_cap(g, DEFAULT_ENUMERATION_CAP)
}

/// All minimum dominating sets, each sorted, in lexicographic order.
pub fn enumerate_min_dominating_sets_with_cap(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>, DominationError> {
    let n = g.order();
    if n > cap {
        return Err(DominationError::TooLarge { n, cap });
    }
    let gamma = gamma_exact(g).gamma;
    let all = g.vertex_mask();
    Ok((0..n)
        .combinations(gamma)
        .filter(|s| closed_neighborhood_of_set(g, mask_of(s)) == all)
        .collect())
}

/// [`gamma_exact`] plus the full list of minimum dominating sets; the witness
/// is the lexicographically least of them.
pub fn gamma_with_all_sets(g: &Graph, cap: usize) -> Result<DominationResult, DominationError> {
    let sets = enumerate_min_dominating_sets_with_cap(g, cap)?;
    Ok(DominationResult {
        gamma: sets[0].len(),
        witness: sets[0].clone(),
        all_min_sets: Some(sets),
    })
}

/// Whether `set` (as a mask) is dominating.
pub fn is_dominating_mask(g: &Graph, set: u64) -> bool {
    closed_neighborhood_of_set(g, set) == g.vertex_mask()
}
