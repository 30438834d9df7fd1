//! Exact domination numbers and distance invariants of small connected graphs,
//! together with the lower bounds on the domination number that follow from
//! pairwise distances (diameter, vertex triples, r-subsets, average distance,
//! boundary eccentricity).
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: the immutable [`Graph`] type plus edge-list and graph6 parsing.
//! - [`distance`]: BFS distance matrices, Wiener index, boundary and set eccentricity.
//! - [`domination`]: exact branch-and-bound solver and a brute-force oracle.
//! - [`treelift`]: spanning trees that keep a minimum dominating set minimum.
//! - [`bounds`]: exact evaluation of every lower bound and per-graph reports.
//! - [`harness`]: corpus verification and the textbook counterexample.

pub mod bits;
pub mod bounds;
pub mod cli;
pub mod distance;
pub mod domination;
pub mod families;
pub mod graph;
pub mod harness;
pub mod rational;
pub mod treelift;

pub use bounds::{assemble_report, BoundReport, BoundSelector, BoundsConfig};
pub use distance::{all_pairs_distances, boundary_and_set_ecc, wiener_index, BoundaryInfo, DistanceMatrix};
pub use domination::{gamma_bruteforce_oracle, gamma_exact, is_dominating_set, DominationResult};
pub use graph::{parse_edgelist, parse_graph6, Graph, GraphError};
pub use rational::Rational;
pub use treelift::{lift_gamma_set_to_spanning_tree, verify_lift, SpanningTreeLift};

#[cfg(test)]
mod testing;
