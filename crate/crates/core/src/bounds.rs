//! Lower bounds on the domination number from distances.
//!
//! Every check is decided by an integer comparison in cross-multiplied form
//! (for example `6 * gamma >= S3`); bound values and slacks are carried as
//! exact [`Rational`]s for reporting only.
//!
//! | bound              | check                              |
//! |--------------------|------------------------------------|
//! | diameter           | `3 gamma >= diam + 1`              |
//! | triple             | `6 gamma >= max S3`                |
//! | r-subset           | `r (r - 1) gamma >= max S_r`       |
//! | average distance   | `n (n - 1) gamma >= W`             |
//! | boundary ecc       | `2 gamma >= ecc(B) + 1`            |

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::distance::{all_pairs_distances, boundary_and_set_ecc, BoundaryInfo, DistanceMatrix};
use crate::domination::{gamma_exact, DominationResult};
use crate::graph::Graph;
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("order {n} is below the {needed} vertices the bound needs")]
    OrderTooSmall { n: usize, needed: usize },
    #[error("subset size r = {r} must satisfy 3 <= r <= n = {n}")]
    BadR { r: usize, n: usize },
    #[error("unknown bound {0:?}")]
    UnknownBound(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsConfig {
    /// Subset sizes checked by the r-subset bound.
    pub r_values: Vec<usize>,
    /// Orders up to which r-subsets are maximised exhaustively.
    pub exhaustive_max_order: usize,
    /// Beyond `exhaustive_max_order`, still exhaustive if `C(n, r)` is at most this.
    pub exhaustive_subset_limit: u64,
    /// Random subsets evaluated when maximisation is not exhaustive.
    pub sample_count: usize,
    pub seed: u64,
}

impl Default for BoundsConfig {
    fn default() -> Self {
        BoundsConfig {
            r_values: vec![3, 4, 5],
            exhaustive_max_order: 12,
            exhaustive_subset_limit: 100_000,
            sample_count: 2_000,
            seed: 0x5eed,
        }
    }
}

/// Outcome shared by every bound: value, `gamma - value`, and flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub value: Rational,
    pub slack: Rational,
    pub holds: bool,
    pub equality: bool,
}

impl CheckRecord {
    /// Check `scale * gamma >= amount`, reporting the bound `amount / scale`.
    fn scaled(gamma: usize, amount: u64, scale: u64) -> Self {
        let lhs = scale as i128 * gamma as i128;
        let rhs = amount as i128;
        let value = Rational::new(amount as i64, scale as i64);
        CheckRecord {
            value,
            slack: Rational::from_integer(gamma as i64) - value,
            holds: lhs >= rhs,
            equality: lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterCheck {
    pub diameter: u32,
    /// A diametral pair.
    pub witness: Vec<usize>,
    /// Value is `ceil((diam + 1) / 3)`.
    #[serde(flatten)]
    pub check: CheckRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleCheck {
    /// Lexicographically least triple maximising the distance sum.
    pub witness: Vec<usize>,
    pub distance_sum: u64,
    #[serde(flatten)]
    pub check: CheckRecord,
}

/// A triple with `6 gamma = S3`, and whether all three distances are 2 mod 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleWitness {
    pub triple: [usize; 3],
    /// `d(x1,x2), d(x1,x3), d(x2,x3)`.
    pub distances: [u32; 3],
    pub all_two_mod_three: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetSearch {
    Exhaustive,
    Sampled,
    Given,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetCheck {
    // carried by the enclosing entry in JSON
    #[serde(skip)]
    pub r: usize,
    pub witness: Vec<usize>,
    pub distance_sum: u64,
    pub search: SubsetSearch,
    #[serde(flatten)]
    pub check: CheckRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AverageDistanceCheck {
    pub wiener_index: u64,
    #[serde(flatten)]
    pub check: CheckRecord,
}

/// Diagnostic `d(x,y) + d(x,z) + d(y,z) >= 3R + 1` for a diametral pair
/// `x, y` and the boundary witness `z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpadeDiagnostic {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub sum: u64,
    pub threshold: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryCheck {
    pub boundary: Vec<usize>,
    pub ecc_of_boundary: u32,
    pub witness: usize,
    pub spade: SpadeDiagnostic,
    #[serde(flatten)]
    pub check: CheckRecord,
}

/// A bound that was evaluated, or the reason it was not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome<T> {
    Checked(T),
    Skipped { reason: String },
}

impl<T> Outcome<T> {
    pub fn checked(&self) -> Option<&T> {
        match self {
            Outcome::Checked(t) => Some(t),
            Outcome::Skipped { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetEntry {
    pub r: usize,
    #[serde(flatten)]
    pub outcome: Outcome<SubsetCheck>,
}

/// Every bound evaluated on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub graph: String,
    pub n: usize,
    pub gamma: usize,
    pub gamma_set: Vec<usize>,
    pub diameter: DiameterCheck,
    pub triple: Outcome<TripleCheck>,
    pub triple_equalities: Vec<TripleWitness>,
    pub r_subsets: Vec<SubsetEntry>,
    pub average_distance: AverageDistanceCheck,
    pub boundary_ecc: BoundaryCheck,
    pub fatal: bool,
}

/// Names a single bound for filtering and tallies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundSelector {
    Diameter,
    Triple,
    RSubset(usize),
    AverageDistance,
    BoundaryEcc,
}

impl fmt::Display for BoundSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundSelector::Diameter => f.write_str("diameter"),
            BoundSelector::Triple => f.write_str("triple"),
            BoundSelector::RSubset(r) => write!(f, "r-subset({r})"),
            BoundSelector::AverageDistance => f.write_str("average-distance"),
            BoundSelector::BoundaryEcc => f.write_str("boundary-ecc"),
        }
    }
}

impl FromStr for BoundSelector {
    type Err = BoundsError;

    /// Accepts `diameter`, `triple`, `r-subset(R)` or `r-subset:R`,
    /// `average-distance`, `boundary-ecc`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || BoundsError::UnknownBound(s.to_string());
        match s.trim() {
            "diameter" => Ok(BoundSelector::Diameter),
            "triple" => Ok(BoundSelector::Triple),
            "average-distance" => Ok(BoundSelector::AverageDistance),
            "boundary-ecc" => Ok(BoundSelector::BoundaryEcc),
            other => {
                let r = other
                    .strip_prefix("r-subset(")
                    .and_then(|rest| rest.strip_suffix(')'))
                    .or_else(|| other.strip_prefix("r-subset:"))
                    .ok_or_else(unknown)?;
                r.parse().map(BoundSelector::RSubset).map_err(|_| unknown())
            }
        }
    }
}

impl BoundReport {
    fn records(&self) -> Vec<(BoundSelector, CheckRecord)> {
        let mut out = vec![(BoundSelector::Diameter, self.diameter.check)];
        if let Some(t) = self.triple.checked() {
            out.push((BoundSelector::Triple, t.check));
        }
        for entry in &self.r_subsets {
            if let Some(s) = entry.outcome.checked() {
                out.push((BoundSelector::RSubset(entry.r), s.check));
            }
        }
        out.push((BoundSelector::AverageDistance, self.average_distance.check));
        out.push((BoundSelector::BoundaryEcc, self.boundary_ecc.check));
        out
    }

    /// Bounds attained with equality, in report order.
    pub fn equalities(&self) -> Vec<BoundSelector> {
        self.records()
            .into_iter()
            .filter(|(_, c)| c.equality)
            .map(|(b, _)| b)
            .collect()
    }

    /// Failed checks and mod-3 contradictions, as human-readable labels.
    pub fn violations(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .records()
            .into_iter()
            .filter(|(_, c)| !c.holds)
            .map(|(b, _)| b.to_string())
            .collect();
        out.extend(
            self.triple_equalities
                .iter()
                .filter(|w| !w.all_two_mod_three)
                .map(|w| format!("triple-mod-3{:?}", w.triple)),
        );
        out
    }

    pub fn is_equality(&self, bound: BoundSelector) -> bool {
        self.equalities().contains(&bound)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }
}

/// `ceil((diam + 1) / 3) <= gamma`, decided as `3 gamma >= diam + 1`.
pub fn diameter_lb(gamma: usize, dm: &DistanceMatrix) -> DiameterCheck {
    let diam = dm.diameter() as i64;
    let ceiling = (diam + 1 + 2) / 3;
    let lhs = 3 * gamma as i64;
    let (x, y) = dm.diametral_pair();
    DiameterCheck {
        diameter: dm.diameter(),
        witness: vec![x, y],
        check: CheckRecord {
            value: Rational::from_integer(ceiling),
            slack: Rational::from_integer(gamma as i64 - ceiling),
            holds: lhs > diam,
            equality: gamma as i64 == ceiling,
        },
    }
}

fn triple_sum(dm: &DistanceMatrix, a: usize, b: usize, c: usize) -> u64 {
    u64::from(dm.get(a, b)) + u64::from(dm.get(a, c)) + u64::from(dm.get(b, c))
}

fn require_order(dm: &DistanceMatrix, needed: usize) -> Result<(), BoundsError> {
    if dm.order() < needed {
        Err(BoundsError::OrderTooSmall { n: dm.order(), needed })
    } else {
        Ok(())
    }
}

/// `6 gamma >= d(x1,x2) + d(x1,x3) + d(x2,x3)` at the maximising triple.
pub fn best_triple_lb(gamma: usize, dm: &DistanceMatrix) -> Result<TripleCheck, BoundsError> {
    require_order(dm, 3)?;
    let mut best = ([0, 1, 2], 0);
    for t in (0..dm.order()).combinations(3) {
        let s = triple_sum(dm, t[0], t[1], t[2]);
        if s > best.1 {
            best = ([t[0], t[1], t[2]], s);
        }
    }
    Ok(TripleCheck {
        witness: best.0.to_vec(),
        distance_sum: best.1,
        check: CheckRecord::scaled(gamma, best.1, 6),
    })
}

/// Every triple with `6 gamma = S3`, each tagged with its mod-3 verdict.
pub fn triple_equality_analysis(gamma: usize, dm: &DistanceMatrix) -> Result<Vec<TripleWitness>, BoundsError> {
    require_order(dm, 3)?;
    let target = 6 * gamma as u64;
    Ok((0..dm.order())
        .combinations(3)
        .filter(|t| triple_sum(dm, t[0], t[1], t[2]) == target)
        .map(|t| {
            let distances = [dm.get(t[0], t[1]), dm.get(t[0], t[2]), dm.get(t[1], t[2])];
            TripleWitness {
                triple: [t[0], t[1], t[2]],
                distances,
                all_two_mod_three: distances.iter().all(|d| d % 3 == 2),
            }
        })
        .collect())
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Evaluates the r-subset bound on one given subset.
pub fn subset_check(gamma: usize, dm: &DistanceMatrix, subset: &[usize]) -> Result<SubsetCheck, BoundsError> {
    let mut witness = subset.to_vec();
    witness.sort_unstable();
    witness.dedup();
    let r = witness.len();
    if r < 3 || r > dm.order() || witness.iter().any(|&v| v >= dm.order()) {
        return Err(BoundsError::BadR { r, n: dm.order() });
    }
    let sum = dm.subset_distance_sum(&witness);
    Ok(SubsetCheck {
        r,
        witness,
        distance_sum: sum,
        search: SubsetSearch::Given,
        check: CheckRecord::scaled(gamma, sum, (r * (r - 1)) as u64),
    })
}

/// `r (r - 1) gamma >= S_r` at the maximising r-subset.
///
/// Maximisation is exhaustive when `n` is within the configured order cap or
/// `C(n, r)` is small enough; otherwise a seeded sample of subsets is taken,
/// which can only under-estimate the maximum.
pub fn r_subset_lb(
    gamma: usize,
    dm: &DistanceMatrix,
    r: usize,
    config: &BoundsConfig,
) -> Result<SubsetCheck, BoundsError> {
    let n = dm.order();
    if r < 3 || r > n {
        return Err(BoundsError::BadR { r, n });
    }
    let exhaustive = n <= config.exhaustive_max_order || binomial(n as u64, r as u64) <= config.exhaustive_subset_limit;
    let (witness, sum, search) = if exhaustive {
        let mut best: Option<(Vec<usize>, u64)> = None;
        for s in (0..n).combinations(r) {
            let sum = dm.subset_distance_sum(&s);
            if best.as_ref().is_none_or(|(_, b)| sum > *b) {
                best = Some((s, sum));
            }
        }
        let (w, s) = best.expect("r <= n gives at least one subset");
        (w, s, SubsetSearch::Exhaustive)
    } else {
        let (w, s) = sampled_max(dm, r, config);
        (w, s, SubsetSearch::Sampled)
    };
    Ok(SubsetCheck {
        r,
        witness,
        distance_sum: sum,
        search,
        check: CheckRecord::scaled(gamma, sum, (r * (r - 1)) as u64),
    })
}

fn sampled_max(dm: &DistanceMatrix, r: usize, config: &BoundsConfig) -> (Vec<usize>, u64) {
    let n = dm.order();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ ((n as u64) << 32) ^ r as u64);
    let mut best: (Vec<usize>, u64) = {
        let first: Vec<usize> = (0..r).collect();
        let s = dm.subset_distance_sum(&first);
        (first, s)
    };
    for _ in 0..config.sample_count {
        let mut s: Vec<usize> = sample(&mut rng, n, r).into_vec();
        s.sort_unstable();
        let sum = dm.subset_distance_sum(&s);
        if sum > best.1 || (sum == best.1 && s < best.0) {
            best = (s, sum);
        }
    }
    best
}

/// `n (n - 1) gamma >= W(G)`; the reported value is `mu = W / (n (n - 1))`.
pub fn average_distance_lb(gamma: usize, dm: &DistanceMatrix) -> AverageDistanceCheck {
    let n = dm.order() as u64;
    let w = dm.wiener_index();
    AverageDistanceCheck {
        wiener_index: w,
        check: CheckRecord::scaled(gamma, w, n * (n - 1)),
    }
}

/// `2 gamma >= ecc(B) + 1`, plus the diagnostic triple sum.
pub fn boundary_ecc_lb(gamma: usize, dm: &DistanceMatrix, bi: &BoundaryInfo) -> BoundaryCheck {
    let r = u64::from(bi.ecc_of_boundary);
    let (x, y) = dm.diametral_pair();
    let z = bi.witness;
    let sum = triple_sum(dm, x, y, z);
    BoundaryCheck {
        boundary: bi.boundary.clone(),
        ecc_of_boundary: bi.ecc_of_boundary,
        witness: z,
        spade: SpadeDiagnostic {
            x,
            y,
            z,
            sum,
            threshold: 3 * r + 1,
            holds: sum > 3 * r,
        },
        check: CheckRecord::scaled(gamma, r + 1, 2),
    }
}

/// Solves for gamma and evaluates every bound.
pub fn assemble_report(g: &Graph, config: &BoundsConfig) -> BoundReport {
    assemble_report_with(g, &gamma_exact(g), config)
}

/// As [`assemble_report`] with a precomputed domination result.
pub fn assemble_report_with(g: &Graph, domination: &DominationResult, config: &BoundsConfig) -> BoundReport {
    let gamma = domination.gamma;
    let dm = all_pairs_distances(g);
    let bi = boundary_and_set_ecc(&dm);
    let n = g.order();
    let too_small = |needed: usize| format!("n = {n} < {needed}");

    let triple = match best_triple_lb(gamma, &dm) {
        Ok(t) => Outcome::Checked(t),
        Err(_) => Outcome::Skipped { reason: too_small(3) },
    };
    let triple_equalities = triple_equality_analysis(gamma, &dm).unwrap_or_default();
    let r_subsets = config
        .r_values
        .iter()
        .map(|&r| SubsetEntry {
            r,
            outcome: match r_subset_lb(gamma, &dm, r, config) {
                Ok(s) => Outcome::Checked(s),
                Err(_) if r >= 3 => Outcome::Skipped { reason: too_small(r) },
                Err(e) => Outcome::Skipped { reason: e.to_string() },
            },
        })
        .collect();

    let mut report = BoundReport {
        graph: g.to_graph6(),
        n,
        gamma,
        gamma_set: domination.witness.clone(),
        diameter: diameter_lb(gamma, &dm),
        triple,
        triple_equalities,
        r_subsets,
        average_distance: average_distance_lb(gamma, &dm),
        boundary_ecc: boundary_ecc_lb(gamma, &dm, &bi),
        fatal: false,
    };
    report.fatal = !report.violations().is_empty();
    report
}
