use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{assemble_report, BoundReport, BoundSelector, BoundsConfig};
use crate::graph::{parse_edgelist, parse_graph6, Graph, GraphError};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("unknown corpus format {0:?} (expected graph6 or edgelist)")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CorpusFormat {
    /// One graph6 string per line.
    #[default]
    Graph6,
    /// Edge-list blocks, each starting at an `n <count>` header.
    EdgeList,
}

impl FromStr for CorpusFormat {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(CorpusFormat::Graph6),
            "edgelist" | "edge-list" => Ok(CorpusFormat::EdgeList),
            other => Err(HarnessError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    /// 1-based line where the graph starts.
    pub line: usize,
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedEntry {
    pub line: usize,
    #[serde(serialize_with = "as_display")]
    pub error: GraphError,
}

fn as_display<S: serde::Serializer>(e: &GraphError, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(e)
}

#[derive(Debug, Clone, Default)]
pub struct CorpusInput {
    pub entries: Vec<CorpusEntry>,
    pub skipped: Vec<SkippedEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TightInstance {
    pub graph: String,
    pub bound: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusSummary {
    pub graphs_processed: usize,
    pub skipped: Vec<SkippedEntry>,
    /// Graphs whose report is fatal.
    pub violations: usize,
    pub equality_counts: BTreeMap<String, usize>,
    pub tight_instances: Vec<TightInstance>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct CorpusRun {
    pub summary: CorpusSummary,
    /// One report per processed graph, in input order.
    pub reports: Vec<BoundReport>,
}

/// Splits corpus text into graphs. Unparseable graphs are recorded in
/// `skipped` rather than aborting the read.
pub fn parse_corpus(text: &str, format: CorpusFormat) -> CorpusInput {
    let mut input = CorpusInput::default();
    let mut push = |line: usize, parsed: Result<Graph, GraphError>| match parsed {
        Ok(graph) => input.entries.push(CorpusEntry { line, graph }),
        Err(error) => input.skipped.push(SkippedEntry { line, error }),
    };
    match format {
        CorpusFormat::Graph6 => {
            for (i, line) in text.lines().enumerate() {
                let trimmed = line.trim();
                if trimmed.is_empty() || trimmed.starts_with('#') {
                    continue;
                }
                push(i + 1, parse_graph6(trimmed));
            }
        }
        CorpusFormat::EdgeList => {
            let mut block: Option<(usize, String)> = None;
            for (i, line) in text.lines().enumerate() {
                let starts_block = line.trim_start().starts_with("n ") || line.trim() == "n";
                if starts_block {
                    if let Some((start, body)) = block.take() {
                        push(start, parse_edgelist(&body));
                    }
                    block = Some((i + 1, String::new()));
                }
                match block.as_mut() {
                    Some((_, body)) => {
                        body.push_str(line);
                        body.push('\n');
                    }
                    None if line.trim().is_empty() || line.trim_start().starts_with('#') => {}
                    None => push(i + 1, parse_edgelist(line)),
                }
            }
            if let Some((start, body)) = block {
                push(start, parse_edgelist(&body));
            }
        }
    }
    input
}

pub fn read_corpus(path: &Path, format: CorpusFormat) -> Result<CorpusInput, HarnessError> {
    let text = fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_corpus(&text, format))
}

/// Reports every entry (in parallel, output in input order) and aggregates.
pub fn verify_entries(input: &CorpusInput, config: &BoundsConfig) -> CorpusRun {
    let start = Instant::now();
    let reports: Vec<BoundReport> = input
        .entries
        .par_iter()
        .map(|e| assemble_report(&e.graph, config))
        .collect();

    let mut equality_counts = BTreeMap::new();
    let mut tight_instances = Vec::new();
    for report in &reports {
        for bound in report.equalities() {
            *equality_counts.entry(bound.to_string()).or_insert(0) += 1;
            tight_instances.push(TightInstance {
                graph: report.graph.clone(),
                bound: bound.to_string(),
            });
        }
    }
    CorpusRun {
        summary: CorpusSummary {
            graphs_processed: reports.len(),
            skipped: input.skipped.clone(),
            violations: reports.iter().filter(|r| r.fatal).count(),
            equality_counts,
            tight_instances,
            elapsed: start.elapsed(),
        },
        reports,
    }
}

/// Reads and verifies a corpus. With `strict`, the first unparseable graph
/// is an error instead of a skipped line.
pub fn run_corpus_verify(
    path: &Path,
    format: CorpusFormat,
    config: &BoundsConfig,
    strict: bool,
) -> Result<CorpusRun, HarnessError> {
    let input = read_corpus(path, format)?;
    if strict {
        if let Some(first) = input.skipped.first() {
            return Err(HarnessError::Graph {
                line: first.line,
                source: first.error.clone(),
            });
        }
    }
    Ok(verify_entries(&input, config))
}

/// Graph6 encodings of every corpus graph attaining `bound` with equality,
/// in input order.
pub fn find_tight_instances(
    path: &Path,
    format: CorpusFormat,
    bound: BoundSelector,
    config: &BoundsConfig,
) -> Result<Vec<String>, HarnessError> {
    let mut config = config.clone();
    if let BoundSelector::RSubset(r) = bound {
        if !config.r_values.contains(&r) {
            config.r_values.push(r);
        }
    }
    let input = read_corpus(path, format)?;
    let run = verify_entries(&input, &config);
    Ok(run
        .reports
        .into_iter()
        .filter(|r| r.is_equality(bound))
        .map(|r| r.graph)
        .collect())
}
