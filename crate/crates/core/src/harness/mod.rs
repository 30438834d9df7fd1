//! Corpus-scale verification and the textbook counterexample.

mod corpus;
mod counterexample;

pub use corpus::{
    find_tight_instances, parse_corpus, read_corpus, run_corpus_verify, verify_entries, CorpusEntry, CorpusFormat,
    CorpusInput, CorpusRun, CorpusSummary, HarnessError, SkippedEntry, TightInstance,
};
pub use counterexample::{
    counterexample_graph, fodig_counterexample_demo, is_induced_path, joining_edges, CounterexampleReport,
    COUNTEREXAMPLE_LABELS,
};
