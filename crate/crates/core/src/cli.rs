//! Command-line front end. Exit codes: 0 success, 1 a bound violation or
//! failed verification, 2 usage or input error.

use std::fs::{self, File};
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::bits::mask_of;
use crate::bounds::{assemble_report_with, BoundReport, BoundSelector, BoundsConfig, CheckRecord, Outcome};
use crate::domination::{enumerate_min_dominating_sets_with_cap, gamma_exact, DEFAULT_ENUMERATION_CAP};
use crate::graph::Graph;
use crate::harness::{
    fodig_counterexample_demo, parse_corpus, verify_entries, CorpusFormat, CorpusInput, HarnessError,
};
use crate::treelift::{lift_gamma_set_to_spanning_tree, verify_lift_with_cap};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "domdist",
    version,
    about = "Domination number vs. distance bounds for small graphs"
)]
pub struct Cli {
    /// Input format; detected from the content when omitted.
    #[arg(long, global = true, value_parser = ["graph6", "edgelist"])]
    pub format: Option<String>,
    /// Subset sizes for the r-subset bound.
    #[arg(long = "r", global = true, value_delimiter = ',', default_values_t = vec![3usize, 4, 5])]
    pub r_values: Vec<usize>,
    /// Order cap for exhaustive enumeration and the brute-force oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub max_enum: usize,
    /// Write one JSON object per graph to this file.
    #[arg(long, global = true)]
    pub jsonl: Option<PathBuf>,
    /// Treat any unparseable graph in a corpus as an input error.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report every bound for one graph.
    Analyze { graph: PathBuf },
    /// Check every bound on every graph of a corpus.
    Verify { corpus: PathBuf },
    /// List corpus graphs attaining a bound with equality.
    Tight {
        corpus: PathBuf,
        /// diameter, triple, r-subset(R), average-distance or boundary-ecc.
        #[arg(long)]
        bound: String,
    },
    /// Build and verify the spanning tree for a minimum dominating set.
    Lift {
        graph: PathBuf,
        /// Comma-separated vertex set; defaults to the solver's witness.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
    },
    /// Rebuild and check the diametral-path counterexample.
    Counterexample,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    if cli.r_values.iter().any(|&r| r < 3) {
        return Err(Failure::usage("--r values must be at least 3"));
    }
    let config = BoundsConfig {
        r_values: cli.r_values.clone(),
        ..BoundsConfig::default()
    };
    match &cli.command {
        Command::Analyze { graph } => analyze(cli, &config, graph, out),
        Command::Verify { corpus } => verify(cli, &config, corpus, out),
        Command::Tight { corpus, bound } => tight(cli, &config, corpus, bound, out),
        Command::Lift { graph, set } => lift(cli, graph, set.as_deref(), out),
        Command::Counterexample => counterexample(cli, out),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn detect_format(explicit: Option<&str>, text: &str) -> CorpusFormat {
    match explicit {
        Some("edgelist") => CorpusFormat::EdgeList,
        Some(_) => CorpusFormat::Graph6,
        None => {
            let first = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty() && !l.starts_with('#'))
                .unwrap_or_default();
            if first == "n" || first.starts_with("n ") {
                CorpusFormat::EdgeList
            } else {
                CorpusFormat::Graph6
            }
        }
    }
}

fn load_corpus(cli: &Cli, path: &Path) -> Result<CorpusInput, Failure> {
    let text = read_input(path)?;
    let input = parse_corpus(&text, detect_format(cli.format.as_deref(), &text));
    if cli.strict {
        if let Some(first) = input.skipped.first() {
            return Err(Failure::usage(format!("line {}: {}", first.line, first.error)));
        }
    }
    Ok(input)
}

fn load_single(cli: &Cli, path: &Path) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    let input = parse_corpus(&text, detect_format(cli.format.as_deref(), &text));
    if let Some(first) = input.skipped.first() {
        return Err(Failure::usage(format!("line {}: {}", first.line, first.error)));
    }
    match input.entries.len() {
        1 => Ok(input.entries.into_iter().next().unwrap().graph),
        0 => Err(Failure::usage("no graph in input")),
        k => Err(Failure::usage(format!("expected one graph, found {k}"))),
    }
}

fn write_jsonl(path: &Path, lines: impl IntoIterator<Item = String>) -> Result<(), Failure> {
    let file = File::create(path).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    let mut w = BufWriter::new(file);
    for line in lines {
        writeln!(w, "{line}")?;
    }
    w.flush()?;
    Ok(())
}

fn fmt_set(vs: &[usize]) -> String {
    format!(
        "{{{}}}",
        vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
    )
}

fn status(holds: bool, equality: bool) -> &'static str {
    match (holds, equality) {
        (false, _) => "VIOLATED",
        (true, true) => "equality",
        (true, false) => "strict",
    }
}

fn row(out: &mut dyn Write, name: &str, c: &CheckRecord, detail: String) -> io::Result<()> {
    writeln!(
        out,
        "{:<18} {:>8} {:>8}  {:<9} {}",
        name,
        c.value.to_string(),
        c.slack.to_string(),
        status(c.holds, c.equality),
        detail
    )
}

fn print_report(r: &BoundReport, min_sets: Option<usize>, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "graph     {} (n = {})", r.graph, r.n)?;
    write!(out, "gamma     {}  witness {}", r.gamma, fmt_set(&r.gamma_set))?;
    match min_sets {
        Some(k) => writeln!(out, "  ({k} minimum dominating sets)")?,
        None => writeln!(out)?,
    }
    writeln!(out, "diameter  {}", r.diameter.diameter)?;
    writeln!(out)?;
    writeln!(
        out,
        "{:<18} {:>8} {:>8}  {:<9} detail",
        "bound", "value", "slack", "status"
    )?;
    let d = &r.diameter;
    row(out, "diameter", &d.check, format!("pair {}", fmt_set(&d.witness)))?;
    match &r.triple {
        Outcome::Checked(t) => row(
            out,
            "triple",
            &t.check,
            format!("{} S3 = {}", fmt_set(&t.witness), t.distance_sum),
        )?,
        Outcome::Skipped { reason } => writeln!(out, "{:<18} skipped ({reason})", "triple")?,
    }
    for entry in &r.r_subsets {
        let name = BoundSelector::RSubset(entry.r).to_string();
        match &entry.outcome {
            Outcome::Checked(s) => row(
                out,
                &name,
                &s.check,
                format!(
                    "{} S = {} ({})",
                    fmt_set(&s.witness),
                    s.distance_sum,
                    format!("{:?}", s.search).to_lowercase()
                ),
            )?,
            Outcome::Skipped { reason } => writeln!(out, "{name:<18} skipped ({reason})")?,
        }
    }
    let a = &r.average_distance;
    row(out, "average-distance", &a.check, format!("W = {}", a.wiener_index))?;
    let b = &r.boundary_ecc;
    row(
        out,
        "boundary-ecc",
        &b.check,
        format!(
            "B = {} ecc(B) = {} at {}; spade sum {} >= {}",
            fmt_set(&b.boundary),
            b.ecc_of_boundary,
            b.witness,
            b.spade.sum,
            b.spade.threshold
        ),
    )?;
    writeln!(out)?;
    if r.triple_equalities.is_empty() {
        writeln!(out, "triple equalities: none")?;
    } else {
        for w in &r.triple_equalities {
            writeln!(
                out,
                "triple equality {:?} distances {:?} all 2 mod 3: {}",
                w.triple, w.distances, w.all_two_mod_three
            )?;
        }
    }
    let violations = r.violations();
    if violations.is_empty() {
        writeln!(out, "verdict: all bounds hold")
    } else {
        writeln!(out, "verdict: VIOLATED {}", violations.join(", "))
    }
}

fn analyze(cli: &Cli, config: &BoundsConfig, path: &Path, out: &mut dyn Write) -> CmdResult {
    let g = load_single(cli, path)?;
    let domination = gamma_exact(&g);
    let report = assemble_report_with(&g, &domination, config);
    let min_sets = enumerate_min_dominating_sets_with_cap(&g, cli.max_enum)
        .ok()
        .map(|s| s.len());
    print_report(&report, min_sets, out)?;
    if let Some(p) = &cli.jsonl {
        write_jsonl(p, [report.to_json()])?;
    }
    Ok(if report.fatal { EXIT_VIOLATION } else { EXIT_OK })
}

fn verify(cli: &Cli, config: &BoundsConfig, path: &Path, out: &mut dyn Write) -> CmdResult {
    let input = load_corpus(cli, path)?;
    let run = verify_entries(&input, config);
    let s = &run.summary;
    writeln!(out, "graphs processed  {}", s.graphs_processed)?;
    writeln!(out, "skipped           {}", s.skipped.len())?;
    for skip in &s.skipped {
        writeln!(out, "  line {}: {}", skip.line, skip.error)?;
    }
    writeln!(out, "violations        {}", s.violations)?;
    writeln!(out, "equality counts")?;
    for (bound, count) in &s.equality_counts {
        writeln!(out, "  {bound:<18} {count}")?;
    }
    writeln!(out, "elapsed           {:.3}s", s.elapsed.as_secs_f64())?;
    for r in run.reports.iter().filter(|r| r.fatal) {
        writeln!(out, "VIOLATION {}: {}", r.graph, r.violations().join(", "))?;
    }
    if let Some(p) = &cli.jsonl {
        write_jsonl(p, run.reports.iter().map(BoundReport::to_json))?;
    }
    Ok(if s.violations > 0 { EXIT_VIOLATION } else { EXIT_OK })
}

fn tight(cli: &Cli, config: &BoundsConfig, path: &Path, bound: &str, out: &mut dyn Write) -> CmdResult {
    let bound: BoundSelector = bound
        .parse()
        .map_err(|e: crate::bounds::BoundsError| Failure::usage(e.to_string()))?;
    let mut config = config.clone();
    if let BoundSelector::RSubset(r) = bound {
        if r < 3 {
            return Err(Failure::usage("r-subset needs r >= 3"));
        }
        if !config.r_values.contains(&r) {
            config.r_values.push(r);
        }
    }
    let input = load_corpus(cli, path)?;
    let run = verify_entries(&input, &config);
    let tight: Vec<&BoundReport> = run.reports.iter().filter(|r| r.is_equality(bound)).collect();
    for r in &tight {
        writeln!(out, "{}", r.graph)?;
    }
    if let Some(p) = &cli.jsonl {
        write_jsonl(p, tight.iter().map(|r| r.to_json()))?;
    }
    Ok(if run.summary.violations > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}

fn lift(cli: &Cli, path: &Path, set: Option<&[usize]>, out: &mut dyn Write) -> CmdResult {
    let g = load_single(cli, path)?;
    let m = match set {
        Some(s) => s.to_vec(),
        None => gamma_exact(&g).witness,
    };
    let lift = lift_gamma_set_to_spanning_tree(&g, &m).map_err(|e| Failure::usage(e.to_string()))?;
    writeln!(out, "graph      {} (n = {})", g.to_graph6(), g.order())?;
    writeln!(out, "gamma set  {}", fmt_set(&lift.gamma_set))?;
    for (v, d) in lift.dominator_of.iter().enumerate() {
        if let Some(d) = d {
            writeln!(out, "  {v} -> {d}")?;
        }
    }
    let connectors: Vec<String> = lift.connector_edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    writeln!(out, "connectors {}", connectors.join(" "))?;
    let edges: Vec<String> = lift.tree_edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    writeln!(out, "tree edges {}", edges.join(" "))?;
    let verdict = verify_lift_with_cap(&g, &lift, &m, cli.max_enum);
    if let Some(p) = &cli.jsonl {
        let line = serde_json::json!({
            "graph": g.to_graph6(),
            "lift": lift,
            "tree_graph6": lift.tree().map(|t| t.to_graph6()).ok(),
            "verified": verdict.is_ok(),
        });
        write_jsonl(p, [line.to_string()])?;
    }
    match verdict {
        Ok(()) => {
            writeln!(out, "verified   gamma(T) = gamma(G) = {}", lift.gamma_set.len())?;
            debug_assert_eq!(mask_of(&lift.gamma_set).count_ones() as usize, lift.gamma_set.len());
            Ok(EXIT_OK)
        }
        Err(defect) => {
            writeln!(out, "FAILED     {defect:?}")?;
            Ok(EXIT_VIOLATION)
        }
    }
}

fn counterexample(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let r = fodig_counterexample_demo();
    let label = |v: usize| r.label(v).to_string();
    let edges: Vec<String> = r
        .edges
        .iter()
        .map(|&(a, b)| format!("{}-{}", label(a), label(b)))
        .collect();
    writeln!(out, "graph             {} edges {}", r.graph6, edges.join(" "))?;
    writeln!(
        out,
        "gamma             {} (oracle {}), set {{{}, {}}} dominates: {}",
        r.gamma,
        r.oracle_gamma,
        label(r.gamma_set[0]),
        label(r.gamma_set[1]),
        r.gamma_set_dominates
    )?;
    let path: Vec<String> = r.diametral_path.iter().map(|&v| label(v)).collect();
    writeln!(
        out,
        "diametral path    {} (length {}, diam {}, induced {})",
        path.join("-"),
        r.diametral_path.len() - 1,
        r.diameter,
        r.path_is_induced
    )?;
    let joining: Vec<String> = r
        .joining_edges
        .iter()
        .map(|&(a, b)| format!("{}-{}", label(a), label(b)))
        .collect();
    writeln!(
        out,
        "joining edges     {} ({})",
        r.joining_edge_count,
        joining.join(" ")
    )?;
    writeln!(out, "claimed maximum   gamma - 1 = {}", r.fodig_claim_bound)?;
    let refuted = r.refutes_claim();
    writeln!(out, "claim refuted     {refuted}")?;
    if let Some(p) = &cli.jsonl {
        write_jsonl(p, [serde_json::to_string(&r).expect("report serialises")])?;
    }
    Ok(if refuted { EXIT_OK } else { EXIT_VIOLATION })
}
