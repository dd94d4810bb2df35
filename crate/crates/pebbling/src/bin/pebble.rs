//! Command-line front door: build graphs, run the solvers, emit
//! certificates, and reproduce the supported closed-form tables.
//!
//! Exit codes: 0 success (and, for `reproduce`, all rows agree); 2 usage or
//! validation failure; 3 search budget exhausted or value not pinned (the
//! bracketing bounds are still printed); 4 a reproduction row disagrees.

use std::collections::BTreeSet;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use pebbling::certificate::{
    certify_rooted, ortho_chain_strategies, para_chain_strategies, Strategy, Verdict,
};
use pebbling::families::{self, SquareKind};
use pebbling::graph::Graph;
use pebbling::io::{self, Format};
use pebbling::polymer::{compose_polymer, PolymerSpec};
use pebbling::report::{fingerprint, ReportResult, RunReport};
use pebbling::reproduce::{self, Selection};
use pebbling::solver;
use pebbling::Error as LibError;

#[derive(Parser)]
#[command(
    name = "pebble",
    version,
    about = "Exact graph pebbling: invariants, certificates, and family tables",
    after_help = "Graphs are read from a file path or from standard input when the \
path is `-`; JSON and DOT are auto-detected. Exit codes: 0 success, 2 usage or \
validation error, 3 budget exhausted (bounds still printed), 4 table mismatch."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a named graph family and write it as JSON or DOT.
    ///
    /// Families and their positional parameters: cycle M, path N,
    /// complete N, hypercube D, friendship N M (N cycles of length M
    /// sharing one vertex), tchain N (chain of N triangles), sqchain N
    /// (chain of N squares), corona N H (a complete graph K_N with a copy
    /// of K_H pinned to every vertex), qnm N M (N copies of K_M each
    /// sharing one vertex with a central K_N), polymer FILE (a composition
    /// plan in JSON).
    Family {
        /// One of: cycle, path, complete, hypercube, friendship, tchain,
        /// sqchain, corona, qnm, polymer.
        name: String,
        /// Positional numeric parameters (see the family list), or the
        /// plan file for `polymer`.
        params: Vec<String>,
        /// Square-chain layout: cut vertices at opposite (para) or
        /// adjacent (ortho) corners.
        #[arg(long, value_enum)]
        kind: Option<ChainKind>,
        /// Append a pendant vertex at the far end (tchain, sqchain).
        #[arg(long)]
        pendant: bool,
        /// Join consecutive squares by an edge instead of a shared vertex
        /// (sqchain).
        #[arg(long)]
        bridges: bool,
        /// Output format.
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a pebbling number: the weight that guarantees reaching the
    /// root (or every root if none is given).
    Pi {
        /// Graph file, or `-` for standard input.
        graph: String,
        /// Target vertex, by id or label; omit to maximize over all roots.
        #[arg(long)]
        root: Option<String>,
        /// How many pebbles must reach the root.
        #[arg(long, default_value_t = 1)]
        t: u32,
        /// Search-node budget.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        /// Emit a machine-readable run report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Compute an optimal pebbling number: the lightest configuration
    /// from which every root is reachable.
    Opt {
        /// Graph file, or `-` for standard input.
        graph: String,
        /// Cap every vertex at this many pebbles.
        #[arg(long)]
        cap: Option<u32>,
        /// Search-node budget.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        /// Emit a machine-readable run report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Certify a rooted pebbling number: a rational-arithmetic upper bound
    /// from weight functions, met by a searched unsolvable witness.
    Certify {
        /// Graph file, or `-` for standard input.
        graph: String,
        /// Target vertex, by id or label. Required unless
        /// --family-default picks the built-in root.
        #[arg(long)]
        root: Option<String>,
        /// JSON file holding an array of strategies (as produced by the
        /// library's serializer) to use as the bound.
        #[arg(long, conflicts_with = "family_default")]
        strategies: Option<PathBuf>,
        /// Recognize the graph as a built-in square chain and use its
        /// canned strategies and root.
        #[arg(long)]
        family_default: bool,
        /// Search-node budget for the witness side.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Check every supported closed-form value against an independent
    /// computation and emit the comparison table as CSV.
    Reproduce {
        /// Which table section to run: 2, 3, 4, or all.
        #[arg(long, default_value = "all")]
        section: String,
        /// Cap on the family size index of the expensive search rows.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Search-node budget per row.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        /// Emit the rows as JSON instead of CSV.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChainKind {
    Para,
    Ortho,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Dot,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Dot => Format::Dot,
        }
    }
}

/// A command failure carrying its process exit code.
enum Failure {
    /// Bad arguments, unreadable input, or failed validation.
    Usage(String),
    /// The search budget ran out, or a certificate did not pin the value.
    Budget(String),
    /// Some reproduction rows disagree with their formulas.
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
            Failure::Mismatch(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Budget(m) | Failure::Mismatch(m) => m,
        }
    }
}

impl From<LibError> for Failure {
    fn from(e: LibError) -> Failure {
        match e {
            LibError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Family {
            name,
            params,
            kind,
            pendant,
            bridges,
            format,
            out,
        } => cmd_family(&name, &params, kind, pendant, bridges, format, out),
        Cmd::Pi {
            graph,
            root,
            t,
            budget,
            json,
        } => cmd_pi(&graph, root.as_deref(), t, budget, json),
        Cmd::Opt {
            graph,
            cap,
            budget,
            json,
        } => cmd_opt(&graph, cap, budget, json),
        Cmd::Certify {
            graph,
            root,
            strategies,
            family_default,
            budget,
        } => cmd_certify(&graph, root.as_deref(), strategies, family_default, budget),
        Cmd::Reproduce {
            section,
            max_n,
            budget,
            json,
        } => cmd_reproduce(&section, max_n, budget, json),
    }
}

// ---------------------------------------------------------------- input

/// Read a graph from a file, or from standard input when the path is `-`.
fn read_graph(path: &str) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    let format = io::sniff_format(&text);
    io::import_graph(&text, format).map_err(|e| usage(format!("cannot parse graph: {e}")))
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
    }
}

/// Resolve a vertex given as a numeric id or as a label.
fn resolve_vertex(g: &Graph, spec: &str) -> Result<usize, Failure> {
    if let Ok(v) = spec.parse::<usize>() {
        g.check_vertex(v)?;
        return Ok(v);
    }
    g.vertex_by_label(spec)
        .ok_or_else(|| usage(format!("no vertex is labeled {spec:?}")))
}

// --------------------------------------------------------------- family

fn cmd_family(
    name: &str,
    params: &[String],
    kind: Option<ChainKind>,
    pendant: bool,
    bridges: bool,
    format: OutFormat,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    if kind.is_some() && name != "sqchain" {
        return Err(usage("--kind applies only to sqchain"));
    }
    if pendant && !matches!(name, "tchain" | "sqchain") {
        return Err(usage("--pendant applies only to tchain and sqchain"));
    }
    if bridges && name != "sqchain" {
        return Err(usage("--bridges applies only to sqchain"));
    }
    let g = build_family(name, params, kind, pendant, bridges)?;
    let text = io::export_graph(&g, format.into());
    match out {
        Some(path) => fs::write(&path, &text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn build_family(
    name: &str,
    params: &[String],
    kind: Option<ChainKind>,
    pendant: bool,
    bridges: bool,
) -> Result<Graph, Failure> {
    let number = |i: usize, what: &str| -> Result<usize, Failure> {
        let raw = params
            .get(i)
            .ok_or_else(|| usage(format!("{name} needs {what}")))?;
        raw.parse::<usize>()
            .map_err(|_| usage(format!("{name}: {what} must be a number, got {raw:?}")))
    };
    let exactly = |n: usize| -> Result<(), Failure> {
        if params.len() > n {
            return Err(usage(format!(
                "{name} takes {n} parameter(s), got {}",
                params.len()
            )));
        }
        Ok(())
    };
    let g = match name {
        "cycle" => {
            exactly(1)?;
            families::cycle(number(0, "the cycle length m")?)?
        }
        "path" => {
            exactly(1)?;
            families::path(number(0, "the number of vertices n")?)?
        }
        "complete" => {
            exactly(1)?;
            families::complete(number(0, "the number of vertices n")?)?
        }
        "hypercube" => {
            exactly(1)?;
            families::hypercube(number(0, "the dimension d")?)?
        }
        "friendship" => {
            exactly(2)?;
            families::friendship(number(0, "the number of cycles n")?, number(1, "the cycle length m")?)?
        }
        "tchain" => {
            exactly(1)?;
            families::triangular_chain(number(0, "the number of triangles n")?, pendant)?
        }
        "sqchain" => {
            exactly(1)?;
            let sk = match kind.unwrap_or(ChainKind::Para) {
                ChainKind::Para => SquareKind::Para,
                ChainKind::Ortho => SquareKind::Ortho,
            };
            families::square_chain(number(0, "the number of squares n")?, sk, pendant, bridges)?
        }
        "corona" => {
            exactly(2)?;
            let n = number(0, "the core size n")?;
            let h = number(1, "the pinned-copy size h")?;
            families::corona(&families::complete(n)?, &families::complete(h)?)?
        }
        "qnm" => {
            exactly(2)?;
            families::qnm(number(0, "the number of outer cliques n")?, number(1, "the clique size m")?)?
        }
        "polymer" => {
            exactly(1)?;
            let path = params
                .get(0)
                .ok_or_else(|| usage("polymer needs a JSON plan file"))?;
            let text = read_input(path)?;
            let spec: PolymerSpec = serde_json::from_str(&text)
                .map_err(|e| usage(format!("cannot parse polymer plan: {e}")))?;
            compose_polymer(&spec)?
        }
        other => {
            return Err(usage(format!(
                "unknown family {other:?}; expected one of cycle, path, complete, \
hypercube, friendship, tchain, sqchain, corona, qnm, polymer"
            )))
        }
    };
    Ok(g)
}

// ------------------------------------------------------------------- pi

fn cmd_pi(path: &str, root: Option<&str>, t: u32, budget: u64, json: bool) -> Result<(), Failure> {
    let g = read_graph(path)?;
    let root = root.map(|spec| resolve_vertex(&g, spec)).transpose()?;
    let quantity = if t == 1 { "pi".to_string() } else { format!("pi_{t}") };
    let command = match root {
        Some(r) => format!("pi --root {r} --t {t} --budget {budget}"),
        None => format!("pi --t {t} --budget {budget}"),
    };
    let started = Instant::now();
    let outcome = match root {
        Some(r) => solver::pebbling_number_rooted(&g, r, t, budget),
        None => solver::pebbling_number(&g, t, budget),
    };
    match outcome {
        Ok(res) => {
            let result = ReportResult {
                quantity: quantity.clone(),
                value: res.value,
                root: res.root,
                witness: Some(res.witness.counts().to_vec()),
                exhaustive: res.exhaustive,
            };
            emit_report(&g, command, budget, vec![result], started, json);
            Ok(())
        }
        Err(LibError::BudgetExceeded { lower, upper, witness }) => {
            let results = vec![
                ReportResult {
                    quantity: format!("{quantity}_lower"),
                    value: lower,
                    root,
                    witness: Some(witness),
                    exhaustive: false,
                },
                ReportResult {
                    quantity: format!("{quantity}_upper"),
                    value: upper,
                    root,
                    witness: None,
                    exhaustive: false,
                },
            ];
            emit_report(&g, command, budget, results, started, json);
            Err(Failure::Budget(format!(
                "search budget exhausted: {quantity} is in [{lower}, {upper}]"
            )))
        }
        Err(e) => Err(e.into()),
    }
}

// ------------------------------------------------------------------ opt

fn cmd_opt(path: &str, cap: Option<u32>, budget: u64, json: bool) -> Result<(), Failure> {
    let g = read_graph(path)?;
    let quantity = match cap {
        None => "pi_star".to_string(),
        Some(c) => format!("pi_star_{c}"),
    };
    let command = match cap {
        Some(c) => format!("opt --cap {c} --budget {budget}"),
        None => format!("opt --budget {budget}"),
    };
    let started = Instant::now();
    match solver::optimal_pebbling(&g, cap, budget) {
        Ok(res) => {
            let result = ReportResult {
                quantity: quantity.clone(),
                value: res.value,
                root: None,
                witness: Some(res.witness.counts().to_vec()),
                exhaustive: res.exhaustive,
            };
            emit_report(&g, command, budget, vec![result], started, json);
            Ok(())
        }
        Err(LibError::BudgetExceeded { lower, upper, witness }) => {
            let results = vec![
                ReportResult {
                    quantity: format!("{quantity}_lower"),
                    value: lower,
                    root: None,
                    witness: None,
                    exhaustive: false,
                },
                ReportResult {
                    quantity: format!("{quantity}_upper"),
                    value: upper,
                    root: None,
                    witness: Some(witness),
                    exhaustive: false,
                },
            ];
            emit_report(&g, command, budget, results, started, json);
            Err(Failure::Budget(format!(
                "search budget exhausted: {quantity} is in [{lower}, {upper}]"
            )))
        }
        Err(e) => Err(e.into()),
    }
}

/// Print one run, honoring the machine/human switch. The timing line is
/// last so that identical inputs give byte-identical output above it.
fn emit_report(
    g: &Graph,
    command: String,
    budget: u64,
    results: Vec<ReportResult>,
    started: Instant,
    json: bool,
) {
    let elapsed_ms = started.elapsed().as_millis();
    if json {
        let report = RunReport {
            command,
            fingerprint: fingerprint(g),
            budget,
            results,
            elapsed_ms,
        };
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
        return;
    }
    println!("graph: {} vertices, {} edges", g.order(), g.size());
    println!("fingerprint: {}", fingerprint(g));
    println!("budget: {budget}");
    for r in &results {
        let mut line = format!("{} = {}", r.quantity, r.value);
        if let Some(root) = r.root {
            line.push_str(&format!("  root={root}"));
        }
        line.push_str(&format!("  exhaustive={}", r.exhaustive));
        println!("{line}");
        if let Some(witness) = &r.witness {
            println!("witness: {witness:?}");
        }
    }
    println!("elapsed_ms: {elapsed_ms}");
}

// -------------------------------------------------------------- certify

fn cmd_certify(
    path: &str,
    root: Option<&str>,
    strategies_path: Option<PathBuf>,
    family_default: bool,
    budget: u64,
) -> Result<(), Failure> {
    let g = read_graph(path)?;
    let requested_root = root.map(|spec| resolve_vertex(&g, spec)).transpose()?;
    let (root, strategies) = if family_default {
        let (canned_root, canned) = recognize_square_chain(&g)?;
        if let Some(r) = requested_root {
            if r != canned_root {
                return Err(usage(format!(
                    "the built-in strategies certify root {canned_root}, not {r}"
                )));
            }
        }
        (canned_root, Some(canned))
    } else {
        let r = requested_root
            .ok_or_else(|| usage("certify needs --root unless --family-default picks one"))?;
        match &strategies_path {
            Some(file) => {
                let text = read_input(&file.display().to_string())?;
                let parsed: Vec<Strategy> = serde_json::from_str(&text)
                    .map_err(|e| usage(format!("cannot parse strategies: {e}")))?;
                (r, Some(parsed))
            }
            None => (r, None),
        }
    };
    eprintln!("budget: {budget}");
    let cert = certify_rooted(&g, root, strategies, None, budget)?;
    println!("{}", serde_json::to_string_pretty(&cert).unwrap());
    match cert.verdict {
        Verdict::Exact => Ok(()),
        Verdict::Gap => Err(Failure::Budget(format!(
            "certificate leaves a gap: value in [{}, {}]",
            cert.lower, cert.upper
        ))),
    }
}

/// Match the graph against the built-in square chains and return the canned
/// root and strategies on success.
fn recognize_square_chain(g: &Graph) -> Result<(usize, Vec<Strategy>), Failure> {
    let order = g.order();
    if order >= 4 && (order - 1) % 3 == 0 {
        let n = (order - 1) / 3;
        let edges = edge_set(g);
        if let Ok(candidate) = families::square_chain(n, SquareKind::Para, false, false) {
            if edge_set(&candidate) == edges {
                return Ok((0, para_chain_strategies(n)?));
            }
        }
        if n >= 2 {
            if let Ok(candidate) = families::square_chain(n, SquareKind::Ortho, false, false) {
                if edge_set(&candidate) == edges {
                    return Ok((3, ortho_chain_strategies(n)?));
                }
            }
        }
    }
    Err(usage(
        "--family-default: the graph is not a built-in square chain; \
pass --root (and optionally --strategies) instead",
    ))
}

fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
    g.edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect()
}

// ------------------------------------------------------------ reproduce

fn cmd_reproduce(section: &str, max_n: usize, budget: u64, json: bool) -> Result<(), Failure> {
    let selection: Selection = section.parse()?;
    eprintln!("budget: {budget}");
    let rows = gather_rows(selection, max_n, budget)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&rows).unwrap());
    } else {
        println!("{}", reproduce::CSV_HEADER);
        for row in &rows {
            println!("{}", row.csv_line());
        }
    }
    let disagreements: Vec<&reproduce::Row> = rows.iter().filter(|r| !r.agree).collect();
    if disagreements.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!(
            "{} row(s) disagree; first: {}",
            disagreements.len(),
            disagreements[0].csv_line()
        )))
    }
}

/// Run the requested sections. A full run computes the three sections on
/// separate threads; rows are still emitted in fixed section order.
fn gather_rows(
    selection: Selection,
    max_n: usize,
    budget: u64,
) -> Result<Vec<reproduce::Row>, Failure> {
    if selection != Selection::All {
        return Ok(reproduce::rows(selection, max_n, budget)?);
    }
    let parts = std::thread::scope(|scope| {
        let handles: Vec<_> = [Selection::Two, Selection::Three, Selection::Four]
            .into_iter()
            .map(|sel| scope.spawn(move || reproduce::rows(sel, max_n, budget)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("section worker panicked"))
            .collect::<Vec<_>>()
    });
    let mut rows = Vec::new();
    for part in parts {
        rows.extend(part?);
    }
    Ok(rows)
}
