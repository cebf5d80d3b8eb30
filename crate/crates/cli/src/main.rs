use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use cdcrit::domination::is_k_gamma_c_critical;
use cdcrit::families::FamilySpec;
use cdcrit::graph6::{parse_graph6, to_graph6};
use cdcrit::theorems::{Budgets, DEFAULT_HAM_BUDGET, DEFAULT_SCATTER_BUDGET};
use cdcrit::invariants::DEFAULT_CUT_BUDGET;
use cdcrit_cli::scan::{parse_checks, ScanError};
use cdcrit_cli::{
    enumerate_connected_graphs, parse_order_range, probe_open_problem, scan, Filter, Item, Payload,
    ScanOptions, Source, SweepSummary,
};

const EXIT_INPUT: u8 = 3;

/// Connected-domination critical graphs: invariants, families, theorem
/// checks and exhaustive sweeps.
#[derive(Parser)]
#[command(name = "cdcrit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant profile of each input graph, one JSON record per line.
    Profile {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Build family members and print their graph6 lines.
    Family {
        /// Member specs such as `classG1:1,1,1,1` or `cutvertex-G2:1,2,1`.
        #[arg(required = true)]
        specs: Vec<String>,
        /// Print Graphviz DOT with role names instead of graph6.
        #[arg(long)]
        dot: bool,
        /// Write the role layout of every member as JSON to this file.
        #[arg(long, value_name = "PATH")]
        layout: Option<PathBuf>,
    },
    /// k-γc-criticality report for each input graph.
    Critical {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Include every minimum connected dominating set of each G + uv.
        #[arg(long)]
        witnesses: bool,
    },
    /// Run theorem checks over a graph stream.
    Scan {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
        /// Comma-separated check ids, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// all | connected | critical3 | probe
        #[arg(long, default_value = "critical3")]
        filter: String,
    },
    /// Hamiltonian connectedness of every 3-γc-critical graph with
    /// 3 <= α = κ < δ.
    Probe {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print all connected graphs on N vertices as graph6.
    Enumerate {
        n: usize,
        /// One graph per isomorphism class (N <= 7).
        #[arg(long)]
        dedup: bool,
    },
}

#[derive(Args)]
struct InputArgs {
    /// graph6 file; standard input when no source is given.
    file: Option<PathBuf>,
    /// Enumerate connected labeled graphs instead: `N` or `LO-HI`.
    #[arg(long, value_name = "ORDERS", conflicts_with = "file")]
    enumerate: Option<String>,
    /// Use family members as input (repeatable).
    #[arg(long = "family", value_name = "SPEC", conflicts_with_all = ["file", "enumerate"])]
    families: Vec<String>,
    /// With --enumerate, one graph per isomorphism class.
    #[arg(long, requires = "enumerate")]
    dedup: bool,
    /// Skip lines that are not valid graph6 instead of aborting.
    #[arg(long)]
    skip_bad: bool,
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Graphs per work chunk.
    #[arg(long, default_value_t = 1024)]
    chunk: usize,
    /// Largest order for the Hamiltonian path search.
    #[arg(long, default_value_t = DEFAULT_HAM_BUDGET)]
    budget_ham: usize,
    /// Largest order for minimum cut set enumeration.
    #[arg(long, default_value_t = DEFAULT_CUT_BUDGET)]
    budget_cuts: usize,
    /// Largest separator tried by the scattering check.
    #[arg(long, default_value_t = DEFAULT_SCATTER_BUDGET)]
    budget_scatter: usize,
}

impl RunArgs {
    fn options(&self, skip_bad: bool) -> ScanOptions {
        ScanOptions {
            jobs: self.jobs,
            chunk: self.chunk,
            skip_bad,
            budgets: Budgets {
                ham: self.budget_ham,
                cuts: self.budget_cuts,
                scatter: self.budget_scatter,
            },
            ..ScanOptions::default()
        }
    }
}

/// Errors that map to the input-error exit code.
#[derive(Debug)]
struct InputError(String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn input_error(msg: impl Into<String>) -> anyhow::Error {
    InputError(msg.into()).into()
}

impl InputArgs {
    fn source(&self, min_degree: usize) -> anyhow::Result<Source> {
        if let Some(r) = &self.enumerate {
            let orders = parse_order_range(r).map_err(input_error)?;
            return Ok(Source::Enumerate {
                orders,
                dedup: self.dedup,
                min_degree,
            });
        }
        if !self.families.is_empty() {
            let specs = self
                .families
                .iter()
                .map(|s| s.parse::<FamilySpec>().map_err(|e| input_error(e.to_string())))
                .collect::<anyhow::Result<Vec<_>>>()?;
            return Ok(Source::Families(specs));
        }
        Ok(match &self.file {
            Some(path) => {
                let f = File::open(path)
                    .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
                Source::Lines(Box::new(BufReader::new(f)))
            }
            None => Source::Lines(Box::new(BufReader::new(io::stdin()))),
        })
    }

    fn items(&self, min_degree: usize) -> anyhow::Result<Box<dyn Iterator<Item = io::Result<Item>> + Send>> {
        self.source(min_degree)?
            .into_items()
            .map_err(|e| input_error(e.to_string()))
    }
}

fn scan_error(e: ScanError) -> anyhow::Error {
    match e {
        ScanError::Input { .. } => input_error(e.to_string()),
        ScanError::Io(io) if io.kind() == io::ErrorKind::InvalidInput => input_error(io.to_string()),
        ScanError::Io(io) => io.into(),
    }
}

fn report(summary: &SweepSummary, verdict: bool) -> anyhow::Result<u8> {
    let mut err = io::stderr().lock();
    writeln!(err, "{}", serde_json::to_string(summary)?)?;
    if verdict {
        writeln!(err, "{}", summary.verdict_line())?;
    }
    Ok(summary.exit_code() as u8)
}

fn run_scan(
    input: &InputArgs,
    opts: &ScanOptions,
    probe: bool,
) -> anyhow::Result<u8> {
    // Applicable graphs have α ≥ 3, hence κ ≥ 3 and δ ≥ κ + 1 ≥ 4.
    let min_degree = if probe || opts.filter == Filter::Probe { 4 } else { 0 };
    let items = input.items(min_degree)?;
    let mut out = BufWriter::new(io::stdout().lock());
    let emit = |rec: &cdcrit_cli::ScanRecord| -> io::Result<()> {
        serde_json::to_writer(&mut out, rec)?;
        out.write_all(b"\n")
    };
    let summary = if probe {
        probe_open_problem(items, opts, emit)
    } else {
        scan(items, opts, emit)
    }
    .map_err(scan_error)?;
    out.flush()?;
    report(&summary, probe)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Profile { input, run } => {
            let opts = ScanOptions {
                checks: Vec::new(),
                filter: Filter::All,
                ..run.options(input.skip_bad)
            };
            run_scan(&input, &opts, false)
        }
        Command::Scan { input, run, checks, filter } => {
            let opts = ScanOptions {
                checks: parse_checks(&checks).map_err(input_error)?,
                filter: filter.parse().map_err(input_error)?,
                ..run.options(input.skip_bad)
            };
            run_scan(&input, &opts, false)
        }
        Command::Probe { input, run } => run_scan(&input, &run.options(input.skip_bad), true),
        Command::Family { specs, dot, layout } => {
            let mut out = io::stdout().lock();
            let mut layouts = serde_json::Map::new();
            for s in &specs {
                let spec: FamilySpec = s.parse().map_err(|e: cdcrit::Error| input_error(e.to_string()))?;
                let (g, l) = spec.build().map_err(|e| input_error(e.to_string()))?;
                if dot {
                    write!(out, "{}", g.to_dot(Some(&l.names)))?;
                } else {
                    writeln!(out, "{}", to_graph6(&g))?;
                }
                layouts.insert(spec.to_string(), serde_json::to_value(&l)?);
            }
            if let Some(path) = layout {
                let f = File::create(&path).with_context(|| path.display().to_string())?;
                serde_json::to_writer_pretty(f, &layouts)?;
            }
            Ok(0)
        }
        Command::Critical { input, k, witnesses } => {
            let mut out = BufWriter::new(io::stdout().lock());
            let mut code = 0;
            for item in input.items(0)? {
                let item = item?;
                let graph = match item.payload {
                    Payload::Graph { graph, .. } => graph,
                    Payload::Line(line) => match parse_graph6(&line) {
                        Ok(g) => g,
                        Err(e) if input.skip_bad => {
                            eprintln!("line {}: {e}", item.index);
                            continue;
                        }
                        Err(e) => return Err(input_error(format!("line {}: {e}", item.index))),
                    },
                };
                let g6 = to_graph6(&graph);
                let record = match is_k_gamma_c_critical(&graph, k, witnesses) {
                    Ok(r) => serde_json::json!({ "index": item.index, "graph6": g6, "report": r }),
                    Err(e) => {
                        code = if cdcrit_cli::scan::is_budget(&e) { 4 } else { EXIT_INPUT };
                        serde_json::json!({ "index": item.index, "graph6": g6, "error": e.to_string() })
                    }
                };
                serde_json::to_writer(&mut out, &record)?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
            Ok(code)
        }
        Command::Enumerate { n, dedup } => {
            let graphs = enumerate_connected_graphs(n, dedup).map_err(|e| input_error(e.to_string()))?;
            let mut out = BufWriter::new(io::stdout().lock());
            for g in graphs {
                writeln!(out, "{}", to_graph6(&g))?;
            }
            out.flush()?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputError>().is_some() {
                ExitCode::from(EXIT_INPUT)
            } else if e.downcast_ref::<io::Error>().is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe) {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

