//! `ricci` — exact Ollivier-Ricci / Lin-Lu-Yau curvature on graphs.
//!
//! Exit codes: 0 success, 1 a verification found a violation (or a
//! requested negative-curvature report was found), 2 input/usage errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use ricci_core::assignment::lly_equal_degree;
use ricci_core::curvature::{idleness_function, kappa_alpha, kappa_lly};
use ricci_core::graph::{
    generate_sharpness, generate_standard, parse_edge_list, random_min_degree_graph,
    write_edge_list, Graph, StandardKind, Vertex,
};
use ricci_core::rational::{parse_rational, Rational};
use ricci_core::theorem::{
    check_degree_threshold, check_diameter_lemma, check_proof_bound, check_sharpness,
    exhaustive_threshold, sweep_random, SweepMode, TheoremReport,
};

#[derive(Parser)]
#[command(name = "ricci", version, about = "Exact graph curvature toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Curvature of a single edge (Lin-Lu-Yau by default, κ_α with --alpha)
    Edge(EdgeArgs),
    /// Curvature of every edge
    All(AllArgs),
    /// Breakpoints of the idleness function α ↦ κ_α(u, v)
    Idleness(IdlenessArgs),
    /// Generate a graph in edge-list format
    Gen(GenArgs),
    /// Verify one of the paper-level statements on a given input
    Verify(VerifyArgs),
    /// Random falsification sweep over generated graphs
    Sweep(SweepArgs),
}

#[derive(Args)]
struct EdgeArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    u: Vertex,
    #[arg(long)]
    v: Vertex,
    /// Idleness as an exact rational p/q (decimals rejected)
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long, value_enum, default_value = "auto")]
    path: PathMode,
    /// Cross-check transport and assignment routes against each other
    #[arg(long)]
    verify_mode: bool,
    /// Exit 1 when the reported curvature is negative
    #[arg(long)]
    fail_negative: bool,
}

#[derive(Args)]
struct AllArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: OutputFormat,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, value_enum, default_value = "auto")]
    path: PathMode,
    #[arg(long)]
    verify_mode: bool,
    #[arg(long)]
    fail_negative: bool,
}

#[derive(Args)]
struct IdlenessArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    u: Vertex,
    #[arg(long)]
    v: Vertex,
    /// Write the breakpoints as CSV to this file
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: GenFamily,
}

#[derive(Subcommand)]
enum GenFamily {
    /// Degree-threshold sharpness construction on 3l+3 vertices
    Sharpness {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Hypercube {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[command(subcommand)]
    check: VerifyCheck,
}

#[derive(Subcommand)]
enum VerifyCheck {
    /// δ(G) ≥ 2n/3 - 1 implies Ric(G) ≥ 0
    Threshold {
        #[arg(long)]
        graph: PathBuf,
    },
    /// 2δ(G) ≥ n - 1 implies diam(G) ≤ 2
    Diameter {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Sharpness construction yields κ(x,y) = -1/(2l) by both routes
    Sharpness {
        #[arg(long)]
        l: usize,
    },
    /// Per-edge bound κ ≥ (2|N_xy|+3)/max(d_x,d_y) - 1 on diameter-2 graphs
    ProofBound {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "threshold")]
    mode: SweepModeArg,
    #[arg(long)]
    threads: Option<usize>,
    /// Enumerate all labeled graphs for each n in [n-min, n-max] instead of
    /// sampling (threshold mode only; n ≤ 7)
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepModeArg {
    Threshold,
    Diameter,
    ProofBound,
}

impl From<SweepModeArg> for SweepMode {
    fn from(m: SweepModeArg) -> SweepMode {
        match m {
            SweepModeArg::Threshold => SweepMode::Threshold,
            SweepModeArg::Diameter => SweepMode::Diameter,
            SweepModeArg::ProofBound => SweepMode::ProofBound,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PathMode {
    Auto,
    Transport,
    Assignment,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Tsv,
    Json,
}

#[derive(Debug)]
struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> CliError {
        CliError(e.to_string())
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_edge_list(&text)?)
}

fn configure_threads(threads: Option<usize>) -> Result<(), CliError> {
    if let Some(n) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError(e.to_string()))?;
    }
    Ok(())
}

/// Curvature of one edge along the selected route; cross-checks routes
/// in verify mode.
fn edge_kappa(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    alpha: Option<&Rational>,
    path: PathMode,
    verify_mode: bool,
) -> Result<Rational, CliError> {
    if let Some(a) = alpha {
        // κ_α always goes through the transport route
        return Ok(kappa_alpha(g, u, v, a)?.kappa);
    }
    let degrees_equal = g.degree(u)? == g.degree(v)?;
    let value = match path {
        PathMode::Transport => kappa_lly(g, u, v)?.kappa,
        PathMode::Assignment => lly_equal_degree(g, u, v)?.kappa,
        PathMode::Auto => {
            if degrees_equal {
                lly_equal_degree(g, u, v)?.kappa
            } else {
                kappa_lly(g, u, v)?.kappa
            }
        }
    };
    if verify_mode && degrees_equal {
        let transport = kappa_lly(g, u, v)?.kappa;
        let fastpath = lly_equal_degree(g, u, v)?.kappa;
        if transport != fastpath {
            return Err(CliError(format!(
                "route mismatch on edge ({u}, {v}): transport {transport} vs assignment {fastpath}"
            )));
        }
    }
    Ok(value)
}

fn parse_alpha(text: &Option<String>) -> Result<Option<Rational>, CliError> {
    Ok(match text {
        Some(t) => Some(parse_rational(t)?),
        None => None,
    })
}

fn emit_report(report: &TheoremReport) {
    println!("{}", report.to_json());
}

fn write_or_print(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Edge(args) => {
            let g = load_graph(&args.graph)?;
            let alpha = parse_alpha(&args.alpha)?;
            let kappa = edge_kappa(&g, args.u, args.v, alpha.as_ref(), args.path, args.verify_mode)?;
            println!("kappa {} {} = {kappa}", args.u, args.v);
            Ok((args.fail_negative && kappa < Rational::from_integer(0.into())) as u8)
        }
        Command::All(args) => {
            configure_threads(args.threads)?;
            let g = load_graph(&args.graph)?;
            let alpha = parse_alpha(&args.alpha)?;
            let edges = g.edges();
            let rows: Result<Vec<(Vertex, Vertex, Rational)>, CliError> = edges
                .par_iter()
                .map(|&(x, y)| {
                    edge_kappa(&g, x, y, alpha.as_ref(), args.path, args.verify_mode)
                        .map(|k| (x, y, k))
                })
                .collect();
            let rows = rows?;
            match args.format {
                OutputFormat::Tsv => {
                    for (x, y, k) in &rows {
                        println!("{x}\t{y}\t{k}");
                    }
                }
                OutputFormat::Json => {
                    let records: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(x, y, k)| {
                            serde_json::json!({ "x": x, "y": y, "kappa": k.to_string() })
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(records));
                }
            }
            let any_negative = rows.iter().any(|(_, _, k)| k < &Rational::from_integer(0.into()));
            Ok((args.fail_negative && any_negative) as u8)
        }
        Command::Idleness(args) => {
            let g = load_graph(&args.graph)?;
            let f = idleness_function(&g, args.u, args.v)?;
            if let Some(path) = &args.out {
                fs::write(path, f.to_csv())
                    .map_err(|e| CliError(format!("cannot write {}: {e}", path.display())))?;
            }
            println!("{}", f.to_json());
            Ok(0)
        }
        Command::Gen(args) => {
            let (graph, out) = match args.family {
                GenFamily::Sharpness { l, out } => (generate_sharpness(l)?.0, out),
                GenFamily::Cycle { n, out } => (generate_standard(StandardKind::Cycle, n)?, out),
                GenFamily::Complete { n, out } => {
                    (generate_standard(StandardKind::Complete, n)?, out)
                }
                GenFamily::Hypercube { d, out } => {
                    (generate_standard(StandardKind::Hypercube, d)?, out)
                }
                GenFamily::Random { n, delta, seed, out } => {
                    (random_min_degree_graph(n, delta, seed)?, out)
                }
            };
            write_or_print(&out, &write_edge_list(&graph))?;
            Ok(0)
        }
        Command::Verify(args) => {
            let reports: Vec<TheoremReport> = match args.check {
                VerifyCheck::Threshold { graph } => {
                    vec![check_degree_threshold(&load_graph(&graph)?)?]
                }
                VerifyCheck::Diameter { graph } => {
                    vec![check_diameter_lemma(&load_graph(&graph)?)?]
                }
                VerifyCheck::Sharpness { l } => vec![check_sharpness(l)?],
                VerifyCheck::ProofBound { graph } => {
                    let g = load_graph(&graph)?;
                    g.edges()
                        .into_iter()
                        .map(|(x, y)| check_proof_bound(&g, x, y))
                        .collect::<ricci_core::Result<_>>()?
                }
            };
            let mut failed = false;
            for report in &reports {
                emit_report(report);
                // a sharpness run that fails its own assertions also fails
                failed |= report.violation()
                    || (report.theorem == "sharpness" && !report.conclusion_holds);
            }
            Ok(failed as u8)
        }
        Command::Sweep(args) => {
            configure_threads(args.threads)?;
            let mut violations = 0usize;
            if args.exhaustive {
                if !matches!(args.mode, SweepModeArg::Threshold) {
                    return Err(CliError("--exhaustive supports threshold mode only".into()));
                }
                for n in args.n_min..=args.n_max {
                    let summary = exhaustive_threshold(n)?;
                    eprintln!(
                        "n = {n}: {} labeled graphs, {} met the hypothesis, {} violations",
                        summary.graphs_total,
                        summary.hypothesis_count,
                        summary.violations.len()
                    );
                    for v in &summary.violations {
                        emit_report(v);
                        violations += 1;
                    }
                }
            } else {
                let reports =
                    sweep_random(args.n_min, args.n_max, args.samples, args.seed, args.mode.into())?;
                for report in &reports {
                    emit_report(report);
                    violations += report.violation() as usize;
                }
                eprintln!("{} samples, {violations} violations", reports.len());
            }
            Ok((violations > 0) as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
