//! `rainbow`: generate, solve, sweep, verify, and render edge-colored graph
//! instances for rainbow path experiments.
//!
//! Exit codes: 0 on success, 1 when a check fails (a bound violation, a
//! solver stall, or a sequence that is not a rainbow path), 2 on usage or
//! I/O errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use rainbow_cli::sweep::{self, EXACT_VERTEX_LIMIT};
use rainbow_core::bounds::bounds;
use rainbow_core::constructive::solve;
use rainbow_core::dot::export_dot;
use rainbow_core::ecg::{parse_ecg, serialize_ecg};
use rainbow_core::generators::{gen_gnp_colored, gen_suite, GenSpec, PROFILES};
use rainbow_core::oracle::max_rainbow_path;
use rainbow_core::{check_rainbow_path, EdgeColoredGraph};

#[derive(Parser)]
#[command(name = "rainbow", version, about = "Rainbow path experiments on edge-colored graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance, or a whole named suite, in .ecg format
    Gen(GenArgs),
    /// Find a long rainbow path in an instance and report the bounds
    Solve(SolveArgs),
    /// Sweep an instance suite and emit one CSV row per instance
    Sweep(SweepArgs),
    /// Check whether a vertex sequence is a rainbow path in an instance
    Verify(VerifyArgs),
    /// Render an instance as Graphviz DOT, optionally highlighting a path
    ExportDot(ExportDotArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Number of vertices (single-instance mode)
    #[arg(long, conflicts_with = "profile")]
    n: Option<usize>,
    /// Edge probability in [0, 1] (single-instance mode)
    #[arg(long, conflicts_with = "profile")]
    p: Option<f64>,
    /// Number of colors to draw from (single-instance mode)
    #[arg(long, conflicts_with = "profile")]
    colors: Option<u64>,
    /// Keep resampling until the minimum color degree reaches this value
    #[arg(long, conflicts_with = "profile")]
    min_k: Option<usize>,
    /// Base seed for generation
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Generate a whole suite instead of a single instance
    #[arg(long, value_parser = PROFILES)]
    profile: Option<String>,
    /// Output file (single instance) or directory (suite); stdout if omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file in .ecg format
    input: PathBuf,
    /// Use the exact branch-and-bound oracle instead of the constructive solver
    #[arg(long)]
    exact: bool,
    /// Also audit every start vertex against the greedy guarantee
    #[arg(long)]
    per_vertex: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Suite profile to generate and sweep
    #[arg(long, default_value = "sweep-default", value_parser = PROFILES)]
    profile: String,
    /// Base seed for suite generation
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run the exact oracle on instances with at most 12 vertices
    #[arg(long)]
    exact: bool,
    /// Audit every start vertex of oracle-sized instances
    #[arg(long)]
    per_vertex: bool,
    /// Write the CSV here instead of stdout
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Instance file in .ecg format
    input: PathBuf,
    /// Vertex sequence to check, e.g. `0 1 3`
    #[arg(required = true, num_args = 1..)]
    vertices: Vec<usize>,
}

#[derive(Args)]
struct ExportDotArgs {
    /// Instance file in .ecg format
    input: PathBuf,
    /// Space-separated vertex path to draw with thick edges, e.g. "0 1 3"
    #[arg(long)]
    highlight: Option<String>,
    /// Output file; stdout if omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Verify(args) => cmd_verify(args),
        Command::ExportDot(args) => cmd_export_dot(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &Path) -> Result<EdgeColoredGraph> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let graph = parse_ecg(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    Ok(graph)
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode> {
    if let Some(profile) = &args.profile {
        let dir = args
            .out
            .context("--profile writes one file per instance and needs --out DIRECTORY")?;
        fs::create_dir_all(&dir)
            .with_context(|| format!("creating {}", dir.display()))?;
        let suite = gen_suite(profile, args.seed)?;
        for inst in &suite {
            let path = dir.join(format!("{profile}-{:04}.ecg", inst.index));
            fs::write(&path, serialize_ecg(&inst.graph))
                .with_context(|| format!("writing {}", path.display()))?;
        }
        println!("wrote {} instances to {}", suite.len(), dir.display());
        return Ok(ExitCode::SUCCESS);
    }

    let spec = GenSpec {
        n: args.n.context("--n is required without --profile")?,
        p: args.p.context("--p is required without --profile")?,
        num_colors: args.colors.context("--colors is required without --profile")?,
        seed: args.seed,
        min_k: args.min_k,
    };
    let graph = gen_gnp_colored(&spec)?;
    emit(&serialize_ecg(&graph), args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode> {
    let graph = read_graph(&args.input)?;
    let k = graph.min_color_degree();
    let mut exit = ExitCode::SUCCESS;

    let (mode, path, oracle_nodes) = if args.exact {
        let result = max_rainbow_path(&graph)?;
        ("exact", result.witness, Some(result.nodes_explored))
    } else {
        let outcome = solve(&graph);
        if let Some(stall) = &outcome.stall {
            eprintln!(
                "stall: gave up at length {} after step `{}` (target {})",
                outcome.path.len(),
                stall.failed_step,
                outcome.report.theorem_bound
            );
            exit = ExitCode::from(1);
        }
        ("constructive", outcome.path, None)
    };

    let report = bounds(k, path.len());
    let witness: Vec<String> = path.vertices().iter().map(usize::to_string).collect();
    println!("mode: {mode}");
    println!("witness: {}", witness.join(" "));
    println!("length: {}", path.len());
    println!("k: {k}");
    println!(
        "bounds: lemma1 {} theorem {} saito {}",
        report.lemma1_bound, report.theorem_bound, report.saito_bound
    );
    if let Some(nodes) = oracle_nodes {
        println!("oracle_nodes: {nodes}");
    }

    if args.per_vertex {
        let failures = sweep::per_vertex_violations(&graph)?;
        for failure in &failures {
            eprintln!("per-vertex violation: {failure}");
        }
        if failures.is_empty() {
            println!(
                "per-vertex audit: all {} start vertices reach ceil((k+1)/2) = {}",
                graph.num_vertices(),
                (k + 1).div_ceil(2)
            );
        } else {
            exit = ExitCode::from(1);
        }
    }
    Ok(exit)
}

fn cmd_sweep(args: SweepArgs) -> Result<ExitCode> {
    let suite = gen_suite(&args.profile, args.seed)?;
    let rows = sweep::rows_for_suite(&suite, args.exact);
    let csv = sweep::render_csv(&rows);
    emit(&csv, args.csv.as_deref())?;

    let mut violations = sweep::collect_violations(&rows);
    if args.per_vertex {
        for inst in &suite {
            if inst.graph.num_vertices() > EXACT_VERTEX_LIMIT {
                continue;
            }
            for failure in sweep::per_vertex_violations(&inst.graph)? {
                violations.push(format!("instance {}: {failure}", inst.index));
            }
        }
    }
    for violation in &violations {
        eprintln!("violation: {violation}");
    }

    let stalls = rows.iter().filter(|r| r.stalled).count();
    if let Some((saito, kc)) = sweep::min_slacks(&rows) {
        eprintln!(
            "swept {} instances: {} stalls, min slack_saito {}, min slack_kc {}",
            rows.len(),
            stalls,
            saito,
            kc
        );
    }
    Ok(if violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let graph = read_graph(&args.input)?;
    match check_rainbow_path(&graph, &args.vertices) {
        Ok(()) => {
            println!("rainbow path of length {}", args.vertices.len() - 1);
            Ok(ExitCode::SUCCESS)
        }
        Err(violation) => {
            println!("not a rainbow path: {violation}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_export_dot(args: ExportDotArgs) -> Result<ExitCode> {
    let graph = read_graph(&args.input)?;
    let highlight = args
        .highlight
        .as_deref()
        .map(|text| {
            text.split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .with_context(|| format!("invalid vertex `{tok}` in --highlight"))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .transpose()?;
    let dot = export_dot(&graph, highlight.as_deref())
        .context("--highlight must name a rainbow path of the instance")?;
    emit(&dot, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}
