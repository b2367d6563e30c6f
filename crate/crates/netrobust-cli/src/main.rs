//! Command-line front end: graph generation, robustness reports, the
//! random-regular bound curve, noisy-consensus simulations, and one-shot
//! reproduction of the reference tables.
//!
//! Exit codes: 0 success, 1 usage or invalid parameters, 2 disconnected
//! input graph, 3 edge-list parse failure, 4 unstable simulation step.

mod output;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use netrobust::robustness::{self, RobustnessReport};
use netrobust::{graph, spectral, Error, Family, Graph, SimConfig};
use output::{csv_field, json_object, Json};

const EXIT_USAGE: u8 = 1;
const EXIT_DISCONNECTED: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_STABILITY: u8 = 4;

struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError { message: message.into(), code: EXIT_USAGE }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> CliError {
        let code = match err {
            Error::Disconnected => EXIT_DISCONNECTED,
            Error::Parse { .. } => EXIT_PARSE,
            Error::UnstableTimeStep { .. } => EXIT_STABILITY,
            _ => EXIT_USAGE,
        };
        CliError { message: err.to_string(), code }
    }
}

#[derive(Parser)]
#[command(
    name = "netrobust",
    about = "Structural robustness of consensus networks to noise",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it as an edge-list file.
    Gen(GenArgs),
    /// Analyze an edge-list file and emit one robustness record.
    Analyze(AnalyzeArgs),
    /// Emit the random-regular approximation bound as CSV rows "k,value".
    Curve(CurveArgs),
    /// Simulate the noisy consensus dynamics on an edge-list file.
    Simulate(SimulateArgs),
    /// Recompute a reference table (theory spectral, simulations seeded).
    Reproduce(ReproduceArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenFamily {
    Path,
    Cycle,
    Star,
    Complete,
    Lollipop,
    RandomRegular,
}

#[derive(clap::Args)]
struct GenArgs {
    /// Graph family.
    #[arg(long, value_enum)]
    family: GenFamily,
    /// Node count (all families except lollipop).
    #[arg(long)]
    n: Option<usize>,
    /// Degree (random-regular only).
    #[arg(long)]
    k: Option<usize>,
    /// Clique size (lollipop only).
    #[arg(long)]
    p: Option<usize>,
    /// Path length in nodes (lollipop only).
    #[arg(long)]
    q: Option<usize>,
    /// Sampling seed (random-regular only).
    #[arg(long)]
    seed: Option<u64>,
    /// Output edge-list path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(clap::Args)]
struct AnalyzeArgs {
    /// Edge-list file.
    file: PathBuf,
    /// Emit JSON (default).
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV (header plus one row).
    #[arg(long)]
    csv: bool,
}

#[derive(clap::Args)]
struct CurveArgs {
    #[arg(long, default_value_t = 3)]
    k_min: usize,
    #[arg(long, default_value_t = 100)]
    k_max: usize,
    /// Margin inside the spectral gap; 0 is the limiting curve.
    #[arg(long, default_value_t = 0.0)]
    eps: f64,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct SimulateArgs {
    /// Edge-list file.
    file: PathBuf,
    #[arg(long)]
    dt: Option<f64>,
    #[arg(long)]
    t_final: Option<f64>,
    #[arg(long)]
    burn_in: Option<f64>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    record_every: Option<usize>,
    /// Average over the whole horizon instead of discarding the burn-in.
    #[arg(long)]
    whole_horizon: bool,
    /// Write the trajectory CSV ("t,mean_variance") here.
    #[arg(long)]
    traj_out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Table {
    Table1,
    Table2,
}

#[derive(clap::Args)]
struct ReproduceArgs {
    /// Which table to recompute.
    #[arg(value_enum)]
    which: Table,
    /// Seed for random-regular cells (and simulations).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Simulation trials (table1 only).
    #[arg(long, default_value_t = 16)]
    trials: usize,
    /// Robustness-suboptimality target defining k* (table2 only).
    #[arg(long, default_value_t = 25.0)]
    alpha: f64,
    /// Average simulations over the whole horizon (table1 only).
    #[arg(long)]
    whole_horizon: bool,
    /// Also write the table as CSV.
    #[arg(long)]
    csv_out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Curve(args) => cmd_curve(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Reproduce(args) => cmd_reproduce(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    Ok(Graph::from_edgelist(&read_file(path)?)?)
}

fn cmd_gen(args: GenArgs) -> Result<(), CliError> {
    let need_n = || {
        args.n
            .ok_or_else(|| CliError::usage("--n is required for this family"))
    };
    let reject = |flag: &str, set: bool| {
        if set {
            Err(CliError::usage(format!("{flag} does not apply to this family")))
        } else {
            Ok(())
        }
    };
    let (g, label) = match args.family {
        GenFamily::Path | GenFamily::Cycle | GenFamily::Star | GenFamily::Complete => {
            reject("--k", args.k.is_some())?;
            reject("--p", args.p.is_some())?;
            reject("--q", args.q.is_some())?;
            reject("--seed", args.seed.is_some())?;
            let n = need_n()?;
            let family = match args.family {
                GenFamily::Path => Family::Path,
                GenFamily::Cycle => Family::Cycle,
                GenFamily::Star => Family::Star,
                GenFamily::Complete => Family::Complete,
                _ => unreachable!(),
            };
            (Graph::family(family, n)?, format!("family={}", family.name()))
        }
        GenFamily::Lollipop => {
            reject("--k", args.k.is_some())?;
            reject("--n", args.n.is_some())?;
            reject("--seed", args.seed.is_some())?;
            let p = args.p.ok_or_else(|| CliError::usage("--p is required for lollipop"))?;
            let q = args.q.ok_or_else(|| CliError::usage("--q is required for lollipop"))?;
            (graph::lollipop(p, q)?, format!("family=lollipop p={p} q={q}"))
        }
        GenFamily::RandomRegular => {
            reject("--p", args.p.is_some())?;
            reject("--q", args.q.is_some())?;
            let n = need_n()?;
            let k = args
                .k
                .ok_or_else(|| CliError::usage("--k is required for random-regular"))?;
            let seed = args.seed.unwrap_or(0);
            (
                graph::random_regular(n, k, seed)?,
                format!("family=random-regular k={k} seed={seed}"),
            )
        }
    };
    write_file(&args.out, &g.to_edgelist())?;
    println!(
        "{label} n={} edges={} out={}",
        g.n(),
        g.edge_count(),
        args.out.display()
    );
    Ok(())
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let g = load_graph(&args.file)?;
    let report = RobustnessReport::for_graph(&g)?;
    let lambda2 = spectral::algebraic_connectivity(&g)?;
    let diameter = g.distances()?.diameter;
    let (star_ratio, complete_ratio) = robustness::sparsity_ratios(&g)?;
    let source = args.file.display().to_string();

    if args.csv {
        let header = "source,n,edges,avg_degree,avg_distance,diameter,lambda2,h_star,kirchhoff,\
                      lower_bound,upper_bound,star_ratio,complete_ratio,lower_tight,upper_tight";
        println!("{header}");
        println!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            csv_field(&source),
            g.n(),
            g.edge_count(),
            report.avg_degree,
            report.avg_distance,
            diameter,
            lambda2,
            report.h_star,
            report.kirchhoff,
            report.lower_bound,
            report.upper_bound,
            star_ratio,
            complete_ratio,
            report.lower_tight,
            report.upper_tight,
        );
    } else {
        println!(
            "{}",
            json_object(&[
                ("source", Json::Str(source)),
                ("n", Json::Int(g.n() as u64)),
                ("edges", Json::Int(g.edge_count() as u64)),
                ("avg_degree", Json::Float(report.avg_degree)),
                ("avg_distance", Json::Float(report.avg_distance)),
                ("diameter", Json::Int(diameter as u64)),
                ("lambda2", Json::Float(lambda2)),
                ("h_star", Json::Float(report.h_star)),
                ("kirchhoff", Json::Float(report.kirchhoff)),
                ("lower_bound", Json::Float(report.lower_bound)),
                ("upper_bound", Json::Float(report.upper_bound)),
                ("star_ratio", Json::Float(star_ratio)),
                ("complete_ratio", Json::Float(complete_ratio)),
                ("lower_tight", Json::Bool(report.lower_tight)),
                ("upper_tight", Json::Bool(report.upper_tight)),
            ])
        );
    }
    Ok(())
}

fn cmd_curve(args: CurveArgs) -> Result<(), CliError> {
    if args.k_min < 3 || args.k_min > args.k_max {
        return Err(CliError::usage(format!(
            "need 3 <= k-min <= k-max, got {}..{}",
            args.k_min, args.k_max
        )));
    }
    let mut out = String::from("k,value\n");
    for k in args.k_min..=args.k_max {
        let point = robustness::approx_bound(k, args.eps)?;
        writeln!(out, "{},{}", point.k, point.value).expect("string write");
    }
    match args.out {
        Some(path) => write_file(&path, &out)?,
        None => print!("{out}"),
    }
    Ok(())
}

fn build_config(g: &Graph, args: &SimulateArgs) -> Result<SimConfig, CliError> {
    let mut cfg = SimConfig::defaults_for(g)?;
    if let Some(dt) = args.dt {
        cfg.dt = dt;
    }
    if let Some(t_final) = args.t_final {
        cfg.t_final = t_final;
    }
    if let Some(burn_in) = args.burn_in {
        cfg.burn_in = burn_in;
    }
    if args.whole_horizon {
        cfg.burn_in = 0.0;
    }
    if let Some(trials) = args.trials {
        cfg.trials = trials;
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    if let Some(record_every) = args.record_every {
        cfg.record_every = record_every;
    }
    Ok(cfg)
}

fn cmd_simulate(args: SimulateArgs) -> Result<(), CliError> {
    let g = load_graph(&args.file)?;
    let cfg = build_config(&g, &args)?;
    let theory = robustness::h_expected(&g)?;
    let result = netrobust::simulate(&g, &cfg)?;
    if let Some(path) = &args.traj_out {
        let mut csv = String::from("t,mean_variance\n");
        for (t, v) in result.times.iter().zip(&result.variance_trajectory) {
            writeln!(csv, "{t},{v}").expect("string write");
        }
        write_file(path, &csv)?;
    }
    let estimate = result.time_avg_variance;
    println!(
        "{}",
        json_object(&[
            ("estimate", Json::Float(estimate)),
            ("stderr", Json::Float(result.stderr)),
            ("theory_h_star", Json::Float(theory)),
            ("rel_error", Json::Float((estimate - theory).abs() / theory)),
        ])
    );
    Ok(())
}

fn cmd_reproduce(args: ReproduceArgs) -> Result<(), CliError> {
    if args.trials < 1 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    let (text, csv) = match args.which {
        Table::Table1 => reproduce_table1(&args)?,
        Table::Table2 => reproduce_table2(&args)?,
    };
    print!("{text}");
    if let Some(path) = &args.csv_out {
        write_file(path, &csv)?;
    }
    Ok(())
}

/// Simulated window averages against spectral theory for the path, star,
/// random 3-regular, and complete graphs at n in {20, 40, 60}.
fn reproduce_table1(args: &ReproduceArgs) -> Result<(String, String), CliError> {
    let mut text = format!(
        "{:<18}{:>5}{:>12}{:>12}{:>8}\n",
        "family", "n", "simulated", "theory", "seed"
    );
    let mut csv = String::from("family,n,simulated,theory,seed\n");
    for family in ["path", "star", "random-3-regular", "complete"] {
        for n in [20usize, 40, 60] {
            let (g, seed_label) = match family {
                "path" => (Graph::path(n)?, String::from("-")),
                "star" => (Graph::star(n)?, String::from("-")),
                "complete" => (Graph::complete(n)?, String::from("-")),
                "random-3-regular" => {
                    (graph::random_regular(n, 3, args.seed)?, args.seed.to_string())
                }
                _ => unreachable!(),
            };
            let theory = robustness::h_star(&g)?;
            let mut cfg = SimConfig::defaults_for(&g)?;
            cfg.trials = args.trials;
            cfg.seed = args.seed;
            if args.whole_horizon {
                cfg.burn_in = 0.0;
            }
            let (estimate, _) = netrobust::estimate_h_star(&g, &cfg)?;
            writeln!(
                text,
                "{family:<18}{n:>5}{estimate:>12.4}{theory:>12.4}{seed_label:>8}"
            )
            .expect("string write");
            writeln!(csv, "{family},{n},{estimate},{theory},{seed_label}").expect("string write");
        }
    }
    Ok((text, csv))
}

/// Spectral vulnerability of random k*-regular graphs against the complete
/// graph for n in {100, 150, 200, 250}.
fn reproduce_table2(args: &ReproduceArgs) -> Result<(String, String), CliError> {
    let mut text = format!(
        "{:>5}{:>4}{:>7}{:>19}{:>13}{:>9}\n",
        "n", "k", "seed", "h_random_regular", "h_complete", "ratio"
    );
    let mut csv = String::from("n,k,seed,h_random_regular,h_complete,ratio\n");
    for n in [100usize, 150, 200, 250] {
        let k = robustness::k_star(n, args.alpha)?;
        let g = graph::random_regular(n, k, args.seed)?;
        let h_rr = robustness::h_star(&g)?;
        let h_complete = robustness::h_star_closed_form(Family::Complete, n)?;
        let ratio = h_rr / h_complete;
        writeln!(
            text,
            "{n:>5}{k:>4}{:>7}{h_rr:>19.4}{h_complete:>13.4}{ratio:>9.1}",
            args.seed
        )
        .expect("string write");
        writeln!(csv, "{n},{k},{},{h_rr},{h_complete},{ratio}", args.seed).expect("string write");
    }
    Ok((text, csv))
}
