//! `tornado` — command-line front end for the optimization benchmark
//! harness: single runs, success tables, diameter/dimension sweeps,
//! convergence curves, runtime comparisons, and particle-trajectory traces.
//!
//! Every subcommand writes its data artifacts plus a `manifest.json` echoing
//! the fully resolved configuration; data files carry no timestamps, so
//! replaying a manifest's command line reproduces them byte for byte.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tornado_core::experiments::ExecutionMode;

#[derive(Debug, Parser)]
#[command(name = "tornado", version, about = "Tornado optimization benchmark harness")]
struct Cli {
    /// Output directory for data artifacts (default: $TORNADO_OUT or ".")
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for parallel trials (default: all cores)
    #[arg(long, global = true, conflicts_with = "serial")]
    workers: Option<usize>,

    /// Run all trials sequentially on one thread
    #[arg(long, global = true)]
    serial: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Single optimization run; writes run.json and trace.csv
    Run(RunArgs),
    /// Success-probability table over the benchmark set; writes table.json
    Table(TableArgs),
    /// Fixed-diameter STO sweep over k1 = 1..pop; writes sweep.csv
    SweepDiameter(SweepDiameterArgs),
    /// Success probability vs problem dimension; writes dims.csv
    DimSweep(DimSweepArgs),
    /// Mean convergence curves; writes curves.csv
    Curves(CurvesArgs),
    /// Relative runtime comparison; writes runtime.json
    Runtime(RuntimeArgs),
    /// Particle-trajectory trace of one STO run; writes trajectory.csv
    Trace(TraceArgs),
}

const FUNCTION_NAMES: [&str; 6] = tornado_core::benchmarks::FUNCTION_NAMES;

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long, value_parser = FUNCTION_NAMES)]
    function: String,
    /// Problem dimension (scalable functions only)
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, value_parser = ["sto", "pso", "ga", "tlbo"])]
    algorithm: String,
    /// Tornado diameter: an integer or `random` (sto only)
    #[arg(long)]
    k1: Option<String>,
    #[arg(long, default_value_t = 40)]
    pop: usize,
    #[arg(long, default_value_t = 100)]
    iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Experiment preset: `paper` = population 40, 100 iterations, the five
    /// benchmark functions and five algorithm rows with standard criteria
    #[arg(long, default_value = "paper", value_parser = ["paper"])]
    preset: String,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 40)]
    pop: usize,
    #[arg(long, default_value_t = 100)]
    iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct SweepDiameterArgs {
    #[arg(long, value_parser = FUNCTION_NAMES)]
    function: String,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, default_value_t = 40)]
    pop: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 100)]
    iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct DimSweepArgs {
    /// Dimension-parameterized function family
    #[arg(long, default_value = "styblinski_tang", value_parser = ["styblinski_tang", "rastrigin"])]
    function: String,
    /// Dimensions to sweep
    #[arg(long, value_delimiter = ',', default_value = "2,4,6,8,10,12")]
    dims: Vec<usize>,
    /// Algorithms: sto, sto:K1, pso, ga, tlbo
    #[arg(long, value_delimiter = ',', default_value = "sto,pso,ga,tlbo")]
    algorithms: Vec<String>,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 5000)]
    iters: usize,
    #[arg(long, default_value_t = 40)]
    pop: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct CurvesArgs {
    #[arg(long, value_parser = FUNCTION_NAMES)]
    function: String,
    #[arg(long)]
    dim: Option<usize>,
    /// Algorithms: sto, sto:K1, pso, ga, tlbo
    #[arg(long, value_delimiter = ',', default_value = "sto,pso,ga,tlbo")]
    algorithms: Vec<String>,
    #[arg(long, default_value_t = 50)]
    runs: usize,
    #[arg(long, default_value_t = 100)]
    iters: usize,
    #[arg(long, default_value_t = 40)]
    pop: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct RuntimeArgs {
    #[arg(long, default_value = "rastrigin", value_parser = FUNCTION_NAMES)]
    function: String,
    #[arg(long, default_value_t = 5)]
    dim: usize,
    /// Algorithms: sto, sto:K1, pso, ga, tlbo
    #[arg(long, value_delimiter = ',', default_value = "sto,pso,ga,tlbo")]
    algorithms: Vec<String>,
    #[arg(long, default_value_t = 20)]
    runs: usize,
    #[arg(long, default_value_t = 100)]
    iters: usize,
    #[arg(long, default_value_t = 40)]
    pop: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct TraceArgs {
    #[arg(long, value_parser = FUNCTION_NAMES)]
    function: String,
    #[arg(long)]
    dim: Option<usize>,
    /// Tornado diameter: an integer or `random`
    #[arg(long, default_value = "random")]
    k1: String,
    #[arg(long, default_value_t = 40)]
    pop: usize,
    #[arg(long, default_value_t = 100)]
    iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Termination radius: the run stops once every particle is this close
    /// to the coldest one
    #[arg(long)]
    vanish_epsilon: Option<f64>,
}

/// A flag combination clap cannot catch on its own; exits with the usage
/// code (2) like any other argument error.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Some(workers) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
        {
            eprintln!("error: failed to configure {workers} worker threads: {e}");
            return ExitCode::FAILURE;
        }
    }
    let mode = if cli.serial {
        ExecutionMode::Serial
    } else {
        ExecutionMode::Parallel
    };

    let ctx = match output::OutputContext::new(cli.out, mode) {
        Ok(ctx) => ctx,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::FAILURE;
        }
    };

    let result = match cli.command {
        Command::Run(args) => commands::run(&args, &ctx),
        Command::Table(args) => commands::table(&args, &ctx),
        Command::SweepDiameter(args) => commands::sweep_diameter(&args, &ctx),
        Command::DimSweep(args) => commands::dim_sweep(&args, &ctx),
        Command::Curves(args) => commands::curves(&args, &ctx),
        Command::Runtime(args) => commands::runtime(&args, &ctx),
        Command::Trace(args) => commands::trace(&args, &ctx),
    };

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<UsageError>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
