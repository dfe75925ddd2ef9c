//! Subcommand implementations.

use anyhow::Result;
use serde::Serialize;
use tornado_core::benchmarks;
use tornado_core::experiments::{
    AlgorithmConfig, AlgorithmKind, ExperimentReport, ExperimentSpec, SuccessCriterion,
    convergence_curves, diameter_sweep, dimension_sweep, run_success_experiment,
    runtime_comparison,
};
use tornado_core::rng::child_seed;
use tornado_core::sto::{DiameterPolicy, StoConfig, sto_run};
use tornado_core::{ConfigError, ObjectiveFunction, RunTrace, Termination};

use crate::output::OutputContext;
use crate::{
    CurvesArgs, DimSweepArgs, RunArgs, RuntimeArgs, SweepDiameterArgs, TableArgs, TraceArgs,
    UsageError,
};

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Configuration mistakes surface as usage errors (exit 2), not runtime
/// failures.
fn config_to_usage(err: ConfigError) -> anyhow::Error {
    usage(err.to_string())
}

fn resolve_function(name: &str, dim: Option<usize>) -> Result<ObjectiveFunction> {
    benchmarks::by_name(name, dim).map_err(config_to_usage)
}

fn parse_k1(value: &str) -> Result<DiameterPolicy> {
    if value == "random" {
        return Ok(DiameterPolicy::Randomized);
    }
    value
        .parse::<usize>()
        .map(DiameterPolicy::Fixed)
        .map_err(|_| usage(format!("--k1 must be an integer or `random`, got `{value}`")))
}

/// Algorithm tokens for list-valued flags: `sto`, `sto:K1`, `pso`, `ga`,
/// `tlbo`.
fn parse_kinds(tokens: &[String]) -> Result<Vec<AlgorithmKind>> {
    tokens
        .iter()
        .map(|t| match t.as_str() {
            "sto" => Ok(AlgorithmKind::StoRandom),
            "pso" => Ok(AlgorithmKind::Pso),
            "ga" => Ok(AlgorithmKind::Ga),
            "tlbo" => Ok(AlgorithmKind::Tlbo),
            other => match other.strip_prefix("sto:") {
                Some(k1) => k1
                    .parse::<usize>()
                    .map(AlgorithmKind::StoFixed)
                    .map_err(|_| usage(format!("bad STO diameter in `{other}`"))),
                None => Err(usage(format!(
                    "unknown algorithm `{other}`; valid: sto, sto:K1, pso, ga, tlbo"
                ))),
            },
        })
        .collect()
}

pub fn run(args: &RunArgs, ctx: &OutputContext) -> Result<()> {
    let function = resolve_function(&args.function, args.dim)?;
    let algorithm = match args.algorithm.as_str() {
        "sto" => {
            let diameter = match &args.k1 {
                Some(v) => parse_k1(v)?,
                None => DiameterPolicy::Randomized,
            };
            AlgorithmConfig::Sto(StoConfig::new(args.pop, diameter, args.iters, args.seed))
        }
        other => {
            if args.k1.is_some() {
                return Err(usage("--k1 only applies to --algorithm sto"));
            }
            simple_kind(other)
                .ok_or_else(|| usage(format!("unknown algorithm `{other}`")))?
                .configure(args.pop, args.iters, args.seed)
        }
    };
    algorithm.validate().map_err(config_to_usage)?;

    let trace = algorithm.run(&function)?;

    #[derive(Serialize)]
    struct RunReport<'a> {
        function: &'a ObjectiveFunction,
        algorithm: &'a AlgorithmConfig,
        best_cost: f64,
        best_position: &'a [f64],
        iterations_used: usize,
        total_evaluations: u64,
        terminated_by: Termination,
        best_cost_per_iteration: &'a [f64],
    }
    let report = RunReport {
        function: &function,
        algorithm: &algorithm,
        best_cost: trace.final_best_cost(),
        best_position: &trace.best_position,
        iterations_used: trace.iterations_used(),
        total_evaluations: trace.total_evaluations,
        terminated_by: trace.terminated_by,
        best_cost_per_iteration: &trace.best_cost_per_iteration,
    };
    let json = ctx.write_json("run.json", &report)?;
    let csv = ctx.write_best_cost_trace("trace.csv", &trace)?;
    ctx.write_manifest("run", &report, &[json, csv])?;
    println!(
        "best cost {} after {} iterations ({} evaluations)",
        trace.final_best_cost(),
        trace.iterations_used(),
        trace.total_evaluations
    );
    Ok(())
}

fn simple_kind(token: &str) -> Option<AlgorithmKind> {
    match token {
        "pso" => Some(AlgorithmKind::Pso),
        "ga" => Some(AlgorithmKind::Ga),
        "tlbo" => Some(AlgorithmKind::Tlbo),
        _ => None,
    }
}

/// Best tornado diameter ratio `alpha = k1 / k` per function, from this
/// harness's own diameter sweeps at the table protocol (k = 40: k1 = 34,
/// 11, 6, 35). The tuned row has no Rastrigin entry.
fn tuned_diameter(function: &str, population: usize) -> Option<usize> {
    let alpha = match function {
        "eggholder" => 0.85,
        "ripple25" => 0.275,
        "beale" => 0.15,
        "rosenbrock_modified" => 0.875,
        _ => return None,
    };
    let k1 = (alpha * population as f64).round() as usize;
    Some(k1.clamp(1, population - 1))
}

pub fn table(args: &TableArgs, ctx: &OutputContext) -> Result<()> {
    let functions = [
        benchmarks::eggholder(),
        benchmarks::ripple25(),
        benchmarks::beale(),
        benchmarks::rosenbrock_modified(),
        benchmarks::rastrigin(5),
    ];
    let function_label = |f: &ObjectiveFunction| {
        if f.name() == "rastrigin" {
            format!("rastrigin({})", f.dimension())
        } else {
            f.name().to_string()
        }
    };

    #[derive(Serialize)]
    struct TableCell {
        function: String,
        report: Option<ExperimentReport>,
    }
    #[derive(Serialize)]
    struct TableRow {
        algorithm: String,
        cells: Vec<TableCell>,
    }
    #[derive(Serialize)]
    struct TableReport {
        preset: String,
        population: usize,
        iterations: usize,
        trials: usize,
        master_seed: u64,
        functions: Vec<String>,
        rows: Vec<TableRow>,
    }

    enum Row {
        StoTuned,
        Kind(AlgorithmKind),
    }
    let rows_spec = [
        ("sto(tuned)", Row::StoTuned),
        ("sto(random)", Row::Kind(AlgorithmKind::StoRandom)),
        ("pso", Row::Kind(AlgorithmKind::Pso)),
        ("ga", Row::Kind(AlgorithmKind::Ga)),
        ("tlbo", Row::Kind(AlgorithmKind::Tlbo)),
    ];

    let mut rows = Vec::new();
    for (row_idx, (label, row)) in rows_spec.iter().enumerate() {
        let mut cells = Vec::new();
        for (col_idx, function) in functions.iter().enumerate() {
            let kind = match row {
                Row::StoTuned => {
                    tuned_diameter(function.name(), args.pop).map(AlgorithmKind::StoFixed)
                }
                Row::Kind(kind) => Some(*kind),
            };
            let report = match kind {
                None => None,
                Some(kind) => {
                    let spec = ExperimentSpec {
                        function: function.clone(),
                        algorithm: kind.configure(args.pop, args.iters, args.seed),
                        trials: args.trials,
                        criterion: SuccessCriterion::default_for(function),
                        master_seed: child_seed(child_seed(args.seed, row_idx as u64), col_idx as u64),
                    };
                    let report =
                        run_success_experiment(&spec, ctx.mode).map_err(config_to_usage)?;
                    println!(
                        "{label:<12} {:<22} success {:.3}",
                        function_label(function),
                        report.success_probability
                    );
                    Some(report)
                }
            };
            cells.push(TableCell {
                function: function_label(function),
                report,
            });
        }
        rows.push(TableRow {
            algorithm: label.to_string(),
            cells,
        });
    }

    let report = TableReport {
        preset: args.preset.clone(),
        population: args.pop,
        iterations: args.iters,
        trials: args.trials,
        master_seed: args.seed,
        functions: functions.iter().map(function_label).collect(),
        rows,
    };
    let json = ctx.write_json("table.json", &report)?;
    ctx.write_manifest("table", &report, &[json])?;
    Ok(())
}

pub fn sweep_diameter(args: &SweepDiameterArgs, ctx: &OutputContext) -> Result<()> {
    let function = resolve_function(&args.function, args.dim)?;
    let points = diameter_sweep(
        &function,
        args.pop,
        args.trials,
        args.iters,
        args.seed,
        ctx.mode,
    )
    .map_err(config_to_usage)?;
    let csv = ctx.write_sweep("sweep.csv", &points)?;

    #[derive(Serialize)]
    struct Resolved<'a> {
        function: &'a ObjectiveFunction,
        population: usize,
        trials: usize,
        iterations: usize,
        master_seed: u64,
    }
    ctx.write_manifest(
        "sweep-diameter",
        &Resolved {
            function: &function,
            population: args.pop,
            trials: args.trials,
            iterations: args.iters,
            master_seed: args.seed,
        },
        &[csv],
    )?;
    Ok(())
}

pub fn dim_sweep(args: &DimSweepArgs, ctx: &OutputContext) -> Result<()> {
    let kinds = parse_kinds(&args.algorithms)?;
    let factory: fn(usize) -> ObjectiveFunction = match args.function.as_str() {
        "styblinski_tang" => benchmarks::styblinski_tang,
        "rastrigin" => benchmarks::rastrigin,
        other => return Err(usage(format!("`{other}` is not dimension-parameterized"))),
    };
    let cells = dimension_sweep(
        factory,
        &args.dims,
        &kinds,
        args.pop,
        args.trials,
        args.iters,
        args.seed,
        ctx.mode,
    )
    .map_err(config_to_usage)?;
    let csv = ctx.write_dims("dims.csv", &cells)?;

    #[derive(Serialize)]
    struct Resolved<'a> {
        function: &'a str,
        dims: &'a [usize],
        algorithms: Vec<String>,
        population: usize,
        trials: usize,
        max_iterations: usize,
        master_seed: u64,
    }
    ctx.write_manifest(
        "dim-sweep",
        &Resolved {
            function: &args.function,
            dims: &args.dims,
            algorithms: kinds.iter().map(|k| k.label()).collect(),
            population: args.pop,
            trials: args.trials,
            max_iterations: args.iters,
            master_seed: args.seed,
        },
        &[csv],
    )?;
    Ok(())
}

pub fn curves(args: &CurvesArgs, ctx: &OutputContext) -> Result<()> {
    let function = resolve_function(&args.function, args.dim)?;
    let kinds = parse_kinds(&args.algorithms)?;
    let curves = convergence_curves(
        &function,
        &kinds,
        args.pop,
        args.runs,
        args.iters,
        args.seed,
        ctx.mode,
    )
    .map_err(config_to_usage)?;
    let csv = ctx.write_curves("curves.csv", &curves)?;

    #[derive(Serialize)]
    struct Resolved<'a> {
        function: &'a ObjectiveFunction,
        algorithms: Vec<String>,
        population: usize,
        runs: usize,
        iterations: usize,
        master_seed: u64,
    }
    ctx.write_manifest(
        "curves",
        &Resolved {
            function: &function,
            algorithms: kinds.iter().map(|k| k.label()).collect(),
            population: args.pop,
            runs: args.runs,
            iterations: args.iters,
            master_seed: args.seed,
        },
        &[csv],
    )?;
    Ok(())
}

pub fn runtime(args: &RuntimeArgs, ctx: &OutputContext) -> Result<()> {
    let function = resolve_function(&args.function, Some(args.dim))?;
    let kinds = parse_kinds(&args.algorithms)?;
    let entries = runtime_comparison(
        &function,
        &kinds,
        args.pop,
        args.runs,
        args.iters,
        args.seed,
    )
    .map_err(config_to_usage)?;

    #[derive(Serialize)]
    struct RuntimeReport<'a> {
        function: &'a ObjectiveFunction,
        population: usize,
        runs: usize,
        iterations: usize,
        master_seed: u64,
        entries: &'a [tornado_core::experiments::RuntimeEntry],
    }
    let report = RuntimeReport {
        function: &function,
        population: args.pop,
        runs: args.runs,
        iterations: args.iters,
        master_seed: args.seed,
        entries: &entries,
    };
    for e in &entries {
        println!(
            "{:<12} mean {:.4}s  normalized {:.3}  mean evals {}",
            e.algorithm, e.mean_wall_time_s, e.normalized, e.mean_evaluations
        );
    }
    let json = ctx.write_json("runtime.json", &report)?;
    ctx.write_manifest("runtime", &report, &[json])?;
    Ok(())
}

pub fn trace(args: &TraceArgs, ctx: &OutputContext) -> Result<()> {
    let function = resolve_function(&args.function, args.dim)?;
    if function.dimension() != 2 {
        eprintln!(
            "warning: trajectory trace is meant for 2-D functions, got dimension {}; emitting anyway",
            function.dimension()
        );
    }
    let mut cfg = StoConfig::new(args.pop, parse_k1(&args.k1)?, args.iters, args.seed);
    cfg.trace_particles = true;
    if let Some(eps) = args.vanish_epsilon {
        cfg.vanish_epsilon = eps;
    }
    cfg.validate().map_err(config_to_usage)?;

    let trace: RunTrace = sto_run(&function, &cfg)?;
    let csv = ctx.write_trajectory("trajectory.csv", &trace.snapshots, function.dimension())?;

    #[derive(Serialize)]
    struct Resolved<'a> {
        function: &'a ObjectiveFunction,
        sto: &'a StoConfig,
        iterations_used: usize,
        terminated_by: Termination,
        best_cost: f64,
    }
    ctx.write_manifest(
        "trace",
        &Resolved {
            function: &function,
            sto: &cfg,
            iterations_used: trace.iterations_used(),
            terminated_by: trace.terminated_by,
            best_cost: trace.final_best_cost(),
        },
        &[csv],
    )?;
    Ok(())
}
