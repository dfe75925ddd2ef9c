//! The batch experiment protocols behind the data artifacts: diameter
//! sweeps, dimension sweeps, mean convergence curves, and the runtime
//! comparison.

use std::time::Instant;

use serde::Serialize;

use crate::error::ConfigError;
use crate::problem::ObjectiveFunction;
use crate::rng::child_seed;
use crate::sto::{DiameterPolicy, StoConfig};

use super::{
    AlgorithmConfig, AlgorithmKind, ExecutionMode, ExperimentSpec, SuccessCriterion,
    run_success_experiment,
};

/// Success probability at one fixed tornado diameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepPoint {
    pub k1: usize,
    pub success_probability: f64,
}

/// Runs fixed-diameter STO for every `k1` in `1..population`, at `trials`
/// runs per point, judged by the function's default criterion.
pub fn diameter_sweep(
    f: &ObjectiveFunction,
    population: usize,
    trials: usize,
    iterations: usize,
    master_seed: u64,
    mode: ExecutionMode,
) -> Result<Vec<SweepPoint>, ConfigError> {
    if population < 3 {
        return Err(ConfigError::PopulationTooSmall {
            min: 3,
            got: population,
        });
    }
    let criterion = SuccessCriterion::default_for(f);
    (1..population)
        .map(|k1| {
            let spec = ExperimentSpec {
                function: f.clone(),
                algorithm: AlgorithmConfig::Sto(StoConfig::new(
                    population,
                    DiameterPolicy::Fixed(k1),
                    iterations,
                    master_seed,
                )),
                trials,
                criterion,
                master_seed: child_seed(master_seed, k1 as u64),
            };
            let report = run_success_experiment(&spec, mode)?;
            Ok(SweepPoint {
                k1,
                success_probability: report.success_probability,
            })
        })
        .collect()
}

/// Success probability of one algorithm at one problem dimension.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DimensionCell {
    pub dimension: usize,
    pub algorithm: String,
    pub success_probability: f64,
}

/// Success per (algorithm, dimension) cell on a dimension-parameterized
/// family of functions, each cell judged by the function's default
/// criterion.
pub fn dimension_sweep(
    make_function: impl Fn(usize) -> ObjectiveFunction,
    dims: &[usize],
    kinds: &[AlgorithmKind],
    population: usize,
    trials: usize,
    max_iterations: usize,
    master_seed: u64,
    mode: ExecutionMode,
) -> Result<Vec<DimensionCell>, ConfigError> {
    if dims.is_empty() {
        return Err(ConfigError::EmptyDimensionList);
    }
    let mut cells = Vec::with_capacity(dims.len() * kinds.len());
    for &dim in dims {
        let function = make_function(dim);
        for (ai, kind) in kinds.iter().enumerate() {
            let spec = ExperimentSpec {
                function: function.clone(),
                algorithm: kind.configure(population, max_iterations, master_seed),
                trials,
                criterion: SuccessCriterion::default_for(&function),
                master_seed: child_seed(child_seed(master_seed, dim as u64), ai as u64),
            };
            let report = run_success_experiment(&spec, mode)?;
            cells.push(DimensionCell {
                dimension: dim,
                algorithm: kind.label(),
                success_probability: report.success_probability,
            });
        }
    }
    Ok(cells)
}

/// Mean best-cost-per-iteration series for one algorithm.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceCurve {
    pub algorithm: String,
    pub mean_best_cost: Vec<f64>,
}

/// Pointwise arithmetic mean of the best-cost traces over `runs` independent
/// runs per algorithm.
///
/// A run that vanishes early holds its final best for the remaining
/// iterations, which is exactly what continuing it would record.
pub fn convergence_curves(
    f: &ObjectiveFunction,
    kinds: &[AlgorithmKind],
    population: usize,
    runs: usize,
    iterations: usize,
    master_seed: u64,
    mode: ExecutionMode,
) -> Result<Vec<ConvergenceCurve>, ConfigError> {
    if runs == 0 {
        return Err(ConfigError::ZeroRuns);
    }
    let run_one = |config: &AlgorithmConfig, alg_seed: u64, r: u64| {
        let trace = config.run_with_seed(f, child_seed(alg_seed, r))?;
        let mut series = trace.best_cost_per_iteration;
        series.resize(iterations, *series.last().expect("at least one iteration"));
        Ok::<Vec<f64>, ConfigError>(series)
    };

    let mut curves = Vec::with_capacity(kinds.len());
    for (ai, kind) in kinds.iter().enumerate() {
        let config = kind.configure(population, iterations, master_seed);
        config.validate()?;
        let alg_seed = child_seed(master_seed, ai as u64);
        let all_series: Vec<Vec<f64>> = match mode {
            ExecutionMode::Serial => (0..runs as u64)
                .map(|r| run_one(&config, alg_seed, r))
                .collect::<Result<_, _>>()?,
            ExecutionMode::Parallel => {
                use rayon::prelude::*;
                (0..runs as u64)
                    .into_par_iter()
                    .map(|r| run_one(&config, alg_seed, r))
                    .collect::<Result<_, _>>()?
            }
        };
        let mean_best_cost = (0..iterations)
            .map(|t| all_series.iter().map(|s| s[t]).sum::<f64>() / runs as f64)
            .collect();
        curves.push(ConvergenceCurve {
            algorithm: kind.label(),
            mean_best_cost,
        });
    }
    Ok(curves)
}

/// Wall-time and evaluation-count summary for one algorithm.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RuntimeEntry {
    pub algorithm: String,
    pub mean_wall_time_s: f64,
    pub mean_time_per_iteration_s: f64,
    /// Mean wall time divided by the slowest algorithm's mean; the slowest
    /// maps to 1.0.
    pub normalized: f64,
    pub mean_evaluations: f64,
}

/// Times the optimization loops head to head. Always serial: concurrent
/// trials would contend for cores and distort the comparison. Runs are
/// interleaved across the algorithms (run 0 of each, run 1 of each, ...) so
/// machine-load drift hits every algorithm alike. Evaluation counts are
/// reported alongside as the machine-independent proxy.
pub fn runtime_comparison(
    f: &ObjectiveFunction,
    kinds: &[AlgorithmKind],
    population: usize,
    runs: usize,
    iterations: usize,
    master_seed: u64,
) -> Result<Vec<RuntimeEntry>, ConfigError> {
    if runs == 0 {
        return Err(ConfigError::ZeroRuns);
    }
    #[derive(Default)]
    struct Tally {
        total_time: f64,
        total_iters: usize,
        total_evals: u64,
    }
    let configs: Vec<AlgorithmConfig> = kinds
        .iter()
        .map(|kind| {
            let config = kind.configure(population, iterations, master_seed);
            config.validate().map(|()| config)
        })
        .collect::<Result<_, _>>()?;

    let mut tallies: Vec<Tally> = kinds.iter().map(|_| Tally::default()).collect();
    for r in 0..runs as u64 {
        for (ai, config) in configs.iter().enumerate() {
            let alg_seed = child_seed(master_seed, ai as u64);
            let start = Instant::now();
            let trace = config.run_with_seed(f, child_seed(alg_seed, r))?;
            let tally = &mut tallies[ai];
            tally.total_time += start.elapsed().as_secs_f64();
            tally.total_iters += trace.iterations_used();
            tally.total_evals += trace.total_evaluations;
        }
    }

    let slowest = tallies
        .iter()
        .map(|t| t.total_time)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(kinds
        .iter()
        .zip(&tallies)
        .map(|(kind, tally)| RuntimeEntry {
            algorithm: kind.label(),
            mean_wall_time_s: tally.total_time / runs as f64,
            mean_time_per_iteration_s: tally.total_time / tally.total_iters as f64,
            normalized: tally.total_time / slowest,
            mean_evaluations: tally.total_evals as f64 / runs as f64,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks;

    #[test]
    fn diameter_sweep_covers_the_whole_range() {
        let f = benchmarks::beale();
        let points =
            diameter_sweep(&f, 6, 4, 10, 42, ExecutionMode::Serial).unwrap();
        assert_eq!(points.len(), 5);
        assert_eq!(points.first().unwrap().k1, 1);
        assert_eq!(points.last().unwrap().k1, 5);
        assert!(points.iter().all(|p| (0.0..=1.0).contains(&p.success_probability)));
    }

    #[test]
    fn dimension_sweep_rejects_degenerate_input() {
        let err = dimension_sweep(
            benchmarks::styblinski_tang,
            &[],
            &[AlgorithmKind::StoRandom],
            10,
            2,
            10,
            0,
            ExecutionMode::Serial,
        )
        .unwrap_err();
        assert_eq!(err, ConfigError::EmptyDimensionList);

        let err = dimension_sweep(
            benchmarks::styblinski_tang,
            &[2],
            &[AlgorithmKind::StoRandom],
            10,
            0,
            10,
            0,
            ExecutionMode::Serial,
        )
        .unwrap_err();
        assert_eq!(err, ConfigError::ZeroTrials);
    }

    #[test]
    fn dimension_sweep_produces_one_cell_per_pair() {
        let cells = dimension_sweep(
            benchmarks::rastrigin,
            &[2, 3],
            &[AlgorithmKind::StoRandom, AlgorithmKind::Tlbo],
            8,
            2,
            5,
            1,
            ExecutionMode::Serial,
        )
        .unwrap();
        assert_eq!(cells.len(), 4);
        assert_eq!(cells[0].dimension, 2);
        assert_eq!(cells[3].algorithm, "tlbo");
    }

    #[test]
    fn single_run_curve_equals_that_trace() {
        let f = benchmarks::beale();
        let kinds = [AlgorithmKind::StoFixed(3)];
        let curves =
            convergence_curves(&f, &kinds, 8, 1, 20, 9, ExecutionMode::Serial).unwrap();
        assert_eq!(curves.len(), 1);
        let expected = kinds[0]
            .configure(8, 20, 0)
            .run_with_seed(&f, child_seed(child_seed(9, 0), 0))
            .unwrap();
        let mut series = expected.best_cost_per_iteration;
        series.resize(20, *series.last().unwrap());
        assert_eq!(curves[0].mean_best_cost, series);
    }

    #[test]
    fn mean_curves_are_monotone_non_increasing() {
        let f = benchmarks::ripple25();
        let kinds = [AlgorithmKind::StoRandom, AlgorithmKind::Pso];
        let curves =
            convergence_curves(&f, &kinds, 10, 5, 15, 33, ExecutionMode::Parallel).unwrap();
        for curve in &curves {
            assert_eq!(curve.mean_best_cost.len(), 15);
            assert!(
                curve.mean_best_cost.windows(2).all(|w| w[1] <= w[0]),
                "{} not monotone",
                curve.algorithm
            );
        }
    }

    #[test]
    fn runtime_normalization_maps_the_slowest_to_one() {
        let f = benchmarks::rastrigin(3);
        let entries = runtime_comparison(
            &f,
            &[AlgorithmKind::StoRandom, AlgorithmKind::Tlbo],
            10,
            3,
            20,
            4,
        )
        .unwrap();
        let max = entries.iter().map(|e| e.normalized).fold(0.0, f64::max);
        assert_eq!(max, 1.0);
        assert!(entries.iter().all(|e| e.normalized > 0.0 && e.normalized <= 1.0));
    }
}
