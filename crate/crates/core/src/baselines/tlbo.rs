//! Teaching-learning-based optimization.
//!
//! Parameter-free two-phase method. Teacher phase: every learner moves by
//! `x + r .* (teacher - T_F * mean)` with `T_F` drawn from `{1, 2}` and the
//! class mean and teacher snapshotted at the phase start. Learner phase:
//! each learner pairs with a random distinct partner and moves toward the
//! better of the two. Both phases accept greedily, so no learner ever
//! worsens. Two evaluations per learner per iteration.

use serde::Serialize;

use crate::error::ConfigError;
use crate::problem::ObjectiveFunction;
use crate::rng::RandomStream;
use crate::swarm::argmin;
use crate::trace::{RunTrace, Termination};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TlboConfig {
    pub population: usize,
    pub max_iterations: usize,
    pub seed: u64,
}

impl TlboConfig {
    pub fn new(population: usize, max_iterations: usize, seed: u64) -> Self {
        Self {
            population,
            max_iterations,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.population < 2 {
            return Err(ConfigError::PopulationTooSmall {
                min: 2,
                got: self.population,
            });
        }
        if self.max_iterations == 0 {
            return Err(ConfigError::ZeroIterations);
        }
        Ok(())
    }
}

pub fn tlbo_run(f: &ObjectiveFunction, cfg: &TlboConfig) -> Result<RunTrace, ConfigError> {
    cfg.validate()?;
    let k = cfg.population;
    let n = f.dimension();

    let mut rng = RandomStream::new(cfg.seed);
    let (mut positions, mut costs) = super::uniform_population(f, k, &mut rng);
    let mut eval_count = k as u64;

    let mut trace = Vec::with_capacity(cfg.max_iterations);
    for _ in 0..cfg.max_iterations {
        // teacher phase
        let teacher = positions[argmin(&costs)].clone();
        let mean: Vec<f64> = (0..n)
            .map(|d| positions.iter().map(|x| x[d]).sum::<f64>() / k as f64)
            .collect();
        for i in 0..k {
            let tf = rng.int_inclusive(1, 2) as f64;
            let mut candidate: Vec<f64> = (0..n)
                .map(|d| positions[i][d] + rng.uniform() * (teacher[d] - tf * mean[d]))
                .collect();
            f.bounds().clamp_in_place(&mut candidate);
            let cost = f.evaluate(&candidate);
            eval_count += 1;
            if cost < costs[i] {
                positions[i] = candidate;
                costs[i] = cost;
            }
        }

        // learner phase
        for i in 0..k {
            let mut j = rng.int_inclusive(0, k - 2);
            if j >= i {
                j += 1;
            }
            let toward_better = costs[i] < costs[j];
            let mut candidate: Vec<f64> = (0..n)
                .map(|d| {
                    let diff = if toward_better {
                        positions[i][d] - positions[j][d]
                    } else {
                        positions[j][d] - positions[i][d]
                    };
                    positions[i][d] + rng.uniform() * diff
                })
                .collect();
            f.bounds().clamp_in_place(&mut candidate);
            let cost = f.evaluate(&candidate);
            eval_count += 1;
            if cost < costs[i] {
                positions[i] = candidate;
                costs[i] = cost;
            }
        }

        trace.push(costs[argmin(&costs)]);
    }

    let best = argmin(&costs);
    Ok(RunTrace {
        best_cost_per_iteration: trace,
        best_position: positions[best].clone(),
        total_evaluations: eval_count,
        terminated_by: Termination::MaxIterations,
        snapshots: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks;

    #[test]
    fn identical_class_makes_the_teacher_step_vanish_at_tf_one() {
        // mean == teacher, so teacher - 1 * mean is the zero vector
        let teacher = [2.0, -1.0];
        let mean = [2.0, -1.0];
        let step: Vec<f64> = (0..2).map(|d| teacher[d] - 1.0 * mean[d]).collect();
        assert_eq!(step, vec![0.0, 0.0]);
    }

    #[test]
    fn two_k_evaluations_per_iteration() {
        let f = benchmarks::rastrigin(5);
        let cfg = TlboConfig::new(40, 25, 6);
        let trace = tlbo_run(&f, &cfg).unwrap();
        assert_eq!(trace.total_evaluations, 40 + 25 * 80);
        assert_eq!(trace.iterations_used(), 25);
    }

    #[test]
    fn greedy_acceptance_keeps_the_trace_monotone() {
        let f = benchmarks::eggholder();
        let cfg = TlboConfig::new(30, 40, 12);
        let trace = tlbo_run(&f, &cfg).unwrap();
        assert!(trace.is_monotone());
        assert!(f.bounds().contains(&trace.best_position));
    }

    #[test]
    fn duplicate_runs_are_identical() {
        let f = benchmarks::beale();
        let cfg = TlboConfig::new(12, 30, 314);
        assert_eq!(tlbo_run(&f, &cfg).unwrap(), tlbo_run(&f, &cfg).unwrap());
    }

    #[test]
    fn two_learners_are_enough() {
        let f = benchmarks::beale();
        let cfg = TlboConfig::new(2, 15, 8);
        let trace = tlbo_run(&f, &cfg).unwrap();
        assert!(trace.is_monotone());
        assert_eq!(trace.total_evaluations, 2 + 15 * 4);
        assert!(TlboConfig::new(1, 15, 8).validate().is_err());
    }

    #[test]
    fn partner_is_never_the_learner_itself() {
        let mut rng = RandomStream::new(40);
        let k = 7;
        for i in 0..k {
            for _ in 0..200 {
                let mut j = rng.int_inclusive(0, k - 2);
                if j >= i {
                    j += 1;
                }
                assert_ne!(i, j);
                assert!(j < k);
            }
        }
    }
}
