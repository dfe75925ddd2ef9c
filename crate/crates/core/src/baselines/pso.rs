//! Particle swarm optimization, Clerc-Kennedy constriction form.

use serde::Serialize;

use crate::error::ConfigError;
use crate::problem::ObjectiveFunction;
use crate::rng::RandomStream;
use crate::swarm::argmin;
use crate::trace::{RunTrace, Termination};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PsoConfig {
    pub population: usize,
    pub phi1: f64,
    pub phi2: f64,
    pub max_iterations: usize,
    pub seed: u64,
}

impl PsoConfig {
    /// Standard constriction setting `phi1 = phi2 = 2.05`.
    pub fn new(population: usize, max_iterations: usize, seed: u64) -> Self {
        Self {
            population,
            phi1: 2.05,
            phi2: 2.05,
            max_iterations,
            seed,
        }
    }

    /// Constriction coefficient `chi = 2 / |2 - Phi - sqrt(Phi^2 - 4 Phi)|`
    /// with `Phi = phi1 + phi2`; about 0.72984 for the default 4.1.
    pub fn constriction(&self) -> f64 {
        let phi = self.phi1 + self.phi2;
        2.0 / (2.0 - phi - (phi * phi - 4.0 * phi).sqrt()).abs()
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.population < 1 {
            return Err(ConfigError::PopulationTooSmall {
                min: 1,
                got: self.population,
            });
        }
        if self.max_iterations == 0 {
            return Err(ConfigError::ZeroIterations);
        }
        let phi = self.phi1 + self.phi2;
        if !(phi > 4.0) {
            return Err(ConfigError::ConstrictionUndefined(phi));
        }
        Ok(())
    }
}

/// Runs constriction PSO: zero initial velocities, per-dimension random
/// cognitive/social pulls, positions clamped to the bounds, personal and
/// global bests tracked greedily. `k` evaluations per iteration.
pub fn pso_run(f: &ObjectiveFunction, cfg: &PsoConfig) -> Result<RunTrace, ConfigError> {
    cfg.validate()?;
    let k = cfg.population;
    let n = f.dimension();
    let chi = cfg.constriction();

    let mut rng = RandomStream::new(cfg.seed);
    let (mut positions, mut costs) = super::uniform_population(f, k, &mut rng);
    let mut eval_count = k as u64;

    let mut velocities = vec![vec![0.0; n]; k];
    let mut best_positions = positions.clone();
    let mut best_costs = costs.clone();
    let g = argmin(&costs);
    let mut global_best = positions[g].clone();
    let mut global_best_cost = costs[g];

    let mut trace = Vec::with_capacity(cfg.max_iterations);
    for _ in 0..cfg.max_iterations {
        for i in 0..k {
            for d in 0..n {
                let r1 = rng.uniform();
                let r2 = rng.uniform();
                velocities[i][d] = chi
                    * (velocities[i][d]
                        + cfg.phi1 * r1 * (best_positions[i][d] - positions[i][d])
                        + cfg.phi2 * r2 * (global_best[d] - positions[i][d]));
                positions[i][d] += velocities[i][d];
            }
            f.bounds().clamp_in_place(&mut positions[i]);
            costs[i] = f.evaluate(&positions[i]);
            eval_count += 1;
            if costs[i] < best_costs[i] {
                best_costs[i] = costs[i];
                best_positions[i].clone_from(&positions[i]);
                if costs[i] < global_best_cost {
                    global_best_cost = costs[i];
                    global_best.clone_from(&positions[i]);
                }
            }
        }
        trace.push(global_best_cost);
    }

    Ok(RunTrace {
        best_cost_per_iteration: trace,
        best_position: global_best,
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
    fn constriction_matches_the_closed_form() {
        let cfg = PsoConfig::new(40, 100, 0);
        assert!((cfg.constriction() - 0.7298).abs() < 1e-4);
        assert!((cfg.constriction() - 0.7298437881283576).abs() < 1e-15);
    }

    #[test]
    fn swarm_at_its_own_best_with_zero_velocity_never_moves() {
        // every pull term is zero, so chi * 0 stays zero regardless of r1/r2
        let f = benchmarks::beale();
        let cfg = PsoConfig::new(5, 20, 3);
        let mut rng = RandomStream::new(cfg.seed);
        let point = vec![1.25, -0.5];
        let cost = f.evaluate(&point);

        let mut positions = vec![point.clone(); 5];
        let mut velocities = vec![vec![0.0; 2]; 5];
        let best_positions = positions.clone();
        let global_best = point.clone();
        for i in 0..5 {
            for d in 0..2 {
                let r1 = rng.uniform();
                let r2 = rng.uniform();
                velocities[i][d] = cfg.constriction()
                    * (velocities[i][d]
                        + cfg.phi1 * r1 * (best_positions[i][d] - positions[i][d])
                        + cfg.phi2 * r2 * (global_best[d] - positions[i][d]));
                positions[i][d] += velocities[i][d];
            }
            assert_eq!(positions[i], point);
            assert_eq!(f.evaluate(&positions[i]), cost);
        }
    }

    #[test]
    fn run_is_monotone_with_exact_eval_accounting() {
        let f = benchmarks::eggholder();
        let cfg = PsoConfig::new(40, 60, 903);
        let trace = pso_run(&f, &cfg).unwrap();
        assert!(trace.is_monotone());
        assert_eq!(trace.iterations_used(), 60);
        assert_eq!(trace.total_evaluations, 40 + 60 * 40);
        assert!(f.bounds().contains(&trace.best_position));
    }

    #[test]
    fn duplicate_runs_are_identical() {
        let f = benchmarks::rastrigin(5);
        let cfg = PsoConfig::new(20, 40, 777);
        assert_eq!(pso_run(&f, &cfg).unwrap(), pso_run(&f, &cfg).unwrap());
    }

    #[test]
    fn validation_requires_constriction_regime() {
        let mut cfg = PsoConfig::new(40, 100, 0);
        cfg.phi1 = 1.0;
        cfg.phi2 = 1.0;
        assert_eq!(cfg.validate(), Err(ConfigError::ConstrictionUndefined(2.0)));
    }
}
