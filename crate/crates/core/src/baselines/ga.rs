//! Real-coded generational genetic algorithm.
//!
//! Per generation, a `crossover_fraction` share of the offspring comes from
//! arithmetic blend crossover between binary-tournament parents and the rest
//! from Gaussian per-gene mutation of a tournament-selected clone; one elite
//! survives unconditionally by replacing the worst offspring.

use serde::Serialize;

use crate::error::ConfigError;
use crate::problem::ObjectiveFunction;
use crate::rng::RandomStream;
use crate::swarm::argmin;
use crate::trace::{RunTrace, Termination};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaConfig {
    pub population: usize,
    /// Share of each generation produced by crossover; the rest by mutation.
    pub crossover_fraction: f64,
    /// Blend extension: the per-gene mixing weight is uniform in
    /// `[-coefficient, 1 + coefficient]`.
    pub crossover_coefficient: f64,
    /// Per-gene mutation probability.
    pub mutation_probability: f64,
    /// Mutation standard deviation as a fraction of the domain width.
    pub mutation_sigma_scale: f64,
    pub max_iterations: usize,
    pub seed: u64,
}

impl GaConfig {
    pub fn new(population: usize, max_iterations: usize, seed: u64) -> Self {
        Self {
            population,
            crossover_fraction: 0.8,
            crossover_coefficient: 0.05,
            mutation_probability: 0.08,
            mutation_sigma_scale: 0.1,
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
        if !(self.crossover_fraction > 0.0 && self.crossover_fraction < 1.0) {
            return Err(ConfigError::BadCrossoverFraction(self.crossover_fraction));
        }
        if !(0.0..=1.0).contains(&self.mutation_probability) {
            return Err(ConfigError::BadProbability {
                name: "mutation_probability",
                value: self.mutation_probability,
            });
        }
        Ok(())
    }
}

/// Binary tournament: two uniform picks, the cheaper one wins.
fn tournament(costs: &[f64], rng: &mut RandomStream) -> usize {
    let a = rng.int_inclusive(0, costs.len() - 1);
    let b = rng.int_inclusive(0, costs.len() - 1);
    if costs[b] < costs[a] { b } else { a }
}

/// Blend crossover child: `p1 + u .* (p2 - p1)` with each `u` uniform in
/// `[-alpha, 1 + alpha]`. Identical parents yield an identical child.
fn blend_crossover(p1: &[f64], p2: &[f64], alpha: f64, rng: &mut RandomStream) -> Vec<f64> {
    p1.iter()
        .zip(p2)
        .map(|(a, b)| {
            let u = rng.uniform_in(-alpha, 1.0 + alpha);
            a + u * (b - a)
        })
        .collect()
}

fn mutate(parent: &[f64], f: &ObjectiveFunction, cfg: &GaConfig, rng: &mut RandomStream) -> Vec<f64> {
    let mut child = parent.to_vec();
    for (d, gene) in child.iter_mut().enumerate() {
        if rng.uniform() < cfg.mutation_probability {
            *gene += rng.standard_normal() * cfg.mutation_sigma_scale * f.bounds().width(d);
        }
    }
    child
}

/// Runs the GA for `max_iterations` generations. `k` evaluations per
/// generation; elitism keeps the best-so-far monotone.
pub fn ga_run(f: &ObjectiveFunction, cfg: &GaConfig) -> Result<RunTrace, ConfigError> {
    cfg.validate()?;
    let k = cfg.population;

    let mut rng = RandomStream::new(cfg.seed);
    let (mut positions, mut costs) = super::uniform_population(f, k, &mut rng);
    let mut eval_count = k as u64;

    let n_crossover = ((cfg.crossover_fraction * k as f64).ceil() as usize).min(k);

    let mut trace = Vec::with_capacity(cfg.max_iterations);
    for _ in 0..cfg.max_iterations {
        let elite = argmin(&costs);
        let elite_position = positions[elite].clone();
        let elite_cost = costs[elite];

        let mut offspring = Vec::with_capacity(k);
        for c in 0..k {
            let child = if c < n_crossover {
                let p1 = tournament(&costs, &mut rng);
                let p2 = tournament(&costs, &mut rng);
                blend_crossover(
                    &positions[p1],
                    &positions[p2],
                    cfg.crossover_coefficient,
                    &mut rng,
                )
            } else {
                let p = tournament(&costs, &mut rng);
                mutate(&positions[p], f, cfg, &mut rng)
            };
            let mut child = child;
            f.bounds().clamp_in_place(&mut child);
            offspring.push(child);
        }

        let mut offspring_costs: Vec<f64> = offspring.iter().map(|x| f.evaluate(x)).collect();
        eval_count += k as u64;

        // elitism of size 1: the previous best replaces the worst offspring
        let worst = offspring_costs
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| a.total_cmp(b))
            .map(|(i, _)| i)
            .expect("population is non-empty");
        offspring[worst] = elite_position;
        offspring_costs[worst] = elite_cost;

        positions = offspring;
        costs = offspring_costs;
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
