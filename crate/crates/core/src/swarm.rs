//! Swarm state shared by the population-based algorithms.

use crate::error::ConfigError;
use crate::problem::ObjectiveFunction;
use crate::rng::RandomStream;

/// Positions and cached costs of `k` particles.
///
/// The cost cache is kept coherent by every mutation in this crate:
/// re-evaluating `positions[i]` always reproduces `costs[i]` exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct SwarmState {
    pub positions: Vec<Vec<f64>>,
    pub costs: Vec<f64>,
    /// Index of the minimum-cost particle; ties broken by lowest index.
    pub coldest_index: usize,
    pub iteration: usize,
    pub eval_count: u64,
}

impl SwarmState {
    pub fn population(&self) -> usize {
        self.positions.len()
    }

    pub fn coldest_position(&self) -> &[f64] {
        &self.positions[self.coldest_index]
    }

    pub fn coldest_cost(&self) -> f64 {
        self.costs[self.coldest_index]
    }

    pub fn recompute_coldest(&mut self) {
        self.coldest_index = argmin(&self.costs);
    }
}

/// Euclidean distance between two points of equal dimension.
pub fn euclidean_distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Index of the smallest value; ties broken by lowest index.
pub fn argmin(costs: &[f64]) -> usize {
    assert!(!costs.is_empty());
    let mut best = 0;
    for (i, c) in costs.iter().enumerate().skip(1) {
        if *c < costs[best] {
            best = i;
        }
    }
    best
}

/// Generates `k` particles i.i.d. uniform within the bounds and evaluates
/// them (`eval_count = k`).
///
/// Requires `k >= 3`: one coldest particle plus at least one particle per
/// air current.
pub fn initialize_swarm(
    f: &ObjectiveFunction,
    k: usize,
    rng: &mut RandomStream,
) -> Result<SwarmState, ConfigError> {
    if k < 3 {
        return Err(ConfigError::PopulationTooSmall { min: 3, got: k });
    }
    let positions: Vec<Vec<f64>> = (0..k).map(|_| f.bounds().sample(rng)).collect();
    let costs: Vec<f64> = positions.iter().map(|x| f.evaluate(x)).collect();
    let coldest_index = argmin(&costs);
    Ok(SwarmState {
        positions,
        costs,
        coldest_index,
        iteration: 0,
        eval_count: k as u64,
    })
}
