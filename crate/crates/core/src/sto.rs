//! Simulated tornado optimization (STO).
//!
//! A swarm of `k` air particles minimizes a cost function interpreted as
//! temperature. Each iteration the coldest particle (current best) stays
//! put while every other particle moves in exactly one direction:
//!
//! * updraft particles move straight toward the coldest one,
//!   `x_i := x_i + mu .* (x_coldest - x_i)`;
//! * spiral particles move toward their nearest strictly-better neighbor
//!   among the spiral side and the coldest,
//!   `x_i := x_i + mu .* (x_target - x_i)`.
//!
//! `mu` is the turbulence vector: per-dimension i.i.d. standard-normal step
//! sizes, drawn fresh per particle per iteration. The split between the two
//! currents is the tornado diameter `k1` (the coldest particle counts toward
//! the spiral side, which therefore holds `k1 - 1` movers). The diameter is
//! either fixed or redrawn uniformly from `{1, ..., k-1}` every iteration.
//!
//! One direction per particle means `k - 1` cost evaluations per iteration,
//! which is what makes the method cheap next to PSO (`k`) or TLBO (`2k`).

use serde::Serialize;

use crate::error::ConfigError;
use crate::problem::ObjectiveFunction;
use crate::rng::RandomStream;
use crate::swarm::{SwarmState, euclidean_distance, initialize_swarm};
use crate::trace::{CurrentType, ParticleSnapshot, RunTrace, Termination};

/// Default radius below which the tornado counts as vanished: "all positions
/// are the same" taken literally, up to floating-point noise. In practice
/// `max_iterations` is the stop that matters.
pub const DEFAULT_VANISH_EPSILON: f64 = 1e-12;

/// How the tornado diameter `k1` is chosen each iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DiameterPolicy {
    /// Constant `k1` in `1..population`.
    Fixed(usize),
    /// Redraw `k1` uniformly from `{1, ..., population-1}` every iteration.
    Randomized,
}

/// Turbulence model for the step-size vector `mu`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Turbulence {
    /// Per-dimension i.i.d. N(0, 1); the production model.
    StandardNormal,
    /// Every component equal to the given constant. A test hook: `1.0` lands
    /// a particle exactly on its target, `0.0` freezes the swarm. Draws
    /// nothing from the stream.
    Constant(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StoConfig {
    pub population: usize,
    pub diameter: DiameterPolicy,
    pub max_iterations: usize,
    pub vanish_epsilon: f64,
    pub seed: u64,
    pub trace_particles: bool,
    pub turbulence: Turbulence,
}

impl StoConfig {
    pub fn new(population: usize, diameter: DiameterPolicy, max_iterations: usize, seed: u64) -> Self {
        Self {
            population,
            diameter,
            max_iterations,
            vanish_epsilon: DEFAULT_VANISH_EPSILON,
            seed,
            trace_particles: false,
            turbulence: Turbulence::StandardNormal,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.population < 3 {
            return Err(ConfigError::PopulationTooSmall {
                min: 3,
                got: self.population,
            });
        }
        if self.max_iterations == 0 {
            return Err(ConfigError::ZeroIterations);
        }
        if !(self.vanish_epsilon > 0.0) {
            return Err(ConfigError::NonPositiveVanishEpsilon(self.vanish_epsilon));
        }
        if let DiameterPolicy::Fixed(k1) = self.diameter {
            if k1 < 1 || k1 >= self.population {
                return Err(ConfigError::DiameterOutOfRange {
                    k1,
                    population: self.population,
                });
            }
        }
        Ok(())
    }
}

/// One iteration's partition of the particle indices.
///
/// `spiral` and `updraft` are kept sorted; together with `coldest` they
/// partition `0..k`. `|spiral| = k1 - 1`: the coldest counts toward the
/// diameter but never moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurrentAssignment {
    pub coldest: usize,
    pub spiral: Vec<usize>,
    pub updraft: Vec<usize>,
}

impl CurrentAssignment {
    pub fn k1(&self) -> usize {
        self.spiral.len() + 1
    }

    pub fn role_of(&self, particle: usize) -> CurrentType {
        if particle == self.coldest {
            CurrentType::Coldest
        } else if self.spiral.contains(&particle) {
            CurrentType::Spiral
        } else {
            CurrentType::Updraft
        }
    }
}

/// `n` independent standard-normal draws; fresh per particle per iteration.
pub fn sample_turbulence(n: usize, rng: &mut RandomStream) -> Vec<f64> {
    (0..n).map(|_| rng.standard_normal()).collect()
}

/// Draws this iteration's `k1` according to the diameter policy.
pub fn draw_diameter(population: usize, policy: DiameterPolicy, rng: &mut RandomStream) -> usize {
    match policy {
        DiameterPolicy::Fixed(k1) => k1,
        DiameterPolicy::Randomized => rng.int_inclusive(1, population - 1),
    }
}

/// Randomly assigns the non-coldest particles to the two currents: a uniform
/// permutation of the `k - 1` remaining indices, the first `k1 - 1` spiral,
/// the rest updraft.
pub fn assign_currents(
    state: &SwarmState,
    k1: usize,
    rng: &mut RandomStream,
) -> Result<CurrentAssignment, ConfigError> {
    let k = state.population();
    if k1 < 1 || k1 >= k {
        return Err(ConfigError::DiameterOutOfRange { k1, population: k });
    }
    let mut others: Vec<usize> = (0..k).filter(|&i| i != state.coldest_index).collect();
    rng.shuffle(&mut others);
    let mut spiral = others[..k1 - 1].to_vec();
    let mut updraft = others[k1 - 1..].to_vec();
    spiral.sort_unstable();
    updraft.sort_unstable();
    Ok(CurrentAssignment {
        coldest: state.coldest_index,
        spiral,
        updraft,
    })
}

/// Target of spiral particle `i`: the nearest candidate (spiral side or
/// coldest, excluding `i`) with strictly lower cost.
///
/// Distance ties break to the lowest index. When no candidate is strictly
/// better — only possible through cost ties at the minimum — the coldest is
/// the fallback target.
pub fn nearest_better_target(
    state: &SwarmState,
    i: usize,
    assignment: &CurrentAssignment,
) -> usize {
    let here = &state.positions[i];
    let cost_i = state.costs[i];
    // squared distances order candidates exactly like Euclidean distances
    let mut best: Option<(f64, usize)> = None;
    for &j in assignment.spiral.iter().chain(std::iter::once(&assignment.coldest)) {
        if j == i || state.costs[j] >= cost_i {
            continue;
        }
        let d: f64 = state.positions[j]
            .iter()
            .zip(here)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        if best.is_none_or(|(bd, bj)| d < bd || (d == bd && j < bj)) {
            best = Some((d, j));
        }
    }
    best.map_or(assignment.coldest, |(_, j)| j)
}

/// Advances the swarm by one iteration and returns the assignment used.
///
/// Targets are resolved against the pre-update state and all moves applied
/// simultaneously, so the processing order of the particles is immaterial.
/// Moved positions are clamped to the bounds and re-evaluated (`k - 1`
/// evaluations); the coldest index is then recomputed (ties to lowest index)
/// and the iteration counter incremented.
pub fn sto_iteration(
    state: &mut SwarmState,
    f: &ObjectiveFunction,
    cfg: &StoConfig,
    rng: &mut RandomStream,
) -> Result<CurrentAssignment, ConfigError> {
    let k1 = draw_diameter(state.population(), cfg.diameter, rng);
    let assignment = assign_currents(state, k1, rng)?;
    move_particles(state, f, cfg.turbulence, &assignment, rng);
    Ok(assignment)
}

fn move_particles(
    state: &mut SwarmState,
    f: &ObjectiveFunction,
    turbulence: Turbulence,
    assignment: &CurrentAssignment,
    rng: &mut RandomStream,
) {
    let k = state.population();
    let n = f.dimension();

    // every mover's target, resolved before any position changes
    let target_of = resolve_targets(state, assignment);

    // all moves are computed against the old positions and applied at once
    let mut moves: Vec<(usize, Vec<f64>, f64)> = Vec::with_capacity(k - 1);
    for i in 0..k {
        if i == assignment.coldest {
            continue;
        }
        let here = &state.positions[i];
        let target = &state.positions[target_of[i]];
        let mut moved: Vec<f64> = match turbulence {
            Turbulence::StandardNormal => (0..n)
                .map(|d| here[d] + rng.standard_normal() * (target[d] - here[d]))
                .collect(),
            Turbulence::Constant(c) => (0..n).map(|d| here[d] + c * (target[d] - here[d])).collect(),
        };
        f.bounds().clamp_in_place(&mut moved);
        let cost = f.evaluate(&moved);
        moves.push((i, moved, cost));
    }
    for (i, position, cost) in moves {
        state.positions[i] = position;
        state.costs[i] = cost;
    }

    state.eval_count += (k - 1) as u64;
    state.recompute_coldest();
    state.iteration += 1;
}

/// Targets for all movers: the coldest for updraft particles, the
/// nearest-better candidate for spiral particles.
///
/// Computes each candidate-pair distance once; selection semantics are
/// those of [`nearest_better_target`], which stays the reference
/// implementation.
fn resolve_targets(state: &SwarmState, assignment: &CurrentAssignment) -> Vec<usize> {
    let k = state.population();
    let n = state.positions[0].len();
    let mut target_of: Vec<usize> = vec![assignment.coldest; k];
    if assignment.spiral.is_empty() {
        return target_of;
    }

    // candidates: the spiral side plus the coldest, positions copied into
    // one contiguous buffer so the pair scan below stays cache-friendly
    let mut cand: Vec<usize> = assignment.spiral.clone();
    cand.push(assignment.coldest);
    let m = cand.len();
    let mut flat = Vec::with_capacity(m * n);
    for &j in &cand {
        flat.extend_from_slice(&state.positions[j]);
    }

    // one pass over the candidate pairs; each distance feeds whichever side
    // of the pair is strictly worse
    let mut best: Vec<Option<(f64, usize)>> = vec![None; m];
    for (a, pa) in flat.chunks_exact(n).enumerate() {
        let cost_a = state.costs[cand[a]];
        for (off, pb) in flat[(a + 1) * n..].chunks_exact(n).enumerate() {
            let b = a + 1 + off;
            let cost_b = state.costs[cand[b]];
            if cost_a == cost_b {
                continue;
            }
            let d: f64 = pa.iter().zip(pb).map(|(x, y)| (x - y) * (x - y)).sum();
            let (to, j) = if cost_b < cost_a { (a, cand[b]) } else { (b, cand[a]) };
            if best[to].is_none_or(|(bd, bj)| d < bd || (d == bd && j < bj)) {
                best[to] = Some((d, j));
            }
        }
    }

    // cand[m-1] is the coldest, which never moves
    for (a, &i) in cand.iter().enumerate().take(m - 1) {
        target_of[i] = best[a].map_or(assignment.coldest, |(_, j)| j);
    }
    target_of
}

fn tornado_vanished(state: &SwarmState, epsilon: f64) -> bool {
    let coldest = state.coldest_position();
    state
        .positions
        .iter()
        .all(|x| euclidean_distance(x, coldest) < epsilon)
}

/// Runs STO to completion: random initialization, then iterations until the
/// budget is exhausted or the tornado vanishes (every particle within
/// `vanish_epsilon` of the coldest).
pub fn sto_run(f: &ObjectiveFunction, cfg: &StoConfig) -> Result<RunTrace, ConfigError> {
    cfg.validate()?;
    let mut rng = RandomStream::new(cfg.seed);
    let mut state = initialize_swarm(f, cfg.population, &mut rng)?;

    let mut best_costs = Vec::with_capacity(cfg.max_iterations);
    let mut snapshots = Vec::new();
    let mut terminated_by = Termination::MaxIterations;
    let mut last_assignment: Option<CurrentAssignment> = None;

    for _ in 0..cfg.max_iterations {
        let pre = cfg.trace_particles.then(|| state.clone());
        let assignment = sto_iteration(&mut state, f, cfg, &mut rng)?;
        if let Some(pre) = pre {
            // block t records the state entering iteration t+1, labeled with
            // the assignment that is about to move it
            push_snapshot_block(&mut snapshots, &pre, |i| assignment.role_of(i));
        }
        best_costs.push(state.coldest_cost());
        last_assignment = Some(assignment);
        if tornado_vanished(&state, cfg.vanish_epsilon) {
            terminated_by = Termination::Vanished;
            break;
        }
    }

    if cfg.trace_particles {
        // final block: roles carried over from the last sweep, with the
        // coldest label moved to the recomputed coldest; the displaced
        // previous coldest counts toward the spiral side
        let last = last_assignment.expect("max_iterations >= 1");
        let final_coldest = state.coldest_index;
        push_snapshot_block(&mut snapshots, &state, |i| {
            if i == final_coldest {
                CurrentType::Coldest
            } else if i == last.coldest {
                CurrentType::Spiral
            } else {
                last.role_of(i)
            }
        });
    }

    Ok(RunTrace {
        best_cost_per_iteration: best_costs,
        best_position: state.coldest_position().to_vec(),
        total_evaluations: state.eval_count,
        terminated_by,
        snapshots,
    })
}

fn push_snapshot_block(
    snapshots: &mut Vec<ParticleSnapshot>,
    state: &SwarmState,
    role_of: impl Fn(usize) -> CurrentType,
) {
    for i in 0..state.population() {
        snapshots.push(ParticleSnapshot {
            iteration: state.iteration,
            particle: i,
            current: role_of(i),
            position: state.positions[i].clone(),
            cost: state.costs[i],
        });
    }
}
