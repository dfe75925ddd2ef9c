//! Per-run result traces.

use serde::Serialize;

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Termination {
    MaxIterations,
    /// All particles collapsed onto the coldest position (tornado vanished).
    Vanished,
}

/// Air current a particle belongs to during one iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CurrentType {
    Coldest,
    Spiral,
    Updraft,
}

impl CurrentType {
    pub fn label(self) -> &'static str {
        match self {
            CurrentType::Coldest => "coldest",
            CurrentType::Spiral => "spiral",
            CurrentType::Updraft => "updraft",
        }
    }
}

/// One particle's position at one observation point of a traced run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParticleSnapshot {
    /// Number of completed iterations when the snapshot was taken (0 = initial).
    pub iteration: usize,
    pub particle: usize,
    pub current: CurrentType,
    pub position: Vec<f64>,
    pub cost: f64,
}

/// Result of a single optimization run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunTrace {
    /// Best cost after each completed iteration; non-increasing.
    pub best_cost_per_iteration: Vec<f64>,
    pub best_position: Vec<f64>,
    pub total_evaluations: u64,
    pub terminated_by: Termination,
    /// Per-iteration particle snapshots; empty unless tracing was requested.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub snapshots: Vec<ParticleSnapshot>,
}

impl RunTrace {
    pub fn iterations_used(&self) -> usize {
        self.best_cost_per_iteration.len()
    }

    /// Best cost at the end of the run.
    pub fn final_best_cost(&self) -> f64 {
        *self
            .best_cost_per_iteration
            .last()
            .expect("a run performs at least one iteration")
    }

    /// True when the best-cost series never increases.
    pub fn is_monotone(&self) -> bool {
        self.best_cost_per_iteration.windows(2).all(|w| w[1] <= w[0])
    }
}
