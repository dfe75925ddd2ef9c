//! Reference baselines: constriction PSO, a real-coded GA, and TLBO.
//!
//! All three share the comparison protocol of the STO experiments: uniform
//! random initialization, coordinate-wise clamping after every position
//! update, a fixed iteration budget, and a seeded deterministic stream.

mod ga;
mod pso;
mod tlbo;

pub use ga::{GaConfig, ga_run};
pub use pso::{PsoConfig, pso_run};
pub use tlbo::{TlboConfig, tlbo_run};

use crate::problem::ObjectiveFunction;
use crate::rng::RandomStream;

/// Uniform random population with evaluated costs (`k` evaluations); the
/// shared initialization of the three baselines.
fn uniform_population(
    f: &ObjectiveFunction,
    k: usize,
    rng: &mut RandomStream,
) -> (Vec<Vec<f64>>, Vec<f64>) {
    let positions: Vec<Vec<f64>> = (0..k).map(|_| f.bounds().sample(rng)).collect();
    let costs = positions.iter().map(|x| f.evaluate(x)).collect();
    (positions, costs)
}
