//! Simulated tornado optimization (STO) and a reproducible benchmark
//! harness.
//!
//! STO is a swarm metaheuristic that mimics the two main air currents of a
//! tornado: an updraft current pulling particles toward the coldest (best)
//! solution for exploitation, and a spiral current moving particles toward
//! nearby better neighbors for exploration. Each particle follows exactly
//! one current per iteration, which keeps the per-iteration cost at `k - 1`
//! evaluations.
//!
//! The crate also ships constriction PSO, a real-coded GA, and TLBO under
//! the same run/trace contract, the six benchmark functions the comparison
//! protocol uses, and a deterministic experiment layer (success tables,
//! diameter/dimension sweeps, convergence curves, runtime comparison) whose
//! reports are pure functions of their configuration and master seed.
//!
//! ```
//! use tornado_core::benchmarks;
//! use tornado_core::sto::{DiameterPolicy, StoConfig, sto_run};
//!
//! let f = benchmarks::beale();
//! let cfg = StoConfig::new(40, DiameterPolicy::Randomized, 100, 7);
//! let trace = sto_run(&f, &cfg).unwrap();
//! assert!(trace.final_best_cost() <= trace.best_cost_per_iteration[0]);
//! ```

pub mod baselines;
pub mod benchmarks;
mod error;
pub mod experiments;
mod problem;
pub mod rng;
pub mod sto;
mod swarm;
mod trace;

pub use error::ConfigError;
pub use problem::{Bounds, ObjectiveFunction};
pub use swarm::{SwarmState, argmin, euclidean_distance, initialize_swarm};
pub use trace::{CurrentType, ParticleSnapshot, RunTrace, Termination};
