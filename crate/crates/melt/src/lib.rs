//! Benchmark orchestrator and analysis toolkit for on-device LLM inference
//! experiments.
//!
//! The crate is organized around the lifecycle of a benchmarking campaign:
//!
//! - [`domain`] — experiment descriptors, grid expansion and the model/device
//!   registry shared by every other module.
//! - [`agent`] — the device-side capability contract plus a deterministic
//!   simulated device that emits event, power and temperature traces.
//! - [`orchestrator`] — queue execution (power control, clock sync, dependency
//!   push, monitored runs, collection) and the REST notification listener.
//! - [`powertrace`] — parsing, validation, resampling and baseline correction
//!   for power and temperature captures.
//! - [`analysis`] — timebase alignment, energy integration, throughput and
//!   per-token efficiency metrics, degradation detection, per-op summaries.
//! - [`report`] — cross-iteration aggregation (mean ± std), machine-readable
//!   report emission and plot-ready timeline export.
//!
//! Everything is exercisable at desk scale: the simulated agent produces
//! bit-deterministic traces for a given profile and seed, so end-to-end runs
//! can be verified against closed-form ground truth.

pub mod agent;
pub mod analysis;
pub mod domain;
pub mod orchestrator;
pub mod powertrace;
pub mod report;
