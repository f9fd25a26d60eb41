//! Domain types shared across the toolkit: model and device descriptors,
//! experiment grids, experiment specs and run manifests, plus the registry
//! that maps names to descriptors.
//!
//! Everything here is read-only after load; registries and grids can be
//! shared freely between concurrent readers.

mod grid;
mod registry;
mod types;
mod validate;

pub use grid::{expand_grid, GridError, GridPoint, GridSpec};
pub use registry::{load_registry, resolve_model, Registry, RegistryError};
pub use types::{
    ArtifactPaths, Backend, DeviceDescriptor, ExperimentSpec, Lab, ModelDescriptor, ModelFormat,
    Platform, PowerSource, QuantScheme, RunManifest, RunMode, RunStatus, Tier,
    MICRO_GEN_TOKENS, MICRO_PREFILL_TOKENS,
};
pub use validate::{validate_spec, Violation};
