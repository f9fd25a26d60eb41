use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use super::types::{DeviceDescriptor, ModelDescriptor};

/// The registry manifest: every model and device available to the toolkit.
///
/// Loaded from a TOML file with top-level `models` and `devices` arrays whose
/// entries mirror the descriptor fields verbatim; unknown keys are rejected.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Registry {
    #[serde(default)]
    pub models: Vec<ModelDescriptor>,
    #[serde(default)]
    pub devices: Vec<DeviceDescriptor>,
    /// Directory the manifest was loaded from; relative artifact URIs resolve
    /// against it.
    #[serde(skip)]
    pub base_dir: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("cannot read registry manifest {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("registry manifest {path}: {source}")]
    Parse {
        path: String,
        source: toml::de::Error,
    },
    #[error("registry invariant violated: {0}")]
    Invalid(String),
    #[error("no model named {0} in the registry")]
    NotFound(String),
    #[error("no device with id {0} in the registry")]
    DeviceNotFound(String),
    #[error("artifact for {name} hashes to {actual}, registry says {expected}")]
    DigestMismatch {
        name: String,
        expected: String,
        actual: String,
    },
}

/// Loads and validates a registry manifest.
pub fn load_registry(path: &Path) -> Result<Registry, RegistryError> {
    let text = std::fs::read_to_string(path).map_err(|source| RegistryError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut registry: Registry = toml::from_str(&text).map_err(|source| RegistryError::Parse {
        path: path.display().to_string(),
        source,
    })?;
    registry.base_dir = path.parent().map(Path::to_path_buf);
    registry.check().map_err(RegistryError::Invalid)?;
    Ok(registry)
}

impl Registry {
    pub fn check(&self) -> Result<(), String> {
        for model in &self.models {
            model.check()?;
        }
        for device in &self.devices {
            device.check()?;
        }
        Ok(())
    }

    pub fn device(&self, id: &str) -> Result<&DeviceDescriptor, RegistryError> {
        self.devices
            .iter()
            .find(|d| d.id == id)
            .ok_or_else(|| RegistryError::DeviceNotFound(id.to_string()))
    }

    fn artifact_path(&self, descriptor: &ModelDescriptor) -> PathBuf {
        let uri = Path::new(&descriptor.artifact_uri);
        match (&self.base_dir, uri.is_relative()) {
            (Some(base), true) => base.join(uri),
            _ => uri.to_path_buf(),
        }
    }
}

/// Looks up a model by exact name and, when its artifact file exists locally,
/// verifies the registered digest against the file contents.
pub fn resolve_model(registry: &Registry, name: &str) -> Result<ModelDescriptor, RegistryError> {
    let descriptor = registry
        .models
        .iter()
        .find(|m| m.name == name)
        .ok_or_else(|| RegistryError::NotFound(name.to_string()))?;
    if let Some(expected) = &descriptor.artifact_digest {
        let path = registry.artifact_path(descriptor);
        if path.is_file() {
            let bytes = std::fs::read(&path).map_err(|source| RegistryError::Io {
                path: path.display().to_string(),
                source,
            })?;
            let actual = hex::encode(Sha256::digest(&bytes));
            if !actual.eq_ignore_ascii_case(expected) {
                return Err(RegistryError::DigestMismatch {
                    name: name.to_string(),
                    expected: expected.clone(),
                    actual,
                });
            }
        }
    }
    Ok(descriptor.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::types::*;

    fn sample_registry_toml() -> &'static str {
        r#"
[[models]]
name = "TinyLlama-1.1B-q4"
family = "tinyllama"
param_count = 1.1
quant_scheme = "k-quants"
bitwidth = 4
format = "gguf"
artifact_uri = "artifacts/tinyllama.gguf"

[[models]]
name = "Llama-2-13B-q4"
family = "llama-2"
param_count = 13.0
quant_scheme = "group-quant"
bitwidth = 4
format = "tvm-lib"
artifact_uri = "artifacts/llama13b.tvm"

[[devices]]
id = "sim-phone"
lab = "sim"
platform = "sim"
soc = "simulated"
mem_gb = 8
battery_capacity_mah = 3785.0
tier = "high"
power_source = "sim"
"#
    }

    #[test]
    fn resolve_by_exact_name() {
        let registry: Registry = toml::from_str(sample_registry_toml()).unwrap();
        let m = resolve_model(&registry, "TinyLlama-1.1B-q4").unwrap();
        assert_eq!(m.param_count, 1.1);
        assert_eq!(m.bitwidth, 4);
        assert_eq!(m.quant_scheme, QuantScheme::KQuants);
    }

    #[test]
    fn unknown_model_not_found() {
        let registry: Registry = toml::from_str(sample_registry_toml()).unwrap();
        match resolve_model(&registry, "no-such-model") {
            Err(RegistryError::NotFound(name)) => assert_eq!(name, "no-such-model"),
            other => panic!("expected NotFound, got {other:?}"),
        }
    }

    #[test]
    fn tampered_artifact_digest_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let artifact = dir.path().join("model.bin");
        let mut payload = b"synthetic model weights".to_vec();
        std::fs::write(&artifact, &payload).unwrap();
        let good_digest = hex::encode(sha2::Sha256::digest(&payload));

        let manifest = format!(
            r#"
[[models]]
name = "m"
family = "f"
param_count = 1.0
quant_scheme = "none"
bitwidth = 8
format = "raw"
artifact_uri = "model.bin"
artifact_digest = "{good_digest}"
"#
        );
        let manifest_path = dir.path().join("registry.toml");
        std::fs::write(&manifest_path, manifest).unwrap();

        let registry = load_registry(&manifest_path).unwrap();
        assert!(resolve_model(&registry, "m").is_ok());

        // Flip one byte and the digest check must fail.
        payload[0] ^= 0x01;
        std::fs::write(&artifact, &payload).unwrap();
        match resolve_model(&registry, "m") {
            Err(RegistryError::DigestMismatch { expected, actual, .. }) => {
                assert_eq!(expected, good_digest);
                assert_ne!(actual, good_digest);
            }
            other => panic!("expected DigestMismatch, got {other:?}"),
        }
    }

    #[test]
    fn registry_round_trips_bit_exactly() {
        let registry: Registry = toml::from_str(sample_registry_toml()).unwrap();
        let serialized = toml::to_string(&registry).unwrap();
        let reloaded: Registry = toml::from_str(&serialized).unwrap();
        assert_eq!(registry.models, reloaded.models);
        assert_eq!(registry.devices, reloaded.devices);
    }

    #[test]
    fn unknown_keys_rejected() {
        let bad = r#"
[[models]]
name = "m"
family = "f"
param_count = 1.0
quant_scheme = "none"
bitwidth = 8
format = "raw"
artifact_uri = "x"
surprise = true
"#;
        assert!(toml::from_str::<Registry>(bad).is_err());
    }
}
