use serde::{Deserialize, Serialize};

use crate::orchestrator::ClockSync;

/// Fixed prefill length used by micro-mode runs.
pub const MICRO_PREFILL_TOKENS: u32 = 256;
/// Fixed generation length used by micro-mode runs (end-of-sequence disabled).
pub const MICRO_GEN_TOKENS: u32 = 256;

/// Weight quantization scheme of a packaged model artifact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuantScheme {
    #[serde(rename = "group-quant")]
    GroupQuant,
    #[serde(rename = "gptq")]
    Gptq,
    #[serde(rename = "awq")]
    Awq,
    #[serde(rename = "k-quants")]
    KQuants,
    #[serde(rename = "none")]
    None,
}

/// On-disk format of a model artifact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModelFormat {
    #[serde(rename = "gguf")]
    Gguf,
    #[serde(rename = "tvm-lib")]
    TvmLib,
    #[serde(rename = "raw")]
    Raw,
}

/// A benchmarkable model artifact as registered in the manifest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDescriptor {
    pub name: String,
    /// Model family, e.g. `llama-2` or `gemma`.
    pub family: String,
    /// Parameter count in billions.
    pub param_count: f64,
    pub quant_scheme: QuantScheme,
    /// Weight bitwidth; one of 3, 4, 8 or 16.
    pub bitwidth: u8,
    pub format: ModelFormat,
    /// Opaque locator of the converted artifact (local path for this toolkit).
    pub artifact_uri: String,
    /// SHA-256 of the artifact, 64 hex chars, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub artifact_digest: Option<String>,
}

impl ModelDescriptor {
    /// Checks the descriptor's field invariants, returning a description of
    /// the first violation found.
    pub fn check(&self) -> Result<(), String> {
        if !(self.param_count > 0.0) {
            return Err(format!(
                "model {}: param_count must be positive, got {}",
                self.name, self.param_count
            ));
        }
        if ![3u8, 4, 8, 16].contains(&self.bitwidth) {
            return Err(format!(
                "model {}: bitwidth must be one of 3, 4, 8, 16, got {}",
                self.name, self.bitwidth
            ));
        }
        if let Some(d) = &self.artifact_digest {
            if d.len() != 64 || !d.bytes().all(|b| b.is_ascii_hexdigit()) {
                return Err(format!("model {}: digest is not 64 hex chars", self.name));
            }
        }
        Ok(())
    }

    /// Estimated weight footprint in GB (parameters x bits / 8).
    pub fn weight_gb(&self) -> f64 {
        self.param_count * f64::from(self.bitwidth) / 8.0
    }
}

/// Which part of the device farm a device belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Lab {
    Phone,
    Edge,
    Sim,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Platform {
    Android,
    Ios,
    Linux,
    Sim,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Mid,
    High,
}

/// How a device's power draw is captured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerSource {
    Monsoon,
    Sysfs,
    Sim,
}

/// A device in the farm, as registered in the manifest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeviceDescriptor {
    pub id: String,
    pub lab: Lab,
    pub platform: Platform,
    pub soc: String,
    pub mem_gb: u32,
    /// Battery capacity; required for phones, absent for always-on edge boards.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub battery_capacity_mah: Option<f64>,
    pub tier: Tier,
    pub power_source: PowerSource,
    /// Energy-mode label for boards with configurable TDP, e.g. "50W".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub energy_mode: Option<String>,
}

impl DeviceDescriptor {
    pub fn check(&self) -> Result<(), String> {
        if self.mem_gb == 0 {
            return Err(format!("device {}: mem_gb must be positive", self.id));
        }
        if let Some(mah) = self.battery_capacity_mah {
            if !(mah > 0.0) {
                return Err(format!(
                    "device {}: battery_capacity_mah must be positive",
                    self.id
                ));
            }
        }
        match self.lab {
            Lab::Phone => {
                if self.battery_capacity_mah.is_none() {
                    return Err(format!(
                        "device {}: phone-lab devices need battery_capacity_mah",
                        self.id
                    ));
                }
                if !matches!(self.power_source, PowerSource::Monsoon | PowerSource::Sim) {
                    return Err(format!(
                        "device {}: phone-lab devices are metered by monsoon",
                        self.id
                    ));
                }
            }
            Lab::Edge => {
                if self.battery_capacity_mah.is_some() {
                    return Err(format!(
                        "device {}: edge devices are mains-powered, no battery",
                        self.id
                    ));
                }
                if !matches!(self.power_source, PowerSource::Sysfs | PowerSource::Sim) {
                    return Err(format!(
                        "device {}: edge devices are metered through sysfs",
                        self.id
                    ));
                }
            }
            // Simulated devices may mimic either profile.
            Lab::Sim => {}
        }
        Ok(())
    }
}

/// Inference backend driving the run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Backend {
    #[serde(rename = "mlc-llm")]
    MlcLlm,
    #[serde(rename = "llama-cpp")]
    LlamaCpp,
    #[serde(rename = "llmfarm")]
    LlmFarm,
    #[serde(rename = "sim")]
    Sim,
}

/// Macro runs replay realistic conversations; micro runs pin prefill and
/// generation to fixed token counts with end-of-sequence disabled so that
/// individual operations can be traced in a controlled manner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RunMode {
    Macro,
    Micro,
}

/// One grid point of a benchmark job: a fully resolved experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub model: ModelDescriptor,
    pub device: DeviceDescriptor,
    pub backend: Backend,
    pub context_size: u32,
    pub max_gen_length: u32,
    pub batch_size: u32,
    pub mode: RunMode,
    /// Locator of the prompt set replayed during the run.
    pub conversations_uri: String,
    #[serde(default = "default_iterations")]
    pub iterations: u32,
    #[serde(default = "default_sleep_between_s")]
    pub sleep_between_s: f64,
    #[serde(default = "default_conversation_timeout_s")]
    pub conversation_timeout_s: f64,
}

pub(crate) fn default_iterations() -> u32 {
    3
}

pub(crate) fn default_sleep_between_s() -> f64 {
    5.0
}

pub(crate) fn default_conversation_timeout_s() -> f64 {
    3600.0
}

/// Terminal status of one run iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RunStatus {
    Ok,
    Oom,
    Timeout,
    DeviceError,
}

/// Locators of the four artifacts a successful run produces.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtifactPaths {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub events: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub temperature: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub responses: Option<String>,
}

impl ArtifactPaths {
    pub fn complete(&self) -> bool {
        self.events.is_some()
            && self.power.is_some()
            && self.temperature.is_some()
            && self.responses.is_some()
    }
}

/// Durable record binding one experiment iteration to its traces, clock sync
/// and outcome.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub run_id: String,
    pub spec: ExperimentSpec,
    pub iteration: u32,
    pub clock_sync: ClockSync,
    pub host_start_ns: i64,
    pub host_end_ns: i64,
    pub artifact_paths: ArtifactPaths,
    pub status: RunStatus,
}

impl RunManifest {
    pub fn check(&self) -> Result<(), String> {
        if self.status == RunStatus::Ok {
            if self.host_start_ns >= self.host_end_ns {
                return Err(format!(
                    "run {}: host_start must precede host_end",
                    self.run_id
                ));
            }
            if !self.artifact_paths.complete() {
                return Err(format!(
                    "run {}: successful runs must record all four artifacts",
                    self.run_id
                ));
            }
        }
        Ok(())
    }
}
