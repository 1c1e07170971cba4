//! Effective run configuration: command-line flags override an optional
//! TOML config file, which overrides built-in defaults. The resolved config
//! is echoed into every output so each row is reproducible from the file
//! alone.

use serde::{Deserialize, Serialize};

/// Flat key set accepted in the TOML config file. Every key is optional;
/// only the keys relevant to the chosen subcommand are consulted.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub seed: Option<u64>,
    pub format: Option<String>,
    pub jobs: Option<usize>,
    pub out: Option<String>,
    /// Gap family: "uniform", "power_gap", or "empirical" (with `gaps`).
    pub family: Option<String>,
    pub beta: Option<f64>,
    pub gaps: Option<Vec<f64>>,
    pub n: Option<usize>,
    pub n_grid: Option<Vec<usize>>,
    pub delta: Option<f64>,
    pub trials: Option<u64>,
    pub instances: Option<usize>,
    pub method: Option<String>,
    pub estimator: Option<String>,
    pub alpha: Option<f64>,
    pub count: Option<usize>,
}

/// The resolved configuration echoed into every output document.
#[derive(Debug, Clone, Serialize)]
pub struct EffectiveConfig {
    pub subcommand: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gaps: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_grid: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instances: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub estimator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    pub seed: u64,
    pub jobs: usize,
    pub format: String,
}

impl EffectiveConfig {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }
}
