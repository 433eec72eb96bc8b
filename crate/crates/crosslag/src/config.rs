//! JSON analysis configuration with documented defaults and range checks.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A penalty that is either fixed or calibrated automatically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PenaltySetting {
    Fixed(f64),
    Keyword(String),
}

impl PenaltySetting {
    pub fn is_auto(&self) -> bool {
        matches!(self, PenaltySetting::Keyword(_))
    }

    pub fn fixed(&self) -> Option<f64> {
        match self {
            PenaltySetting::Fixed(v) => Some(*v),
            PenaltySetting::Keyword(_) => None,
        }
    }
}

/// End-to-end analysis settings: preprocessing, penalty structure, solver
/// stopping rules and inference sizes.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisConfig {
    /// Band-pass center frequency in Hz.
    pub f0_hz: f64,
    /// Gaussian envelope standard deviation of the band-pass kernel, in ms.
    pub bandwidth_ms: f64,
    /// Keep every `decimate_factor`-th envelope sample.
    pub decimate_factor: usize,
    /// Within-region precision bandwidth (in decimated samples).
    pub d_auto: usize,
    /// Cross-region precision bandwidth (in decimated samples).
    pub d_cross: usize,
    #[serde(default = "default_lambda_auto")]
    pub lambda_auto: f64,
    #[serde(default = "default_auto")]
    pub lambda_cross: PenaltySetting,
    #[serde(default = "default_auto")]
    pub lambda_diag: PenaltySetting,
    #[serde(default = "default_iter_max")]
    pub iter_max: usize,
    /// Convergence threshold on max-abs change of the latent covariance.
    #[serde(default = "default_ths")]
    pub ths: f64,
    /// Target false discovery rate for entry selection.
    #[serde(default = "default_alpha_bh")]
    pub alpha_bh: f64,
    /// Permutation-bootstrap replicate count.
    #[serde(default = "default_n_bootstrap")]
    pub n_bootstrap: usize,
    #[serde(default)]
    pub seed: u64,
    /// Max spurious discoveries tolerated when tuning `lambda_cross`.
    #[serde(default = "default_tune_max_false")]
    pub tune_max_false: usize,
    /// Bootstrap size used inside `lambda_cross` tuning.
    #[serde(default = "default_tune_bootstrap")]
    pub tune_bootstrap: usize,
}

fn default_lambda_auto() -> f64 {
    0.0
}
fn default_auto() -> PenaltySetting {
    PenaltySetting::Keyword("auto".into())
}
fn default_iter_max() -> usize {
    100
}
fn default_ths() -> f64 {
    0.001
}
fn default_alpha_bh() -> f64 {
    0.05
}
fn default_n_bootstrap() -> usize {
    200
}
fn default_tune_max_false() -> usize {
    1
}
fn default_tune_bootstrap() -> usize {
    50
}

/// Loads and validates a JSON configuration file.
pub fn load_config<P: AsRef<Path>>(path: P) -> Result<AnalysisConfig> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Config(format!("cannot read config: {e}")))?;
    parse_config(&text)
}

/// Parses and validates a JSON configuration document.
pub fn parse_config(text: &str) -> Result<AnalysisConfig> {
    let cfg: AnalysisConfig =
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
    cfg.validate()?;
    Ok(cfg)
}

impl AnalysisConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.f0_hz > 0.0) {
            return Err(Error::Config("f0_hz must be positive".into()));
        }
        if !(self.bandwidth_ms > 0.0) {
            return Err(Error::Config("bandwidth_ms must be positive".into()));
        }
        if self.decimate_factor == 0 {
            return Err(Error::Config("decimate_factor must be >= 1".into()));
        }
        for (name, setting) in [
            ("lambda_cross", &self.lambda_cross),
            ("lambda_diag", &self.lambda_diag),
        ] {
            match setting {
                PenaltySetting::Fixed(v) if !(*v >= 0.0) => {
                    return Err(Error::Config(format!("{name} must be nonnegative")));
                }
                PenaltySetting::Keyword(k) if k != "auto" => {
                    return Err(Error::Config(format!(
                        "{name} must be a nonnegative number or \"auto\", got {k:?}"
                    )));
                }
                _ => {}
            }
        }
        if !(self.lambda_auto >= 0.0) {
            return Err(Error::Config("lambda_auto must be nonnegative".into()));
        }
        if self.iter_max == 0 {
            return Err(Error::Config("iter_max must be >= 1".into()));
        }
        if !(self.ths > 0.0) {
            return Err(Error::Config("ths must be positive".into()));
        }
        if !(self.alpha_bh > 0.0 && self.alpha_bh < 1.0) {
            return Err(Error::Config("alpha_bh must lie in (0, 1)".into()));
        }
        if self.n_bootstrap < 2 {
            return Err(Error::Config("n_bootstrap must be >= 2".into()));
        }
        if self.tune_bootstrap < 2 {
            return Err(Error::Config("tune_bootstrap must be >= 2".into()));
        }
        Ok(())
    }

    /// Checks the bandwidths against the decimated series length.
    pub fn validate_against_t(&self, t_len: usize) -> Result<()> {
        if t_len < 2 {
            return Err(Error::Config("need at least 2 decimated samples".into()));
        }
        if self.d_cross > t_len - 1 || self.d_auto > t_len - 1 {
            return Err(Error::Config(format!(
                "bandwidths (d_auto={}, d_cross={}) must be <= T-1 = {}",
                self.d_auto,
                self.d_cross,
                t_len - 1
            )));
        }
        Ok(())
    }
}
