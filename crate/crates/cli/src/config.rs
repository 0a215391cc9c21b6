//! Run configuration: a single JSON document (file or stdin), with
//! command-line flags overriding individual fields.

use serde::Deserialize;

use crate::error::CliError;

/// Output encodings for every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Random-state ensembles understood by the conjecture scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnsembleKind {
    /// Full-rank states `G·G†/tr` from a complex Gaussian matrix.
    Random,
    /// Two-term mixtures of product states; separable by construction.
    Separable,
    /// Werner states with fidelity drawn uniformly from the F range.
    Werner,
}

impl EnsembleKind {
    pub fn name(self) -> &'static str {
        match self {
            EnsembleKind::Random => "random",
            EnsembleKind::Separable => "separable",
            EnsembleKind::Werner => "werner",
        }
    }
}

/// Fully resolved configuration shared by the subcommands.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub w_over_2m: f64,
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub alpha_steps: usize,
    pub f_values: Vec<f64>,
    pub seed: u64,
    pub output_format: OutputFormat,
    pub strong_tolerance: f64,
    pub ensemble: EnsembleKind,
    pub ensemble_size: usize,
    pub n_grid: Vec<f64>,
}

/// The JSON document; every field is optional and falls back to a default.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub w_over_2m: Option<f64>,
    pub alpha_min: Option<f64>,
    pub alpha_max: Option<f64>,
    pub alpha_steps: Option<usize>,
    #[serde(rename = "F_values")]
    pub f_values: Option<Vec<f64>>,
    pub seed: Option<u64>,
    pub output_format: Option<OutputFormat>,
    pub strong_tolerance: Option<f64>,
    pub ensemble: Option<EnsembleKind>,
    pub ensemble_size: Option<usize>,
    pub n_grid: Option<Vec<f64>>,
}

/// Flag-level overrides collected by the argument parser.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub w_over_2m: Option<f64>,
    pub alpha_min: Option<f64>,
    pub alpha_max: Option<f64>,
    pub alpha_steps: Option<usize>,
    pub f_values: Option<Vec<f64>>,
    pub seed: Option<u64>,
    pub output_format: Option<OutputFormat>,
}

impl SweepConfig {
    /// Defaults: the parameters under which the threshold curve saturates
    /// visibly (w/2m = 0.1, α ∈ [0, 10] with 201 points), CSV output, an
    /// empty F list, seed 0, and a two-point coefficient grid for scans.
    pub fn defaults() -> Self {
        Self {
            w_over_2m: 0.1,
            alpha_min: 0.0,
            alpha_max: 10.0,
            alpha_steps: 201,
            f_values: Vec::new(),
            seed: 0,
            output_format: OutputFormat::Csv,
            strong_tolerance: 1e-9,
            ensemble: EnsembleKind::Random,
            ensemble_size: 1000,
            n_grid: vec![1.0, 0.995],
        }
    }

    /// Parses the JSON document, layers `overrides` on top of it, and
    /// validates the result.
    pub fn resolve(document: Option<&str>, overrides: &Overrides) -> Result<Self, CliError> {
        let file: ConfigFile = match document {
            Some(text) => serde_json::from_str(text)
                .map_err(|e| CliError::Config(format!("config JSON: {e}")))?,
            None => ConfigFile::default(),
        };

        let defaults = Self::defaults();
        let config = Self {
            w_over_2m: overrides
                .w_over_2m
                .or(file.w_over_2m)
                .unwrap_or(defaults.w_over_2m),
            alpha_min: overrides
                .alpha_min
                .or(file.alpha_min)
                .unwrap_or(defaults.alpha_min),
            alpha_max: overrides
                .alpha_max
                .or(file.alpha_max)
                .unwrap_or(defaults.alpha_max),
            alpha_steps: overrides
                .alpha_steps
                .or(file.alpha_steps)
                .unwrap_or(defaults.alpha_steps),
            f_values: overrides
                .f_values
                .clone()
                .or(file.f_values)
                .unwrap_or(defaults.f_values),
            seed: overrides.seed.or(file.seed).unwrap_or(defaults.seed),
            output_format: overrides
                .output_format
                .or(file.output_format)
                .unwrap_or(defaults.output_format),
            strong_tolerance: file.strong_tolerance.unwrap_or(defaults.strong_tolerance),
            ensemble: file.ensemble.unwrap_or(defaults.ensemble),
            ensemble_size: file.ensemble_size.unwrap_or(defaults.ensemble_size),
            n_grid: file.n_grid.unwrap_or(defaults.n_grid),
        };
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<(), CliError> {
        let fail = |msg: String| Err(CliError::Config(msg));
        if !(self.w_over_2m.is_finite() && self.w_over_2m > 0.0) {
            return fail(format!(
                "field w_over_2m: must be positive, got {}",
                self.w_over_2m
            ));
        }
        if !(self.alpha_min.is_finite() && self.alpha_min >= 0.0) {
            return fail(format!(
                "field alpha_min: must be nonnegative, got {}",
                self.alpha_min
            ));
        }
        if !(self.alpha_max.is_finite() && self.alpha_max >= self.alpha_min) {
            return fail(format!(
                "field alpha_max: must be >= alpha_min, got {} < {}",
                self.alpha_max, self.alpha_min
            ));
        }
        let degenerate = self.alpha_steps == 1 && self.alpha_min == self.alpha_max;
        if !degenerate && (self.alpha_steps < 2 || self.alpha_min >= self.alpha_max) {
            return fail(format!(
                "fields alpha_min/alpha_max/alpha_steps: need alpha_min < alpha_max with \
                 alpha_steps >= 2, or a single-point grid with alpha_min == alpha_max; got \
                 [{}, {}] with {} steps",
                self.alpha_min, self.alpha_max, self.alpha_steps
            ));
        }
        for &f in &self.f_values {
            if !(f.is_finite() && (0.0..=1.0).contains(&f)) {
                return fail(format!(
                    "field F_values: entries must lie in [0, 1], got {f}"
                ));
            }
        }
        if !(self.strong_tolerance.is_finite() && self.strong_tolerance > 0.0) {
            return fail(format!(
                "field strong_tolerance: must be positive, got {}",
                self.strong_tolerance
            ));
        }
        if self.ensemble_size == 0 {
            return fail("field ensemble_size: must be at least 1".into());
        }
        if self.n_grid.is_empty() {
            return fail("field n_grid: must be non-empty".into());
        }
        for &n in &self.n_grid {
            if !(n.is_finite() && n > 0.0 && n <= 1.0) {
                return fail(format!("field n_grid: entries must lie in (0, 1], got {n}"));
            }
        }
        Ok(())
    }

    /// Uniform inclusive rapidity grid.
    pub fn alpha_grid(&self) -> Vec<f64> {
        if self.alpha_steps == 1 {
            return vec![self.alpha_min];
        }
        let span = self.alpha_max - self.alpha_min;
        (0..self.alpha_steps)
            .map(|k| self.alpha_min + span * k as f64 / (self.alpha_steps - 1) as f64)
            .collect()
    }

    /// The packet is parameterized by w/2m alone; mass is fixed to 1 so that
    /// w/m = 2·(w/2m), matching the wide-packet warning rule.
    pub fn wavepacket(&self) -> Result<isodistill_core::GaussianWavepacket, CliError> {
        isodistill_core::GaussianWavepacket::new(2.0 * self.w_over_2m, 1.0).map_err(CliError::from)
    }

    /// Wide-packet warning flag (w ≳ m regime).
    pub fn width_warning(&self) -> bool {
        2.0 * self.w_over_2m >= 1.0
    }
}
