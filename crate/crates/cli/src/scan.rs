//! The conjecture scan: negativity variation of seeded random ensembles
//! across a Wigner-coefficient grid. Evidence gathering, not proof.

use isodistill_core::{
    partial_trace, ppt_verdict, random_density, strong_invariance_scan, tensor_product,
    werner_state, DensityMatrix4, Subsystem, WernerParam, WignerCoefficient,
};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

use crate::config::{EnsembleKind, SweepConfig};
use crate::error::CliError;
use crate::render::g17;

/// Variation above this threshold counts as "the measure moved".
pub const VARIATION_THRESHOLD: f64 = 1e-8;

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub ensemble: &'static str,
    pub ensemble_size: usize,
    pub seed: u64,
    pub n_grid: Vec<f64>,
    pub variation_threshold: f64,
    pub entangled_samples: usize,
    pub separable_samples: usize,
    /// Fraction of entangled samples whose negativity variation exceeds the
    /// threshold; 0 when the ensemble contains no entangled samples.
    pub entangled_fraction_above_threshold: f64,
    /// Variation extremes over the entangled samples (null when none).
    pub min_entangled_variation: Option<f64>,
    pub max_entangled_variation: Option<f64>,
    /// Largest variation seen on separable samples; stays at numerical zero.
    pub max_separable_variation: f64,
}

fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// One sample of the configured ensemble. Sample k of a run draws its own
/// sub-seed so ensembles are deterministic and extendable.
fn draw_sample(kind: EnsembleKind, rng: &mut ChaCha8Rng, f_range: (f64, f64)) -> DensityMatrix4 {
    match kind {
        EnsembleKind::Random => random_density(rng.next_u64()),
        EnsembleKind::Separable => {
            // two-term mixture of product states: separable by construction
            let a1 = partial_trace(random_density(rng.next_u64()).matrix(), Subsystem::B);
            let b1 = partial_trace(random_density(rng.next_u64()).matrix(), Subsystem::B);
            let a2 = partial_trace(random_density(rng.next_u64()).matrix(), Subsystem::B);
            let b2 = partial_trace(random_density(rng.next_u64()).matrix(), Subsystem::B);
            let p = unit_f64(rng);
            let mixture = tensor_product(&a1, &b1) * p + tensor_product(&a2, &b2) * (1.0 - p);
            DensityMatrix4::new(mixture.hermitized()).expect("product mixture is a state")
        }
        EnsembleKind::Werner => {
            let (lo, hi) = f_range;
            let f = lo + unit_f64(rng) * (hi - lo);
            werner_state(WernerParam::new(f).expect("sampled fidelity stays in range"))
        }
    }
}

/// Runs the scan over `ensemble_size` seeded samples.
pub fn run_scan(config: &SweepConfig) -> Result<ScanReport, CliError> {
    let grid: Vec<WignerCoefficient> = config
        .n_grid
        .iter()
        .map(|&n| WignerCoefficient::new(n))
        .collect();

    // Werner ensemble draws F uniformly from the span of F_values,
    // defaulting to the distillable band [0.6, 1.0].
    let f_range = if config.f_values.is_empty() {
        (0.6, 1.0)
    } else {
        let lo = config
            .f_values
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min);
        let hi = config
            .f_values
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max);
        (lo, hi)
    };

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut entangled = 0usize;
    let mut above_threshold = 0usize;
    let mut min_entangled: Option<f64> = None;
    let mut max_entangled: Option<f64> = None;
    let mut max_separable = 0.0f64;

    for _ in 0..config.ensemble_size {
        let rho = draw_sample(config.ensemble, &mut rng, f_range);
        let report = strong_invariance_scan(&rho, &grid)?;
        if ppt_verdict(&rho)?.entangled {
            entangled += 1;
            if report.variation > VARIATION_THRESHOLD {
                above_threshold += 1;
            }
            min_entangled =
                Some(min_entangled.map_or(report.variation, |v| v.min(report.variation)));
            max_entangled =
                Some(max_entangled.map_or(report.variation, |v| v.max(report.variation)));
        } else {
            max_separable = max_separable.max(report.variation);
        }
    }

    Ok(ScanReport {
        ensemble: config.ensemble.name(),
        ensemble_size: config.ensemble_size,
        seed: config.seed,
        n_grid: config.n_grid.clone(),
        variation_threshold: VARIATION_THRESHOLD,
        entangled_samples: entangled,
        separable_samples: config.ensemble_size - entangled,
        entangled_fraction_above_threshold: if entangled == 0 {
            0.0
        } else {
            above_threshold as f64 / entangled as f64
        },
        min_entangled_variation: min_entangled,
        max_entangled_variation: max_entangled,
        max_separable_variation: max_separable,
    })
}

pub fn to_json(report: &ScanReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("scan report serializes");
    text.push('\n');
    text
}

/// key,value rendering; the grid is semicolon-joined.
pub fn to_csv(report: &ScanReport) -> String {
    let grid = report
        .n_grid
        .iter()
        .map(|&n| g17(n))
        .collect::<Vec<_>>()
        .join(";");
    let mut out = String::from("key,value\n");
    out.push_str(&format!("ensemble,{}\n", report.ensemble));
    out.push_str(&format!("ensemble_size,{}\n", report.ensemble_size));
    out.push_str(&format!("seed,{}\n", report.seed));
    out.push_str(&format!("n_grid,{grid}\n"));
    out.push_str(&format!(
        "variation_threshold,{}\n",
        g17(report.variation_threshold)
    ));
    out.push_str(&format!("entangled_samples,{}\n", report.entangled_samples));
    out.push_str(&format!("separable_samples,{}\n", report.separable_samples));
    out.push_str(&format!(
        "entangled_fraction_above_threshold,{}\n",
        g17(report.entangled_fraction_above_threshold)
    ));
    out.push_str(&format!(
        "min_entangled_variation,{}\n",
        report.min_entangled_variation.map_or_else(String::new, g17)
    ));
    out.push_str(&format!(
        "max_entangled_variation,{}\n",
        report.max_entangled_variation.map_or_else(String::new, g17)
    ));
    out.push_str(&format!(
        "max_separable_variation,{}\n",
        g17(report.max_separable_variation)
    ));
    out
}
