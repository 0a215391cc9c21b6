//! Configuration echo and physics warnings: derived β, γ, coefficient and
//! threshold ranges, wide-packet warnings. Warnings never fail the run.

use isodistill_core::{distill_threshold, wigner_coefficient, BoostFrame};
use serde::Serialize;

use crate::config::SweepConfig;
use crate::error::CliError;
use crate::render::{bit, g17};

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Range {
    pub min: f64,
    pub max: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidateReport {
    pub w_over_2m: f64,
    pub w_over_m: f64,
    pub physical: bool,
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub alpha_steps: usize,
    pub beta: Range,
    pub gamma: Range,
    pub n_z: Range,
    #[serde(rename = "N_z")]
    pub threshold: Range,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
}

pub fn run_validate(config: &SweepConfig) -> Result<ValidateReport, CliError> {
    let wavepacket = config.wavepacket()?;
    let first = BoostFrame::new(wavepacket, config.alpha_min)?;
    let last = BoostFrame::new(wavepacket, config.alpha_max)?;

    // n_z decreases with rapidity, the threshold increases
    let n_first = wigner_coefficient(&first);
    let n_last = wigner_coefficient(&last);

    let mut warnings = Vec::new();
    if !wavepacket.is_physical() {
        warnings.push(format!(
            "w/m = {} >= 1: localization breaks down in this regime (particle \
             creation and wave-packet spreading); results are extrapolations",
            g17(wavepacket.w_over_m())
        ));
    }
    if !n_last.is_physical() {
        warnings.push(format!(
            "n_z reaches {} at alpha = {}: outside the physical range (0, 1]",
            g17(n_last.value()),
            g17(config.alpha_max)
        ));
    }

    let mut notes = Vec::new();
    if config.alpha_max == 0.0 {
        notes.push("all frames coincide with the rest frame (alpha = 0 only)".into());
    }

    Ok(ValidateReport {
        w_over_2m: config.w_over_2m,
        w_over_m: wavepacket.w_over_m(),
        physical: wavepacket.is_physical(),
        alpha_min: config.alpha_min,
        alpha_max: config.alpha_max,
        alpha_steps: config.alpha_steps,
        beta: Range {
            min: first.beta(),
            max: last.beta(),
        },
        gamma: Range {
            min: first.gamma(),
            max: last.gamma(),
        },
        n_z: Range {
            min: n_last.value(),
            max: n_first.value(),
        },
        threshold: Range {
            min: distill_threshold(n_first),
            max: distill_threshold(n_last),
        },
        warnings,
        notes,
    })
}

pub fn to_json(report: &ValidateReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("validate report serializes");
    text.push('\n');
    text
}

pub fn to_csv(report: &ValidateReport) -> String {
    let mut out = String::from("key,value\n");
    out.push_str(&format!("w_over_2m,{}\n", g17(report.w_over_2m)));
    out.push_str(&format!("w_over_m,{}\n", g17(report.w_over_m)));
    out.push_str(&format!("physical,{}\n", bit(report.physical)));
    out.push_str(&format!("alpha_min,{}\n", g17(report.alpha_min)));
    out.push_str(&format!("alpha_max,{}\n", g17(report.alpha_max)));
    out.push_str(&format!("alpha_steps,{}\n", report.alpha_steps));
    out.push_str(&format!("beta_min,{}\n", g17(report.beta.min)));
    out.push_str(&format!("beta_max,{}\n", g17(report.beta.max)));
    out.push_str(&format!("gamma_min,{}\n", g17(report.gamma.min)));
    out.push_str(&format!("gamma_max,{}\n", g17(report.gamma.max)));
    out.push_str(&format!("n_z_min,{}\n", g17(report.n_z.min)));
    out.push_str(&format!("n_z_max,{}\n", g17(report.n_z.max)));
    out.push_str(&format!("N_z_min,{}\n", g17(report.threshold.min)));
    out.push_str(&format!("N_z_max,{}\n", g17(report.threshold.max)));
    for w in &report.warnings {
        out.push_str(&format!("warning,{w}\n"));
    }
    for n in &report.notes {
        out.push_str(&format!("note,{n}\n"));
    }
    out
}
