//! Frame-set classification runs over the configured fidelities.

use isodistill_core::{classify_frames, FrameSet, RestFrameState, WernerParam};
use serde::Serialize;

use crate::config::SweepConfig;
use crate::error::CliError;
use crate::render::{bit, g17};

#[derive(Debug, Clone, Serialize)]
pub struct FrameInfo {
    pub alpha: f64,
    pub n_z: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyResult {
    #[serde(rename = "F")]
    pub f: f64,
    pub wie: bool,
    pub wid: bool,
    pub sie: bool,
    pub sid: bool,
    /// `[alpha, negativity]` pairs in frame order.
    pub trace: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub measure: &'static str,
    pub w_over_2m: f64,
    pub strong_tolerance: f64,
    pub frames: Vec<FrameInfo>,
    pub results: Vec<ClassifyResult>,
}

/// Classifies each configured fidelity over the frame set induced by the
/// rapidity grid. Requires a non-empty F list.
pub fn run_classify(config: &SweepConfig) -> Result<ClassifyReport, CliError> {
    if config.f_values.is_empty() {
        return Err(CliError::Config(
            "field F_values: classify needs at least one fidelity".into(),
        ));
    }
    let wavepacket = config.wavepacket()?;
    let frames = FrameSet::from_rapidities(wavepacket, &config.alpha_grid())?;

    let frame_infos = frames
        .frames()
        .iter()
        .map(|frame| FrameInfo {
            alpha: frame.rapidity(),
            n_z: isodistill_core::wigner_coefficient(frame).value(),
        })
        .collect();

    let mut results = Vec::with_capacity(config.f_values.len());
    for &f in &config.f_values {
        let werner = WernerParam::new(f)?;
        let outcome = classify_frames(
            &RestFrameState::Werner(werner),
            &frames,
            config.strong_tolerance,
        )?;
        results.push(ClassifyResult {
            f,
            wie: outcome.wie,
            wid: outcome.wid,
            sie: outcome.sie,
            sid: outcome.sid,
            trace: outcome.negativity_trace,
        });
    }

    Ok(ClassifyReport {
        measure: isodistill_core::MEASURE_NEGATIVITY,
        w_over_2m: config.w_over_2m,
        strong_tolerance: config.strong_tolerance,
        frames: frame_infos,
        results,
    })
}

pub fn to_json(report: &ClassifyReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("classify report serializes");
    text.push('\n');
    text
}

/// Flat CSV rendering: one row per (F, frame) with the per-F verdict flags
/// repeated on every row.
pub fn to_csv(report: &ClassifyReport) -> String {
    let mut out = String::from("F,alpha,negativity,wie,wid,sie,sid\n");
    for result in &report.results {
        for (alpha, negativity) in &result.trace {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                result.f,
                g17(*alpha),
                g17(*negativity),
                bit(result.wie),
                bit(result.wid),
                bit(result.sie),
                bit(result.sid),
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Overrides;

    fn config(doc: &str) -> SweepConfig {
        SweepConfig::resolve(Some(doc), &Overrides::default()).unwrap()
    }

    #[test]
    fn classify_requires_fidelities() {
        let err = run_classify(&config("{}")).unwrap_err();
        assert!(matches!(err, CliError::Config(_)));
    }

    #[test]
    fn werner_07_report() {
        let report = run_classify(&config(
            r#"{"alpha_max": 3.0, "alpha_steps": 7, "F_values": [0.7]}"#,
        ))
        .unwrap();
        assert_eq!(report.measure, "negativity");
        assert_eq!(report.frames.len(), 7);
        let result = &report.results[0];
        assert!(result.wie && result.wid && !result.sie && !result.sid);
        assert_eq!(result.trace.len(), 7);
    }

    #[test]
    fn separable_fidelity_reports_all_false() {
        let report = run_classify(&config(
            r#"{"alpha_max": 3.0, "alpha_steps": 4, "F_values": [0.3]}"#,
        ))
        .unwrap();
        let result = &report.results[0];
        assert!(!result.wie && !result.wid && !result.sie && !result.sid);
    }

    #[test]
    fn json_shape_contains_schema_fields() {
        let report = run_classify(&config(
            r#"{"alpha_max": 1.0, "alpha_steps": 2, "F_values": [0.7]}"#,
        ))
        .unwrap();
        let text = to_json(&report);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["measure"], "negativity");
        assert!(value["frames"].is_array());
        assert_eq!(value["results"][0]["F"], 0.7);
        assert!(value["results"][0]["trace"][0].is_array());
    }
}
