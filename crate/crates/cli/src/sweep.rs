//! The rapidity sweep behind the threshold-curve figure: per-α Wigner
//! coefficient, distillability threshold, and per-F Werner verdicts.

use isodistill_core::{
    distill_threshold, werner_pt_spectrum, wigner_coefficient, BoostFrame, WernerParam,
    PPT_DECISION_TOL,
};
use serde::Serialize;

use crate::config::SweepConfig;
use crate::error::CliError;
use crate::render::{bit, g17};

/// Per-fidelity columns of one sweep row.
#[derive(Debug, Clone, Serialize)]
pub struct PerFidelity {
    #[serde(rename = "F")]
    pub f: f64,
    /// The only partial-transpose eigenvalue that can turn negative.
    pub x2: f64,
    /// max(0, -x2).
    pub negativity: f64,
    pub distillable: bool,
}

/// One rapidity grid point.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub alpha: f64,
    pub n_z: f64,
    #[serde(rename = "N_z")]
    pub threshold: f64,
    #[serde(rename = "per_F")]
    pub per_f: Vec<PerFidelity>,
}

/// Evaluates the sweep rows in ascending α order.
///
/// The per-F columns come from the analytic Werner forms; their agreement
/// with the generic boost map and the numeric eigensolver is enforced by the
/// acceptance suite, not re-derived per row.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>, CliError> {
    let wavepacket = config.wavepacket()?;
    let fidelities = config
        .f_values
        .iter()
        .map(|&f| WernerParam::new(f))
        .collect::<Result<Vec<_>, _>>()?;

    let mut rows = Vec::with_capacity(config.alpha_steps);
    for alpha in config.alpha_grid() {
        let frame = BoostFrame::new(wavepacket, alpha)?;
        let n = wigner_coefficient(&frame);
        let per_f = fidelities
            .iter()
            .map(|&f| {
                let x2 = werner_pt_spectrum(f, n).x2;
                PerFidelity {
                    f: f.value(),
                    x2,
                    negativity: (-x2).max(0.0),
                    distillable: x2 < -PPT_DECISION_TOL,
                }
            })
            .collect();
        rows.push(SweepRow {
            alpha,
            n_z: n.value(),
            threshold: distill_threshold(n),
            per_f,
        });
    }
    Ok(rows)
}

/// CSV header: `alpha,n_z,N_z` then `F=<v>_x2,F=<v>_negativity,F=<v>_distillable`
/// per fidelity, with `<v>` in shortest round-trip form.
pub fn csv_header(f_values: &[f64]) -> String {
    let mut header = String::from("alpha,n_z,N_z");
    for f in f_values {
        header.push_str(&format!(",F={f}_x2,F={f}_negativity,F={f}_distillable"));
    }
    header
}

pub fn to_csv(config: &SweepConfig, rows: &[SweepRow]) -> String {
    let mut out = csv_header(&config.f_values);
    out.push('\n');
    for row in rows {
        out.push_str(&g17(row.alpha));
        out.push(',');
        out.push_str(&g17(row.n_z));
        out.push(',');
        out.push_str(&g17(row.threshold));
        for per in &row.per_f {
            out.push(',');
            out.push_str(&g17(per.x2));
            out.push(',');
            out.push_str(&g17(per.negativity));
            out.push(',');
            out.push_str(bit(per.distillable));
        }
        out.push('\n');
    }
    out
}

pub fn to_json(rows: &[SweepRow]) -> String {
    let doc = serde_json::json!({ "rows": rows });
    let mut text = serde_json::to_string_pretty(&doc).expect("sweep rows serialize");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Overrides;

    fn config(doc: &str) -> SweepConfig {
        SweepConfig::resolve(Some(doc), &Overrides::default()).unwrap()
    }

    #[test]
    fn default_sweep_starts_at_the_rest_frame() {
        let config = config(r#"{"F_values": [0.502]}"#);
        let rows = run_sweep(&config).unwrap();
        assert_eq!(rows.len(), 201);
        assert_eq!(rows[0].alpha, 0.0);
        assert_eq!(rows[0].n_z, 1.0);
        assert_eq!(rows[0].threshold, 0.5);
    }

    #[test]
    fn rows_are_ascending_and_thresholds_nondecreasing() {
        let config = config("{}");
        let rows = run_sweep(&config).unwrap();
        for pair in rows.windows(2) {
            assert!(pair[0].alpha < pair[1].alpha);
            assert!(pair[0].threshold <= pair[1].threshold);
        }
    }

    #[test]
    fn distillable_flag_flips_along_the_window() {
        let config = config(
            r#"{"alpha_min": 0.0, "alpha_max": 3.0, "alpha_steps": 2, "F_values": [0.502]}"#,
        );
        let rows = run_sweep(&config).unwrap();
        assert!(rows[0].per_f[0].distillable);
        assert!(!rows[1].per_f[0].distillable);
    }

    #[test]
    fn csv_schema_is_stable() {
        assert_eq!(csv_header(&[]), "alpha,n_z,N_z");
        assert_eq!(
            csv_header(&[0.502, 0.7]),
            "alpha,n_z,N_z,F=0.502_x2,F=0.502_negativity,F=0.502_distillable,\
             F=0.7_x2,F=0.7_negativity,F=0.7_distillable"
        );
        let config = config(r#"{"alpha_max": 1.0, "alpha_steps": 2, "F_values": [1.0]}"#);
        let rows = run_sweep(&config).unwrap();
        let text = to_csv(&config, &rows);
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "alpha,n_z,N_z,F=1_x2,F=1_negativity,F=1_distillable"
        );
        let first = lines.next().unwrap();
        assert!(
            first.starts_with("0.0000000000000000e0,1.0000000000000000e0,5.0000000000000000e-1,")
        );
        assert!(first.ends_with(",1"));
        assert!(text.ends_with('\n'));
    }
}
