//! Entanglement and distillability verdicts, analytic Werner partial
//! transpose spectra, and the frame-set classification of weakly/strongly
//! isoentangled and isodistillable states.
//!
//! For two qubits NPT, entangled, and distillable are one and the same
//! property, so a single partial-transpose eigenvalue decides everything.
//! The chosen entanglement measure for the "strong" definitions is the
//! negativity (the absolute sum of negative partial-transpose eigenvalues),
//! which is zero exactly on the separable states here and is available in
//! closed form for the boosted Werner family.

use alloc::vec::Vec;

use crate::eigen::eigenvalues_hermitian;
use crate::error::{Error, Result};
use crate::mat::{partial_transpose, Subsystem};
use crate::math;
use crate::states::{werner_state, DensityMatrix4, WernerParam};
use crate::wigner::{apply_boost, wigner_coefficient, BoostFrame, WignerCoefficient};
use crate::RealSpectrum4;

/// Decision band around zero for the minimal partial-transpose eigenvalue.
/// Values within ±1e-10 of zero count as the separability boundary.
pub const PPT_DECISION_TOL: f64 = 1e-10;

/// Name of the entanglement measure recorded in classification outputs.
pub const MEASURE_NEGATIVITY: &str = "negativity";

/// Numeric partial-transpose spectrum of a state. The transpose output is
/// symmetrized before diagonalization; this is a verdict-producing path.
fn pt_spectrum_numeric(rho: &DensityMatrix4) -> Result<RealSpectrum4> {
    let pt = partial_transpose(rho.matrix(), Subsystem::B).hermitized();
    eigenvalues_hermitian(&pt)
}

/// PPT verdict for a two-spin state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistillVerdict {
    /// Smallest eigenvalue of the partial transpose.
    pub min_pt_eigenvalue: f64,
    /// NPT ⇔ distillable for two qubits.
    pub distillable: bool,
    /// NPT ⇔ entangled for two qubits; always equals `distillable`.
    pub entangled: bool,
    /// Set when the minimal eigenvalue sits inside the ±1e-10 decision band,
    /// i.e. the state is on the separability boundary. Boundary states are
    /// reported as not distillable.
    pub boundary: bool,
}

/// Applies the positive-partial-transpose criterion.
pub fn ppt_verdict(rho: &DensityMatrix4) -> Result<DistillVerdict> {
    let min_pt_eigenvalue = pt_spectrum_numeric(rho)?.min();
    let negative = min_pt_eigenvalue < -PPT_DECISION_TOL;
    Ok(DistillVerdict {
        min_pt_eigenvalue,
        distillable: negative,
        entangled: negative,
        boundary: math::abs(min_pt_eigenvalue) <= PPT_DECISION_TOL,
    })
}

/// The four analytic partial-transpose eigenvalues of the boosted Werner
/// state, in the conventional order: `x1 = x4 = (2F+1)/6`,
/// `x2 = (1-F)/3 + (1-4F)/6·n²`, `x3 = (1-F)/3 - (1-4F)/6·n²`.
///
/// Only `x2` can be negative; it is negative iff `F > distill_threshold(n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PTSpectrum {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub x4: f64,
}

impl PTSpectrum {
    pub fn min(&self) -> f64 {
        self.x1.min(self.x2).min(self.x3).min(self.x4)
    }

    pub fn sum(&self) -> f64 {
        self.x1 + self.x2 + self.x3 + self.x4
    }

    pub fn sorted(&self) -> RealSpectrum4 {
        RealSpectrum4::from_unsorted([self.x1, self.x2, self.x3, self.x4])
    }
}

/// Closed-form partial-transpose spectrum of the boosted Werner state.
pub fn werner_pt_spectrum(f: WernerParam, n: WignerCoefficient) -> PTSpectrum {
    let fv = f.value();
    let n2 = n.value() * n.value();
    let outer = (2.0 * fv + 1.0) / 6.0;
    let base = (1.0 - fv) / 3.0;
    let shift = (1.0 - 4.0 * fv) / 6.0 * n2;
    PTSpectrum {
        x1: outer,
        x2: base + shift,
        x3: base - shift,
        x4: outer,
    }
}

/// The Werner distillability threshold `N_z = (2+n²)/(2+4n²)`.
///
/// The boosted Werner state is distillable iff `F > N_z`; the threshold
/// decreases strictly from 1 (continuation limit) to 1/2 (rest frame).
pub fn distill_threshold(n: WignerCoefficient) -> f64 {
    let n2 = n.value() * n.value();
    (2.0 + n2) / (2.0 + 4.0 * n2)
}

/// Negativity: the absolute sum of negative partial-transpose eigenvalues.
/// Zero exactly on separable two-qubit states.
pub fn negativity(rho: &DensityMatrix4) -> Result<f64> {
    let spectrum = pt_spectrum_numeric(rho)?;
    Ok(spectrum
        .values()
        .into_iter()
        .filter(|v| *v < 0.0)
        .map(|v| -v)
        .sum())
}

/// An ordered set of observers, realized as strictly increasing rapidities
/// over a shared wavepacket.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameSet {
    frames: Vec<BoostFrame>,
    includes_rest_frame: bool,
}

impl FrameSet {
    /// Validates non-emptiness and strictly increasing rapidities.
    pub fn new(frames: Vec<BoostFrame>) -> Result<Self> {
        if frames.is_empty() {
            return Err(Error::EmptyFrameSet);
        }
        let increasing = frames
            .windows(2)
            .all(|pair| pair[0].rapidity() < pair[1].rapidity());
        if !increasing {
            return Err(Error::FramesNotSorted);
        }
        let includes_rest_frame = frames[0].rapidity() == 0.0;
        Ok(Self {
            frames,
            includes_rest_frame,
        })
    }

    /// Builds the set from rapidity values over one shared wavepacket.
    pub fn from_rapidities(
        wavepacket: crate::wavepacket::GaussianWavepacket,
        rapidities: &[f64],
    ) -> Result<Self> {
        let frames = rapidities
            .iter()
            .map(|&alpha| BoostFrame::new(wavepacket, alpha))
            .collect::<Result<Vec<_>>>()?;
        Self::new(frames)
    }

    pub fn frames(&self) -> &[BoostFrame] {
        &self.frames
    }

    pub fn includes_rest_frame(&self) -> bool {
        self.includes_rest_frame
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        false // guaranteed non-empty by construction
    }
}

/// The state whose boosted copies are classified: either a Werner fidelity
/// or an arbitrary density matrix.
#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum RestFrameState {
    Werner(WernerParam),
    General(DensityMatrix4),
}

impl RestFrameState {
    fn density(&self) -> DensityMatrix4 {
        match self {
            RestFrameState::Werner(f) => werner_state(*f),
            RestFrameState::General(rho) => *rho,
        }
    }
}

/// Frame-set classification result.
///
/// `wie`/`wid`: entangled/distillable in every considered frame.
/// `sie`/`sid`: additionally the negativity is constant across frames to
/// within the caller's tolerance. The hierarchy sid ⇒ sie ⇒ wie and
/// sid ⇒ wid ⇒ wie holds by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct IsoClassification {
    pub wie: bool,
    pub wid: bool,
    pub sie: bool,
    pub sid: bool,
    /// Per-frame `(rapidity, negativity)` pairs, in frame order.
    pub negativity_trace: Vec<(f64, f64)>,
    pub measure_name: &'static str,
}

impl IsoClassification {
    /// The hierarchy constraints on the four flags.
    pub fn hierarchy_holds(&self) -> bool {
        (!self.sid || (self.sie && self.wid)) && (!self.sie || self.wie) && (!self.wid || self.wie)
    }
}

/// Evaluates the boosted state in every frame and classifies it.
///
/// Each frame contributes one PPT verdict and one negativity value computed
/// through the generic boost map; `strong_tolerance` (> 0) bounds the
/// max-min negativity spread accepted as "constant".
pub fn classify_frames(
    state: &RestFrameState,
    frames: &FrameSet,
    strong_tolerance: f64,
) -> Result<IsoClassification> {
    assert!(
        strong_tolerance > 0.0,
        "strong_tolerance must be positive, got {strong_tolerance}"
    );
    let rho = state.density();

    let mut negativity_trace = Vec::with_capacity(frames.len());
    let mut all_entangled = true;
    let mut all_distillable = true;
    let mut min_neg = f64::INFINITY;
    let mut max_neg = f64::NEG_INFINITY;

    for frame in frames.frames() {
        let n = wigner_coefficient(frame);
        let boosted = apply_boost(&rho, n);
        let verdict = ppt_verdict(&boosted)?;
        let neg = negativity(&boosted)?;
        all_entangled &= verdict.entangled;
        all_distillable &= verdict.distillable;
        min_neg = min_neg.min(neg);
        max_neg = max_neg.max(neg);
        negativity_trace.push((frame.rapidity(), neg));
    }

    let constant = (max_neg - min_neg) <= strong_tolerance;
    let classification = IsoClassification {
        wie: all_entangled,
        wid: all_distillable,
        sie: all_entangled && constant,
        sid: all_distillable && constant,
        negativity_trace,
        measure_name: MEASURE_NEGATIVITY,
    };
    debug_assert!(classification.hierarchy_holds());
    Ok(classification)
}

/// Negativity spread of one state over a coefficient grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvarianceReport {
    pub max_negativity: f64,
    pub min_negativity: f64,
    /// `max_negativity - min_negativity`.
    pub variation: f64,
}

/// Evaluates the negativity of `apply_boost(rho, n)` at each grid point and
/// reports the spread. Grid values are expected in (0, 1]; the grid must be
/// non-empty.
pub fn strong_invariance_scan(
    rho: &DensityMatrix4,
    n_grid: &[WignerCoefficient],
) -> Result<InvarianceReport> {
    assert!(!n_grid.is_empty(), "coefficient grid must be non-empty");
    let mut min_negativity = f64::INFINITY;
    let mut max_negativity = f64::NEG_INFINITY;
    for &n in n_grid {
        debug_assert!(n.value() > 0.0 && n.value() <= 1.0);
        let neg = negativity(&apply_boost(rho, n))?;
        min_negativity = min_negativity.min(neg);
        max_negativity = max_negativity.max(neg);
    }
    Ok(InvarianceReport {
        max_negativity,
        min_negativity,
        variation: max_negativity - min_negativity,
    })
}
