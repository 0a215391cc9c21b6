//! Numerical toolkit for Lorentz-boosted two-spin states.
//!
//! A boost seen from a moving frame rotates each spin conditionally on its
//! momentum (a Wigner rotation). For two spin-1/2 particles with factorized
//! Gaussian momentum wavepackets, the momentum-averaged effect to first
//! order in w/m is a completely positive map governed by one scalar
//! coefficient `n_z = 1 - ((w/2m)·tanh(α/2))²`. This crate builds the state
//! families (Bell, Werner, general two-qubit), applies the boost map, and
//! decides entanglement and distillability per frame via the partial
//! transpose, including the analytic Werner forms, the distillability
//! threshold `N_z = (2+n²)/(2+4n²)`, and the weak/strong isoentangled and
//! isodistillable classification over frame sets.
//!
//! The crate is `no_std`-compatible (with `alloc`); all floating-point
//! transcendentals go through `libm`, so std and no_std builds agree
//! bit-for-bit. Everything is a pure function on value types and safe to
//! call concurrently.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod distill;
mod eigen;
mod error;
mod mat;
mod math;
mod states;
mod wavepacket;
mod wigner;

pub use num_complex::Complex64;

pub use distill::{
    classify_frames, distill_threshold, negativity, ppt_verdict, strong_invariance_scan,
    werner_pt_spectrum, DistillVerdict, FrameSet, InvarianceReport, IsoClassification, PTSpectrum,
    RestFrameState, MEASURE_NEGATIVITY, PPT_DECISION_TOL,
};
pub use eigen::{eigenvalues_hermitian, RealSpectrum4, HERMITICITY_TOL};
pub use error::{Error, Result};
pub use mat::{c64, partial_trace, partial_transpose, tensor_product, Mat2, Mat4, Subsystem};
pub use states::{
    bell_state, general_state, random_density, werner_state, BellKind, DensityMatrix4,
    GeneralTwoQubitParams, WernerParam, DENSITY_HERMITICITY_TOL, DENSITY_PSD_FLOOR,
    DENSITY_TRACE_TOL,
};
pub use wavepacket::{gaussian_normalization, GaussianWavepacket, PHYSICAL_WIDTH_RATIO};
pub use wigner::{
    apply_boost, block_set, boosted_werner_closed_form, choi_matrix, limit_map, limit_map_spectrum,
    wigner_coefficient, BoostFrame, SingleQubitBlockSet, WignerCoefficient,
};
