//! Constructors and validators for the two-spin state families: Bell
//! projectors, the Werner family, the general two-qubit layout, and a seeded
//! random ensemble for property suites and conjecture scans.

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::eigen::eigenvalues_hermitian;
use crate::error::{Error, Result};
use crate::mat::{c64, Mat4};
use crate::math;

/// Hermiticity tolerance for validated density matrices.
pub const DENSITY_HERMITICITY_TOL: f64 = 1e-12;
/// Unit-trace tolerance for validated density matrices.
pub const DENSITY_TRACE_TOL: f64 = 1e-12;
/// Positive-semidefiniteness floor: min eigenvalue must not drop below this.
pub const DENSITY_PSD_FLOOR: f64 = -1e-10;

/// A validated two-spin density matrix: Hermitian, unit trace, PSD.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix4 {
    matrix: Mat4,
}

impl DensityMatrix4 {
    /// Validates all invariants. Inputs are checked as given; nothing is
    /// symmetrized here.
    pub fn new(matrix: Mat4) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::NonFinite);
        }
        let defect = matrix.hermiticity_defect();
        if defect > DENSITY_HERMITICITY_TOL {
            return Err(Error::NotHermitian { defect });
        }
        let trace = matrix.trace().re;
        if math::abs(trace - 1.0) > DENSITY_TRACE_TOL {
            return Err(Error::TraceMismatch { trace });
        }
        let min_eigenvalue = eigenvalues_hermitian(&matrix)?.min();
        if min_eigenvalue < DENSITY_PSD_FLOOR {
            return Err(Error::NotPsd { min_eigenvalue });
        }
        Ok(Self { matrix })
    }

    /// Wraps a matrix produced by an operation that preserves validity
    /// (convex mixtures, the boost map on its physical range). Only the
    /// finiteness invariant is checked eagerly.
    pub(crate) fn trusted(matrix: Mat4) -> Self {
        debug_assert!(matrix.is_finite());
        Self { matrix }
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.matrix
    }

    pub fn into_matrix(self) -> Mat4 {
        self.matrix
    }

    /// trace(ρ²); 1 exactly for projectors.
    pub fn purity(&self) -> f64 {
        (self.matrix * self.matrix).trace().re
    }
}

/// The four maximally entangled two-qubit states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellKind {
    PsiMinus,
    PsiPlus,
    PhiMinus,
    PhiPlus,
}

impl BellKind {
    pub const ALL: [BellKind; 4] = [
        BellKind::PsiMinus,
        BellKind::PsiPlus,
        BellKind::PhiMinus,
        BellKind::PhiPlus,
    ];

    /// Amplitudes in the fixed |↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩ basis.
    fn amplitudes(self) -> [f64; 4] {
        let h = 1.0 / math::sqrt(2.0);
        match self {
            BellKind::PsiMinus => [0.0, h, -h, 0.0],
            BellKind::PsiPlus => [0.0, h, h, 0.0],
            BellKind::PhiMinus => [h, 0.0, 0.0, -h],
            BellKind::PhiPlus => [h, 0.0, 0.0, h],
        }
    }
}

/// Rank-1 projector onto the chosen Bell vector.
pub fn bell_state(kind: BellKind) -> DensityMatrix4 {
    let v = kind.amplitudes();
    DensityMatrix4::trusted(Mat4::from_fn(|r, c| c64(v[r] * v[c], 0.0)))
}

/// Werner fidelity parameter, restricted to [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerParam {
    fidelity: f64,
}

impl WernerParam {
    pub fn new(fidelity: f64) -> Result<Self> {
        if !fidelity.is_finite() || !(0.0..=1.0).contains(&fidelity) {
            return Err(Error::OutOfRange {
                name: "F",
                value: fidelity,
                min: 0.0,
                max: 1.0,
            });
        }
        Ok(Self { fidelity })
    }

    pub fn value(&self) -> f64 {
        self.fidelity
    }
}

/// The Werner state: a singlet of weight F mixed evenly with the other three
/// Bell projectors.
///
/// Diagonal `{(1-F)/3, (2F+1)/6, (2F+1)/6, (1-F)/3}` with inner off-diagonal
/// entries `(1-4F)/6`; all other entries zero.
pub fn werner_state(f: WernerParam) -> DensityMatrix4 {
    let f = f.value();
    let outer = (1.0 - f) / 3.0;
    let inner = (2.0 * f + 1.0) / 6.0;
    let cross = (1.0 - 4.0 * f) / 6.0;
    let mut m = Mat4::from_diagonal([outer, inner, inner, outer]);
    m[(1, 2)] = c64(cross, 0.0);
    m[(2, 1)] = c64(cross, 0.0);
    DensityMatrix4::trusted(m)
}

/// Parameters of the general two-qubit density layout: real diagonal
/// `a1..a4` (summing to 1) and complex upper-triangle entries
/// `b1, b2, b3, c1, c2, d` reading the first row, then the second, then the
/// third. The lower triangle is fixed by Hermiticity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralTwoQubitParams {
    pub a: [f64; 4],
    pub b1: Complex64,
    pub b2: Complex64,
    pub b3: Complex64,
    pub c1: Complex64,
    pub c2: Complex64,
    pub d: Complex64,
}

impl GeneralTwoQubitParams {
    /// Reads the parameters off a density matrix (upper triangle).
    pub fn from_density(rho: &DensityMatrix4) -> Self {
        let m = rho.matrix();
        Self {
            a: [m[(0, 0)].re, m[(1, 1)].re, m[(2, 2)].re, m[(3, 3)].re],
            b1: m[(0, 1)],
            b2: m[(0, 2)],
            b3: m[(0, 3)],
            c1: m[(1, 2)],
            c2: m[(1, 3)],
            d: m[(2, 3)],
        }
    }

    /// Lays the parameters out as a matrix, conjugates in the lower triangle.
    pub fn to_matrix(&self) -> Mat4 {
        let mut m = Mat4::from_diagonal(self.a);
        let upper = [
            ((0, 1), self.b1),
            ((0, 2), self.b2),
            ((0, 3), self.b3),
            ((1, 2), self.c1),
            ((1, 3), self.c2),
            ((2, 3), self.d),
        ];
        for ((r, c), z) in upper {
            m[(r, c)] = z;
            m[(c, r)] = z.conj();
        }
        m
    }
}

/// Builds and validates the general two-qubit density matrix.
///
/// Fails with `TraceMismatch` when the diagonal does not sum to 1 and with
/// `NotPsd` when the induced matrix has an eigenvalue below -1e-10.
pub fn general_state(p: &GeneralTwoQubitParams) -> Result<DensityMatrix4> {
    let m = p.to_matrix();
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let trace = p.a.iter().sum::<f64>();
    if math::abs(trace - 1.0) > DENSITY_TRACE_TOL {
        return Err(Error::TraceMismatch { trace });
    }
    let min_eigenvalue = eigenvalues_hermitian(&m)?.min();
    if min_eigenvalue < DENSITY_PSD_FLOOR {
        return Err(Error::NotPsd { min_eigenvalue });
    }
    Ok(DensityMatrix4::trusted(m))
}

/// Uniform in [0, 1) from the top 53 bits of the stream.
fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// One standard-normal pair via Box-Muller.
fn normal_pair(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let u1 = 1.0 - unit_f64(rng); // (0, 1], keeps ln finite
    let u2 = unit_f64(rng);
    let r = math::sqrt(-2.0 * math::ln(u1));
    let theta = 2.0 * core::f64::consts::PI * u2;
    (r * math::cos(theta), r * math::sin(theta))
}

/// Seeded random density matrix: `G·G† / trace(G·G†)` with `G` drawn
/// entrywise from a standard complex normal. Deterministic per seed; the
/// ChaCha8 stream is stable across platforms.
pub fn random_density(seed: u64) -> DensityMatrix4 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Mat4::zero();
    for r in 0..4 {
        for c in 0..4 {
            let (re, im) = normal_pair(&mut rng);
            g[(r, c)] = c64(re, im);
        }
    }
    let w = g * g.adjoint();
    // trace(G·G†) > 0 almost surely; a zero draw is impossible for the
    // Box-Muller output since r > 0.
    let m = w * (1.0 / w.trace().re);
    DensityMatrix4::trusted(m.hermitized())
}
