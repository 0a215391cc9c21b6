//! The momentum-averaged Lorentz-Wigner map on two-spin states.
//!
//! A boost along x with rapidity α rotates each spin conditionally on its
//! momentum. After tracing the Gaussian momentum factors, the surviving
//! first-order effect on the spins is captured by a single scalar
//! `n_z = 1 - ((w/2m)·tanh(α/2))²` and four traced single-particle blocks.
//! Extending those blocks linearly over the matrix-unit expansion of a
//! density matrix gives a completely positive, trace-preserving, unital map;
//! the Choi spectrum `{1+n, 1-n, 0, 0}` certifies complete positivity on
//! n ∈ [0, 1].
//!
//! `n_z = 0` lies outside the physical range (it would need `w·tanh(α/2) =
//! 2m`); the map evaluated there is exposed separately as [`limit_map`], the
//! analytic continuation under which every input becomes separable.

use crate::error::{Error, Result};
use crate::mat::{c64, tensor_product, Mat2, Mat4};
use crate::math;
use crate::states::{DensityMatrix4, GeneralTwoQubitParams, WernerParam};
use crate::wavepacket::GaussianWavepacket;
use crate::RealSpectrum4;

/// A boosted observer: wavepacket parameters plus the boost rapidity α ≥ 0.
///
/// The boost direction is fixed to the x-axis and the spin quantization axis
/// to z, matching the traced-block construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostFrame {
    wavepacket: GaussianWavepacket,
    rapidity: f64,
}

impl BoostFrame {
    pub fn new(wavepacket: GaussianWavepacket, rapidity: f64) -> Result<Self> {
        if !(rapidity.is_finite() && rapidity >= 0.0) {
            return Err(Error::OutOfRange {
                name: "alpha",
                value: rapidity,
                min: 0.0,
                max: f64::INFINITY,
            });
        }
        Ok(Self {
            wavepacket,
            rapidity,
        })
    }

    /// The rest frame (α = 0) for the given wavepacket.
    pub fn rest(wavepacket: GaussianWavepacket) -> Self {
        Self {
            wavepacket,
            rapidity: 0.0,
        }
    }

    pub fn wavepacket(&self) -> &GaussianWavepacket {
        &self.wavepacket
    }

    pub fn rapidity(&self) -> f64 {
        self.rapidity
    }

    /// Boost velocity β = tanh α ∈ [0, 1).
    pub fn beta(&self) -> f64 {
        math::tanh(self.rapidity)
    }

    /// Lorentz factor γ = cosh α ≥ 1.
    pub fn gamma(&self) -> f64 {
        math::cosh(self.rapidity)
    }
}

/// The first-order momentum-averaged Wigner coefficient.
///
/// Physical frames (w/2m < 1, finite α) give values in (0, 1]; 1 is the rest
/// frame. The value 0 is reachable only through the analytic continuation,
/// never from [`wigner_coefficient`] on finite physical inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerCoefficient {
    n_z: f64,
}

impl WignerCoefficient {
    pub fn new(n_z: f64) -> Self {
        debug_assert!(n_z.is_finite());
        Self { n_z }
    }

    pub fn value(&self) -> f64 {
        self.n_z
    }

    /// Machine-readable validity flag: true iff 0 < n_z ≤ 1.
    pub fn is_physical(&self) -> bool {
        self.n_z > 0.0 && self.n_z <= 1.0
    }
}

/// `n_z = 1 - ((w/2m)·tanh(α/2))²`.
///
/// No error is raised for wide packets (w/m ≥ 1, where the first-order model
/// is physically inconsistent and n_z may even leave [0, 1]); callers are
/// expected to consult [`GaussianWavepacket::is_physical`] and
/// [`WignerCoefficient::is_physical`] and escalate as they see fit.
pub fn wigner_coefficient(frame: &BoostFrame) -> WignerCoefficient {
    let half_tanh = math::tanh(frame.rapidity() / 2.0);
    let x = frame.wavepacket().w_over_2m() * half_tanh;
    WignerCoefficient::new(1.0 - x * x)
}

/// The four traced single-particle blocks of the boost, indexed so that
/// `block(i, k)` is the momentum trace of `ΛΨ_i (ΛΨ_k)†`.
///
/// The blocks satisfy `m11 + m22 = I` (unitality), `trace(m11) =
/// trace(m22) = 1`, `trace(m12) = trace(m21) = 0`, and `m12† = m21`, all
/// exactly by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleQubitBlockSet {
    pub m11: Mat2,
    pub m12: Mat2,
    pub m21: Mat2,
    pub m22: Mat2,
}

impl SingleQubitBlockSet {
    /// 0-based block lookup: `block(0, 1)` is m12.
    pub fn block(&self, i: usize, k: usize) -> &Mat2 {
        match (i, k) {
            (0, 0) => &self.m11,
            (0, 1) => &self.m12,
            (1, 0) => &self.m21,
            (1, 1) => &self.m22,
            _ => panic!("block index out of range: ({i}, {k})"),
        }
    }
}

/// Builds the traced blocks at a given coefficient.
///
/// The formulas accept any finite n_z (coefficients outside [0, 1] arise for
/// wide packets in the warned-unphysical regime), but the resulting map is
/// completely positive only on [0, 1].
pub fn block_set(n: WignerCoefficient) -> SingleQubitBlockSet {
    let n = n.value();
    let plus = 0.5 * (1.0 + n);
    let minus = 0.5 * (1.0 - n);
    let zero = c64(0.0, 0.0);
    SingleQubitBlockSet {
        m11: Mat2::new([[c64(plus, 0.0), zero], [zero, c64(minus, 0.0)]]),
        m22: Mat2::new([[c64(minus, 0.0), zero], [zero, c64(plus, 0.0)]]),
        m12: Mat2::new([[zero, c64(plus, 0.0)], [c64(-minus, 0.0), zero]]),
        m21: Mat2::new([[zero, c64(-minus, 0.0)], [c64(plus, 0.0), zero]]),
    }
}

/// Applies the boost map to a two-spin state: the linear extension of
/// `E_ik ⊗ E_jl ↦ M_ik ⊗ M_jl` over the 16-term matrix-unit expansion.
///
/// Trace-preserving and Hermiticity-preserving for every n; completely
/// positive (hence mapping states to states) for n ∈ [0, 1]. At n = 1 the
/// blocks are matrix units and the state is returned unchanged.
pub fn apply_boost(rho: &DensityMatrix4, n: WignerCoefficient) -> DensityMatrix4 {
    let blocks = block_set(n);
    let m = rho.matrix();
    let mut out = Mat4::zero();
    for i in 0..2 {
        for k in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    let coeff = m[(2 * i + j, 2 * k + l)];
                    let term = tensor_product(blocks.block(i, k), blocks.block(j, l));
                    out = out + term * coeff;
                }
            }
        }
    }
    DensityMatrix4::trusted(out)
}

/// The boosted Werner state in closed form, with `c_F = (1-4F)/12`:
/// diagonal `1/4 ± c_F n²`, anti-diagonal corners `c_F (n²-1)` and inner
/// off-diagonal entries `c_F (n²+1)`.
///
/// Agrees entrywise with `apply_boost(werner_state(F), n)`.
pub fn boosted_werner_closed_form(f: WernerParam, n: WignerCoefficient) -> Result<DensityMatrix4> {
    let nv = n.value();
    if !(0.0..=1.0).contains(&nv) {
        return Err(Error::OutOfRange {
            name: "n_z",
            value: nv,
            min: 0.0,
            max: 1.0,
        });
    }
    let c_f = (1.0 - 4.0 * f.value()) / 12.0;
    let n2 = nv * nv;
    let plus = 0.25 + c_f * n2;
    let minus = 0.25 - c_f * n2;
    let corner = c_f * (n2 - 1.0);
    let inner = c_f * (n2 + 1.0);
    let mut m = Mat4::from_diagonal([plus, minus, minus, plus]);
    m[(0, 3)] = c64(corner, 0.0);
    m[(3, 0)] = c64(corner, 0.0);
    m[(1, 2)] = c64(inner, 0.0);
    m[(2, 1)] = c64(inner, 0.0);
    Ok(DensityMatrix4::trusted(m))
}

/// The analytic continuation of the boost map to n_z = 0, which no physical
/// frame reaches.
///
/// With the input read in the general layout (diagonal a₁..a₄, upper
/// triangle b₁, b₂, b₃, c₁, c₂, d), the continuation has diagonal 1/4 and
/// upper triangle built from `ℑb₁+ℑd`, `ℑb₂+ℑc₂` and `ℜb₃-ℜc₁` alone. It is
/// separable for every input: its spectrum coincides with its
/// partial-transpose spectrum (see [`limit_map_spectrum`]).
pub fn limit_map(rho: &DensityMatrix4) -> DensityMatrix4 {
    let p = GeneralTwoQubitParams::from_density(rho);
    let u = 0.5 * (p.b1.im + p.d.im);
    let v = 0.5 * (p.b2.im + p.c2.im);
    let s = 0.5 * (p.b3.re - p.c1.re);

    let iu = c64(0.0, u);
    let iv = c64(0.0, v);
    let sr = c64(s, 0.0);
    let q = c64(0.25, 0.0);
    DensityMatrix4::trusted(Mat4::new([
        [q, iu, iv, sr],
        [-iu, q, -sr, iv],
        [-iv, -sr, q, iu],
        [sr, -iv, -iu, q],
    ]))
}

/// Closed-form spectrum of [`limit_map`] applied to `rho`, sorted ascending:
/// `1/4·[1 ∓ 2ℜ(b₃-c₁) ± 2ℑ(b₁+b₂+c₂+d)]` and
/// `1/4·[1 ± 2ℜ(b₃-c₁) ± 2ℑ(b₁-b₂-c₂+d)]`.
pub fn limit_map_spectrum(rho: &DensityMatrix4) -> RealSpectrum4 {
    let p = GeneralTwoQubitParams::from_density(rho);
    let re_bc = p.b3.re - p.c1.re;
    let im_sum = p.b1.im + p.b2.im + p.c2.im + p.d.im;
    let im_diff = p.b1.im - p.b2.im - p.c2.im + p.d.im;
    RealSpectrum4::from_unsorted([
        0.25 * (1.0 - 2.0 * re_bc + 2.0 * im_sum),
        0.25 * (1.0 - 2.0 * re_bc - 2.0 * im_sum),
        0.25 * (1.0 + 2.0 * re_bc + 2.0 * im_diff),
        0.25 * (1.0 + 2.0 * re_bc - 2.0 * im_diff),
    ])
}

/// Choi matrix `Σ_ik E_ik ⊗ M_ik` of the single-qubit block map.
///
/// Hermitian with trace 2 and eigenvalues `{1+n, 1-n, 0, 0}`; nonnegative on
/// n ∈ [0, 1], certifying complete positivity there.
pub fn choi_matrix(n: WignerCoefficient) -> Mat4 {
    debug_assert!((0.0..=1.0).contains(&n.value()));
    let blocks = block_set(n);
    let mut out = Mat4::zero();
    for i in 0..2 {
        for k in 0..2 {
            out = out + tensor_product(&Mat2::unit(i, k), blocks.block(i, k));
        }
    }
    out
}
