//! Gaussian momentum wavepackets and the normalization quadrature.
//!
//! The wavepacket amplitude is `π^(-3/4) w^(-3/2) exp(-q²/2w²)` in natural
//! units (c = ħ = 1), so `∫|G|² d³q = 4π ∫₀^∞ q² |G(q)|² dq = 1` exactly.
//! The quadrature exists as an independent numerical check of that fact.

use crate::error::{Error, Result};
use crate::math;

/// Width threshold above which the single-particle localization picture
/// stops being physically consistent (`w ≳ m`).
pub const PHYSICAL_WIDTH_RATIO: f64 = 1.0;

/// Relative error target for [`gaussian_normalization`].
const QUAD_REL_TOL: f64 = 1e-8;
/// Interval budget for the adaptive refinement.
const QUAD_MAX_INTERVALS: usize = 2000;

/// Momentum-space Gaussian of width `w` for a particle of mass `m`,
/// both strictly positive and in the same natural units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianWavepacket {
    width: f64,
    mass: f64,
}

impl GaussianWavepacket {
    pub fn new(width: f64, mass: f64) -> Result<Self> {
        if !(width.is_finite() && width > 0.0) {
            return Err(Error::OutOfRange {
                name: "w",
                value: width,
                min: 0.0,
                max: f64::INFINITY,
            });
        }
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::OutOfRange {
                name: "m",
                value: mass,
                min: 0.0,
                max: f64::INFINITY,
            });
        }
        Ok(Self { width, mass })
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn w_over_m(&self) -> f64 {
        self.width / self.mass
    }

    pub fn w_over_2m(&self) -> f64 {
        self.width / (2.0 * self.mass)
    }

    /// Physical-validity flag: wide packets (`w ≥ m`) break the
    /// single-particle localization assumptions. This is a warning
    /// condition, never an error, at the library level.
    pub fn is_physical(&self) -> bool {
        self.w_over_m() < PHYSICAL_WIDTH_RATIO
    }

    /// The radial amplitude `π^(-3/4) w^(-3/2) exp(-q²/2w²)`.
    pub fn amplitude(&self, q: f64) -> f64 {
        let w = self.width;
        let norm = math::pow(core::f64::consts::PI, -0.75) * math::pow(w, -1.5);
        norm * math::exp(-q * q / (2.0 * w * w))
    }

    /// Integrand of the radial normalization integral, `4π q² |G(q)|²`.
    /// Its maximum sits at `q = w`.
    pub fn radial_density(&self, q: f64) -> f64 {
        let a = self.amplitude(q);
        4.0 * core::f64::consts::PI * q * q * a * a
    }
}

/// Numerically integrates `∫|G|² d³q` over the radial coordinate and returns
/// the value; the exact answer is 1 for every valid wavepacket.
///
/// Integration runs on `[0, 10w]` with adaptive Gauss-Kronrod (G7/K15)
/// refinement; the truncated tail is below `e^(-100) ≈ 4e-44` of the total.
/// Fails with `QuadratureFailure` when the interval budget is exhausted
/// before the 1e-8 relative error estimate is met.
pub fn gaussian_normalization(g: &GaussianWavepacket) -> Result<f64> {
    let f = |q: f64| g.radial_density(q);
    let upper = 10.0 * g.width();
    let (whole, _) = gauss_kronrod(&f, 0.0, upper);
    let tol = QUAD_REL_TOL * math::abs(whole);

    let mut budget = QUAD_MAX_INTERVALS;
    adaptive(&f, 0.0, upper, tol, &mut budget)
}

/// One G7/K15 panel: returns the K15 value and the |K15 - G7| error estimate.
fn gauss_kronrod(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    // Kronrod-15 abscissae on [0, 1] side of the symmetric rule, with the
    // Gauss-7 nodes at the odd positions. Standard published constants.
    const XGK: [f64; 8] = [
        0.991_455_371_120_812_6,
        0.949_107_912_342_758_5,
        0.864_864_423_359_769_1,
        0.741_531_185_599_394_4,
        0.586_087_235_467_691_1,
        0.405_845_151_377_397_2,
        0.207_784_955_007_898_47,
        0.0,
    ];
    const WGK: [f64; 8] = [
        0.022_935_322_010_529_225,
        0.063_092_092_629_978_56,
        0.104_790_010_322_250_18,
        0.140_653_259_715_525_92,
        0.169_004_726_639_267_9,
        0.190_350_578_064_785_4,
        0.204_432_940_075_298_9,
        0.209_482_141_084_727_83,
    ];
    const WG: [f64; 4] = [
        0.129_484_966_168_869_7,
        0.279_705_391_489_276_7,
        0.381_830_050_505_118_9,
        0.417_959_183_673_469_4,
    ];

    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let dx = half * XGK[i];
        let fsum = f(center - dx) + f(center + dx);
        kronrod += WGK[i] * fsum;
        if i % 2 == 1 {
            gauss += WG[i / 2] * fsum;
        }
    }
    kronrod *= half;
    gauss *= half;
    (kronrod, math::abs(kronrod - gauss))
}

fn adaptive(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, budget: &mut usize) -> Result<f64> {
    let (value, err) = gauss_kronrod(f, a, b);
    if err <= tol {
        return Ok(value);
    }
    if *budget < 2 {
        return Err(Error::QuadratureFailure {
            error_estimate: err,
        });
    }
    *budget -= 2;
    let mid = 0.5 * (a + b);
    let left = adaptive(f, a, mid, tol * 0.5, budget)?;
    let right = adaptive(f, mid, b, tol * 0.5, budget)?;
    Ok(left + right)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_positive_parameters() {
        assert!(GaussianWavepacket::new(0.0, 1.0).is_err());
        assert!(GaussianWavepacket::new(-0.1, 1.0).is_err());
        assert!(GaussianWavepacket::new(0.1, 0.0).is_err());
        assert!(GaussianWavepacket::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn physical_validity_flag() {
        assert!(GaussianWavepacket::new(0.2, 1.0).unwrap().is_physical());
        assert!(!GaussianWavepacket::new(1.2, 1.0).unwrap().is_physical());
        // boundary w = m is already flagged
        assert!(!GaussianWavepacket::new(1.0, 1.0).unwrap().is_physical());
    }

    #[test]
    fn normalization_is_unity_across_widths() {
        for w in [1.0, 0.1, 0.01] {
            let g = GaussianWavepacket::new(w, 1.0).unwrap();
            let value = gaussian_normalization(&g).unwrap();
            assert!(math::abs(value - 1.0) <= 1e-6, "w={w}: {value}");
        }
    }

    #[test]
    fn normalization_does_not_depend_on_mass() {
        let a = gaussian_normalization(&GaussianWavepacket::new(0.3, 1.0).unwrap()).unwrap();
        let b = gaussian_normalization(&GaussianWavepacket::new(0.3, 17.0).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn quadrature_budget_exhaustion_is_reported() {
        // an oscillatory integrand with a starved budget cannot reach the
        // error target and must say so instead of returning garbage
        let nasty = |q: f64| math::abs(math::sin(500.0 * q));
        let mut budget = 8usize;
        let result = adaptive(&nasty, 0.0, 1.0, 1e-12, &mut budget);
        assert!(matches!(result, Err(Error::QuadratureFailure { .. })));
    }

    #[test]
    fn radial_density_peaks_at_the_width() {
        // calculus oracle: d/dq [q² e^(-q²/w²)] = 0 at q = w
        let g = GaussianWavepacket::new(0.7, 1.0).unwrap();
        let at_peak = g.radial_density(0.7);
        for q in [0.6, 0.65, 0.69, 0.71, 0.75, 0.8] {
            assert!(g.radial_density(q) < at_peak, "q={q}");
        }
        // centered difference derivative vanishes there
        let h = 1e-6;
        let deriv = (g.radial_density(0.7 + h) - g.radial_density(0.7 - h)) / (2.0 * h);
        assert!(math::abs(deriv) < 1e-6);
    }
}
