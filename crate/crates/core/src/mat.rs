//! Dense complex 2x2 and 4x4 matrices with the tensor-product structure of a
//! two-qubit system.
//!
//! The 4x4 basis order is fixed globally as |↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩: row index
//! `2*i + j` carries the first-particle bit `i` and second-particle bit `j`
//! (0 = ↑, 1 = ↓). All operations are pure functions on value types.

use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::math;
use num_complex::Complex64;

/// Shorthand constructor for a complex scalar.
#[inline]
pub const fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Complex modulus computed through libm's `hypot`.
#[inline]
pub(crate) fn cabs(z: Complex64) -> f64 {
    math::hypot(z.re, z.im)
}

/// Which tensor factor an operation acts on (A = first spin, B = second).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// A 2x2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    entries: [[Complex64; 2]; 2],
}

/// A 4x4 complex matrix in the fixed two-qubit basis, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4 {
    entries: [[Complex64; 4]; 4],
}

impl Mat2 {
    pub const fn new(entries: [[Complex64; 2]; 2]) -> Self {
        Self { entries }
    }

    pub const fn zero() -> Self {
        Self::new([[c64(0.0, 0.0); 2]; 2])
    }

    pub const fn identity() -> Self {
        let mut m = Self::zero();
        m.entries[0][0] = c64(1.0, 0.0);
        m.entries[1][1] = c64(1.0, 0.0);
        m
    }

    /// Matrix unit E_ik = |i⟩⟨k| (0-based indices).
    pub const fn unit(i: usize, k: usize) -> Self {
        let mut m = Self::zero();
        m.entries[i][k] = c64(1.0, 0.0);
        m
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zero();
        for r in 0..2 {
            for c in 0..2 {
                m.entries[r][c] = f(r, c);
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r])
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_fn(|r, c| self.entries[r][c] * s)
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest entrywise modulus of the difference to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0_f64;
        for r in 0..2 {
            for c in 0..2 {
                let d = cabs(self.entries[r][c] - other.entries[r][c]);
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }
}

impl Mat4 {
    pub const fn new(entries: [[Complex64; 4]; 4]) -> Self {
        Self { entries }
    }

    pub const fn zero() -> Self {
        Self::new([[c64(0.0, 0.0); 4]; 4])
    }

    pub const fn identity() -> Self {
        let mut m = Self::zero();
        let mut i = 0;
        while i < 4 {
            m.entries[i][i] = c64(1.0, 0.0);
            i += 1;
        }
        m
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                m.entries[r][c] = f(r, c);
            }
        }
        m
    }

    /// Real diagonal matrix.
    pub fn from_diagonal(d: [f64; 4]) -> Self {
        Self::from_fn(|r, c| {
            if r == c {
                c64(d[r], 0.0)
            } else {
                c64(0.0, 0.0)
            }
        })
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1] + self.entries[2][2] + self.entries[3][3]
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r])
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_fn(|r, c| self.entries[r][c] * s)
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest entrywise modulus of `m - m†`.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for r in 0..4 {
            for c in 0..4 {
                let d = cabs(self.entries[r][c] - self.entries[c][r].conj());
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// The Hermitian part `(m + m†) / 2`.
    pub fn hermitized(&self) -> Self {
        Self::from_fn(|r, c| (self.entries[r][c] + self.entries[c][r].conj()) * 0.5)
    }

    /// Largest entrywise modulus of the difference to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0_f64;
        for r in 0..4 {
            for c in 0..4 {
                let d = cabs(self.entries[r][c] - other.entries[r][c]);
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }

    /// Frobenius norm of the off-diagonal part, the Jacobi stopping quantity.
    pub(crate) fn off_diagonal_norm(&self) -> f64 {
        let mut sum = 0.0;
        for r in 0..4 {
            for c in 0..4 {
                if r != c {
                    sum += self.entries[r][c].norm_sqr();
                }
            }
        }
        math::sqrt(sum)
    }

    /// Matrix-vector product, used for residual checks.
    #[cfg(test)]
    pub(crate) fn mul_vec(&self, v: &[Complex64; 4]) -> [Complex64; 4] {
        let mut out = [c64(0.0, 0.0); 4];
        for (row, slot) in self.entries.iter().zip(out.iter_mut()) {
            *slot = row.iter().zip(v).map(|(a, b)| a * b).sum();
        }
        out
    }
}

impl Index<(usize, usize)> for Mat2 {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.entries[r][c]
    }
}

impl IndexMut<(usize, usize)> for Mat2 {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[r][c]
    }
}

impl Index<(usize, usize)> for Mat4 {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.entries[r][c]
    }
}

impl IndexMut<(usize, usize)> for Mat4 {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[r][c]
    }
}

macro_rules! impl_matrix_ops {
    ($ty:ident, $n:expr) => {
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                $ty::from_fn(|r, c| self[(r, c)] + rhs[(r, c)])
            }
        }

        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                $ty::from_fn(|r, c| self[(r, c)] - rhs[(r, c)])
            }
        }

        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty::from_fn(|r, c| -self[(r, c)])
            }
        }

        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                $ty::from_fn(|r, c| {
                    let mut acc = c64(0.0, 0.0);
                    for k in 0..$n {
                        acc += self[(r, k)] * rhs[(k, c)];
                    }
                    acc
                })
            }
        }

        impl Mul<f64> for $ty {
            type Output = $ty;
            fn mul(self, rhs: f64) -> $ty {
                self.scale(c64(rhs, 0.0))
            }
        }

        impl Mul<Complex64> for $ty {
            type Output = $ty;
            fn mul(self, rhs: Complex64) -> $ty {
                self.scale(rhs)
            }
        }
    };
}

impl_matrix_ops!(Mat2, 2);
impl_matrix_ops!(Mat4, 4);

/// Kronecker product: `result[(2i+k, 2j+l)] = a[(i,j)] * b[(k,l)]`.
pub fn tensor_product(a: &Mat2, b: &Mat2) -> Mat4 {
    Mat4::from_fn(|r, c| a[(r / 2, c / 2)] * b[(r % 2, c % 2)])
}

/// Partial transpose on the chosen tensor factor.
///
/// For subsystem B this transposes each 2x2 block in place; for subsystem A
/// it transposes the block structure. Either choice is an involution that
/// preserves trace and Hermiticity.
pub fn partial_transpose(rho: &Mat4, subsystem: Subsystem) -> Mat4 {
    Mat4::from_fn(|r, c| {
        let (i, j) = (r / 2, r % 2);
        let (k, l) = (c / 2, c % 2);
        match subsystem {
            Subsystem::A => rho[(2 * k + j, 2 * i + l)],
            Subsystem::B => rho[(2 * i + l, 2 * k + j)],
        }
    })
}

/// Partial trace over the subsystem named by `traced_out`, keeping the other.
///
/// `partial_trace(rho, Subsystem::B)` of a product state `a ⊗ b` with
/// `trace(b) = 1` returns `a`.
pub fn partial_trace(rho: &Mat4, traced_out: Subsystem) -> Mat2 {
    Mat2::from_fn(|r, c| match traced_out {
        Subsystem::B => rho[(2 * r, 2 * c)] + rho[(2 * r + 1, 2 * c + 1)],
        Subsystem::A => rho[(r, c)] + rho[(r + 2, c + 2)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(a: f64, b: f64, tol: f64) -> bool {
        math::abs(a - b) <= tol
    }

    fn pauli_x() -> Mat2 {
        Mat2::new([
            [c64(0.0, 0.0), c64(1.0, 0.0)],
            [c64(1.0, 0.0), c64(0.0, 0.0)],
        ])
    }

    #[test]
    fn tensor_identity_is_identity() {
        let out = tensor_product(&Mat2::identity(), &Mat2::identity());
        assert_eq!(out.max_abs_diff(&Mat4::identity()), 0.0);
    }

    #[test]
    fn tensor_places_matrix_units() {
        // E11 ⊗ E22 has its single 1 at row 2*0+1, col 2*0+1 (spec's (2,2)).
        let out = tensor_product(&Mat2::unit(0, 0), &Mat2::unit(1, 1));
        for r in 0..4 {
            for c in 0..4 {
                let want = if (r, c) == (1, 1) { 1.0 } else { 0.0 };
                assert_eq!(out[(r, c)], c64(want, 0.0));
            }
        }
    }

    #[test]
    fn tensor_sigma_x_sigma_x_is_antidiagonal() {
        // Hand-expanded 16-entry oracle: (σx ⊗ σx)[(2i+k, 2j+l)] =
        // σx[i][j] σx[k][l], nonzero iff i≠j and k≠l, i.e. the anti-diagonal.
        let out = tensor_product(&pauli_x(), &pauli_x());
        for r in 0..4 {
            for c in 0..4 {
                let want = if r + c == 3 { 1.0 } else { 0.0 };
                assert_eq!(out[(r, c)], c64(want, 0.0), "entry ({r},{c})");
            }
        }
    }

    #[test]
    fn partial_transpose_of_product_transposes_one_factor() {
        let a = Mat2::new([
            [c64(0.3, 0.0), c64(0.1, 0.2)],
            [c64(0.1, -0.2), c64(0.7, 0.0)],
        ]);
        let b = Mat2::new([
            [c64(0.6, 0.0), c64(-0.2, 0.4)],
            [c64(-0.2, -0.4), c64(0.4, 0.0)],
        ]);
        let pt_b = partial_transpose(&tensor_product(&a, &b), Subsystem::B);
        assert!(pt_b.max_abs_diff(&tensor_product(&a, &b.transpose())) < 1e-15);
        let pt_a = partial_transpose(&tensor_product(&a, &b), Subsystem::A);
        assert!(pt_a.max_abs_diff(&tensor_product(&a.transpose(), &b)) < 1e-15);
    }

    #[test]
    fn partial_transpose_is_involution() {
        let m = Mat4::from_fn(|r, c| c64((r * 4 + c) as f64, (r as f64) - (c as f64)));
        for sub in [Subsystem::A, Subsystem::B] {
            let twice = partial_transpose(&partial_transpose(&m, sub), sub);
            assert_eq!(twice.max_abs_diff(&m), 0.0);
        }
    }

    #[test]
    fn partial_transpose_preserves_trace_and_hermiticity() {
        let h = Mat4::from_fn(|r, c| {
            if r == c {
                c64(r as f64, 0.0)
            } else if r < c {
                c64(0.1 * (r + c) as f64, 0.05 * (c - r) as f64)
            } else {
                c64(0.1 * (r + c) as f64, -0.05 * (r - c) as f64)
            }
        });
        assert!(h.is_hermitian(0.0));
        let pt = partial_transpose(&h, Subsystem::B);
        assert!(pt.is_hermitian(1e-15));
        assert!(approx((pt.trace() - h.trace()).re, 0.0, 1e-15));
        assert!(approx((pt.trace() - h.trace()).im, 0.0, 1e-15));
    }

    #[test]
    fn partial_trace_of_product_recovers_factor() {
        let a = Mat2::new([
            [c64(0.25, 0.0), c64(0.0, 0.3)],
            [c64(0.0, -0.3), c64(0.75, 0.0)],
        ]);
        // trace-1 second factor
        let b = Mat2::new([
            [c64(0.5, 0.0), c64(0.2, 0.0)],
            [c64(0.2, 0.0), c64(0.5, 0.0)],
        ]);
        let rho = tensor_product(&a, &b);
        assert!(partial_trace(&rho, Subsystem::B).max_abs_diff(&a) < 1e-15);
        // and tracing out A returns b scaled by trace(a) = 1
        assert!(partial_trace(&rho, Subsystem::A).max_abs_diff(&b) < 1e-15);
    }

    #[test]
    fn partial_trace_of_maximally_mixed() {
        let rho = Mat4::identity() * 0.25;
        let want = Mat2::identity() * 0.5;
        assert!(partial_trace(&rho, Subsystem::A).max_abs_diff(&want) < 1e-16);
        assert!(partial_trace(&rho, Subsystem::B).max_abs_diff(&want) < 1e-16);
    }

    #[test]
    fn partial_trace_preserves_trace() {
        let m = Mat4::from_fn(|r, c| c64(0.1 * (r as f64 + 1.0), 0.02 * (c as f64 - 1.5)));
        for sub in [Subsystem::A, Subsystem::B] {
            let d = partial_trace(&m, sub).trace() - m.trace();
            assert!(cabs(d) < 1e-15);
        }
    }
}
