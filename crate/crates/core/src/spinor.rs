//! The 2-spinor space `S`, its conjugate `S̄`, the symplectic forms `ε`/`ε̄`,
//! and the action of `SL₂(ℂ)` on both.
//!
//! Everything is written in the fixed dyad `{e₁, e₂}` with `ε(e₁, e₂) = 1`.
//! A conjugate spinor `v̄` stores the complex conjugates of the coefficients
//! of `v`, expressed in the basis `{ē₁, ē₂}`; with that convention `S̄` is
//! again `ℂ²` with ordinary scalar multiplication on the stored tuple.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{cross, dot2, Mat2, ONE, ZERO};

/// Largest `|det A − 1|` accepted when building an [`SL2Element`].
pub const DET_TOL: f64 = 1e-12;

/// An element of `S`: coefficients of `e₁` and `e₂`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Spinor2 {
    pub c1: Complex64,
    pub c2: Complex64,
}

/// An element of `S̄`: coefficients of `ē₁` and `ē₂`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct CoSpinor2 {
    pub c1: Complex64,
    pub c2: Complex64,
}

macro_rules! two_component {
    ($ty:ident, $what:literal) => {
        impl $ty {
            pub const fn new(c1: Complex64, c2: Complex64) -> Self {
                $ty { c1, c2 }
            }

            pub fn real(c1: f64, c2: f64) -> Self {
                $ty::new(Complex64::new(c1, 0.0), Complex64::new(c2, 0.0))
            }

            /// Rejects NaN or infinite coefficients.
            pub fn checked(c1: Complex64, c2: Complex64) -> Result<Self> {
                let v = $ty::new(c1, c2);
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(Error::NonFinite($what))
                }
            }

            pub fn is_finite(&self) -> bool {
                self.c1.is_finite() && self.c2.is_finite()
            }

            pub fn to_array(self) -> [Complex64; 2] {
                [self.c1, self.c2]
            }

            pub fn from_array([c1, c2]: [Complex64; 2]) -> Self {
                $ty { c1, c2 }
            }

            pub fn norm(&self) -> f64 {
                (self.c1.norm_sqr() + self.c2.norm_sqr()).sqrt()
            }
        }

        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                $ty::new(self.c1 + rhs.c1, self.c2 + rhs.c2)
            }
        }

        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                $ty::new(self.c1 - rhs.c1, self.c2 - rhs.c2)
            }
        }

        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty::new(-self.c1, -self.c2)
            }
        }

        /// Scalar multiplication in the space's own complex structure.
        impl Mul<$ty> for Complex64 {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                $ty::new(self * rhs.c1, self * rhs.c2)
            }
        }
    };
}

two_component!(Spinor2, "Spinor2");
two_component!(CoSpinor2, "CoSpinor2");

impl Spinor2 {
    pub const E1: Spinor2 = Spinor2::new(ONE, ZERO);
    pub const E2: Spinor2 = Spinor2::new(ZERO, ONE);
}

impl CoSpinor2 {
    pub const E1: CoSpinor2 = CoSpinor2::new(ONE, ZERO);
    pub const E2: CoSpinor2 = CoSpinor2::new(ZERO, ONE);
}

/// `v ↦ v̄`. Antilinear: `conjugate(λv) = λ̄·conjugate(v)`.
pub fn conjugate(s: Spinor2) -> CoSpinor2 {
    CoSpinor2::new(s.c1.conj(), s.c2.conj())
}

/// Inverse of [`conjugate`].
pub fn unconjugate(s: CoSpinor2) -> Spinor2 {
    Spinor2::new(s.c1.conj(), s.c2.conj())
}

/// The symplectic form `ε(x, y) = x₁y₂ − x₂y₁`.
pub fn eps(x: Spinor2, y: Spinor2) -> Complex64 {
    cross(x.c1, x.c2, y.c1, y.c2)
}

/// The symplectic form on `S̄`, normalized by `ε̄(ē₁, ē₂) = 1`.
pub fn eps_bar(x: CoSpinor2, y: CoSpinor2) -> Complex64 {
    cross(x.c1, x.c2, y.c1, y.c2)
}

/// `ε(b,c)a + ε(c,a)b + ε(a,b)c`, which vanishes identically on a 2-dimensional space.
pub fn cyclic_defect(a: Spinor2, b: Spinor2, c: Spinor2) -> Spinor2 {
    let w = [eps(b, c), eps(c, a), eps(a, b)];
    let v = [a.to_array(), b.to_array(), c.to_array()];
    let component = |i: usize| {
        let re: Vec<(f64, f64)> = (0..3).flat_map(|k| [(w[k].re, v[k][i].re), (-w[k].im, v[k][i].im)]).collect();
        let im: Vec<(f64, f64)> = (0..3).flat_map(|k| [(w[k].re, v[k][i].im), (w[k].im, v[k][i].re)]).collect();
        Complex64::new(dot2(&re), dot2(&im))
    };
    Spinor2::new(component(0), component(1))
}

/// A 2×2 complex matrix with unit determinant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SL2Element(Mat2);

impl SL2Element {
    pub const IDENTITY: SL2Element = SL2Element(Mat2::IDENTITY);

    /// Validates `|det − 1| ≤ DET_TOL`.
    pub fn new(m: Mat2) -> Result<Self> {
        Self::with_tolerance(m, DET_TOL)
    }

    pub fn with_tolerance(m: Mat2, tol: f64) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite("SL2Element"));
        }
        let d = m.det();
        if (d - ONE).norm() > tol {
            return Err(Error::BadDeterminant { re: d.re, im: d.im, tol });
        }
        Ok(SL2Element(m))
    }

    pub fn from_entries(a11: Complex64, a12: Complex64, a21: Complex64, a22: Complex64) -> Result<Self> {
        Self::new(Mat2::new(a11, a12, a21, a22))
    }

    /// Divides `m` by the principal square root of its determinant.
    pub fn normalized(m: Mat2) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite("SL2Element"));
        }
        let d = m.det();
        if d.norm() == 0.0 {
            return Err(Error::Singular);
        }
        let m = m.scale(d.sqrt().inv());
        // det is now 1 up to rounding in the scaling; recheck anyway
        Self::new(m)
    }

    /// Rescale a product whose determinant has drifted away from 1.
    pub fn renormalize(&self) -> Result<Self> {
        Self::normalized(self.0)
    }

    /// `diag(λ, 1/λ)`.
    pub fn diag(lambda: Complex64) -> Result<Self> {
        if lambda.norm() == 0.0 {
            return Err(Error::Singular);
        }
        Self::new(Mat2::diag(lambda, lambda.inv()))
    }

    /// `diag(e^{it}, e^{−it})`, the maximal torus of `SU₂`.
    pub fn torus(t: f64) -> Self {
        let z = Complex64::from_polar(1.0, t);
        SL2Element(Mat2::diag(z, z.conj()))
    }

    /// Unit quaternion `a0 + a1 i + a2 j + a3 k` as the `SU₂` matrix
    /// `[[a0 + i a3, a2 + i a1], [−a2 + i a1, a0 − i a3]]`. The input is
    /// normalized first.
    pub fn su2_from_quaternion(q: [f64; 4]) -> Result<Self> {
        let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(n > 0.0 && n.is_finite()) {
            return Err(Error::Singular);
        }
        let [a0, a1, a2, a3] = q.map(|x| x / n);
        Self::new(Mat2::new(
            Complex64::new(a0, a3),
            Complex64::new(a2, a1),
            Complex64::new(-a2, a1),
            Complex64::new(a0, -a3),
        ))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn det(&self) -> Complex64 {
        self.0.det()
    }

    /// Closed-form inverse (the adjugate, since `det = 1`).
    pub fn inverse(&self) -> Self {
        SL2Element(self.0.adjugate())
    }

    /// The entrywise conjugate `Ā`, which acts on `S̄`.
    pub fn conj(&self) -> Mat2 {
        self.0.conj()
    }

    /// `A†`. Also unimodular.
    pub fn adjoint(&self) -> Self {
        SL2Element(self.0.adjoint())
    }

    /// `−A`; covers the same Lorentz transformation as `A`.
    pub fn negate(&self) -> Self {
        SL2Element(-self.0)
    }

    /// `‖A A† − I‖_F`: zero exactly when `A ∈ SU₂`.
    pub fn unitarity_defect(&self) -> f64 {
        (self.0 * self.0.adjoint() - Mat2::IDENTITY).frobenius_norm()
    }

    pub fn norm(&self) -> f64 {
        self.0.frobenius_norm()
    }

    /// Product without a determinant recheck; call [`Self::renormalize`]
    /// after long chains.
    pub fn compose(&self, rhs: &SL2Element) -> Self {
        SL2Element(self.0 * rhs.0)
    }
}

impl Mul for SL2Element {
    type Output = SL2Element;
    fn mul(self, rhs: SL2Element) -> SL2Element {
        self.compose(&rhs)
    }
}

/// Matrix-vector action of `A` on `S`.
pub fn act(a: &SL2Element, s: Spinor2) -> Spinor2 {
    Spinor2::from_array(a.matrix().apply(s.to_array()))
}

/// Action of `Ā` on `S̄`: the conjugated matrix applied to the stored coefficients.
pub fn act_bar(a: &SL2Element, s: CoSpinor2) -> CoSpinor2 {
    CoSpinor2::from_array(a.conj().apply(s.to_array()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn conjugate_basis_and_scalars() {
        assert_eq!(conjugate(Spinor2::E1), CoSpinor2::E1);
        let s = Spinor2::new(c(0.0, 1.0), ZERO);
        assert_eq!(conjugate(s), CoSpinor2::new(c(0.0, -1.0), ZERO));
        let s = Spinor2::new(c(1.0, 2.0), c(3.0, -1.0));
        assert_eq!(unconjugate(conjugate(s)), s);
        // λ v̄ = λ̄ v̄ at the coefficient level
        let lam = c(0.3, -1.7);
        assert_eq!(conjugate(lam * s), lam.conj() * conjugate(s));
    }

    #[test]
    fn eps_values() {
        assert_eq!(eps(Spinor2::E1, Spinor2::E2), ONE);
        assert_eq!(eps(Spinor2::E2, Spinor2::E1), -ONE);
        let x = Spinor2::new(c(1.5, -0.5), c(2.0, 3.0));
        assert_eq!(eps(x, x), ZERO);
        assert_eq!(eps(Spinor2::real(2.0, 1.0), Spinor2::real(3.0, 4.0)), c(5.0, 0.0));
    }

    #[test]
    fn eps_bar_values() {
        assert_eq!(eps_bar(CoSpinor2::E1, CoSpinor2::E2), ONE);
        let xb = CoSpinor2::new(c(0.2, 0.1), c(-1.0, 4.0));
        assert_eq!(eps_bar(xb, xb), ZERO);
        let x = Spinor2::new(c(0.0, 1.0), ZERO);
        let y = Spinor2::E2;
        assert_eq!(eps(x, y), c(0.0, 1.0));
        assert_eq!(eps_bar(conjugate(x), conjugate(y)), c(0.0, -1.0));
    }

    #[test]
    fn cyclic_examples() {
        let d = cyclic_defect(Spinor2::E1, Spinor2::E2, Spinor2::E1 + Spinor2::E2);
        assert_eq!(d, Spinor2::default());
        let a = Spinor2::new(c(0.3, 0.4), c(-1.0, 0.25));
        let cc = Spinor2::new(c(2.0, 0.0), c(0.0, -3.0));
        assert!(cyclic_defect(a, a, cc).norm() < 1e-15);
    }

    #[test]
    fn torus_action_on_basis() {
        let t = 0.7;
        let a = SL2Element::torus(t);
        let z = Complex64::from_polar(1.0, t);
        let v = act(&a, Spinor2::E1);
        assert!((v - z * Spinor2::E1).norm() < 1e-15);
        let w = act_bar(&a, CoSpinor2::E1);
        assert!((w - z.conj() * CoSpinor2::E1).norm() < 1e-15);
        assert_eq!(act(&SL2Element::IDENTITY, v), v);
    }

    #[test]
    fn construction_rejects_bad_determinant() {
        let m = Mat2::diag(c(2.0, 0.0), c(2.0, 0.0));
        assert!(matches!(SL2Element::new(m), Err(Error::BadDeterminant { .. })));
        let a = SL2Element::normalized(m).unwrap();
        assert!((a.det() - ONE).norm() < 1e-15);
        assert!(matches!(SL2Element::normalized(Mat2::ZERO), Err(Error::Singular)));
        let nan = Mat2::diag(c(f64::NAN, 0.0), ONE);
        assert_eq!(SL2Element::new(nan), Err(Error::NonFinite("SL2Element")));
    }

    #[test]
    fn renormalize_recovers_drifted_product() {
        let m = Mat2::new(c(1.0 + 1e-9, 0.0), c(0.5, 0.0), ZERO, ONE);
        let drifted = SL2Element(m);
        assert!(SL2Element::new(m).is_err());
        let fixed = drifted.renormalize().unwrap();
        assert!((fixed.det() - ONE).norm() < 1e-15);
    }

    #[test]
    fn inverse_and_quaternion_su2() {
        let a = SL2Element::su2_from_quaternion([0.1, -0.4, 0.7, 0.2]).unwrap();
        assert!(a.unitarity_defect() < 1e-15);
        let prod = a * a.inverse();
        assert!((*prod.matrix() - Mat2::IDENTITY).max_abs() < 1e-15);
        assert!(SL2Element::su2_from_quaternion([0.0; 4]).is_err());
    }

    #[test]
    fn checked_rejects_non_finite() {
        assert!(Spinor2::checked(c(f64::INFINITY, 0.0), ONE).is_err());
        assert!(CoSpinor2::checked(ONE, c(0.0, f64::NAN)).is_err());
        assert!(Spinor2::checked(ONE, ONE).is_ok());
    }
}
