//! The Dirac bundle over the mass shell and its identification with the
//! associated bundle `SL₂(ℂ) ×_{SU₂} 𝔖₊`.
//!
//! The fiber over `p ∈ X_m` is `{Ψ : p̸Ψ = mΨ}`. A class `[A, Φ]` with
//! `Φ ∈ 𝔖₊` (the `+1` eigenspace of `γ₀`) maps to `(A·(m,0,0,0), τ(A)Φ)`;
//! the inverse picks the canonical boost `A_p` and sets `Φ = τ(A_p)⁻¹Ψ`.

use num_complex::Complex64;

use crate::clifford::{gammas, slash, tau_apply, EndS4, FourSpinor};
use crate::error::{Error, Result};
use crate::linalg::Mat4;
use crate::momentum::{act_momentum, boost_rep, undualize, MassShellPoint};
use crate::spinor::{conjugate, CoSpinor2, SL2Element, Spinor2};

/// Relative tolerance of the fiber equation, scaled by `max(1, m)·‖Ψ‖`.
pub const FIBER_TOL: f64 = 1e-9;
/// Tolerance of `γ₀Φ = Φ`, scaled by `max(1, ‖Φ‖)`.
pub const PLUS_TOL: f64 = 1e-10;

/// `‖p̸Ψ − mΨ‖`.
pub fn fiber_residual(q: &MassShellPoint, psi: &FourSpinor) -> f64 {
    let p = undualize(q.momentum());
    (slash(&p) * *psi - psi.scale(Complex64::new(q.mass(), 0.0))).norm()
}

fn fiber_bound(q: &MassShellPoint, psi: &FourSpinor) -> f64 {
    FIBER_TOL * q.mass().max(1.0) * psi.norm()
}

/// `‖γ₀Φ − Φ‖`.
pub fn plus_defect(phi_plus: &FourSpinor) -> f64 {
    (gammas().get(0) * *phi_plus - *phi_plus).norm()
}

/// A point `(p, Ψ)` of the total space of the Dirac bundle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FiberElement {
    q: MassShellPoint,
    psi: FourSpinor,
}

impl FiberElement {
    pub fn new(q: MassShellPoint, psi: FourSpinor) -> Result<Self> {
        if !psi.is_finite() {
            return Err(Error::NonFinite("FourSpinor"));
        }
        let defect = fiber_residual(&q, &psi);
        if !(defect <= fiber_bound(&q, &psi)) {
            return Err(Error::NotInFiber { defect });
        }
        Ok(FiberElement { q, psi })
    }

    pub fn point(&self) -> &MassShellPoint {
        &self.q
    }

    pub fn spinor(&self) -> &FourSpinor {
        &self.psi
    }

    pub fn residual(&self) -> f64 {
        fiber_residual(&self.q, &self.psi)
    }

    /// `(Ap, τ(A)Ψ)`, the bundle action of `SL₂(ℂ)`.
    pub fn transform(&self, a: &SL2Element) -> Result<FiberElement> {
        let q = MassShellPoint::new(act_momentum(a, self.q.momentum()), self.q.mass())?;
        FiberElement::new(q, tau_apply(a, self.psi))
    }
}

/// A representative `(A, Φ)` of a class in `SL₂(ℂ) ×_{SU₂} 𝔖₊`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AssociatedClassRep {
    a: SL2Element,
    phi_plus: FourSpinor,
}

impl AssociatedClassRep {
    pub fn new(a: SL2Element, phi_plus: FourSpinor) -> Result<Self> {
        if !phi_plus.is_finite() {
            return Err(Error::NonFinite("FourSpinor"));
        }
        let defect = plus_defect(&phi_plus);
        if !(defect <= PLUS_TOL * phi_plus.norm().max(1.0)) {
            return Err(Error::InvalidClassRep { defect });
        }
        Ok(AssociatedClassRep { a, phi_plus })
    }

    pub fn group_element(&self) -> &SL2Element {
        &self.a
    }

    pub fn spinor(&self) -> &FourSpinor {
        &self.phi_plus
    }

    /// `(AT, τ(T)⁻¹Φ)`: another representative of the same class when `T ∈ SU₂`.
    pub fn right_translate(&self, t: &SL2Element) -> Result<Self> {
        AssociatedClassRep::new(self.a * *t, tau_apply(&t.inverse(), self.phi_plus))
    }

    /// `(BA, Φ)`: left translation by `B`.
    pub fn left_translate(&self, b: &SL2Element) -> Self {
        AssociatedClassRep { a: *b * self.a, phi_plus: self.phi_plus }
    }
}

/// `P₊(p) = (p̸/m + Id)/2`, the projector onto the fiber over `p`.
pub fn fiber_projector(q: &MassShellPoint) -> Result<EndS4> {
    let q = MassShellPoint::new(*q.momentum(), q.mass())?;
    let s = slash(&undualize(q.momentum())).scale_re(1.0 / q.mass());
    Ok((s + Mat4::identity()).scale_re(0.5))
}

/// `P₋ = Id − P₊`, projecting onto the antiparticle eigenspace.
pub fn fiber_projector_minus(q: &MassShellPoint) -> Result<EndS4> {
    Ok(Mat4::identity() - fiber_projector(q)?)
}

/// `(e₁ − ē₂, e₂ + ē₁)`, a basis of `𝔖₊`.
pub fn rest_fiber_basis() -> (FourSpinor, FourSpinor) {
    (FourSpinor::real([1.0, 0.0, 0.0, -1.0]), FourSpinor::real([0.0, 1.0, 1.0, 0.0]))
}

/// `[A, Φ] ↦ (A·(m,0,0,0), τ(A)Φ)`.
pub fn beta(rep: &AssociatedClassRep, m: f64) -> Result<FiberElement> {
    // revalidate in case the representative was assembled from parts elsewhere
    let rep = AssociatedClassRep::new(rep.a, rep.phi_plus)?;
    let rest = MassShellPoint::rest(m)?;
    let q = MassShellPoint::new(act_momentum(&rep.a, rest.momentum()), m)?;
    FiberElement::new(q, tau_apply(&rep.a, rep.phi_plus))
}

/// Inverse of [`beta`] using the canonical boost as representative.
pub fn beta_inv(f: &FiberElement) -> Result<AssociatedClassRep> {
    let f = FiberElement::new(f.q, f.psi)?;
    let a = boost_rep(&f.q)?;
    AssociatedClassRep::new(a, tau_apply(&a.inverse(), f.psi))
}

/// A 2-spinor together with its conjugate partner.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConjugatePair {
    pub s: Spinor2,
    pub sbar: CoSpinor2,
}

impl ConjugatePair {
    /// Max coefficient mismatch between `sbar` and `conjugate(s)`.
    pub fn consistency_defect(&self) -> f64 {
        let c = conjugate(self.s);
        (c.c1 - self.sbar.c1).norm().max((c.c2 - self.sbar.c2).norm())
    }
}

/// Coordinates of `Φ ∈ 𝔖₊` in the basis `(e₁ − ē₂, e₂ + ē₁)`.
///
/// `Φ = α(e₁ − ē₂) + β(e₂ + ē₁) = (α, β, β, −α)`; both copies of each
/// coordinate are averaged.
fn plus_coordinates(phi: &FourSpinor) -> (Complex64, Complex64) {
    let [a, b, c, d] = phi.to_array();
    ((a - d) * 0.5, (b + c) * 0.5)
}

/// The fixed `SU₂`-isomorphism `𝔖₊ ≅ S` (`e₁ − ē₂ ↦ e₁`, `e₂ + ē₁ ↦ e₂`)
/// followed by conjugation for the `S̄` partner.
pub fn split_conjugate_pair(rep: &AssociatedClassRep) -> Result<ConjugatePair> {
    let rep = AssociatedClassRep::new(rep.a, rep.phi_plus)?;
    let (alpha, beta) = plus_coordinates(&rep.phi_plus);
    let s = Spinor2::new(alpha, beta);
    Ok(ConjugatePair { s, sbar: conjugate(s) })
}

/// Inverse of the `𝔖₊ ≅ S` identification.
pub fn embed_plus(s: Spinor2) -> FourSpinor {
    FourSpinor::from_array([s.c1, s.c2, s.c2, -s.c1])
}

/// `tr(P₊·τ(diag(e^{it}, e^{−it})))` at the rest point.
pub fn spin_character(t: f64) -> Complex64 {
    let rest = MassShellPoint::rest(1.0).expect("unit rest point");
    let p_plus = fiber_projector(&rest).expect("rest point is on shell");
    (p_plus * crate::clifford::tau(&SL2Element::torus(t))).trace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::momentum::shell_point;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rest_projector_image() {
        let q = MassShellPoint::rest(1.0).unwrap();
        let p = fiber_projector(&q).unwrap();
        let expected = (*gammas().get(0) + Mat4::identity()).scale_re(0.5);
        assert!((p - expected).max_abs() < 1e-15);
        let (b1, b2) = rest_fiber_basis();
        assert!((p * b1 - b1).norm() < 1e-15);
        assert!((p * b2 - b2).norm() < 1e-15);
        assert!((p.trace() - c(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn projector_idempotent_off_rest() {
        let q = shell_point(2.0, 0.3, -1.0, 0.5).unwrap();
        let p = fiber_projector(&q).unwrap();
        assert!((p * p - p).max_abs() < 1e-12);
        assert!((p.trace() - c(2.0, 0.0)).norm() < 1e-12);
        let minus = fiber_projector_minus(&q).unwrap();
        assert!((minus * p).max_abs() < 1e-12);
    }

    #[test]
    fn rest_basis_vectors() {
        let (b1, b2) = rest_fiber_basis();
        assert_eq!(b1.to_array().map(|z| z.re), [1.0, 0.0, 0.0, -1.0]);
        assert_eq!(b2.to_array().map(|z| z.re), [0.0, 1.0, 1.0, 0.0]);
        assert!(plus_defect(&b1) == 0.0 && plus_defect(&b2) == 0.0);
        // Gram determinant under the coefficient inner product
        let dot = |x: FourSpinor, y: FourSpinor| -> Complex64 {
            x.to_array().iter().zip(y.to_array()).map(|(a, b)| a.conj() * b).sum()
        };
        let gram = dot(b1, b1) * dot(b2, b2) - dot(b1, b2) * dot(b2, b1);
        assert_eq!(gram, c(4.0, 0.0));
    }

    #[test]
    fn beta_identity_class() {
        let (b1, _) = rest_fiber_basis();
        let rep = AssociatedClassRep::new(SL2Element::IDENTITY, b1).unwrap();
        let f = beta(&rep, 1.3).unwrap();
        let p = f.point().momentum();
        assert!((p.0[0] - 1.3).abs() <= 1e-15 && p.0[1..].iter().all(|&x| x == 0.0), "{p:?}");
        assert_eq!(*f.spinor(), b1);
        let back = beta_inv(&f).unwrap();
        assert!((*back.group_element().matrix() - *SL2Element::IDENTITY.matrix()).max_abs() < 1e-15);
        assert_eq!(*back.spinor(), b1);
    }

    #[test]
    fn invalid_class_rep_rejected() {
        let bad = FourSpinor::real([1.0, 0.0, 0.0, 1.0]);
        assert!(matches!(
            AssociatedClassRep::new(SL2Element::IDENTITY, bad),
            Err(Error::InvalidClassRep { .. })
        ));
    }

    #[test]
    fn not_in_fiber_rejected() {
        let q = shell_point(1.0, 0.0, 0.0, 0.5).unwrap();
        let (b1, _) = rest_fiber_basis();
        assert!(matches!(FiberElement::new(q, b1), Err(Error::NotInFiber { .. })));
    }

    #[test]
    fn split_basis_images() {
        let (b1, b2) = rest_fiber_basis();
        let r1 = AssociatedClassRep::new(SL2Element::IDENTITY, b1).unwrap();
        let pair = split_conjugate_pair(&r1).unwrap();
        assert_eq!(pair.s, Spinor2::E1);
        assert_eq!(pair.sbar, CoSpinor2::E1);
        let r2 = AssociatedClassRep::new(SL2Element::IDENTITY, b2).unwrap();
        assert_eq!(split_conjugate_pair(&r2).unwrap().s, Spinor2::E2);
        let s = Spinor2::new(c(0.3, -0.2), c(1.0, 0.5));
        let r = AssociatedClassRep::new(SL2Element::IDENTITY, embed_plus(s)).unwrap();
        assert_eq!(split_conjugate_pair(&r).unwrap().s, s);
    }

    #[test]
    fn spin_character_values() {
        assert!((spin_character(0.0) - c(2.0, 0.0)).norm() < 1e-15);
        assert!(spin_character(std::f64::consts::FRAC_PI_2).norm() < 1e-15);
        assert!((spin_character(std::f64::consts::FRAC_PI_3) - c(1.0, 0.0)).norm() < 1e-15);
    }
}
