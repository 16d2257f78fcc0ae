//! Momentum space, the forward mass shell, and the canonical boost section.
//!
//! Momenta are stored in the dual basis `vⱼ = ûⱼ`, so dualizing a world
//! vector is the identity on coordinate tuples. The sign pattern of the
//! characters only matters for plane-wave phases, handled in [`crate::field`].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bitensor::{from_minkowski, pi_act, q_form, to_minkowski_unchecked, MinkowskiVec};
use crate::error::{Error, Result};
use crate::linalg::Mat2;
use crate::spinor::SL2Element;

/// Relative tolerance of the on-shell check `|Q(p) − m²| ≤ tol·max(1, m²)`.
pub const SHELL_TOL: f64 = 1e-9;
/// Smallest accepted `tr H + 2` in [`boost_rep`].
pub const DEGENERATE_TOL: f64 = 1e-12;

/// Momentum coordinates `(p₀, p₁, p₂, p₃)` in the basis `{v₀, …, v₃}`.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct Momentum(pub [f64; 4]);

impl Momentum {
    pub const fn new(p0: f64, p1: f64, p2: f64, p3: f64) -> Self {
        Momentum([p0, p1, p2, p3])
    }

    pub fn energy(&self) -> f64 {
        self.0[0]
    }

    /// `Q(p) = p₀² − p₁² − p₂² − p₃²`.
    pub fn q(&self) -> f64 {
        q_form(&undualize(self))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }
}

/// `x ↦ x̂`; the identity on coordinates in the chosen bases.
pub fn dualize(x: &MinkowskiVec) -> Momentum {
    Momentum(x.0)
}

pub fn undualize(p: &Momentum) -> MinkowskiVec {
    MinkowskiVec(p.0)
}

/// A point of the forward mass shell `X_m`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MassShellPoint {
    p: Momentum,
    m: f64,
}

impl MassShellPoint {
    /// Validates `m > 0`, `p₀ > 0` and `Q(p) = m²` to [`SHELL_TOL`].
    pub fn new(p: Momentum, m: f64) -> Result<Self> {
        if !(m > 0.0 && m.is_finite()) {
            return Err(Error::BadMass(m));
        }
        if !p.is_finite() {
            return Err(Error::NonFinite("Momentum"));
        }
        let defect = shell_defect(&p, m);
        if !(defect <= SHELL_TOL * m.powi(2).max(1.0)) || p.energy() <= 0.0 {
            return Err(Error::NotOnShell { defect });
        }
        Ok(MassShellPoint { p, m })
    }

    /// The rest point `(m, 0, 0, 0)`.
    pub fn rest(m: f64) -> Result<Self> {
        shell_point(m, 0.0, 0.0, 0.0)
    }

    pub fn momentum(&self) -> &Momentum {
        &self.p
    }

    pub fn mass(&self) -> f64 {
        self.m
    }
}

/// `|Q(p) − m²|`.
pub fn shell_defect(p: &Momentum, m: f64) -> f64 {
    (p.q() - m * m).abs()
}

/// The shell point over the 3-momentum `(p1, p2, p3)`, with
/// `p₀ = √(m² + p₁² + p₂² + p₃²)`.
pub fn shell_point(m: f64, p1: f64, p2: f64, p3: f64) -> Result<MassShellPoint> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::BadMass(m));
    }
    let p0 = (m * m + p1 * p1 + p2 * p2 + p3 * p3).sqrt();
    MassShellPoint::new(Momentum::new(p0, p1, p2, p3), m)
}

/// `A·p = π(A)p`.
pub fn act_momentum(a: &SL2Element, p: &Momentum) -> Momentum {
    let moved = pi_act(a, &from_minkowski(&undualize(p)));
    dualize(&to_minkowski_unchecked(&moved))
}

/// Moves a shell point by `A`; the result is rechecked against the shell.
pub fn act_shell(a: &SL2Element, q: &MassShellPoint) -> Result<MassShellPoint> {
    MassShellPoint::new(act_momentum(a, &q.p), q.m)
}

/// The positive-definite Hermitian `A_q ∈ SL₂(ℂ)` carrying `(m, 0, 0, 0)` to `q`.
///
/// With `H = √2·M(q)/m` (Hermitian, positive, det 1), `A_q = √H = (H + I)/√(tr H + 2)`.
pub fn boost_rep(q: &MassShellPoint) -> Result<SL2Element> {
    let checked = MassShellPoint::new(q.p, q.m)?;
    let world = from_minkowski(&undualize(&checked.p));
    let h = world.0.scale(Complex64::new(std::f64::consts::SQRT_2 / checked.m, 0.0));
    let denom = h.trace().re + 2.0;
    if !(denom > DEGENERATE_TOL) {
        return Err(Error::Degenerate(denom));
    }
    let root = (h + Mat2::IDENTITY).scale(Complex64::new(1.0 / denom.sqrt(), 0.0));
    // the closed form is exact for det H = 1; renormalize away the shell tolerance
    SL2Element::normalized(root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitensor::world_basis;
    use crate::linalg::{ONE, ZERO};

    #[test]
    fn dualize_round_trip() {
        let x = MinkowskiVec::new(1.0, 0.0, 0.0, 0.0);
        assert_eq!(dualize(&x), Momentum::new(1.0, 0.0, 0.0, 0.0));
        let y = MinkowskiVec::new(0.3, -2.0, 1.1, 4.0);
        assert_eq!(undualize(&dualize(&y)), y);
        assert_eq!(q_form(&y), dualize(&y).q());
    }

    #[test]
    fn shell_point_examples() {
        let q = shell_point(1.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(*q.momentum(), Momentum::new(1.0, 0.0, 0.0, 0.0));
        let q = shell_point(1.0, 3.0, 0.0, 4.0).unwrap();
        assert_eq!(q.momentum().energy(), 26f64.sqrt());
        let q = shell_point(2.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(q.momentum().q(), 4.0);
        assert_eq!(shell_point(0.0, 1.0, 0.0, 0.0), Err(Error::BadMass(0.0)));
        assert_eq!(shell_point(-1.0, 0.0, 0.0, 0.0), Err(Error::BadMass(-1.0)));
    }

    #[test]
    fn off_shell_and_backward_are_rejected() {
        let err = MassShellPoint::new(Momentum::new(2.0, 0.0, 0.0, 0.0), 1.0).unwrap_err();
        assert!(matches!(err, Error::NotOnShell { defect } if defect == 3.0));
        assert!(MassShellPoint::new(Momentum::new(-1.0, 0.0, 0.0, 0.0), 1.0).is_err());
    }

    #[test]
    fn rest_boost_is_identity() {
        let a = boost_rep(&MassShellPoint::rest(3.0).unwrap()).unwrap();
        assert!((*a.matrix() - Mat2::IDENTITY).max_abs() < 1e-15);
    }

    #[test]
    fn boost_along_z() {
        let m = 1.7;
        let q = MassShellPoint::new(Momentum::new(1.25 * m, 0.0, 0.0, 0.75 * m), m).unwrap();
        let a = boost_rep(&q).unwrap();
        let s = 2f64.sqrt();
        let expected = Mat2::diag(Complex64::new(s, 0.0), Complex64::new(1.0 / s, 0.0));
        assert!((*a.matrix() - expected).max_abs() < 1e-14, "{a:?}");
        // oracle: push the rest matrix through π(A) and compare with M(q)
        let rest = world_basis()[0].scale(Complex64::new(m, 0.0));
        let moved = pi_act(&a, &rest);
        let target = from_minkowski(&undualize(q.momentum()));
        assert!((moved.0 - target.0).max_abs() < 1e-14);
    }

    #[test]
    fn act_momentum_identity_and_shell() {
        let q = shell_point(1.0, 0.2, -0.4, 0.9).unwrap();
        let same = act_momentum(&SL2Element::IDENTITY, q.momentum());
        for (a, b) in same.0.iter().zip(q.momentum().0) {
            assert!((a - b).abs() <= 1e-15);
        }
        let a = SL2Element::from_entries(ONE, Complex64::new(0.5, 0.5), ZERO, ONE).unwrap();
        let moved = act_shell(&a, &q).unwrap();
        assert!(moved.momentum().energy() > 0.0);
    }
}
