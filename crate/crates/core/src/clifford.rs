//! The 4-spinor space `𝔖 = S ⊕ S̄` as a Clifford module.
//!
//! Basis order everywhere is `(e₁, e₂, ē₁, ē₂)`. The Clifford map is
//!
//! ```text
//! φ(p ⊗ q̄)(a ⊕ b̄) = √2 [ ε̄(b̄, q̄) p ⊕ ε(p, a) q̄ ]
//! ```
//!
//! extended linearly, and the γ-matrices are `γ_μ = φ(u_μ)`. On world
//! vectors the anticommutator is `{φ(X), φ(Y)} = 2h(X, Y)·Id`, so that
//! `γ₀² = Id` and `γ_k² = −Id`.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::bitensor::{from_minkowski, h_form, pi_act, world_basis_unnormalized, BiTensor, MinkowskiVec};
use crate::error::{Error, Result};
use crate::linalg::{Mat2, Mat4};
use crate::spinor::{act, act_bar, eps, eps_bar, CoSpinor2, SL2Element, Spinor2};

/// Endomorphisms of `𝔖` as 4×4 matrices in the basis `(e₁, e₂, ē₁, ē₂)`.
pub type EndS4 = Mat4;

/// An element `s ⊕ s̄` of `𝔖 = S ⊕ S̄`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct FourSpinor {
    pub s: Spinor2,
    pub sbar: CoSpinor2,
}

impl FourSpinor {
    pub const fn new(s: Spinor2, sbar: CoSpinor2) -> Self {
        FourSpinor { s, sbar }
    }

    pub fn from_array([a, b, c, d]: [Complex64; 4]) -> Self {
        FourSpinor::new(Spinor2::new(a, b), CoSpinor2::new(c, d))
    }

    pub fn real(c: [f64; 4]) -> Self {
        FourSpinor::from_array(c.map(|x| Complex64::new(x, 0.0)))
    }

    pub fn to_array(self) -> [Complex64; 4] {
        [self.s.c1, self.s.c2, self.sbar.c1, self.sbar.c2]
    }

    pub fn norm(&self) -> f64 {
        self.to_array().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.s.is_finite() && self.sbar.is_finite()
    }

    pub fn scale(self, z: Complex64) -> Self {
        FourSpinor::from_array(self.to_array().map(|c| c * z))
    }
}

impl Add for FourSpinor {
    type Output = FourSpinor;
    fn add(self, rhs: FourSpinor) -> FourSpinor {
        FourSpinor::new(self.s + rhs.s, self.sbar + rhs.sbar)
    }
}

impl Sub for FourSpinor {
    type Output = FourSpinor;
    fn sub(self, rhs: FourSpinor) -> FourSpinor {
        FourSpinor::new(self.s - rhs.s, self.sbar - rhs.sbar)
    }
}

impl Neg for FourSpinor {
    type Output = FourSpinor;
    fn neg(self) -> FourSpinor {
        FourSpinor::new(-self.s, -self.sbar)
    }
}

impl Mul<FourSpinor> for Mat4 {
    type Output = FourSpinor;
    fn mul(self, rhs: FourSpinor) -> FourSpinor {
        FourSpinor::from_array(self.apply(rhs.to_array()))
    }
}

impl Mul<FourSpinor> for &Mat4 {
    type Output = FourSpinor;
    fn mul(self, rhs: FourSpinor) -> FourSpinor {
        FourSpinor::from_array(self.apply(rhs.to_array()))
    }
}

/// Applies `φ(p ⊗ q̄)` to `a ⊕ b̄` straight from the defining formula,
/// without building a matrix.
pub fn phi_elementary_apply(p: Spinor2, q: CoSpinor2, psi: FourSpinor) -> FourSpinor {
    let r2 = Complex64::new(std::f64::consts::SQRT_2, 0.0);
    let s = (r2 * eps_bar(psi.sbar, q)) * p;
    let sbar = (r2 * eps(p, psi.s)) * q;
    FourSpinor::new(s, sbar)
}

/// The Clifford map `φ: S ⊗ S̄ → End(𝔖)`, complex-linear in `T`.
///
/// Summing the defining formula over `T = Σ tᵢⱼ eᵢ⊗ēⱼ` gives
/// `S`-row `i`: `√2 (tᵢ₂ b₁ − tᵢ₁ b₂)` and `S̄`-row `j`: `√2 (t₁ⱼ a₂ − t₂ⱼ a₁)`.
pub fn phi(t: &BiTensor) -> EndS4 {
    phi_unscaled(&t.0).scale_re(std::f64::consts::SQRT_2)
}

/// `φ / √2`, which has integer entries on integer matrices.
fn phi_unscaled(m: &Mat2) -> EndS4 {
    let m = &m.0;
    let mut out = Mat4::ZERO;
    for i in 0..2 {
        out[(i, 2)] = m[i][1];
        out[(i, 3)] = -m[i][0];
    }
    for j in 0..2 {
        out[(2 + j, 0)] = -m[1][j];
        out[(2 + j, 1)] = m[0][j];
    }
    out
}

/// The four γ-matrices together with their construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaTable(pub [EndS4; 4]);

impl GammaTable {
    /// `γ_μ = φ(u_μ)`, evaluated as `φ/√2` on `√2·u_μ` so that every entry
    /// is exactly one of `0, ±1, ±i`.
    pub fn compute() -> Self {
        GammaTable(world_basis_unnormalized().map(|w| phi_unscaled(&w)))
    }

    pub fn get(&self, mu: usize) -> &EndS4 {
        &self.0[mu]
    }

    /// `Σ p_μ γ_μ` using this table.
    pub fn slash(&self, p: &MinkowskiVec) -> EndS4 {
        self.0
            .iter()
            .zip(p.0)
            .fold(Mat4::ZERO, |acc, (g, x)| acc + g.scale_re(x))
    }

    /// Residuals `‖γ_μγ_ν + γ_νγ_μ − 2η_μν Id‖_max` for all 16 ordered pairs.
    pub fn relation_residuals(&self) -> [[f64; 4]; 4] {
        let id = Mat4::identity();
        let mut out = [[0.0; 4]; 4];
        for mu in 0..4 {
            for nu in 0..4 {
                let target = if mu == nu {
                    id.scale_re(2.0 * crate::bitensor::ETA[mu])
                } else {
                    Mat4::ZERO
                };
                out[mu][nu] = (self.0[mu].anticommutator(&self.0[nu]) - target).max_abs();
            }
        }
        out
    }
}

static GAMMAS: OnceLock<GammaTable> = OnceLock::new();

/// The cached table of γ-matrices.
pub fn gammas() -> &'static GammaTable {
    GAMMAS.get_or_init(GammaTable::compute)
}

/// `γ_μ`, for `mu` in `0..=3`.
pub fn gamma(mu: usize) -> Result<EndS4> {
    gammas().0.get(mu).copied().ok_or(Error::BadIndex(mu))
}

/// Feynman slash `p̸ = p₀γ₀ + p₁γ₁ + p₂γ₂ + p₃γ₃`.
pub fn slash(p: &MinkowskiVec) -> EndS4 {
    gammas().slash(p)
}

/// `τ(A) = A ⊕ Ā`.
pub fn tau(a: &SL2Element) -> EndS4 {
    Mat4::block_diag(a.matrix(), &a.conj())
}

/// `τ(A)⁻¹ = τ(A⁻¹)` through the closed-form 2×2 inverse.
pub fn tau_inverse(a: &SL2Element) -> EndS4 {
    tau(&a.inverse())
}

/// `τ(A)(x ⊕ ȳ) = Ax ⊕ Āȳ` without forming the 4×4 matrix.
pub fn tau_apply(a: &SL2Element, psi: FourSpinor) -> FourSpinor {
    FourSpinor::new(act(a, psi.s), act_bar(a, psi.sbar))
}

/// `φ(X)φ(Y) + φ(Y)φ(X) − 2h(X,Y)·Id`.
pub fn anticommutator_defect(x: &BiTensor, y: &BiTensor) -> EndS4 {
    let (px, py) = (phi(x), phi(y));
    px.anticommutator(&py) - Mat4::identity().scale(h_form(x, y) * 2.0)
}

/// `φ(π(A)X) − τ(A)φ(X)τ(A)⁻¹`.
pub fn equivariance_defect(a: &SL2Element, x: &BiTensor) -> EndS4 {
    phi(&pi_act(a, x)) - tau(a) * phi(x) * tau_inverse(a)
}

/// `slash` computed as `φ` of the world bitensor, the second route to `p̸`.
pub fn slash_via_phi(p: &MinkowskiVec) -> EndS4 {
    phi(&from_minkowski(p))
}

/// The basis order of the flattened 4-spinor.
pub const BASIS_ORDER: [&str; 4] = ["e1", "e2", "ebar1", "ebar2"];
