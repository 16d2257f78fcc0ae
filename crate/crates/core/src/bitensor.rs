//! `S ⊗ S̄`, the involution `J`, world vectors, and the Lorentz form.
//!
//! A bitensor is stored as its 2×2 coefficient matrix: entry `(i, j)`
//! multiplies `eᵢ ⊗ ēⱼ`. With the conjugate-coefficient convention for `S̄`,
//! the elementary tensor `x ⊗ ȳ` has matrix `x·y†`, so
//!
//! * `J` is the conjugate transpose,
//! * world vectors (`JX = X`) are the Hermitian matrices,
//! * `π(A) = A ⊗ Ā` acts as `X ↦ A X A†`,
//! * `h(X, Y) = det(X + Y) − det X − det Y`.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{det_real4, mul_real4, Mat2, I, ONE, ZERO};
use crate::spinor::{CoSpinor2, SL2Element, Spinor2};

/// Largest reality defect accepted by [`to_minkowski`].
pub const REALITY_TOL: f64 = 1e-10;
/// Largest `‖ΛᵀηΛ − η‖` accepted by [`lorentz_of`].
pub const DRIFT_TOL: f64 = 1e-8;

pub const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// An element of `S ⊗ S̄`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BiTensor(pub Mat2);

impl BiTensor {
    pub const ZERO: BiTensor = BiTensor(Mat2::ZERO);

    /// The basis tensor `eᵢ ⊗ ēⱼ` (zero-based indices).
    pub fn basis(i: usize, j: usize) -> Self {
        BiTensor(Mat2::from_fn(|r, c| if (r, c) == (i, j) { ONE } else { ZERO }))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn scale(&self, s: Complex64) -> Self {
        BiTensor(self.0.scale(s))
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }
}

impl Add for BiTensor {
    type Output = BiTensor;
    fn add(self, rhs: BiTensor) -> BiTensor {
        BiTensor(self.0 + rhs.0)
    }
}

impl Sub for BiTensor {
    type Output = BiTensor;
    fn sub(self, rhs: BiTensor) -> BiTensor {
        BiTensor(self.0 - rhs.0)
    }
}

impl Neg for BiTensor {
    type Output = BiTensor;
    fn neg(self) -> BiTensor {
        BiTensor(-self.0)
    }
}

impl Mul<BiTensor> for Complex64 {
    type Output = BiTensor;
    fn mul(self, rhs: BiTensor) -> BiTensor {
        rhs.scale(self)
    }
}

/// Real coordinates `(x₀, x₁, x₂, x₃)` in the world basis `{u₀, …, u₃}`.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct MinkowskiVec(pub [f64; 4]);

impl MinkowskiVec {
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        MinkowskiVec([x0, x1, x2, x3])
    }

    pub fn coords(&self) -> [f64; 4] {
        self.0
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }
}

/// The tensor `x ⊗ ȳ`.
pub fn elementary(x: Spinor2, y: CoSpinor2) -> BiTensor {
    let (x, y) = (x.to_array(), y.to_array());
    BiTensor(Mat2::from_fn(|i, j| x[i] * y[j]))
}

/// `J(x ⊗ ȳ) = y ⊗ x̄`, i.e. the conjugate transpose. `J² = I`.
pub fn involution_j(t: &BiTensor) -> BiTensor {
    BiTensor(t.0.adjoint())
}

/// Frobenius norm of `T − J(T)`.
pub fn reality_defect(t: &BiTensor) -> f64 {
    (t.0 - t.0.adjoint()).frobenius_norm()
}

/// `(T + J(T)) / 2`, the projection onto world vectors.
pub fn project_real(t: &BiTensor) -> BiTensor {
    BiTensor((t.0 + t.0.adjoint()).scale(Complex64::new(0.5, 0.0)))
}

/// `√2·u₀ … √2·u₃` as coefficient matrices: `I, σ₁, −σ₂, σ₃`.
///
/// These have entries in `{0, ±1, ±i}`, so anything linear built on them
/// (the γ-matrices in particular) can be evaluated without rounding.
pub fn world_basis_unnormalized() -> [Mat2; 4] {
    [
        Mat2::new(ONE, ZERO, ZERO, ONE),
        Mat2::new(ZERO, ONE, ONE, ZERO),
        Mat2::new(ZERO, I, -I, ZERO),
        Mat2::new(ONE, ZERO, ZERO, -ONE),
    ]
}

/// The world basis `u₀ … u₃`, each Hermitian with `Q(u₀) = 1`, `Q(uⱼ) = −1`.
pub fn world_basis() -> [BiTensor; 4] {
    let r = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    world_basis_unnormalized().map(|w| BiTensor(w.scale(r)))
}

/// `Σ xⱼ uⱼ = (1/√2)·[[x₀+x₃, x₁+ix₂], [x₁−ix₂, x₀−x₃]]`.
pub fn from_minkowski(x: &MinkowskiVec) -> BiTensor {
    let [x0, x1, x2, x3] = x.0;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    BiTensor(Mat2::new(
        Complex64::new(r * (x0 + x3), 0.0),
        Complex64::new(r * x1, r * x2),
        Complex64::new(r * x1, -r * x2),
        Complex64::new(r * (x0 - x3), 0.0),
    ))
}

/// Coordinates of a world vector. Refuses input whose reality defect exceeds
/// [`REALITY_TOL`]; use [`project_real`] first if projection is intended.
pub fn to_minkowski(t: &BiTensor) -> Result<MinkowskiVec> {
    let defect = reality_defect(t);
    if !(defect <= REALITY_TOL) {
        return Err(Error::NotReal { defect });
    }
    Ok(to_minkowski_unchecked(t))
}

/// Coordinates read off the Hermitian part of `t` without a reality check.
pub fn to_minkowski_unchecked(t: &BiTensor) -> MinkowskiVec {
    MinkowskiVec(unnormalized_coords(&t.0).map(|y| y * std::f64::consts::SQRT_2))
}

/// Coordinates `y` with `X = Σ yⱼ·√2·uⱼ`, read from the Hermitian part of `X`.
fn unnormalized_coords(m: &Mat2) -> [f64; 4] {
    let m = &m.0;
    let a = m[0][0].re;
    let d = m[1][1].re;
    let off = (m[0][1] + m[1][0].conj()) * 0.5;
    [0.5 * (a + d), off.re, off.im, 0.5 * (a - d)]
}

/// The symmetric bilinear form `h`, extended from
/// `h(a⊗b̄, c⊗d̄) = ε(a,c)·ε̄(b̄,d̄)` and evaluated by polarizing the determinant.
pub fn h_form(x: &BiTensor, y: &BiTensor) -> Complex64 {
    (x.0 + y.0).det() - x.0.det() - y.0.det()
}

/// `Q(x) = x₀² − x₁² − x₂² − x₃²`.
pub fn q_form(v: &MinkowskiVec) -> f64 {
    v.0.iter().zip(ETA).map(|(x, s)| s * x * x).sum()
}

/// The Lorentz inner product `g(x, y) = Σ η_μμ x_μ y_μ`.
pub fn g_form(x: &MinkowskiVec, y: &MinkowskiVec) -> f64 {
    (0..4).map(|k| ETA[k] * x.0[k] * y.0[k]).sum()
}

/// `π(A)T = A T A†`.
pub fn pi_act(a: &SL2Element, t: &BiTensor) -> BiTensor {
    let m = a.matrix();
    BiTensor(*m * t.0 * m.adjoint())
}

/// A proper orthochronous Lorentz transformation in world coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LorentzMatrix(pub [[f64; 4]; 4]);

impl LorentzMatrix {
    pub fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        LorentzMatrix(m)
    }

    pub fn rows(&self) -> &[[f64; 4]; 4] {
        &self.0
    }

    pub fn apply(&self, v: &MinkowskiVec) -> MinkowskiVec {
        let mut out = [0.0; 4];
        for (o, row) in out.iter_mut().zip(&self.0) {
            *o = row.iter().zip(&v.0).map(|(a, b)| a * b).sum();
        }
        MinkowskiVec(out)
    }

    /// Max entry of `ΛᵀηΛ − η`.
    pub fn orthogonality_residual(&self) -> f64 {
        let m = &self.0;
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                let s: f64 = (0..4).map(|k| m[k][i] * ETA[k] * m[k][j]).sum();
                let target = if i == j { ETA[i] } else { 0.0 };
                worst = worst.max((s - target).abs());
            }
        }
        worst
    }

    pub fn det(&self) -> f64 {
        det_real4(&self.0)
    }

    pub fn max_abs_diff(&self, other: &LorentzMatrix) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl Mul for LorentzMatrix {
    type Output = LorentzMatrix;
    fn mul(self, rhs: LorentzMatrix) -> LorentzMatrix {
        LorentzMatrix(mul_real4(&self.0, &rhs.0))
    }
}

/// The Lorentz transformation covered by `A`: column `j` is the world
/// coordinate vector of `π(A)uⱼ`.
pub fn lorentz_of(a: &SL2Element) -> Result<LorentzMatrix> {
    let mut m = [[0.0; 4]; 4];
    let g = a.matrix();
    // the √2 factors cancel between basis and coordinates, so Λ(±I) is exact
    for (j, w) in world_basis_unnormalized().iter().enumerate() {
        let col = unnormalized_coords(&(*g * *w * g.adjoint()));
        for (i, x) in col.into_iter().enumerate() {
            m[i][j] = x;
        }
    }
    let lambda = LorentzMatrix(m);
    let residual = lambda.orthogonality_residual();
    if !(residual <= DRIFT_TOL) {
        return Err(Error::NumericalDrift { residual, tol: DRIFT_TOL });
    }
    Ok(lambda)
}

/// Gram matrix `h(uᵢ, uⱼ)` of the world basis; real parts only.
pub fn world_gram() -> [[f64; 4]; 4] {
    let u = world_basis();
    let mut g = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            g[i][j] = h_form(&u[i], &u[j]).re;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::conjugate;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn elementary_examples() {
        let t = elementary(Spinor2::E1, CoSpinor2::E2);
        assert_eq!(t, BiTensor::basis(0, 1));
        let lhs = elementary(c(0.0, 1.0) * Spinor2::E1, CoSpinor2::E1);
        let rhs = elementary(Spinor2::E1, conjugate(c(0.0, -1.0) * Spinor2::E1));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, BiTensor::basis(0, 0).scale(c(0.0, 1.0)));
        let x = Spinor2::real(1.0, 2.0);
        let y = Spinor2::new(c(3.0, 0.0), c(0.0, 4.0));
        let t = elementary(x, conjugate(y));
        let expected = Mat2::new(c(3.0, 0.0), c(0.0, -4.0), c(6.0, 0.0), c(0.0, -8.0));
        assert_eq!(t.0, expected);
    }

    #[test]
    fn involution_examples() {
        assert_eq!(involution_j(&BiTensor::basis(0, 1)), BiTensor::basis(1, 0));
        let id = BiTensor(Mat2::IDENTITY);
        assert_eq!(involution_j(&id), id);
        let t = BiTensor(Mat2::new(c(1.0, 2.0), c(-0.5, 0.25), c(3.0, -1.0), c(0.0, 7.0)));
        assert_eq!(involution_j(&involution_j(&t)), t);
        // J(x ⊗ ȳ) = y ⊗ x̄
        let x = Spinor2::new(c(0.3, -1.0), c(2.0, 0.5));
        let y = Spinor2::new(c(-1.1, 0.2), c(0.0, 1.0));
        let lhs = involution_j(&elementary(x, conjugate(y)));
        let rhs = elementary(y, conjugate(x));
        assert!((lhs.0 - rhs.0).max_abs() < 1e-15);
    }

    #[test]
    fn reality_projection() {
        let herm = BiTensor(Mat2::new(c(2.0, 0.0), c(1.0, -1.0), c(1.0, 1.0), c(-3.0, 0.0)));
        assert_eq!(reality_defect(&herm), 0.0);
        let p = project_real(&BiTensor::basis(0, 1));
        let half = c(0.5, 0.0);
        assert_eq!(p.0, Mat2::new(ZERO, half, half, ZERO));
        let t = BiTensor(Mat2::new(c(1.0, 2.0), c(-0.5, 0.25), c(3.0, -1.0), c(0.0, 7.0)));
        assert_eq!(reality_defect(&project_real(&t)), 0.0);
    }

    #[test]
    fn world_basis_is_real_and_normalized() {
        let u = world_basis();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(u[0].0, Mat2::diag(c(r, 0.0), c(r, 0.0)));
        for uj in &u {
            assert_eq!(reality_defect(uj), 0.0);
        }
        let q: Vec<f64> = u.iter().map(|uj| h_form(uj, uj).re).collect();
        for (qj, expected) in q.iter().zip(ETA) {
            assert!((qj - expected).abs() < 1e-15, "{q:?}");
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let u = world_basis();
        assert_eq!(from_minkowski(&MinkowskiVec::new(1.0, 0.0, 0.0, 0.0)), u[0]);
        let x = MinkowskiVec::new(0.4, -1.3, 2.2, 0.9);
        let back = to_minkowski(&from_minkowski(&x)).unwrap();
        for k in 0..4 {
            assert!((back.0[k] - x.0[k]).abs() < 1e-15);
        }
        // from_minkowski agrees with Σ xⱼuⱼ
        let sum = (0..4).fold(BiTensor::ZERO, |acc, k| acc + u[k].scale(c(x.0[k], 0.0)));
        assert!((sum.0 - from_minkowski(&x).0).max_abs() < 1e-15);
    }

    #[test]
    fn to_minkowski_refuses_non_hermitian() {
        let err = to_minkowski(&BiTensor::basis(0, 1)).unwrap_err();
        assert!(matches!(err, Error::NotReal { defect } if (defect - 2f64.sqrt()).abs() < 1e-15));
    }

    #[test]
    fn h_examples() {
        let u = world_basis();
        assert!((h_form(&u[0], &u[0]) - ONE).norm() < 1e-15);
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert!(h_form(&u[i], &u[j]).norm() < 1e-15);
                }
            }
        }
        let v = h_form(&BiTensor::basis(0, 0), &BiTensor::basis(1, 1));
        assert_eq!(v, ONE);
    }

    #[test]
    fn q_form_matches_h_on_world_vectors() {
        let x = MinkowskiVec::new(2.0, 0.5, -1.0, 0.25);
        let t = from_minkowski(&x);
        let h = h_form(&t, &t);
        assert!((h.re - q_form(&x)).abs() < 1e-14);
        assert!(h.im.abs() < 1e-15);
        assert_eq!(q_form(&x), 4.0 - 0.25 - 1.0 - 0.0625);
    }

    #[test]
    fn pi_act_boost_example() {
        let s = 2f64.sqrt();
        let a = SL2Element::diag(c(s, 0.0)).unwrap();
        assert_eq!(pi_act(&SL2Element::IDENTITY, &world_basis()[1]), world_basis()[1]);
        // oracle: A·u₀·A† = diag(2, 1/2)/√2 directly
        let direct = Mat2::diag(c(2.0 / s, 0.0), c(0.5 / s, 0.0));
        let moved = pi_act(&a, &world_basis()[0]);
        assert!((moved.0 - direct).max_abs() < 1e-15);
        let x = to_minkowski(&moved).unwrap();
        assert!((x.0[0] - 1.25).abs() < 1e-15);
        assert!((x.0[3] - 0.75).abs() < 1e-15);
        assert!(x.0[1].abs() < 1e-15 && x.0[2].abs() < 1e-15);
    }

    #[test]
    fn lorentz_examples() {
        let id = lorentz_of(&SL2Element::IDENTITY).unwrap();
        assert_eq!(id, LorentzMatrix::identity());
        let t = 0.37;
        let rot = lorentz_of(&SL2Element::torus(t)).unwrap();
        // oracle: A X A† multiplies the upper-right entry x₁ + ix₂ by e^{2it},
        // a rotation by angle 2t in the (x₁, x₂) plane
        let (s2, c2) = (2.0 * t).sin_cos();
        let expected = LorentzMatrix([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, c2, -s2, 0.0],
            [0.0, s2, c2, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ]);
        assert!(rot.max_abs_diff(&expected) < 1e-15, "{rot:?}");
        let minus = lorentz_of(&SL2Element::IDENTITY.negate()).unwrap();
        assert_eq!(minus, id);
    }

    #[test]
    fn lorentz_reports_drift() {
        // bypass the determinant check to build a non-unimodular "element"
        let m = Mat2::diag(c(2.0, 0.0), c(2.0, 0.0));
        let bogus = SL2Element::with_tolerance(m, 10.0).unwrap();
        assert!(matches!(lorentz_of(&bogus), Err(Error::NumericalDrift { .. })));
    }

    #[test]
    fn gram_is_minkowski() {
        let g = world_gram();
        for i in 0..4 {
            for j in 0..4 {
                let target = if i == j { ETA[i] } else { 0.0 };
                assert!((g[i][j] - target).abs() <= 1e-14);
            }
        }
    }
}
