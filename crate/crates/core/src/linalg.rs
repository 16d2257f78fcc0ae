//! Fixed-size complex matrix kernels for the 2×2 and 4×4 cases.
//!
//! Everything in the crate is built from these two types; they are plain
//! `Copy` arrays with row-major indexing `m[row][col]`.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// `Σ aₖbₖ` evaluated as if in twice the working precision, then rounded
/// (compensated dot product built on fused multiply-add).
pub fn dot2(terms: &[(f64, f64)]) -> f64 {
    let mut sum = 0.0;
    let mut err = 0.0;
    for &(a, b) in terms {
        let prod = a * b;
        let prod_err = a.mul_add(b, -prod);
        let t = sum + prod;
        let bv = t - sum;
        err += (sum - (t - bv)) + (prod - bv) + prod_err;
        sum = t;
    }
    sum + err
}

/// `ab + cd` as an unevaluated sum `hi + lo`; symmetric in swapping the two products.
fn two_products(a: f64, b: f64, c: f64, d: f64) -> (f64, f64) {
    let (p, q) = (a * b, c * d);
    let (ep, eq) = (a.mul_add(b, -p), c.mul_add(d, -q));
    let hi = p + q;
    let v = hi - p;
    let round = (p - (hi - v)) + (q - v);
    (hi, round + (ep + eq))
}

fn complex_product(x: Complex64, y: Complex64) -> [(f64, f64); 2] {
    [
        two_products(x.re, y.re, -x.im, y.im),
        two_products(x.re, y.im, x.im, y.re),
    ]
}

/// `ad − bc` for complex entries, compensated. Swapping `(a, d)` with
/// `(b, c)` negates the result exactly, and `ad = bc` gives exactly zero.
pub fn cross(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let p = complex_product(a, d);
    let q = complex_product(b, c);
    let diff = |k: usize| (p[k].0 - q[k].0) + (p[k].1 - q[k].1);
    Complex64::new(diff(0), diff(1))
}

/// A 2×2 complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [[Complex64; 2]; 2]);

impl Mat2 {
    pub const ZERO: Mat2 = Mat2([[ZERO; 2]; 2]);
    pub const IDENTITY: Mat2 = Mat2([[ONE, ZERO], [ZERO, ONE]]);

    pub const fn new(a11: Complex64, a12: Complex64, a21: Complex64, a22: Complex64) -> Self {
        Mat2([[a11, a12], [a21, a22]])
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        Mat2([[f(0, 0), f(0, 1)], [f(1, 0), f(1, 1)]])
    }

    pub fn diag(a: Complex64, b: Complex64) -> Self {
        Mat2([[a, ZERO], [ZERO, b]])
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        cross(m[0][0], m[0][1], m[1][0], m[1][1])
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Mat2::from_fn(|i, j| self.0[i][j].conj())
    }

    pub fn transpose(&self) -> Self {
        Mat2::from_fn(|i, j| self.0[j][i])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Mat2::from_fn(|i, j| self.0[j][i].conj())
    }

    /// Adjugate; equals the inverse when `det == 1`.
    pub fn adjugate(&self) -> Self {
        let m = &self.0;
        Mat2([[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]])
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Mat2::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn apply(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        let m = &self.0;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.is_finite())
    }
}

impl Index<(usize, usize)> for Mat2 {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat2 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        Mat2::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2::from_fn(|i, j| -self.0[i][j])
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (&self.0, &rhs.0);
        Mat2::from_fn(|i, j| a[i][0] * b[0][j] + a[i][1] * b[1][j])
    }
}

/// A 4×4 complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat4(pub [[Complex64; 4]; 4]);

impl Mat4 {
    pub const ZERO: Mat4 = Mat4([[ZERO; 4]; 4]);

    pub fn identity() -> Self {
        Mat4::from_fn(|i, j| if i == j { ONE } else { ZERO })
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = [[ZERO; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, z) in row.iter_mut().enumerate() {
                *z = f(i, j);
            }
        }
        Mat4(m)
    }

    /// Block-diagonal `diag(a, b)`.
    pub fn block_diag(a: &Mat2, b: &Mat2) -> Self {
        Mat4::from_fn(|i, j| match (i < 2, j < 2) {
            (true, true) => a.0[i][j],
            (false, false) => b.0[i - 2][j - 2],
            _ => ZERO,
        })
    }

    pub fn trace(&self) -> Complex64 {
        (0..4).map(|i| self.0[i][i]).sum()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Mat4::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        Mat4::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn adjoint(&self) -> Self {
        Mat4::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn apply(&self, v: [Complex64; 4]) -> [Complex64; 4] {
        let mut out = [ZERO; 4];
        for (o, row) in out.iter_mut().zip(&self.0) {
            *o = row.iter().zip(&v).map(|(a, b)| a * b).sum();
        }
        out
    }

    /// `self·rhs + rhs·self`
    pub fn anticommutator(&self, rhs: &Mat4) -> Mat4 {
        *self * *rhs + *rhs * *self
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.is_finite())
    }
}

impl Index<(usize, usize)> for Mat4 {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl Add for Mat4 {
    type Output = Mat4;
    fn add(self, rhs: Mat4) -> Mat4 {
        Mat4::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl Sub for Mat4 {
    type Output = Mat4;
    fn sub(self, rhs: Mat4) -> Mat4 {
        Mat4::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

impl Neg for Mat4 {
    type Output = Mat4;
    fn neg(self) -> Mat4 {
        Mat4::from_fn(|i, j| -self.0[i][j])
    }
}

impl Mul for Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: Mat4) -> Mat4 {
        let (a, b) = (&self.0, &rhs.0);
        Mat4::from_fn(|i, j| (0..4).map(|k| a[i][k] * b[k][j]).sum())
    }
}

/// Real 4×4 matrix product.
pub fn mul_real4(a: &[[f64; 4]; 4], b: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// Determinant of a real 4×4 matrix by Gaussian elimination with partial pivoting.
pub fn det_real4(m: &[[f64; 4]; 4]) -> f64 {
    let mut a = *m;
    let mut det = 1.0;
    for col in 0..4 {
        let pivot = (col..4)
            .max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))
            .unwrap();
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for r in col + 1..4 {
            let f = a[r][col] / a[col][col];
            for c in col..4 {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    det
}

/// Eigenvalues of a real symmetric 4×4 matrix by cyclic Jacobi rotations,
/// sorted descending.
pub fn sym_eigenvalues4(m: &[[f64; 4]; 4]) -> [f64; 4] {
    let mut a = *m;
    for _sweep in 0..64 {
        let off: f64 = (0..4)
            .flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off <= f64::MIN_POSITIVE {
            break;
        }
        for p in 0..3 {
            for q in p + 1..4 {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..4 {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..4 {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev = [a[0][0], a[1][1], a[2][2], a[3][3]];
    ev.sort_by(|x, y| y.total_cmp(x));
    ev
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn det_and_adjugate_invert() {
        let m = Mat2::new(c(1.0, 2.0), c(0.5, -1.0), c(3.0, 0.0), c(-2.0, 1.0));
        let d = m.det();
        assert_eq!(d, c(1.0, 2.0) * c(-2.0, 1.0) - c(0.5, -1.0) * c(3.0, 0.0));
        let prod = m * m.adjugate();
        assert!((prod - Mat2::IDENTITY.scale(d)).max_abs() < 1e-14);
    }

    #[test]
    fn block_diag_multiplies_blockwise() {
        let a = Mat2::new(c(1.0, 1.0), c(2.0, 0.0), c(0.0, -1.0), c(1.0, 0.0));
        let b = a.conj();
        let m = Mat4::block_diag(&a, &b);
        let sq = m * m;
        assert_eq!(sq, Mat4::block_diag(&(a * a), &(b * b)));
    }

    #[test]
    fn jacobi_eigenvalues_of_known_matrix() {
        // block diag([[2,1],[1,2]], [[0,3],[3,0]]) has spectrum {3, 1, 3, -3}
        let m = [
            [2.0, 1.0, 0.0, 0.0],
            [1.0, 2.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 3.0],
            [0.0, 0.0, 3.0, 0.0],
        ];
        let ev = sym_eigenvalues4(&m);
        for (a, b) in ev.iter().zip([3.0, 3.0, 1.0, -3.0]) {
            assert!((a - b).abs() < 1e-14, "{ev:?}");
        }
        let d = sym_eigenvalues4(&[[1.0, 0.0, 0.0, 0.0], [0.0, -1.0, 0.0, 0.0], [0.0, 0.0, -1.0, 0.0], [0.0, 0.0, 0.0, -1.0]]);
        assert_eq!(d, [1.0, -1.0, -1.0, -1.0]);
    }

    #[test]
    fn real_det_matches_cofactor_expansion() {
        let m = [
            [2.0, 1.0, 0.0, 3.0],
            [0.0, -1.0, 4.0, 1.0],
            [5.0, 2.0, 1.0, 0.0],
            [1.0, 0.0, 2.0, -2.0],
        ];
        // cofactor expansion computed by hand along row 0
        let minor = |skip_col: usize| {
            let rows: Vec<Vec<f64>> = (1..4)
                .map(|r| (0..4).filter(|&c| c != skip_col).map(|c| m[r][c]).collect())
                .collect();
            rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
                - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
                + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
        };
        let expected: f64 = (0..4)
            .map(|c| if c % 2 == 0 { 1.0 } else { -1.0 } * m[0][c] * minor(c))
            .sum();
        assert!((det_real4(&m) - expected).abs() < 1e-12);
    }
}
