//! Shared serialization: the convention ledger every artifact carries, and
//! complex numbers as `[re, im]` pairs.

use num_complex::Complex64;
use serde::Serialize;
use twospinor::clifford::BASIS_ORDER;
use twospinor::bitensor::ETA;
use twospinor::verify::CLIFFORD_CONVENTION;
use twospinor::{FourSpinor, Mat2, Mat4};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Conventions {
    pub schema_version: u32,
    pub basis_order: [&'static str; 4],
    pub eta: [f64; 4],
    pub clifford: &'static str,
    pub world_basis: &'static str,
    pub plane_wave_phase: &'static str,
    pub phase_note: &'static str,
    pub plus_isomorphism: &'static str,
}

pub fn conventions() -> Conventions {
    Conventions {
        schema_version: SCHEMA_VERSION,
        basis_order: BASIS_ORDER,
        eta: ETA,
        clifford: CLIFFORD_CONVENTION,
        world_basis: "u = (I, sigma1, -sigma2, sigma3)/sqrt(2) as coefficient matrices of e_i (x) ebar_j",
        plane_wave_phase: "Psi(x) = exp(-i(p0 x0 + p1 x1 + p2 x2 + p3 x3)) Psi_p",
        phase_note: "the characters v0 -> exp(i x0), vj -> exp(-i xj) suggest a metric pairing; \
                     the Euclidean pairing used here is the one for which sum_r i gamma_r d_r Psi = m Psi \
                     holds with pslash = sum_r p_r gamma_r",
        plus_isomorphism: "S+ -> S: (a, b, b, -a) -> (a, b); sbar = conjugate(s)",
    }
}

pub type Pair = [f64; 2];

/// Adding `0.0` maps `-0.0` to `0.0` and leaves every other value unchanged.
pub fn pair(z: Complex64) -> Pair {
    [z.re + 0.0, z.im + 0.0]
}

pub fn spinor4(v: &FourSpinor) -> [Pair; 4] {
    v.to_array().map(pair)
}

pub fn mat2(m: &Mat2) -> [[Pair; 2]; 2] {
    m.0.map(|row| row.map(pair))
}

pub fn mat4(m: &Mat4) -> [[Pair; 4]; 4] {
    m.0.map(|row| row.map(pair))
}

pub fn fmt_complex(z: Complex64) -> String {
    let [re, im] = pair(z);
    let z = Complex64::new(re, im);
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

/// Right-aligned rows of complex entries.
pub fn fmt_matrix<const N: usize>(rows: &[[Complex64; N]; N], indent: &str) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|&z| fmt_complex(z)).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|r| {
            let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
            format!("{indent}[ {} ]", line.join("  "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn conventions_text() -> String {
    let c = conventions();
    format!(
        "# schema {}; basis order ({}); eta = diag(1,-1,-1,-1)\n# clifford: {}\n# phase: {}",
        c.schema_version,
        c.basis_order.join(", "),
        c.clifford,
        c.plane_wave_phase
    )
}
