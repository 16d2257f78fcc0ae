//! Solutions of the momentum-space Dirac equation, plane waves, and sampled
//! 2-spinor-field sections over the mass shell.

use num_complex::Complex64;
use rand::Rng;

use crate::bundle::{beta_inv, fiber_residual, rest_fiber_basis, split_conjugate_pair, ConjugatePair, FiberElement};
use crate::clifford::{gammas, tau_apply, FourSpinor};
use crate::error::{Error, Result};
use crate::momentum::{boost_rep, shell_point, MassShellPoint, Momentum};
use crate::par::Execution;
use crate::sample::rng_for;
use crate::spinor::SL2Element;

/// Default tolerance for per-record fiber residuals.
pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-9;

/// The two transported rest solutions of `p̸Ψ = mΨ` at one shell point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Solution {
    pub point: MassShellPoint,
    pub boost: SL2Element,
    pub basis: [FourSpinor; 2],
    pub residuals: [f64; 2],
}

/// Solves `p̸Ψ = mΨ` over the 3-momentum `(p1, p2, p3)` by pushing the rest
/// basis `(e₁ − ē₂, e₂ + ē₁)` through `τ(A_p)`.
pub fn solve(m: f64, p1: f64, p2: f64, p3: f64) -> Result<Solution> {
    let point = shell_point(m, p1, p2, p3)?;
    solve_at(&point)
}

pub fn solve_at(point: &MassShellPoint) -> Result<Solution> {
    let boost = boost_rep(point)?;
    let (b1, b2) = rest_fiber_basis();
    let basis = [tau_apply(&boost, b1), tau_apply(&boost, b2)];
    let residuals = basis.map(|psi| fiber_residual(point, &psi));
    Ok(Solution { point: *point, boost, basis, residuals })
}

/// How derivatives of the plane wave are taken.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Derivative {
    /// Central differences with the given step.
    Central(f64),
    /// Exact differentiation of the phase.
    Analytic,
}

/// `Ψ(x) = exp(−i(p₀x₀ + p₁x₁ + p₂x₂ + p₃x₃))·Ψ_p`.
///
/// The Euclidean-looking pairing is what makes `Σ_r iγ_r ∂_r Ψ = mΨ` hold
/// with `p̸ = Σ_r p_r γ_r`.
pub fn plane_wave(p: &Momentum, psi: &FourSpinor, x: &[f64; 4]) -> FourSpinor {
    let phase: f64 = p.0.iter().zip(x).map(|(a, b)| a * b).sum();
    psi.scale(Complex64::from_polar(1.0, -phase))
}

/// `‖Σ_r iγ_r ∂_r Ψ(x) − mΨ(x)‖` for the plane wave built on `psi`.
pub fn planewave_residual(q: &MassShellPoint, psi: &FourSpinor, x: &[f64; 4], mode: Derivative) -> Result<f64> {
    let p = q.momentum();
    let i = Complex64::new(0.0, 1.0);
    let derivative = |r: usize| -> Result<FourSpinor> {
        match mode {
            Derivative::Analytic => Ok(plane_wave(p, psi, x).scale(-i * p.0[r])),
            Derivative::Central(h) => {
                if !(h > 0.0 && h.is_finite()) {
                    return Err(Error::BadStep(h));
                }
                let mut fwd = *x;
                let mut bwd = *x;
                fwd[r] += h;
                bwd[r] -= h;
                let diff = plane_wave(p, psi, &fwd) - plane_wave(p, psi, &bwd);
                Ok(diff.scale(Complex64::new(0.5 / h, 0.0)))
            }
        }
    };
    let mut total = plane_wave(p, psi, x).scale(Complex64::new(-q.mass(), 0.0));
    for r in 0..4 {
        let d = derivative(r)?;
        total = total + (gammas().get(r) * d).scale(i);
    }
    Ok(total.norm())
}

/// Node layout for sampling a section over `X_m`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Grid {
    /// `nodes` points per axis, evenly spaced in `[−extent, extent]` for each of `p₁, p₂, p₃`.
    Cartesian { extent: f64, nodes: usize },
    /// `nodes` points per axis with `p_k = m·sinh(y)` for `y` evenly spaced in `[−max_rapidity, max_rapidity]`.
    Rapidity { max_rapidity: f64, nodes: usize },
    /// `count` 3-momenta drawn uniformly from `[−extent, extent]³` with the given seed.
    Random { extent: f64, count: usize, seed: u64 },
}

fn axis(n: usize, lo: f64, hi: f64) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![0.5 * (lo + hi)],
        _ => (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect(),
    }
}

impl Grid {
    /// 3-momenta of all nodes; `p₁` varies slowest.
    pub fn momenta(&self, m: f64) -> Vec<[f64; 3]> {
        let cube = |ax: Vec<f64>| -> Vec<[f64; 3]> {
            let mut out = Vec::with_capacity(ax.len().pow(3));
            for &a in &ax {
                for &b in &ax {
                    for &c in &ax {
                        out.push([a, b, c]);
                    }
                }
            }
            out
        };
        match *self {
            Grid::Cartesian { extent, nodes } => cube(axis(nodes, -extent, extent)),
            Grid::Rapidity { max_rapidity, nodes } => cube(
                axis(nodes, -max_rapidity, max_rapidity)
                    .into_iter()
                    .map(|y| m * y.sinh())
                    .collect(),
            ),
            Grid::Random { extent, count, seed } => (0..count)
                .map(|i| {
                    let mut rng = rng_for(seed, 0xF1E1D, i);
                    std::array::from_fn(|_| rng.gen_range(-extent..=extent))
                })
                .collect(),
        }
    }
}

/// One basis vector of the sampled section at one grid node.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldSample {
    pub node: usize,
    pub basis: usize,
    pub momentum: Momentum,
    pub psi: FourSpinor,
    pub pair: ConjugatePair,
    pub residual: f64,
    pub flagged: bool,
}

/// Samples the section `p ↦ τ(A_p)bₖ` at every node and splits each value
/// into its conjugate pair of 2-spinors.
///
/// Nodes are computed independently (possibly in parallel); the returned
/// records are always in node order, basis index fastest.
pub fn sample_field(m: f64, grid: &Grid, tol: f64, exec: Execution) -> Result<Vec<FieldSample>> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::BadMass(m));
    }
    let momenta = grid.momenta(m);
    let per_node: Vec<Result<[FieldSample; 2]>> = exec.map(momenta.len(), |node| {
        let [p1, p2, p3] = momenta[node];
        let sol = solve(m, p1, p2, p3)?;
        let mut out = [None, None];
        for (k, psi) in sol.basis.into_iter().enumerate() {
            let residual = sol.residuals[k];
            // an out-of-fiber value is kept as a flagged record with an empty pair
            let pair = match FiberElement::new(sol.point, psi) {
                Ok(f) => split_conjugate_pair(&beta_inv(&f)?)?,
                Err(_) => ConjugatePair {
                    s: Default::default(),
                    sbar: Default::default(),
                },
            };
            out[k] = Some(FieldSample {
                node,
                basis: k,
                momentum: *sol.point.momentum(),
                psi,
                pair,
                residual,
                flagged: !(residual <= tol),
            });
        }
        Ok(out.map(|s| s.expect("both basis vectors sampled")))
    });
    let mut records = Vec::with_capacity(2 * per_node.len());
    for node in per_node {
        records.extend(node?);
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::fiber_projector;

    #[test]
    fn rest_solutions() {
        let sol = solve(1.0, 0.0, 0.0, 0.0).unwrap();
        let (b1, b2) = rest_fiber_basis();
        assert_eq!(sol.basis, [b1, b2]);
        assert!(sol.residuals.iter().all(|&r| r <= 1e-15), "{:?}", sol.residuals);
        assert_eq!(solve(0.0, 0.0, 0.0, 0.0).unwrap_err(), Error::BadMass(0.0));
    }

    #[test]
    fn boosted_solutions_lie_in_projector_image() {
        let sol = solve(1.0, 0.0, 0.0, 0.75).unwrap();
        let proj = fiber_projector(&sol.point).unwrap();
        for (psi, r) in sol.basis.iter().zip(sol.residuals) {
            assert!(r <= 1e-10);
            assert!((proj * *psi - *psi).norm() <= 1e-10);
        }
    }

    #[test]
    fn plane_wave_residuals() {
        let sol = solve(1.0, 0.0, 0.0, 0.0).unwrap();
        let x = [0.3, -0.1, 0.7, 0.2];
        let r = planewave_residual(&sol.point, &sol.basis[0], &x, Derivative::Central(1e-3)).unwrap();
        assert!(r <= 1e-5, "{r}");
        let exact = planewave_residual(&sol.point, &sol.basis[0], &x, Derivative::Analytic).unwrap();
        assert!(exact <= 1e-15, "{exact}");
        assert_eq!(
            planewave_residual(&sol.point, &sol.basis[0], &x, Derivative::Central(0.0)),
            Err(Error::BadStep(0.0))
        );
    }

    #[test]
    fn halving_step_quarters_residual() {
        let sol = solve(1.0, 0.4, -0.3, 0.6).unwrap();
        let x = [0.1, 0.2, -0.4, 0.3];
        let r = |h| planewave_residual(&sol.point, &sol.basis[1], &x, Derivative::Central(h)).unwrap();
        let ratio = r(2e-3) / r(1e-3);
        assert!((3.6..=4.4).contains(&ratio), "{ratio}");
    }

    #[test]
    fn single_node_grid() {
        let grid = Grid::Cartesian { extent: 1.0, nodes: 1 };
        let recs = sample_field(1.0, &grid, DEFAULT_RESIDUAL_TOL, Execution::Sequential).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].pair.s, crate::spinor::Spinor2::E1);
        assert_eq!(recs[1].pair.s, crate::spinor::Spinor2::E2);
        assert!(recs.iter().all(|r| !r.flagged));
    }

    #[test]
    fn grid_layouts() {
        let g = Grid::Cartesian { extent: 2.0, nodes: 3 };
        let pts = g.momenta(1.0);
        assert_eq!(pts.len(), 27);
        assert_eq!(pts[0], [-2.0, -2.0, -2.0]);
        assert_eq!(pts[1], [-2.0, -2.0, 0.0]);
        assert_eq!(pts[26], [2.0, 2.0, 2.0]);
        let r = Grid::Rapidity { max_rapidity: 1.0, nodes: 3 }.momenta(2.0);
        assert!((r[0][0] + 2.0 * 1f64.sinh()).abs() < 1e-15);
        let a = Grid::Random { extent: 1.0, count: 5, seed: 9 }.momenta(1.0);
        let b = Grid::Random { extent: 1.0, count: 5, seed: 9 }.momenta(1.0);
        assert_eq!(a, b);
        assert!(Grid::Cartesian { extent: 1.0, nodes: 0 }.momenta(1.0).is_empty());
    }
}
