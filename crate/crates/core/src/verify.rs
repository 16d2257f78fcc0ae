//! Randomized verification of every identity the construction rests on.
//!
//! Each check draws its inputs from a seeded per-sample stream, measures the
//! largest defect over the sweep, and compares it against a fixed tolerance.
//! [`run`] executes the whole suite; the individual checks are public so the
//! acceptance tests can run them at their own sample counts.

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::bitensor::{
    elementary, from_minkowski, h_form, involution_j, lorentz_of, pi_act, q_form, world_basis, world_gram,
    LorentzMatrix, ETA,
};
use crate::bundle::{
    beta, beta_inv, embed_plus, fiber_projector, fiber_residual, rest_fiber_basis, spin_character,
    split_conjugate_pair, AssociatedClassRep, FiberElement,
};
use crate::clifford::{anticommutator_defect, equivariance_defect, tau_apply, FourSpinor, GammaTable};
use crate::field::{planewave_residual, sample_field, solve, Derivative, Grid};
use crate::linalg::{sym_eigenvalues4, Mat2, Mat4};
use crate::momentum::{act_momentum, boost_rep, shell_point, undualize, MassShellPoint};
use crate::par::Execution;
use crate::sample::{self, rng_for};
use crate::spinor::{act, conjugate, cyclic_defect, eps, eps_bar, SL2Element};

/// The anticommutator normalization in force, printed with every report.
pub const CLIFFORD_CONVENTION: &str = "{phi(X),phi(Y)} = 2 h(X,Y) Id (gamma0^2 = +1)";

/// Norm bound for random `SL₂(ℂ)` samples.
pub const MAX_GROUP_NORM: f64 = 10.0;

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub samples: usize,
    pub max_defect: f64,
    pub tol: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    fn new(name: &str, samples: usize, max_defect: f64, tol: f64) -> Self {
        CheckResult {
            name: name.to_owned(),
            samples,
            max_defect,
            tol,
            pass: max_defect <= tol,
            detail: None,
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// All check results plus the run parameters.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples: usize,
    pub clifford_convention: &'static str,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Replace one γ-matrix entry before running the suite; a negative control.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaCorruption {
    pub mu: usize,
    pub row: usize,
    pub col: usize,
    pub delta: Complex64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub samples: usize,
    pub exec: Execution,
    pub corrupt_gamma: Option<GammaCorruption>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 42, samples: 1000, exec: Execution::default(), corrupt_gamma: None }
    }
}

// Stream identifiers keep the checks' random inputs independent of each other.
mod stream {
    pub const CYCLIC: u64 = 1;
    pub const EPS_INVARIANCE: u64 = 2;
    pub const CONJUGATION: u64 = 3;
    pub const H_DEFINITION: u64 = 4;
    pub const PI_J: u64 = 5;
    pub const H_INVARIANCE: u64 = 6;
    pub const SLASH: u64 = 7;
    pub const ANTICOMMUTATOR: u64 = 8;
    pub const EQUIVARIANCE: u64 = 9;
    pub const COVERING: u64 = 10;
    pub const BOOST: u64 = 11;
    pub const COCYCLE: u64 = 12;
    pub const BETA_WELL_DEFINED: u64 = 13;
    pub const BETA_ROUND_TRIP: u64 = 14;
    pub const BETA_FORWARD: u64 = 15;
    pub const BETA_EQUIVARIANCE: u64 = 16;
    pub const SPLIT: u64 = 17;
    pub const SPECTRUM: u64 = 18;
    pub const FORWARD_CONE: u64 = 19;
    pub const SU2_INVARIANCE: u64 = 20;
}

/// Checks bound to a seed, an execution mode and a γ table.
#[derive(Clone, Copy, Debug)]
pub struct Suite {
    pub seed: u64,
    pub exec: Execution,
    pub gammas: GammaTable,
}

fn random_shell_point<R: Rng>(rng: &mut R) -> MassShellPoint {
    let m = rng.gen_range(0.5..=2.0);
    let p: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-3.0..=3.0));
    shell_point(m, p[0], p[1], p[2]).expect("positive mass")
}

/// A fiber element built through the projector, independently of `β`.
fn random_fiber_element<R: Rng>(rng: &mut R) -> FiberElement {
    loop {
        let q = random_shell_point(rng);
        let proj = fiber_projector(&q).expect("on shell");
        let psi = proj * sample::four_spinor(rng, 1.0);
        if psi.norm() < 1e-3 {
            continue;
        }
        if let Ok(f) = FiberElement::new(q, psi) {
            return f;
        }
    }
}

fn random_plus<R: Rng>(rng: &mut R) -> FourSpinor {
    embed_plus(sample::spinor(rng, 1.0))
}

fn mat2_diff(a: &Mat2, b: &Mat2) -> f64 {
    (*a - *b).max_abs()
}

impl Suite {
    pub fn new(seed: u64, exec: Execution) -> Self {
        Suite { seed, exec, gammas: GammaTable::compute() }
    }

    fn sweep(&self, n: usize, stream: u64, f: impl Fn(&mut rand_chacha::ChaCha8Rng) -> f64 + Sync + Send) -> f64 {
        let seed = self.seed;
        self.exec.max(n, move |i| f(&mut rng_for(seed, stream, i)))
    }

    /// Gram matrix of the world basis under `h` against `η`, plus its inertia.
    pub fn lorentz_signature(&self) -> CheckResult {
        let g = world_gram();
        let mut defect: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                let target = if i == j { ETA[i] } else { 0.0 };
                defect = defect.max((g[i][j] - target).abs());
            }
        }
        let ev = sym_eigenvalues4(&g);
        let pos = ev.iter().filter(|&&x| x > 0.5).count();
        let neg = ev.iter().filter(|&&x| x < -0.5).count();
        let mut r = CheckResult::new("lorentz_signature", 1, defect, 1e-14)
            .with_detail(format!("rank {}, signature (+{pos}, -{neg})", pos + neg));
        if (pos, neg) != (1, 3) {
            r.pass = false;
        }
        r
    }

    /// `ε(b,c)a + ε(c,a)b + ε(a,b)c = 0` with coefficients in `[−scale, scale]`.
    pub fn cyclic_identity(&self, n: usize, scale: f64) -> CheckResult {
        let d = self.sweep(n, stream::CYCLIC, |rng| {
            let (a, b, c) = (sample::spinor(rng, scale), sample::spinor(rng, scale), sample::spinor(rng, scale));
            cyclic_defect(a, b, c).norm()
        });
        CheckResult::new("cyclic_identity", n, d, 1e-12)
    }

    /// `ε(Ax, Ay) = ε(x, y)`.
    pub fn eps_invariance(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::EPS_INVARIANCE, |rng| {
            let a = sample::sl2(rng, MAX_GROUP_NORM);
            let (x, y) = (sample::spinor(rng, 1.0), sample::spinor(rng, 1.0));
            (eps(act(&a, x), act(&a, y)) - eps(x, y)).norm()
        });
        CheckResult::new("eps_invariance", n, d, 1e-11)
    }

    /// `ε̄(x̄, ȳ) = conj ε(x, y)` and antisymmetry of `ε`.
    pub fn conjugation_compatibility(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::CONJUGATION, |rng| {
            let (x, y) = (sample::spinor(rng, 1.0), sample::spinor(rng, 1.0));
            let conj = (eps_bar(conjugate(x), conjugate(y)) - eps(x, y).conj()).norm();
            let anti = (eps(x, y) + eps(y, x)).norm();
            conj.max(anti)
        });
        CheckResult::new("conjugation_compatibility", n, d, 1e-14)
    }

    /// Determinant polarization against `h(a⊗b̄, c⊗d̄) = ε(a,c)ε̄(b̄,d̄)`.
    pub fn h_definition(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::H_DEFINITION, |rng| {
            let (a, b) = (sample::spinor(rng, 1.0), sample::cospinor(rng, 1.0));
            let (c, dd) = (sample::spinor(rng, 1.0), sample::cospinor(rng, 1.0));
            let direct = eps(a, c) * eps_bar(b, dd);
            let x = elementary(a, b);
            let y = elementary(c, dd);
            let sym = (h_form(&x, &y) - h_form(&y, &x)).norm();
            (h_form(&x, &y) - direct).norm().max(sym)
        });
        CheckResult::new("h_definition", n, d, 1e-12)
    }

    /// `π(A)J = Jπ(A)`.
    pub fn pi_commutes_with_j(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::PI_J, |rng| {
            let a = sample::sl2(rng, 3.0);
            let t = sample::bitensor(rng, 1.0);
            mat2_diff(&pi_act(&a, &involution_j(&t)).0, &involution_j(&pi_act(&a, &t)).0)
        });
        CheckResult::new("pi_commutes_with_j", n, d, 1e-13)
    }

    /// `h(πX, πY) = h(X, Y)`, and `Q` preserved on world vectors.
    pub fn h_invariance(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::H_INVARIANCE, |rng| {
            let a = sample::sl2(rng, MAX_GROUP_NORM);
            let (x, y) = (sample::bitensor(rng, 1.0), sample::bitensor(rng, 1.0));
            let h = (h_form(&pi_act(&a, &x), &pi_act(&a, &y)) - h_form(&x, &y)).norm();
            let v = sample::minkowski(rng, 1.0);
            let moved = act_momentum(&a, &crate::momentum::dualize(&v));
            let q = (moved.q() - q_form(&v)).abs() / q_form(&v).abs().max(1.0);
            h.max(q)
        });
        CheckResult::new("h_invariance", n, d, 1e-10)
    }

    /// All 16 relations `γ_μγ_ν + γ_νγ_μ = 2η_μν Id`; names the worst pair.
    pub fn clifford_relations(&self) -> CheckResult {
        let res = self.gammas.relation_residuals();
        let (mut worst, mut at) = (0.0f64, (0, 0));
        for (mu, row) in res.iter().enumerate() {
            for (nu, &r) in row.iter().enumerate() {
                if r > worst || r.is_nan() {
                    worst = r;
                    at = (mu, nu);
                }
            }
        }
        let (mu, nu) = at;
        let detail = if worst == 0.0 {
            "all 16 relations hold exactly".to_owned()
        } else {
            format!("worst relation: gamma{mu}*gamma{nu} + gamma{nu}*gamma{mu} = 2*eta[{mu}{nu}]*Id")
        };
        CheckResult::new("clifford_relations", 16, worst, 1e-13).with_detail(detail)
    }

    /// `p̸² = Q(p)·Id` and `p̸ = φ(Σ p_μ u_μ)`.
    pub fn slash_square(&self, n: usize) -> CheckResult {
        let table = self.gammas;
        let d = self.sweep(n, stream::SLASH, move |rng| {
            let p = sample::minkowski(rng, 1.0);
            let s = table.slash(&p);
            let sq = (s * s - Mat4::identity().scale_re(q_form(&p))).max_abs();
            let route = (s - crate::clifford::slash_via_phi(&p)).max_abs();
            sq.max(route)
        });
        CheckResult::new("slash_square", n, d, 1e-11)
    }

    /// `{φ(X), φ(Y)} = 2h(X,Y)·Id` on random elementary tensors.
    pub fn anticommutator(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::ANTICOMMUTATOR, |rng| {
            let x = elementary(sample::spinor(rng, 1.0), sample::cospinor(rng, 1.0));
            let y = elementary(sample::spinor(rng, 1.0), sample::cospinor(rng, 1.0));
            anticommutator_defect(&x, &y).max_abs()
        });
        CheckResult::new("anticommutator", n, d, 1e-11)
    }

    /// `φ(π(A)X) = τ(A)φ(X)τ(A)⁻¹` for `‖A‖ ≤ 10`.
    pub fn equivariance(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::EQUIVARIANCE, |rng| {
            let a = sample::sl2(rng, MAX_GROUP_NORM);
            let x = sample::bitensor(rng, 1.0);
            equivariance_defect(&a, &x).max_abs()
        });
        CheckResult::new("equivariance", n, d, 1e-9)
    }

    /// `Λ(AB) = Λ(A)Λ(B)`.
    pub fn covering_homomorphism(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::COVERING, |rng| {
            let a = sample::sl2(rng, MAX_GROUP_NORM);
            let b = sample::sl2(rng, MAX_GROUP_NORM);
            match (lorentz_of(&(a * b)), lorentz_of(&a), lorentz_of(&b)) {
                (Ok(ab), Ok(la), Ok(lb)) => ab.max_abs_diff(&(la * lb)),
                _ => f64::INFINITY,
            }
        });
        CheckResult::new("covering_homomorphism", n, d, 1e-10)
    }

    /// `ΛᵀηΛ = η`, `det Λ = 1`, `Λ₀₀ ≥ 1`.
    pub fn covering_orthogonality(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::COVERING ^ 0xA5, |rng| {
            let a = sample::sl2(rng, MAX_GROUP_NORM);
            match lorentz_of(&a) {
                Ok(l) if l.0[0][0] >= 1.0 - 1e-10 => {
                    let scale = l.0.iter().flatten().fold(1.0f64, |m, x| m.max(x.abs()));
                    // det of a 4×4 with entries of size s carries rounding ~ s⁴·eps
                    let det = (l.det() - 1.0).abs() / scale.powi(4);
                    l.orthogonality_residual().max(det)
                }
                _ => f64::INFINITY,
            }
        });
        CheckResult::new("covering_orthogonality", n, d, 1e-10)
    }

    /// `Λ(−A) = Λ(A)` bit for bit, including `A = I`.
    pub fn covering_kernel(&self, n: usize) -> CheckResult {
        let mismatch = |a: &SL2Element| match (lorentz_of(a), lorentz_of(&a.negate())) {
            (Ok(x), Ok(y)) if x == y => 0.0,
            (Ok(x), Ok(y)) => x.max_abs_diff(&y).max(f64::MIN_POSITIVE),
            _ => f64::INFINITY,
        };
        let d = self.sweep(n, stream::COVERING ^ 0x5A, |rng| mismatch(&sample::sl2(rng, MAX_GROUP_NORM)));
        CheckResult::new("covering_kernel", n, d.max(mismatch(&SL2Element::IDENTITY)), 0.0)
    }

    /// `Λ(I) = Λ(−I) = Id`.
    pub fn covering_identity(&self) -> CheckResult {
        let d = [SL2Element::IDENTITY, SL2Element::IDENTITY.negate()]
            .iter()
            .map(|a| lorentz_of(a).map_or(f64::INFINITY, |l| l.max_abs_diff(&LorentzMatrix::identity())))
            .fold(0.0, f64::max);
        CheckResult::new("covering_identity", 2, d, 1e-15)
    }

    /// `Λ(diag(√2, 1/√2))` has `Λ₀₀ = 1.25` and `Λ₀₃ = 0.75`.
    pub fn covering_boost_value(&self) -> CheckResult {
        let a = SL2Element::diag(Complex64::new(std::f64::consts::SQRT_2, 0.0)).expect("det 1");
        let d = match lorentz_of(&a) {
            Ok(l) => (l.0[0][0] - 1.25).abs().max((l.0[0][3] - 0.75).abs()),
            Err(_) => f64::INFINITY,
        };
        CheckResult::new("covering_boost_value", 1, d, 1e-12)
    }

    /// The boost section reproduces each shell point and is a positive Hermitian matrix.
    pub fn boost_section(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::BOOST, |rng| {
            let q = random_shell_point(rng);
            let Ok(a) = boost_rep(&q) else { return f64::INFINITY };
            let m = a.matrix();
            let rest = world_basis()[0].scale(Complex64::new(q.mass(), 0.0));
            let target = from_minkowski(&undualize(q.momentum()));
            let section = mat2_diff(&pi_act(&a, &rest).0, &target.0) / q.momentum().energy().max(1.0);
            let herm = mat2_diff(m, &m.adjoint());
            // a Hermitian 2×2 is positive definite iff its trace and determinant are
            let positive = m.trace().re > 0.0 && m.det().re > 0.0;
            if positive {
                section.max(herm)
            } else {
                f64::INFINITY
            }
        });
        CheckResult::new("boost_section", n, d, 1e-10)
    }

    /// `A_{Aq}⁻¹·A·A_q ∈ SU₂` for `A ∈ SU₂`.
    pub fn boost_cocycle(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::COCYCLE, |rng| {
            let a = sample::su2(rng);
            let q = random_shell_point(rng);
            let moved = match MassShellPoint::new(act_momentum(&a, q.momentum()), q.mass()) {
                Ok(m) => m,
                Err(_) => return f64::INFINITY,
            };
            match (boost_rep(&q), boost_rep(&moved)) {
                (Ok(bq), Ok(baq)) => (baq.inverse() * a * bq).unitarity_defect(),
                _ => f64::INFINITY,
            }
        });
        CheckResult::new("boost_cocycle", n, d, 1e-10)
    }

    /// `p₀ > 0` and `Q` survive random boosts of shell points.
    pub fn forward_cone(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::FORWARD_CONE, |rng| {
            let a = sample::sl2(rng, MAX_GROUP_NORM);
            let q = random_shell_point(rng);
            let moved = act_momentum(&a, q.momentum());
            if moved.energy() <= 0.0 {
                return f64::INFINITY;
            }
            (moved.q() - q.mass().powi(2)).abs() / q.mass().powi(2).max(1.0)
        });
        CheckResult::new("forward_cone", n, d, 1e-10)
    }

    /// The `+1` eigenspace of `γ₀` is `span{(1,0,0,−1), (0,1,1,0)}`.
    pub fn rest_fiber(&self) -> CheckResult {
        let g0 = self.gammas.0[0];
        let p_plus = (g0 + Mat4::identity()).scale_re(0.5);
        let (b1, b2) = rest_fiber_basis();
        // orthogonal projector onto the span; b1 ⟂ b2, both of norm √2
        let outer = |v: FourSpinor| {
            let a = v.to_array();
            Mat4::from_fn(|i, j| a[i] * a[j].conj())
        };
        let span = (outer(b1) + outer(b2)).scale_re(0.5);
        let mut d = (p_plus - span).max_abs();
        let displayed = [
            (FourSpinor::real([1.0, 0.0, 0.0, -1.0]), 1.0),
            (FourSpinor::real([0.0, 1.0, 1.0, 0.0]), 1.0),
            (FourSpinor::real([1.0, 0.0, 0.0, 1.0]), -1.0),
            (FourSpinor::real([0.0, 1.0, -1.0, 0.0]), -1.0),
        ];
        for (v, lambda) in displayed {
            d = d.max((g0 * v - v.scale(Complex64::new(lambda, 0.0))).norm());
        }
        CheckResult::new("rest_fiber", 1, d, 1e-12)
    }

    /// On-shell `p̸` has spectrum `{+m, +m, −m, −m}`: `P₊` and `P₋` are rank-2 projectors.
    pub fn slash_spectrum(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::SPECTRUM, |rng| {
            let q = random_shell_point(rng);
            let Ok(p) = fiber_projector(&q) else { return f64::INFINITY };
            let idem = (p * p - p).max_abs();
            let tr = (p.trace() - Complex64::new(2.0, 0.0)).norm();
            let s = crate::clifford::slash(&undualize(q.momentum()));
            let commute = (s * p - p * s).max_abs() / q.momentum().energy();
            idem.max(tr).max(commute)
        });
        CheckResult::new("slash_spectrum", n, d, 1e-10)
    }

    /// `τ(T)` preserves `𝔖₊` for `T ∈ SU₂`.
    pub fn su2_preserves_plus(&self, n: usize) -> CheckResult {
        let g0 = self.gammas.0[0];
        let p_plus = (g0 + Mat4::identity()).scale_re(0.5);
        let d = self.sweep(n, stream::SU2_INVARIANCE, move |rng| {
            let t = crate::clifford::tau(&sample::su2(rng));
            (p_plus * t * p_plus - t * p_plus).max_abs()
        });
        CheckResult::new("su2_preserves_plus", n, d, 1e-12)
    }

    /// `β(AT, τ(T)⁻¹Φ) = β(A, Φ)` for `T ∈ SU₂`.
    pub fn beta_well_defined(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::BETA_WELL_DEFINED, |rng| {
            let m = rng.gen_range(0.5..=2.0);
            let a = sample::sl2(rng, MAX_GROUP_NORM);
            let t = sample::su2(rng);
            let Ok(rep) = AssociatedClassRep::new(a, random_plus(rng)) else { return f64::INFINITY };
            let Ok(other) = rep.right_translate(&t) else { return f64::INFINITY };
            match (beta(&rep, m), beta(&other, m)) {
                (Ok(f), Ok(g)) => fiber_distance(&f, &g),
                _ => f64::INFINITY,
            }
        });
        CheckResult::new("beta_well_defined", n, d, 1e-10)
    }

    /// `β(β⁻¹(f)) = f`.
    pub fn beta_round_trip(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::BETA_ROUND_TRIP, |rng| {
            let f = random_fiber_element(rng);
            match beta_inv(&f).and_then(|rep| beta(&rep, f.point().mass())) {
                Ok(g) => fiber_distance(&f, &g),
                Err(_) => f64::INFINITY,
            }
        });
        CheckResult::new("beta_round_trip", n, d, 1e-9)
    }

    /// `β` lands in the fiber: `φ(Ap₀)τ(A)Φ = mτ(A)Φ`, relative to `max(1,m)·‖Ψ‖`.
    pub fn beta_forward_fiber(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::BETA_FORWARD, |rng| {
            let m = rng.gen_range(0.5..=2.0);
            let a = sample::sl2(rng, MAX_GROUP_NORM);
            let phi = random_plus(rng);
            let Ok(rest) = MassShellPoint::rest(m) else { return f64::INFINITY };
            let Ok(q) = MassShellPoint::new(act_momentum(&a, rest.momentum()), m) else { return f64::INFINITY };
            let psi = tau_apply(&a, phi);
            fiber_residual(&q, &psi) / (m.max(1.0) * psi.norm())
        });
        CheckResult::new("beta_forward_fiber", n, d, 1e-9)
    }

    /// `β(BA, Φ) = B·β(A, Φ)`.
    pub fn beta_equivariance(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::BETA_EQUIVARIANCE, |rng| {
            let m = rng.gen_range(0.5..=2.0);
            let a = sample::sl2(rng, 3.0);
            let b = sample::sl2(rng, 3.0);
            let Ok(rep) = AssociatedClassRep::new(a, random_plus(rng)) else { return f64::INFINITY };
            let lhs = beta(&rep.left_translate(&b), m);
            let rhs = beta(&rep, m).and_then(|f| f.transform(&b));
            match (lhs, rhs) {
                (Ok(x), Ok(y)) => fiber_distance(&x, &y),
                _ => f64::INFINITY,
            }
        });
        CheckResult::new("beta_equivariance", n, d, 1e-9)
    }

    /// Splitting `τ(T)Φ` gives `T·s` for `T ∈ SU₂`, and `s̄ = conjugate(s)`.
    pub fn split_equivariance(&self, n: usize) -> CheckResult {
        let d = self.sweep(n, stream::SPLIT, |rng| {
            let t = sample::su2(rng);
            let phi = random_plus(rng);
            let split = |v: FourSpinor| {
                AssociatedClassRep::new(SL2Element::IDENTITY, v).and_then(|r| split_conjugate_pair(&r))
            };
            match (split(phi), split(tau_apply(&t, phi))) {
                (Ok(p), Ok(q)) => (q.s - act(&t, p.s)).norm().max(q.consistency_defect()),
                _ => f64::INFINITY,
            }
        });
        CheckResult::new("split_equivariance", n, d, 1e-11)
    }

    /// `tr(τ|𝔖₊)` at `diag(e^{it}, e^{−it})` equals `2cos t` on `points` values of `t ∈ [0, 2π)`.
    pub fn spin_character(&self, points: usize) -> CheckResult {
        let d = self.exec.max(points, |k| {
            let t = std::f64::consts::TAU * k as f64 / points as f64;
            (spin_character(t) - Complex64::new(2.0 * t.cos(), 0.0)).norm()
        });
        CheckResult::new("spin_character", points, d, 1e-13)
    }

    /// Every record of a Cartesian section sample passes the fiber residual
    /// and carries `s̄ = conjugate(s)` exactly.
    pub fn conjugate_pair_section(&self, m: f64, extent: f64, nodes: usize) -> CheckResult {
        let grid = Grid::Cartesian { extent, nodes };
        let tol = 1e-9;
        let (d, count, exact) = match sample_field(m, &grid, tol, self.exec) {
            Ok(recs) => {
                let worst = recs.iter().map(|r| r.residual).fold(0.0, f64::max);
                let exact = recs.iter().all(|r| r.pair.sbar == conjugate(r.pair.s) && !r.flagged);
                (worst, recs.len(), exact)
            }
            Err(_) => (f64::INFINITY, 0, false),
        };
        let mut r = CheckResult::new("conjugate_pair_section", count, d, tol)
            .with_detail(format!("{nodes}^3 nodes, m = {m}, sbar == conj(s) exactly: {exact}"));
        r.pass &= exact;
        r
    }

    /// Central-difference residual of the position-space equation drops by
    /// `4 ± 10%` per halving of the step.
    pub fn planewave_convergence(&self, steps: &[f64]) -> CheckResult {
        let residuals: Option<Vec<f64>> = (|| {
            let sol = solve(1.0, 0.4, -0.3, 0.6).ok()?;
            let x = [0.25, -0.5, 0.75, 0.1];
            let mut out = Vec::new();
            for &h in steps {
                for psi in &sol.basis {
                    out.push(planewave_residual(&sol.point, psi, &x, Derivative::Central(h)).ok()?);
                }
            }
            Some(out)
        })();
        let Some(res) = residuals else {
            return CheckResult::new("planewave_convergence", steps.len(), f64::INFINITY, 0.1);
        };
        // ratios per basis vector between consecutive steps
        let mut worst: f64 = 0.0;
        let mut ratios = Vec::new();
        for k in 0..2 {
            for w in 0..steps.len().saturating_sub(1) {
                let ratio = res[2 * w + k] / res[2 * (w + 1) + k];
                ratios.push(ratio);
                worst = worst.max((ratio / 4.0 - 1.0).abs());
            }
        }
        let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.4}")).collect();
        CheckResult::new("planewave_convergence", steps.len(), worst, 0.1)
            .with_detail(format!("halving ratios [{}] (relative deviation from 4)", shown.join(", ")))
    }
}

fn fiber_distance(f: &FiberElement, g: &FiberElement) -> f64 {
    let dp = f
        .point()
        .momentum()
        .0
        .iter()
        .zip(g.point().momentum().0)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    dp.max((*f.spinor() - *g.spinor()).norm())
}

/// Runs every check with `opts.samples` random inputs per sweep.
pub fn run(opts: &VerifyOptions) -> VerifyReport {
    let mut suite = Suite::new(opts.seed, opts.exec);
    if let Some(c) = opts.corrupt_gamma {
        if c.mu < 4 && c.row < 4 && c.col < 4 {
            suite.gammas.0[c.mu][(c.row, c.col)] += c.delta;
        }
    }
    let n = opts.samples.max(1);
    let checks = vec![
        suite.lorentz_signature(),
        suite.cyclic_identity(n, 10.0),
        suite.eps_invariance(n),
        suite.conjugation_compatibility(n),
        suite.h_definition(n),
        suite.pi_commutes_with_j(n),
        suite.h_invariance(n),
        suite.clifford_relations(),
        suite.slash_square(n),
        suite.anticommutator(n),
        suite.equivariance(n),
        suite.covering_homomorphism(n),
        suite.covering_orthogonality(n),
        suite.covering_kernel(n),
        suite.covering_identity(),
        suite.covering_boost_value(),
        suite.boost_section(n),
        suite.boost_cocycle(n),
        suite.forward_cone(n),
        suite.rest_fiber(),
        suite.slash_spectrum(n),
        suite.su2_preserves_plus(n),
        suite.beta_well_defined(n),
        suite.beta_round_trip(n),
        suite.beta_forward_fiber(n),
        suite.beta_equivariance(n),
        suite.split_equivariance(n),
        suite.spin_character(100),
        suite.conjugate_pair_section(1.0, 2.0, 5),
        suite.planewave_convergence(&[1e-2, 5e-3, 2.5e-3]),
    ];
    let pass = checks.iter().all(|c| c.pass);
    VerifyReport {
        seed: opts.seed,
        samples: n,
        clifford_convention: CLIFFORD_CONVENTION,
        checks,
        pass,
    }
}
