//! Numerical 2-spinor algebra.
//!
//! The crate builds, from a symplectic form on ℂ², the real Minkowski space
//! of Hermitian bitensors, the covering `SL₂(ℂ) → SO⁺(1,3)`, the Clifford
//! module `S ⊕ S̄` with its γ-matrices, and the Dirac bundle over the forward
//! mass shell together with its isomorphism to an associated bundle.
//!
//! Modules follow that order:
//!
//! * [`spinor`]: `S`, `S̄`, the forms `ε`, `ε̄`, and `SL₂(ℂ)`.
//! * [`bitensor`]: `S ⊗ S̄`, the real structure, `h`, and the covering map.
//! * [`clifford`]: `φ`, the γ-matrices, `p̸`, and `τ`.
//! * [`momentum`]: momenta, the mass shell, and the boost section.
//! * [`bundle`]: fibers, the associated bundle, and the map `β`.
//! * [`field`]: solutions, plane waves, and sampled sections.
//! * [`verify`]: randomized checks of every identity above.
//!
//! Sweeps run through [`par::Execution`]; with the `parallel` feature they
//! use rayon, otherwise they run sequentially. Results are identical either way.

// NaN-rejecting guards are written as `!(x <= tol)`; index loops mirror the formulas.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod bitensor;
pub mod bundle;
pub mod clifford;
pub mod error;
pub mod field;
pub mod linalg;
pub mod momentum;
pub mod par;
pub mod sample;
pub mod spinor;
pub mod verify;

pub use bitensor::{BiTensor, LorentzMatrix, MinkowskiVec};
pub use bundle::{AssociatedClassRep, ConjugatePair, FiberElement};
pub use clifford::{EndS4, FourSpinor, GammaTable};
pub use error::{Error, Result};
pub use field::{FieldSample, Grid, Solution};
pub use linalg::{Mat2, Mat4};
pub use momentum::{MassShellPoint, Momentum};
pub use par::Execution;
pub use spinor::{CoSpinor2, SL2Element, Spinor2};
