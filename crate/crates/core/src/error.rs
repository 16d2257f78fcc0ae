use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite component in {0}")]
    NonFinite(&'static str),

    #[error("determinant {re}{im:+}i is not 1 within {tol:e}")]
    BadDeterminant { re: f64, im: f64, tol: f64 },

    #[error("cannot normalize a singular matrix")]
    Singular,

    #[error("bitensor is not a world vector: reality defect {defect:e}")]
    NotReal { defect: f64 },

    #[error("Lorentz orthogonality residual {residual:e} exceeds {tol:e}")]
    NumericalDrift { residual: f64, tol: f64 },

    #[error("mass must be positive, got {0}")]
    BadMass(f64),

    #[error("momentum is off the mass shell: |Q(p) - m^2| = {defect:e}")]
    NotOnShell { defect: f64 },

    #[error("degenerate boost: tr H + 2 = {0:e}")]
    Degenerate(f64),

    #[error("4-spinor is not in the +1 eigenspace of gamma0: defect {defect:e}")]
    InvalidClassRep { defect: f64 },

    #[error("4-spinor is not in the Dirac fiber: defect {defect:e}")]
    NotInFiber { defect: f64 },

    #[error("finite-difference step must be positive, got {0}")]
    BadStep(f64),

    #[error("gamma index {0} out of range 0..=3")]
    BadIndex(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
