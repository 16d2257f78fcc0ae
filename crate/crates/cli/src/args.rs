use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "twospinor", version, about = "Numerical 2-spinor algebra: gamma matrices, Lorentz covering, Dirac bundle sections")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for every randomized computation.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    /// Tolerance for fiber residuals (solve, sample-field).
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print gamma0..gamma3, eta, and the anticommutator residual table.
    Gamma,
    /// Run the randomized verification suite.
    Verify(VerifyArgs),
    /// Solve p-slash Psi = m Psi over a 3-momentum.
    #[command(allow_negative_numbers = true)]
    Solve(SolveArgs),
    /// Finite-difference residual of the position-space equation for a plane wave.
    #[command(allow_negative_numbers = true)]
    PlanewaveCheck(PlanewaveArgs),
    /// Sample the section of transported rest solutions over a momentum grid.
    #[command(allow_negative_numbers = true)]
    SampleField(SampleArgs),
    /// Print the Lorentz matrix of an SL(2,C) element given by 8 reals.
    #[command(allow_negative_numbers = true)]
    Lorentz(LorentzArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Random inputs per sweep.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,

    /// Run every sweep on the calling thread.
    #[arg(long)]
    pub sequential: bool,

    /// Add DELTA to entry (ROW, COL) of gamma MU before running: MU,ROW,COL,DELTA.
    #[arg(long, hide = true, value_name = "MU,ROW,COL,DELTA")]
    pub corrupt_gamma: Option<String>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Mass, m > 0.
    #[arg(short, long = "mass")]
    pub m: f64,
    #[arg(allow_hyphen_values = true)]
    pub p1: f64,
    #[arg(allow_hyphen_values = true)]
    pub p2: f64,
    #[arg(allow_hyphen_values = true)]
    pub p3: f64,
}

#[derive(Debug, Args)]
pub struct PlanewaveArgs {
    /// Mass, m > 0.
    #[arg(short, long = "mass")]
    pub m: f64,
    #[arg(allow_hyphen_values = true)]
    pub p1: f64,
    #[arg(allow_hyphen_values = true)]
    pub p2: f64,
    #[arg(allow_hyphen_values = true)]
    pub p3: f64,
    #[arg(allow_hyphen_values = true)]
    pub x0: f64,
    #[arg(allow_hyphen_values = true)]
    pub x1: f64,
    #[arg(allow_hyphen_values = true)]
    pub x2: f64,
    #[arg(allow_hyphen_values = true)]
    pub x3: f64,

    /// Central-difference step.
    #[arg(long, default_value_t = 1e-3, allow_hyphen_values = true)]
    pub step: f64,

    /// Differentiate the phase exactly instead of by finite differences.
    #[arg(long, conflicts_with = "step")]
    pub analytic: bool,

    /// Check only this fiber basis vector (0 or 1).
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..2))]
    pub basis: Option<u8>,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    /// Mass, m > 0.
    #[arg(short, long = "mass")]
    pub m: f64,

    /// Half-width of the momentum box (Cartesian and random grids).
    #[arg(long, default_value_t = 2.0)]
    pub extent: f64,

    /// Nodes per axis (Cartesian and rapidity grids).
    #[arg(long, default_value_t = 11)]
    pub nodes: usize,

    /// Rapidity-uniform grid with this maximal rapidity per axis.
    #[arg(long, value_name = "MAX_RAPIDITY", conflicts_with = "random")]
    pub rapidity: Option<f64>,

    /// N momenta drawn uniformly from the box, using --seed.
    #[arg(long, value_name = "N")]
    pub random: Option<usize>,

    /// Write records here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Compute nodes on the calling thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct LorentzArgs {
    /// Real part of a11; the entries of A follow as re/im pairs in row order.
    #[arg(allow_hyphen_values = true)]
    pub a11_re: f64,
    #[arg(allow_hyphen_values = true)]
    pub a11_im: f64,
    #[arg(allow_hyphen_values = true)]
    pub a12_re: f64,
    #[arg(allow_hyphen_values = true)]
    pub a12_im: f64,
    #[arg(allow_hyphen_values = true)]
    pub a21_re: f64,
    #[arg(allow_hyphen_values = true)]
    pub a21_im: f64,
    #[arg(allow_hyphen_values = true)]
    pub a22_re: f64,
    #[arg(allow_hyphen_values = true)]
    pub a22_im: f64,

    /// Divide A by a square root of its determinant first.
    #[arg(long)]
    pub normalize: bool,
}
