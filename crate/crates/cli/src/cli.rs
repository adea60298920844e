//! Command-line interface definitions.

use clap::{Args, Parser, Subcommand, ValueEnum};
use semiwedge_core::DomainKind;

/// Exterior-semialgebra toolkit: derivations, quasi-inverses, and
/// Cayley-Hamilton checks over exact semirings.
#[derive(Debug, Parser)]
#[command(name = "semiwedge", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the eigen pairs e_0..e_n and the derived pairs h_0..h_n of a matrix.
    Eigenpairs(CommonArgs),
    /// Verify the Cayley-Hamilton balance identity over every basis split.
    CheckCh(CommonArgs),
    /// Verify that quasi-inverse composites surpass the original multivector.
    CheckQuasiInverse(CommonArgs),
    /// Verify the interchange law between derivations and quasi-inverses.
    CheckPrech(CommonArgs),
    /// Verify the product rule for higher derivations on disjoint factors.
    CheckLeibniz(CommonArgs),
    /// Run a small worked example on the rank-5 shift endomorphism.
    Demo(CommonArgs),
}

impl Command {
    pub fn args(&self) -> &CommonArgs {
        match self {
            Command::Eigenpairs(a)
            | Command::CheckCh(a)
            | Command::CheckQuasiInverse(a)
            | Command::CheckPrech(a)
            | Command::CheckLeibniz(a)
            | Command::Demo(a) => a,
        }
    }
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Coefficient semiring.
    #[arg(long, value_enum, default_value_t = DomainArg::Int)]
    pub semiring: DomainArg,

    /// Matrix of the endomorphism: inline JSON (e.g. "[[0,1],[1,0]]") or a
    /// path to a JSON or CSV file.
    #[arg(long)]
    pub matrix: Option<String>,

    /// Rank of the exterior algebra (number of basis vectors), 2..=8.
    #[arg(long)]
    pub n: Option<usize>,

    /// Truncation order for z-series checks (default 2n, must be >= n).
    #[arg(long)]
    pub trunc: Option<usize>,

    /// RNG seed; falls back to the GRASSMANN_SEED environment variable, then 0.
    #[arg(long)]
    pub seed: Option<u64>,

    /// Number of random trials for check subcommands.
    #[arg(long, default_value_t = 100)]
    pub trials: usize,

    /// Emit one JSON report object per line instead of human-readable text.
    #[arg(long)]
    pub json: bool,
}

/// Semiring selector exposed on the command line.
#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum DomainArg {
    /// Arbitrary-precision integers.
    Int,
    /// Arbitrary-precision rationals.
    Rat,
    /// Arbitrary-precision naturals (no negation).
    Nat,
    /// Booleans with or/and.
    Bool,
    /// Max-plus: integers with max as addition and + as multiplication.
    Maxplus,
}

impl DomainArg {
    pub fn kind(self) -> DomainKind {
        match self {
            DomainArg::Int => DomainKind::Integers,
            DomainArg::Rat => DomainKind::Rationals,
            DomainArg::Nat => DomainKind::Naturals,
            DomainArg::Bool => DomainKind::Booleans,
            DomainArg::Maxplus => DomainKind::MaxPlus,
        }
    }
}
