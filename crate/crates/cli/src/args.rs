use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fockcalc_core::fock::spectrum::DEFAULT_KMAX;
use fockcalc_core::fock::SpectrumMode;
use fockcalc_core::sb::DEFAULT_NODES;

#[derive(Debug, Parser)]
#[command(name = "fockcalc", version, about = "Differential operators with polynomial symbols on Fock space")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Emit a human-readable rendering.
    #[arg(long, global = true)]
    pub text: bool,
}

#[derive(Debug, Args)]
pub struct Source {
    /// Operator file (JSON); `-` reads stdin.
    pub file: Option<PathBuf>,
    /// A built-in operator instead of an operator file.
    #[arg(long, value_name = "NAME")]
    pub example: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the adjoint operator.
    Adjoint {
        #[command(flatten)]
        source: Source,
    },
    /// Decide selfadjointness or C-selfadjointness.
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        mode: CheckMode,
        /// Symmetry tolerance for approximate coefficients.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Point spectrum by closed form or by the shifted-monomial oracle.
    Spectrum {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "formula")]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_KMAX)]
        kmax: usize,
        /// Truncation for residual checks.
        #[arg(long)]
        n: Option<usize>,
        /// Eigenpair residual tolerance.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Translate across the Segal–Bargmann transform.
    Sb {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        direction: Direction,
    },
    /// Run property suites on an operator file or on every built-in example.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Truncation N.
        #[arg(long)]
        n: Option<usize>,
        /// Gauss–Hermite nodes.
        #[arg(long, default_value_t = DEFAULT_NODES)]
        nodes: usize,
    },
    /// List the built-in examples.
    Examples,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckMode {
    #[value(name = "self")]
    SelfAdjoint,
    #[value(name = "c-self")]
    CSelf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Formula,
    Oracle,
}

impl From<ModeArg> for SpectrumMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Formula => SpectrumMode::Formula,
            ModeArg::Oracle => SpectrumMode::Oracle,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    #[value(name = "to-l2")]
    ToL2,
    #[value(name = "to-fock")]
    ToFock,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Adjoint,
    Conjugation,
    Kernel,
    Spectrum,
    Sb,
    All,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Adjoint => "adjoint",
            Suite::Conjugation => "conjugation",
            Suite::Kernel => "kernel",
            Suite::Spectrum => "spectrum",
            Suite::Sb => "sb",
            Suite::All => "all",
        }
    }
}
