//! `homlie`: exact computations on Hom-Lie algebras given as JSON.

mod commands;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "homlie", version, about = "Exact computations on Heisenberg Hom-Lie algebras")]
pub struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RepKind {
    Trivial,
    Adjoint,
    Faithful,
}

#[derive(Args, Debug)]
pub struct Input {
    /// Algebra JSON file.
    pub file: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Hom-Lie axioms and report structural properties.
    Check(Input),
    /// Split an algebra of Heisenberg type into H^m_lambda plus an abelian
    /// part, or emit the standard H^m_lambda with --m and --lambda.
    Heisenberg {
        #[arg(conflicts_with_all = ["m", "lambda"], required_unless_present_all = ["m", "lambda"])]
        file: Option<PathBuf>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Normal form of the twisting map of a three-dimensional algebra.
    NormalForm(Input),
    /// Decompose a Heisenberg algebra along the spectrum of its twist.
    Decompose {
        #[command(flatten)]
        input: Input,
        /// Gaussian eigenvalues not found among the rational roots.
        #[arg(long = "eig", allow_hyphen_values = true)]
        eig: Vec<String>,
    },
    /// The space of alpha^k-derivations.
    Der {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        k: i64,
    },
    /// Build a representation and check its axioms.
    Rep {
        #[command(flatten)]
        input: Input,
        #[arg(long = "rep", value_enum)]
        rep: RepKind,
        /// Dimension of the trivial module.
        #[arg(long = "dimT")]
        dim_t: Option<usize>,
    },
    /// Cocycles, coboundaries and cohomology in one degree.
    Cohomology {
        #[command(flatten)]
        input: Input,
        #[arg(long = "rep", value_enum)]
        rep: RepKind,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        r: i64,
        /// Use cochains compatible with the twisting maps.
        #[arg(long)]
        hom_restricted: bool,
        #[arg(long = "dimT")]
        dim_t: Option<usize>,
    },
    /// Compare every closed-form statement with the computed value.
    VerifyPaper {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        r: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
