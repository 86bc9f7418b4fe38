//! `homkit`: batch front end for the homkit library.
//!
//! Every invocation reads JSON inputs, runs one computation and prints one
//! JSON document `{"command", "inputs_digest", "result"}`. Exit status is 0 on
//! success, 2 when the input is rejected and 1 on an internal failure.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::{CliError, Inputs};

#[derive(Parser, Debug)]
#[command(
    name = "homkit",
    version,
    about = "Relative homological algebra over the integers"
)]
struct Cli {
    /// Write the result document here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum GroupOp {
    Hom,
    Ext,
    Tensor,
    Tor,
    Iso,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum VariantArg {
    Homology,
    Cohomology,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smith normal form of a matrix
    Snf { matrix: PathBuf },
    /// Hom, Ext, tensor, Tor or isomorphism test for two groups
    GroupOp {
        #[arg(long, value_enum)]
        op: GroupOp,
        a: PathBuf,
        b: PathBuf,
    },
    /// Homology of a periodic complex
    Homology { complex: PathBuf },
    /// Group of homotopy classes [A, B]
    Hoclasses { a: PathBuf, b: PathBuf },
    /// Mapping cone of a chain map (one self-contained file, or source, target, map)
    Cone {
        #[arg(num_args = 1..=3, required = true)]
        files: Vec<PathBuf>,
    },
    /// Coefficient sequence for [A, B]
    Uct { a: PathBuf, b: PathBuf },
    /// Relative Ext^n(A, B)
    Ext {
        #[arg(long, default_value_t = 0)]
        n: usize,
        a: PathBuf,
        b: PathBuf,
    },
    /// Minimal projective resolution of a complex
    Resolve { complex: PathBuf },
    /// Phantom / monic / epic / equivalence flags of a chain map
    Classify {
        #[arg(num_args = 1..=3, required = true)]
        files: Vec<PathBuf>,
    },
    /// Ext class of a phantom map A → ΣB
    Kappa {
        #[arg(num_args = 1..=3, required = true)]
        files: Vec<PathBuf>,
    },
    /// Ext^n over Z[t]/(p) or Z[t, 1/t]
    RingExt {
        #[arg(long, default_value_t = 0)]
        n: usize,
        m: PathBuf,
        other: PathBuf,
    },
    /// Tor_n over Z[t]/(p) or Z[t, 1/t]
    RingTor {
        #[arg(long, default_value_t = 0)]
        n: usize,
        m: PathBuf,
        other: PathBuf,
    },
    /// Hochschild (co)homology of the Laurent ring
    Hh {
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Homology)]
        variant: VariantArg,
        input: PathBuf,
    },
    /// Six-term sequence of a graded group with an automorphism
    Pv { input: PathBuf },
    /// Compare H(A ⊗ B) with the Künneth prediction
    KunnethCheck { a: PathBuf, b: PathBuf },
    /// Randomized consistency checks
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: &Cli) -> Result<(String, Inputs, serde_json::Value), CliError> {
    use Command::*;
    let mut inputs = Inputs::default();
    let (name, result) = match &cli.command {
        Snf { matrix } => ("snf", commands::snf(inputs.read(matrix)?)?),
        GroupOp { op, a, b } => {
            inputs.option("op", &format!("{op:?}"));
            let (a, b) = (inputs.read(a)?, inputs.read(b)?);
            ("group-op", commands::group_op(*op, &a, &b)?)
        }
        Homology { complex } => ("homology", commands::homology(inputs.read(complex)?)?),
        Hoclasses { a, b } => {
            let (a, b) = (inputs.read(a)?, inputs.read(b)?);
            ("hoclasses", commands::hoclasses(&a, &b)?)
        }
        Cone { files } => ("cone", commands::cone(&inputs.read_all(files)?)?),
        Uct { a, b } => {
            let (a, b) = (inputs.read(a)?, inputs.read(b)?);
            ("uct", commands::uct(&a, &b)?)
        }
        Ext { n, a, b } => {
            inputs.option("n", &n.to_string());
            let (a, b) = (inputs.read(a)?, inputs.read(b)?);
            ("ext", commands::ext(&a, &b, *n)?)
        }
        Resolve { complex } => ("resolve", commands::resolve(inputs.read(complex)?)?),
        Classify { files } => ("classify", commands::classify(&inputs.read_all(files)?)?),
        Kappa { files } => ("kappa", commands::kappa(&inputs.read_all(files)?)?),
        RingExt { n, m, other } => {
            inputs.option("n", &n.to_string());
            let (m, o) = (inputs.read(m)?, inputs.read(other)?);
            ("ring-ext", commands::ring_ext(&m, &o, *n)?)
        }
        RingTor { n, m, other } => {
            inputs.option("n", &n.to_string());
            let (m, o) = (inputs.read(m)?, inputs.read(other)?);
            ("ring-tor", commands::ring_tor(&m, &o, *n)?)
        }
        Hh { n, variant, input } => {
            inputs.option("n", &n.to_string());
            inputs.option("variant", &format!("{variant:?}"));
            ("hh", commands::hh(inputs.read(input)?, *n, *variant)?)
        }
        Pv { input } => ("pv", commands::pv(inputs.read(input)?)?),
        KunnethCheck { a, b } => {
            let (a, b) = (inputs.read(a)?, inputs.read(b)?);
            ("kunneth-check", commands::kunneth_check(&a, &b)?)
        }
        Selftest { seed } => {
            inputs.option("seed", &seed.to_string());
            ("selftest", commands::selftest(*seed)?)
        }
    };
    Ok((name.to_string(), inputs, result))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((command, inputs, result)) => {
            let doc = json!({
                "command": command,
                "inputs_digest": inputs.digest(),
                "result": result,
            });
            let text = serde_json::to_string_pretty(&doc).expect("values serialize") + "\n";
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("{}", CliError::io(path, &e).to_json());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.status())
        }
    }
}
