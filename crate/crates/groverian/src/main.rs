//! Command-line front end: `measure` a state file, export the Grover
//! `trajectory`, or run the closed-form `audit`. All output is
//! machine-readable; exit code 0 on success, 2 on input errors, 3 when a
//! requested method is not applicable to the state.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use groverian::audit::{formula_audit, render_audit_csv, render_summary, summarize, Ensemble};
use groverian::io::read_state_file;
use groverian::report::{
    measure_records, render_measure_json, render_trajectory_csv, trajectory_rows, MethodChoice,
};
use groverian::state::NormPolicy;
use groverian::Error;

const EXIT_INPUT: u8 = 2;
const EXIT_INELIGIBLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "groverian",
    about = "Groverian entanglement of qutrit registers",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute pmax, G, and entropy for a state file.
    Measure {
        /// Path to a JSON state document {"n", "d", "amps": [[re, im], ...]}.
        #[arg(long)]
        state: PathBuf,
        /// Which route(s) to evaluate.
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        /// Rescale off-norm input instead of rejecting it.
        #[arg(long)]
        normalize: bool,
    },
    /// Run Grover iterations on two qutrits and export the entanglement
    /// evolution as CSV.
    Trajectory {
        /// Marked basis index (|11⟩ is 0).
        #[arg(long, default_value_t = 0)]
        marked: usize,
        /// Number of Grover iterations.
        #[arg(long, default_value_t = 2)]
        iterations: usize,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare the closed form against the oracle on a random ensemble.
    Audit {
        /// Number of random states (two fixed sentinels are always
        /// prepended).
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Ensemble seed.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Coefficient ensemble.
        #[arg(long, value_enum, default_value_t = EnsembleArg::Real)]
        ensemble: EnsembleArg,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Oracle,
    Variational,
    ClosedForm,
    All,
}

impl From<MethodArg> for MethodChoice {
    fn from(value: MethodArg) -> Self {
        match value {
            MethodArg::Oracle => MethodChoice::Oracle,
            MethodArg::Variational => MethodChoice::Variational,
            MethodArg::ClosedForm => MethodChoice::ClosedForm,
            MethodArg::All => MethodChoice::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EnsembleArg {
    Real,
    Complex,
}

impl From<EnsembleArg> for Ensemble {
    fn from(value: EnsembleArg) -> Self {
        match value {
            EnsembleArg::Real => Ensemble::Real,
            EnsembleArg::Complex => Ensemble::Complex,
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NotBipartite { .. }
        | Error::NotQutritPair { .. }
        | Error::ComplexAmplitudes { .. } => EXIT_INELIGIBLE,
        _ => EXIT_INPUT,
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Measure {
            state,
            method,
            normalize,
        } => {
            let policy = if normalize {
                NormPolicy::Normalize
            } else {
                NormPolicy::Strict
            };
            let state = read_state_file(&state, policy)?;
            let records = measure_records(&state, method.into())?;
            print!("{}", render_measure_json(&state, &records));
            Ok(())
        }
        Command::Trajectory {
            marked,
            iterations,
            out,
        } => {
            let rows = trajectory_rows(marked, iterations)?;
            std::fs::write(&out, render_trajectory_csv(&rows))?;
            Ok(())
        }
        Command::Audit {
            samples,
            seed,
            ensemble,
            out,
        } => {
            let rows = formula_audit(samples, seed, ensemble.into());
            std::fs::write(&out, render_audit_csv(&rows))?;
            println!("{}", render_summary(&summarize(&rows)));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
