use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quasiherm::cli::{self, ModelArgs, ModelQuery, EXIT_INPUT};
use quasiherm::Tolerance;

#[derive(Parser)]
#[command(
    version,
    about = "Metric operators for quasi-Hermitian matrix Hamiltonians"
)]
#[command(allow_negative_numbers = true)]
struct Cli {
    /// Absolute tolerance for equality and positivity verdicts.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol_abs: f64,
    /// Relative tolerance for equality and positivity verdicts.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol_rel: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the spectrum of a Hamiltonian.
    Spectrum { input: PathBuf },
    /// Hermitian solution space of ΘH = H†Θ, optionally with a spectral metric.
    Metrics {
        input: PathBuf,
        /// Positive spectral weights, comma separated.
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<f64>>,
    },
    /// Charge and quasi-parity factors of a metric against a parity.
    Charge {
        input: PathBuf,
        #[arg(long)]
        metric: PathBuf,
        #[arg(long)]
        parity: PathBuf,
    },
    /// Restrict the metric space with auxiliary observables.
    Fix {
        input: PathBuf,
        /// JSON list of matrix objects.
        #[arg(long)]
        observables: PathBuf,
    },
    /// Closed forms of the two-level model.
    Model2x2 {
        #[arg(value_enum)]
        query: Query,
        #[arg(long)]
        alpha: f64,
        #[arg(long, conflicts_with = "gamma")]
        xi: Option<f64>,
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        d_scale: f64,
        /// Angles are in degrees.
        #[arg(long)]
        degrees: bool,
        /// Grid size for charge-scan.
        #[arg(long, default_value_t = 101)]
        grid: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Query {
    Hamiltonian,
    Metric,
    Energies,
    ChargeScan,
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let tol = match Tolerance::new(args.tol_abs, args.tol_rel) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    let result = match args.command {
        Command::Spectrum { input } => cli::cmd_spectrum(&input, &tol),
        Command::Metrics { input, weights } => cli::cmd_metrics(&input, weights.as_deref(), &tol),
        Command::Charge {
            input,
            metric,
            parity,
        } => cli::cmd_charge(&input, &metric, &parity, &tol),
        Command::Fix { input, observables } => cli::cmd_fix(&input, &observables, &tol),
        Command::Model2x2 {
            query,
            alpha,
            xi,
            gamma,
            d_scale,
            degrees,
            grid,
        } => {
            let query = match query {
                Query::Hamiltonian => ModelQuery::Hamiltonian,
                Query::Metric => ModelQuery::Metric,
                Query::Energies => ModelQuery::Energies,
                Query::ChargeScan => ModelQuery::ChargeScan { grid },
            };
            let model = ModelArgs {
                alpha,
                xi,
                gamma,
                d_scale,
                degrees,
            };
            cli::cmd_model2x2(query, &model, &tol)
        }
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
