//! Command-line front end: certified wrapped-uniformity and Benford digit bounds.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use benford_bounds::report::{
    cmd_digits, cmd_gauss, cmd_table1, cmd_verify, standard_battery, OutputFormat,
};
use benford_bounds::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "benford-bounds",
    version,
    about = "Certified error bounds for wrapped distributions and Benford digit probabilities"
)]
struct Cli {
    /// Output format for the report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Total variations of the log-Weibull base derivatives and the decimal
    /// digit-error bounds B_tau(k), with column minima marked.
    Table1 {
        /// Highest derivative order (at most 20).
        #[arg(long, default_value_t = 14)]
        kmax: u32,
        /// Weibull shape parameters, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = vec![1.0, 0.5, 0.3])]
        taus: Vec<f64>,
    },
    /// Closed-form bounds for wrapped normal densities (sigma >= 1/6).
    Gauss {
        /// Scale parameters, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        sigma: Vec<f64>,
        /// Also measure the wrapped distribution and check the bounds.
        #[arg(long)]
        verify: bool,
        /// Measurement grid cells (used with --verify).
        #[arg(long, default_value_t = 8192)]
        grid: usize,
    },
    /// Benford and exact probabilities with certified relative errors for
    /// digit prefixes such as `17@10` or `1a@16`.
    Digits {
        /// Model spec: gauss:sigma=<r>[,mu=<r>] | weibull:tau=<r>[,gamma=<r>]
        /// | uniform:width=<r> | pwl:file=<path>.
        #[arg(long)]
        model: String,
        /// Digit prefixes, `digits@base` (base defaults to --base).
        #[arg(required = true)]
        prefixes: Vec<String>,
        /// Default digit base; also the log base for Weibull models.
        #[arg(long, default_value_t = 10)]
        base: u32,
        /// Highest derivative order explored for the certificate.
        #[arg(long)]
        kmax: Option<u32>,
    },
    /// Measure wrapped discrepancies and check them against the certified bounds
    /// (exit code 1 if any bound is violated).
    Verify {
        /// Model spec; without it a standard battery of models is verified.
        #[arg(long)]
        model: Option<String>,
        /// Highest derivative order explored per model.
        #[arg(long)]
        kmax: Option<u32>,
        /// Measurement grid cells.
        #[arg(long, default_value_t = 8192)]
        grid: usize,
        /// Tolerance for the wrapped-density normalization check.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Log base for Weibull models.
        #[arg(long, default_value_t = 10)]
        base: u32,
    },
}

fn run(cli: Cli) -> Result<bool, Error> {
    let format = OutputFormat::from(cli.format);
    let (env, ok) = match cli.command {
        Command::Table1 { kmax, taus } => (cmd_table1(kmax, &taus)?, true),
        Command::Gauss {
            sigma,
            verify,
            grid,
        } => cmd_gauss(&sigma, verify, grid)?,
        Command::Digits {
            model,
            prefixes,
            base,
            kmax,
        } => cmd_digits(&model, &prefixes, base, kmax)?,
        Command::Verify {
            model,
            kmax,
            grid,
            tol,
            base,
        } => {
            let specs = match model {
                Some(spec) => vec![spec],
                None => standard_battery(),
            };
            cmd_verify(&specs, kmax, grid, tol, base)?
        }
    };
    print!("{}", env.render(format));
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failure: a measured value exceeded its certified bound");
            ExitCode::from(1)
        }
        Err(e @ Error::DominanceViolation { .. }) => {
            eprintln!("verification failure: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
