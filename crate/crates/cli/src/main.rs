mod commands;
mod config;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::{CliError, Rendered};
use crate::config::Config;

#[derive(Debug, Parser)]
#[command(name = "hypertangent", version, about = "Exact hypertangent certificates and finite-field regularity checks")]
struct Cli {
    /// TOML file with `default_prime` and a `[limits]` table.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(flatten)]
    overrides: LimitOverrides,

    #[command(subcommand)]
    command: Command,
}

/// Flags that take precedence over the config file.
#[derive(Debug, Args)]
struct LimitOverrides {
    #[arg(long, global = true)]
    max_vars: Option<usize>,
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    #[arg(long, global = true)]
    max_pairs: Option<usize>,
    #[arg(long, global = true)]
    max_basis: Option<usize>,
    #[arg(long, global = true)]
    max_terms: Option<usize>,
    #[arg(long, global = true)]
    scan_limit: Option<u64>,
    #[arg(long, global = true)]
    point_budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Crux certificate for a degree vector.
    Certify {
        #[arg(required = true)]
        degrees: Vec<u32>,
        /// Also include the selection profile, codimension reports and ledger.
        #[arg(long)]
        full: bool,
    },
    /// Tabulate certificates over a range of degree vectors.
    Scan {
        #[arg(long)]
        k_min: u32,
        #[arg(long)]
        k_max: u32,
        #[arg(long, default_value_t = 2)]
        d_min: u32,
        #[arg(long)]
        d_max: u32,
        /// deltaOk, sizeOk, numericPass or overallPass; repeatable.
        #[arg(long)]
        filter: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Minimum of sum a_i (a_i + 1) over k integers >= 2 summing to A.
    XiMin {
        k: u32,
        total: u32,
        /// Also enumerate and compare.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Line and non-line codimension reports.
    Codim {
        #[arg(required = true)]
        degrees: Vec<u32>,
    },
    /// Affine Krull dimension of the ideal generated by a polynomial file.
    GroebnerDim { file: PathBuf },
    /// Regularity check at the origin of an instance file.
    CheckReg {
        file: PathBuf,
        /// `random:N` or `file:PATH` (a polynomial file of linear forms).
        #[arg(long, default_value = "random:3")]
        h: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a seeded random instance.
    RandomInstance {
        #[arg(required = true)]
        degrees: Vec<u32>,
        #[arg(short, long)]
        p: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; the instance is embedded in the record when omitted.
        #[arg(short, long)]
        o: Option<PathBuf>,
    },
    /// Step-by-step multiplicity and degree bounds.
    Ledger {
        #[arg(required = true)]
        degrees: Vec<u32>,
    },
    /// Pass rate of the regularity check on random instances.
    MonteCarlo {
        #[arg(required = true)]
        degrees: Vec<u32>,
        #[arg(short, long)]
        p: Option<u64>,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 3)]
        h_per_trial: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn load_config(cli: &Cli) -> Result<Config, CliError> {
    let mut config = match &cli.config {
        Some(path) => Config::load(path).map_err(CliError::Input)?,
        None => Config::default(),
    };
    let o = &cli.overrides;
    let l = &mut config.limits;
    if let Some(v) = o.max_vars {
        l.max_vars = v;
    }
    if let Some(v) = o.max_degree {
        l.max_degree = v;
    }
    if let Some(v) = o.max_pairs {
        l.max_pairs = v;
    }
    if let Some(v) = o.max_basis {
        l.max_basis = v;
    }
    if let Some(v) = o.max_terms {
        l.max_terms = v;
    }
    if let Some(v) = o.scan_limit {
        l.scan_limit = v;
    }
    if let Some(v) = o.point_budget {
        l.point_budget = v;
    }
    Ok(config)
}

fn run(cli: Cli) -> Result<Rendered, CliError> {
    let config = load_config(&cli)?;
    let limits = &config.limits;
    match cli.command {
        Command::Certify { degrees, full } => commands::certify(&degrees, full),
        Command::Scan {
            k_min,
            k_max,
            d_min,
            d_max,
            filter,
            format,
        } => commands::scan(k_min, k_max, d_min, d_max, &filter, format, limits),
        Command::XiMin {
            k,
            total,
            bruteforce,
        } => commands::xi_min(k, total, bruteforce),
        Command::Codim { degrees } => commands::codim(&degrees),
        Command::GroebnerDim { file } => commands::groebner_dim(&file, limits),
        Command::CheckReg { file, h, seed } => commands::check_reg(&file, &h, seed, limits),
        Command::RandomInstance { degrees, p, seed, o } => commands::random_instance(
            &degrees,
            p.unwrap_or(config.default_prime),
            seed,
            o.as_deref(),
            limits,
        ),
        Command::Ledger { degrees } => commands::ledger(&degrees),
        Command::MonteCarlo {
            degrees,
            p,
            trials,
            h_per_trial,
            seed,
        } => commands::monte_carlo(
            &degrees,
            p.unwrap_or(config.default_prime),
            trials,
            h_per_trial,
            seed,
            limits,
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(rendered) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(rendered.text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
