use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use loday_cli::commands;
use loday_cli::files::InputError;
use loday_cli::report::Report;
use loday_cli::suite::{run_suite, SuiteOptions};
use loday_core::SignPolicy;

#[derive(Parser)]
#[command(name = "loday", version, about = "Exact checks for Leibniz algebras and their Loday world")]
struct Cli {
    /// Print the machine-readable report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an identity of a structure-constant table.
    Check {
        #[command(subcommand)]
        kind: CheckKind,
    },
    /// Expand mu for a Leibniz table.
    Mu { algebra: PathBuf },
    /// Poisson bracket of two functions on the cotangent bundle of an algebra.
    Poisson {
        f: PathBuf,
        g: PathBuf,
        #[arg(long)]
        plane: PathBuf,
    },
    /// Decide whether theta, optionally twisted, is a structure.
    Structure {
        algebra: PathBuf,
        #[arg(long)]
        twist: Option<PathBuf>,
    },
    /// Invariance of a metric, checked directly and through {mu,g}.
    Metric { algebra: PathBuf, metric: PathBuf },
    /// Hamiltonian flow of the inverse metric applied to mu.
    Flow { algebra: PathBuf, metric: PathBuf },
    /// Run the full verification suite.
    Verify {
        #[arg(long, default_value_t = 3)]
        dim_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Dual commutator sign convention under test.
        #[arg(long, hide = true, default_value = "minus", value_parser = parse_policy)]
        dual_sign_policy: SignPolicy,
    },
    /// Compare the candidate dual commutator sign conventions.
    ConventionSearch {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
    },
}

#[derive(Subcommand)]
enum CheckKind {
    Leibniz { algebra: PathBuf },
    Zinbiel { algebra: PathBuf },
}

fn parse_policy(s: &str) -> Result<SignPolicy, String> {
    SignPolicy::from_id(s).ok_or_else(|| {
        let ids: Vec<&str> = SignPolicy::ALL.iter().map(|p| p.id()).collect();
        format!("unknown convention {s:?}; expected one of {}", ids.join(", "))
    })
}

fn run(command: Command) -> Result<Report, InputError> {
    match command {
        Command::Check { kind: CheckKind::Leibniz { algebra } } => commands::check_leibniz(&algebra),
        Command::Check { kind: CheckKind::Zinbiel { algebra } } => commands::check_zinbiel(&algebra),
        Command::Mu { algebra } => commands::mu(&algebra),
        Command::Poisson { f, g, plane } => commands::poisson_bracket(&f, &g, &plane),
        Command::Structure { algebra, twist } => commands::structure(&algebra, twist.as_deref()),
        Command::Metric { algebra, metric } => commands::metric(&algebra, &metric),
        Command::Flow { algebra, metric } => commands::flow(&algebra, &metric),
        Command::Verify {
            dim_max,
            seed,
            samples,
            dual_sign_policy,
        } => {
            if dim_max == 0 {
                return Err(InputError::Usage("--dim-max must be at least 1".into()));
            }
            Ok(run_suite(&SuiteOptions {
                dim_max,
                seed,
                samples,
                policy: dual_sign_policy,
            }))
        }
        Command::ConventionSearch { dim, max_len } => commands::convention_search(dim, max_len),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            if cli.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
