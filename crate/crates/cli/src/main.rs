use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use segrelab_cli::commands::{self, resolve_max_points, Exit, UsageError, VerifyConfig, MAX_POINTS_ENV};
use segrelab_cli::suites::{registry, Ctx};

#[derive(Parser)]
#[command(name = "segrelab", version, about = "Partial linear spaces, Segre products and hyperplane complements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a structure from a JSON spec and write it as Incidence JSON.
    Build {
        #[arg(short = 's', long = "spec")]
        spec: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Evaluate properties of an Incidence JSON file. Use `name=true|false` to state expectations.
    Check {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        #[arg(short = 'p', long = "props")]
        props: String,
    },
    /// Run verification suites.
    Verify {
        /// Comma-separated suite ids, or `all`.
        #[arg(long, value_delimiter = ',', required_unless_present = "list")]
        suites: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long)]
        report: Option<PathBuf>,
        /// Point cap for suite instances. Overrides SEGRELAB_MAX_POINTS.
        #[arg(long)]
        max_points: Option<usize>,
        /// Field order for suites parameterised by a prime.
        #[arg(long)]
        p: Option<u32>,
        /// Print the registered suites and exit.
        #[arg(long)]
        list: bool,
    },
}

fn run(cli: Cli) -> Result<Exit, UsageError> {
    match cli.command {
        Command::Build { spec, out } => commands::build(&spec, &out),
        Command::Check { input, props } => commands::check(&input, &props),
        Command::Verify { list: true, .. } => {
            for s in registry() {
                println!("{:<48} {}", s.id, s.statement);
            }
            Ok(Exit::Ok)
        }
        Command::Verify { suites, seed, workers, report, max_points, p, .. } => {
            let env = std::env::var(MAX_POINTS_ENV).ok();
            let max_points = resolve_max_points(max_points, env.as_deref())?;
            if let Some(p) = p {
                if !matches!(p, 2 | 3 | 5 | 7) {
                    return Err(UsageError(format!("--p must be a small prime (2, 3, 5 or 7), got {p}")));
                }
            }
            let config = VerifyConfig { suites, ctx: Ctx { seed, p, max_points }, workers, report };
            commands::verify(&config)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(e) => ExitCode::from(e as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Exit::Usage as u8)
        }
    }
}
