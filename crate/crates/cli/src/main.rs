mod cache;
mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

/// Orders of representatives of elliptic Weyl group elements in semisimple groups.
#[derive(Parser, Debug)]
#[command(name = "weylspin", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,

    /// Directory holding cached class atlases (JSON Lines, one class per line).
    #[arg(long, env = "WEYLSPIN_CACHE", global = true)]
    cache_dir: Option<PathBuf>,

    /// Characteristic of the base field; 2 is refused, an odd prime selects the field of the
    /// Clifford realizations.
    #[arg(long, global = true)]
    characteristic: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// auto, exhaustive, diagram or sampling.
    #[arg(long, default_value = "auto")]
    pub strategy: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest Weyl group order enumerated exhaustively.
    #[arg(long, default_value_t = 3_000_000)]
    pub budget: u64,
    /// Elliptic samples drawn by the sampling strategy.
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    /// Random draws before sampling gives up.
    #[arg(long, default_value_t = 10_000_000)]
    pub max_draws: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartan matrix, roots, highest roots, fundamental group and central involutions.
    Info {
        /// Root system type such as B5 or E7.
        #[arg(value_name = "TYPE")]
        ty: String,
    },
    /// The elliptic conjugacy classes with their spins.
    Classes {
        #[arg(value_name = "TYPE")]
        ty: String,
        #[command(flatten)]
        run: RunArgs,
        /// Recompute even on a cache hit and fail if the results differ.
        #[arg(long)]
        recompute: bool,
    },
    /// Order, spin signature and spins of one elliptic element.
    Spin {
        #[arg(value_name = "TYPE")]
        ty: String,
        /// Class name such as A5xA2, w3, -I or coxeter.
        #[arg(long, group = "selector", allow_hyphen_values = true)]
        class: Option<String>,
        /// Characteristic polynomial, e.g. "(t^6+1)(t+1)".
        #[arg(long, group = "selector", allow_hyphen_values = true)]
        charpoly: Option<String>,
        /// Word in the simple reflections, e.g. "1 2 3" or "1,2,3".
        #[arg(long, group = "selector", allow_hyphen_values = true)]
        word: Option<String>,
        /// Roots in simple-root coordinates, e.g. "1,0,0;0,1,0;0,0,1".
        #[arg(long, group = "selector", allow_hyphen_values = true)]
        roots: Option<String>,
        /// universal, adjoint or an intermediate lattice index; all lattices when omitted.
        #[arg(long)]
        lattice: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Runs verification suites; exits with status 2 when any check fails.
    VerifyTables {
        /// Suites to run (comma separated or repeated); `all` runs every suite.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        #[arg(long, default_value_t = 9)]
        max_rank: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        e8_samples: u64,
        #[arg(long, default_value_t = 500)]
        relation_pairs: usize,
        #[arg(long, default_value_t = 200)]
        oracle_samples: usize,
        #[arg(long, default_value_t = 150)]
        property_samples: usize,
        #[arg(long, default_value_t = 3_000_000)]
        budget: u64,
        /// List passing checks too.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Debug)]
pub enum CliError {
    Core(weylspin::Error),
    Io(String),
}

impl From<weylspin::Error> for CliError {
    fn from(e: weylspin::Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

const EXIT_MISMATCH: u8 = 2;
const EXIT_CONFIG: u8 = 3;
const EXIT_BUDGET: u8 = 4;

fn exit_code(e: &CliError) -> u8 {
    use weylspin::Error;
    match e {
        CliError::Core(Error::Mismatch(_)) => EXIT_MISMATCH,
        CliError::Core(Error::Config(_) | Error::Domain(_) | Error::Unsupported(_)) => EXIT_CONFIG,
        CliError::Core(Error::Budget { .. }) => EXIT_BUDGET,
        CliError::Core(Error::Invariant(_)) | CliError::Io(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
        FormatArg::Text => Format::Text,
    };
    let ctx = commands::Context {
        cache_dir: cli.cache_dir,
        characteristic: cli.characteristic,
    };
    let result = ctx.check_characteristic().and_then(|()| match cli.command {
        Command::Info { ty } => commands::info(&ty),
        Command::Classes { ty, run, recompute } => commands::classes(&ctx, &ty, &run, recompute),
        Command::Spin {
            ty,
            class,
            charpoly,
            word,
            roots,
            lattice,
            run,
        } => {
            let selector = commands::Selector::from_args(class, charpoly, word, roots)?;
            commands::spin(&ctx, &ty, &selector, lattice.as_deref(), &run)
        }
        Command::VerifyTables {
            suite,
            max_rank,
            seed,
            e8_samples,
            relation_pairs,
            oracle_samples,
            property_samples,
            budget,
            verbose,
        } => {
            let opts = commands::VerifyOptions {
                suites: suite,
                max_rank,
                seed,
                e8_samples,
                relation_pairs,
                oracle_samples,
                property_samples,
                budget,
                verbose,
            };
            commands::verify_tables(&ctx, &opts)
        }
    });
    match result {
        Ok(report) => {
            if let Err(e) = report.emit(format) {
                eprintln!("error: {e}");
                return ExitCode::from(exit_code(&e));
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_MISMATCH)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
