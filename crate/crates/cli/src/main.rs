mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "lenpres",
    version,
    about = "Length-preserving transformation semigroups"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0, global = true)]
    pub workers: usize,
    /// Directory for cached enumerations.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Plain,
    Star,
    Full,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CounterKind {
    /// A non-regular element of T_n(l).
    Regularity,
    /// An element of T_n(l) outside T*_n(l).
    Strictness,
}

#[derive(Args, Debug)]
pub struct SpecArgs {
    #[arg(long)]
    pub n: usize,
    /// Required unless the variant is `full`.
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long, value_enum, default_value_t = VariantArg::Plain)]
    pub variant: VariantArg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the elements of T_n(l), T*_n(l) or T_n.
    Enumerate {
        #[command(flatten)]
        spec: SpecArgs,
        /// Write the element list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test membership and report the first violated pair.
    Member {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        element: String,
    },
    /// Regularity of one element, or of the whole semigroup.
    Regular {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        element: Option<String>,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// A regularity witness, constructed where a construction exists.
    Witness {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        element: String,
    },
    /// The explicit non-regular (or non-reflecting) element for (n, l).
    Counterexample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, value_enum, default_value_t = CounterKind::Regularity)]
        kind: CounterKind,
    },
    /// The subsemigroup generated by the maps in a file.
    Closure {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pairs and middle, or classes with multiplicities.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
    },
    /// Replay every claim against exhaustive enumeration.
    Verify {
        #[arg(long, default_value_t = lenpres_core::verify::DEFAULT_MAX_N)]
        max_n: usize,
        /// Permit --max-n 8 (roughly 50x the runtime of the default).
        #[arg(long)]
        allow_large: bool,
        /// Record per-claim wall-clock time (the report is then not reproducible).
        #[arg(long)]
        timings: bool,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if outcome.success {
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
