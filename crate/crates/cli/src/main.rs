use std::io::{self, Read};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use raag_cli::commands;
use raag_cli::{CliError, InputFormat, Report};

/// Invariants, isomorphism decisions and graph-algebra realizations for
/// right-angled Artin monoid C*-algebras.
#[derive(Parser)]
#[command(name = "raag", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input format; detected from the text when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<InputFormat>,
    /// Emit the JSON document.
    #[arg(long, global = true, conflicts_with = "human")]
    json: bool,
    /// Emit the human-readable table (the default).
    #[arg(long, global = true)]
    human: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Full verdict for a graph or profile.
    Classify { input: String },
    /// Decide isomorphism and stable isomorphism.
    Compare { a: String, b: String },
    /// All graphs on n vertices up to isomorphism, with invariants.
    Enumerate {
        n: usize,
        /// Check against the frozen five-vertex table.
        #[arg(long)]
        golden: bool,
        /// Largest n accepted.
        #[arg(long, env = "RAAG_LIMIT")]
        limit: Option<usize>,
    },
    /// Directed graph realizing a single-factor profile.
    Realize { input: String },
    /// K-theory of a directed graph.
    Ktheory { input: String },
    /// Clique counts and Euler characteristic.
    Euler { input: String },
    /// Co-irreducible components.
    Decompose { input: String },
}

/// `-` reads stdin, an existing path reads the file, anything else is the
/// input text itself.
fn read_source(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else if Path::new(arg).is_file() {
        Ok(std::fs::read_to_string(arg)?)
    } else {
        Ok(arg.to_string())
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Classify { input } => commands::classify(&read_source(input)?, f),
        Command::Compare { a, b } => commands::compare_cmd(&read_source(a)?, &read_source(b)?, f),
        Command::Enumerate { n, golden, limit } => commands::enumerate(*n, *limit, *golden),
        Command::Realize { input } => commands::realize_cmd(&read_source(input)?, f),
        Command::Ktheory { input } => commands::ktheory_cmd(&read_source(input)?, f),
        Command::Euler { input } => commands::euler_cmd(&read_source(input)?, f),
        Command::Decompose { input } => commands::decompose_cmd(&read_source(input)?, f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                print!("{}", raag_cli::json::render(&report.json));
            } else {
                print!("{}", report.human);
            }
            ExitCode::from(report.status.exit_code())
        }
        Err(e) => {
            eprintln!("raag: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
