mod commands;
mod oracle_suites;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "osg", version, about = "Finite ordered semigroup workbench")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the semigroup, partial order and compatibility axioms.
    Validate { file: PathBuf },
    /// Full report: idempotents, Green's classes, inverses, regularity,
    /// congruences and every catalog condition.
    Analyze { file: PathBuf },
    /// Inverses of one element (by name or index).
    Inverses { file: PathBuf, element: String },
    /// Enumerate all ordered semigroups of a given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// One representative per isomorphism class.
        #[arg(long)]
        up_to_iso: bool,
        /// Keep only structures satisfying a predicate or condition id.
        #[arg(long = "filter")]
        filters: Vec<String>,
        /// Write the corpus here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Shard `i/k`.
        #[arg(long)]
        shard: Option<String>,
        /// Permit order 5.
        #[arg(long)]
        allow_order_five: bool,
    },
    /// Sweep theorem groupings over an enumerated or stored corpus.
    CheckTheorems {
        #[arg(long, conflicts_with = "corpus", required_unless_present = "corpus")]
        order: Option<usize>,
        /// Use every labelled structure instead of one per isomorphism class.
        #[arg(long, requires = "order")]
        labelled: bool,
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long = "theorem")]
        theorems: Vec<String>,
        #[arg(long)]
        shard: Option<String>,
        /// Also list structures outside a grouping's hypothesis whose
        /// condition vectors disagree.
        #[arg(long)]
        show_outside: bool,
        #[arg(long)]
        allow_order_five: bool,
    },
    /// Run a brute-force oracle suite and compare it with the library.
    Oracle { suite: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok((report, status)) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap()),
            }
            ExitCode::from(status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
