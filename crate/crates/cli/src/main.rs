//! `orbitwist`: exact invariants of orbifold curves over finite groups.
//!
//! Every command reads JSON input files and flags, computes in exact
//! arithmetic, and writes one JSON document (or TSV table) to stdout.
//! Failures write `{"code":...,"error":...}` to stderr and exit with 2
//! (parse/schema), 3 (domain), or 4 (budget).

mod commands;
mod error;
mod output;
mod schema;

use clap::{Args, Parser, Subcommand};

use error::CliError;
use output::{Document, OutputMode};

#[derive(Parser)]
#[command(name = "orbitwist", version, about = "Exact invariants of orbifold curves over finite groups", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutArg {
    /// Output format.
    #[arg(long, default_value = "json", global = false)]
    out: OutputMode,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy-class table of a finite group
    Group {
        /// Group file (JSON): {"table": ...} or {"degree": ..., "perm_generators": ...}
        #[arg(long)]
        group: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Arithmetic genus, stability, and canonical degrees of a nodal curve
    Curve {
        /// Curve file (JSON): components, nodes, optional markings
        #[arg(long)]
        curve: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Chern number and index of a bundle, or degree shifts of a rep
    Bundle {
        /// Bundle file (JSON); pair with --curve
        #[arg(long)]
        bundle: Option<String>,
        /// Curve file (JSON); one component, no nodes
        #[arg(long)]
        curve: Option<String>,
        /// Rep file (JSON); pair with --group
        #[arg(long)]
        rep: Option<String>,
        /// Group file (JSON)
        #[arg(long)]
        group: Option<String>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Count or list solutions of the punctured surface relation
    Homs {
        #[command(subcommand)]
        action: HomsAction,
    },
    /// The sector product: structure constants and its axiom checks
    Ring {
        #[command(subcommand)]
        action: RingAction,
    },
    /// Virtual dimension d and 2d
    Dim {
        /// Chern pairing, rational "p/q"
        #[arg(long)]
        chern: String,
        /// Complex dimension of the target
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        genus: u32,
        /// Number of marked points
        #[arg(long)]
        k: u32,
        /// Degree-shifting numbers, comma-separated rationals; zeros if omitted
        #[arg(long, value_delimiter = ',')]
        shifts: Vec<String>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Degree selection rule
    Select {
        /// Degree of the class on the Deligne-Mumford factor
        #[arg(long = "degK")]
        deg_k: i64,
        /// Insertions as "degree+power,degree+power,..."
        #[arg(long)]
        insertions: String,
        /// Chern pairing, rational "p/q"
        #[arg(long)]
        chern: String,
        /// Complex dimension of the target
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        genus: u32,
        /// Number of marked points
        #[arg(long)]
        k: u32,
        /// Degree-shifting numbers, comma-separated rationals; zeros if omitted
        #[arg(long, value_delimiter = ',')]
        shifts: Vec<String>,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args)]
struct HomsCommon {
    /// Group file (JSON)
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 0)]
    genus: u32,
    /// Puncture classes by class-table index, comma-separated
    #[arg(long, value_delimiter = ',')]
    classes: Vec<usize>,
    /// Puncture constraints by exact element order, comma-separated
    #[arg(long, value_delimiter = ',')]
    exact_orders: Vec<u64>,
}

#[derive(Subcommand)]
enum HomsAction {
    /// Exact count by class-algebra convolution, cross-checked when cheap
    Count {
        #[command(flatten)]
        common: HomsCommon,
        /// Character file (JSON) for the additional Frobenius cross-check
        #[arg(long)]
        chars: Option<String>,
        /// Worker threads for the brute-force cross-check
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// List the solutions, optionally folded by simultaneous conjugation
    Enum {
        #[command(flatten)]
        common: HomsCommon,
        /// Fold the list into conjugation orbits
        #[arg(long)]
        up_to_conj: bool,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Subcommand)]
enum RingAction {
    /// Structure-constant tensor of the sector product
    Table {
        /// Group file (JSON)
        #[arg(long)]
        group: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Exhaustive associativity check
    Assoc {
        /// Group file (JSON)
        #[arg(long)]
        group: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Separating and non-separating splitting identities
    Split {
        /// Group file (JSON)
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 0)]
        genus: u32,
        /// Puncture classes by class-table index, comma-separated
        #[arg(long, value_delimiter = ',')]
        classes: Vec<usize>,
        #[command(flatten)]
        out: OutArg,
    },
}

fn dispatch(cli: Cli, warnings: &mut Vec<String>) -> Result<(Document, OutputMode), CliError> {
    match cli.command {
        Command::Group { group, out } => Ok((commands::cmd_group(&group)?, out.out)),
        Command::Curve { curve, out } => Ok((commands::cmd_curve(&curve)?, out.out)),
        Command::Bundle { bundle, curve, rep, group, out } => {
            let doc = commands::cmd_bundle(
                bundle.as_deref(),
                curve.as_deref(),
                rep.as_deref(),
                group.as_deref(),
                warnings,
            )?;
            Ok((doc, out.out))
        }
        Command::Homs { action } => match action {
            HomsAction::Count { common, chars, threads, out } => {
                if threads == 0 {
                    return Err(CliError::flag("--threads must be at least 1"));
                }
                let doc = commands::cmd_homs_count(
                    &common.group,
                    common.genus,
                    &common.classes,
                    &common.exact_orders,
                    chars.as_deref(),
                    threads,
                )?;
                Ok((doc, out.out))
            }
            HomsAction::Enum { common, up_to_conj, out } => {
                let doc = commands::cmd_homs_enum(
                    &common.group,
                    common.genus,
                    &common.classes,
                    &common.exact_orders,
                    up_to_conj,
                )?;
                Ok((doc, out.out))
            }
        },
        Command::Ring { action } => match action {
            RingAction::Table { group, out } => Ok((commands::cmd_ring_table(&group)?, out.out)),
            RingAction::Assoc { group, out } => Ok((commands::cmd_ring_assoc(&group)?, out.out)),
            RingAction::Split { group, genus, classes, out } => {
                Ok((commands::cmd_ring_split(&group, genus, &classes)?, out.out))
            }
        },
        Command::Dim { chern, n, genus, k, shifts, out } => {
            let input = commands::dimension_input(&chern, n, genus, k, &shifts, warnings)?;
            Ok((commands::cmd_dim(&input)?, out.out))
        }
        Command::Select { deg_k, insertions, chern, n, genus, k, shifts, out } => {
            let parsed = commands::parse_insertions(&insertions, warnings)?;
            let input = commands::dimension_input(&chern, n, genus, k, &shifts, warnings)?;
            Ok((commands::cmd_select(deg_k, parsed, &input)?, out.out))
        }
    }
}

fn emit_error(err: &CliError) {
    let doc = serde_json::json!({ "code": err.code, "error": err.message });
    eprintln!("{}", serde_json::to_string(&doc).expect("error document"));
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                emit_error(&CliError::flag(e.to_string()));
                std::process::exit(error::EXIT_PARSE);
            }
            // --help and --version.
            print!("{e}");
            std::process::exit(0);
        }
    };
    let mut warnings = Vec::new();
    match dispatch(cli, &mut warnings) {
        Ok((doc, mode)) => {
            for w in &warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", doc.render(mode));
        }
        Err(err) => {
            for w in &warnings {
                eprintln!("warning: {w}");
            }
            emit_error(&err);
            std::process::exit(err.exit);
        }
    }
}
