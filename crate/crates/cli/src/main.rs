//! `kernelkit`: kernel checkers, solvers, generators and anti-hole
//! campaigns from the command line.
//!
//! Exit codes: 0 the verdict holds, 1 it fails and a witness is reported,
//! 2 usage or input error, 3 a budget or size cap was hit, 4 an internal
//! invariant broke (a bug).

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "kernelkit", version, about = "Kernels of digraphs: checkers, solvers, generators and exhaustive searches")]
pub struct Cli {
    /// Format for graphs written by generators and `graph convert`.
    /// Input format is detected from the content.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the output here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

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
    /// Exact brute-force answers.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Two-colored digraphs and their kernel solvers.
    #[command(subcommand)]
    Redblue(RedblueCmd),
    /// Chord conditions on odd directed cycles.
    #[command(subcommand)]
    Chords(ChordsCmd),
    /// Anti-holes and exhaustive orientation searches.
    #[command(subcommand)]
    Antihole(AntiholeCmd),
    /// Antichains of a poset given as a DAG.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Graph file utilities.
    #[command(subcommand)]
    Graph(GraphCmd),
}

#[derive(Args, Debug)]
pub struct InputArg {
    /// Graph file, or `-` for stdin.
    pub input: String,
}

#[derive(Args, Debug)]
pub struct BudgetArg {
    /// Work budget; overrides the default of the command.
    #[arg(long, env = "KERNELKIT_BUDGET")]
    pub budget: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum OracleCmd {
    /// Least kernel, if any (exit 1 when there is none).
    Find(InputArg),
    /// Every kernel in lexicographic order.
    Enumerate(InputArg),
    /// Whether a vertex set is a kernel. The set is read from `--kernel`
    /// (a solver report, a JSON list or plain indices) or given by `--set`.
    Check {
        #[command(flatten)]
        graph: InputArg,
        /// File holding the set, or `-` for stdin.
        #[arg(long, conflicts_with = "set")]
        kernel: Option<String>,
        /// Comma-separated vertex indices.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
    },
    /// Every clique has a vertex dominated by the rest of it.
    CliqueAcyclic {
        #[command(flatten)]
        graph: InputArg,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Every directed triangle has at least two reversible arcs.
    MCliqueAcyclic(InputArg),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Conditions {
    /// The two implications of the polynomial solver.
    Thm1,
    /// No monochromatic cycle, closed red-any-blue paths.
    Prop2,
}

#[derive(Subcommand, Debug)]
pub enum RedblueCmd {
    /// Check a colored digraph against one set of conditions.
    Check {
        #[command(flatten)]
        graph: InputArg,
        #[arg(long, value_enum, default_value_t = Conditions::Thm1)]
        conditions: Conditions,
    },
    /// Polynomial solver with its antichain-potential trace.
    Solve(InputArg),
    /// Red-sink solver for the path-closure conditions.
    SolveP2 {
        #[command(flatten)]
        graph: InputArg,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Seeded instance generators.
    #[command(subcommand)]
    Gen(GenCmd),
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum GenCmd {
    /// Two transitive color classes.
    Ssw {
        #[command(flatten)]
        args: GenArgs,
        /// Arc probability of the underlying random orders.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
    /// Colored orientation of a random comparability graph.
    Comparability(GenArgs),
    /// Random colored digraph repaired until both implications hold.
    Thm1 {
        #[command(flatten)]
        args: GenArgs,
        #[command(flatten)]
        budget: BudgetArg,
    },
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[command(flatten)]
    pub graph: InputArg,
    /// Longest odd cycle examined.
    #[arg(long)]
    pub max_len: Option<usize>,
    /// Cap on odd cycles enumerated.
    #[command(flatten)]
    pub budget: BudgetArg,
}

#[derive(Subcommand, Debug)]
pub enum ChordsCmd {
    /// Every odd cycle meets one of the three chord rules.
    Check(ScanArgs),
    /// Every odd cycle has two chords with consecutive heads.
    CheckGsnl(ScanArgs),
    /// Every odd cycle has two reversible arcs.
    CheckDuchet(ScanArgs),
    /// Kernel by the inductive semi-kernel construction.
    Solve(ScanArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WitnessMode {
    /// Reversible edges allowed, all cliques checked.
    General,
    /// Reversible edges allowed, triangles need two reversible arcs.
    MClique,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    /// Graph file or `-`; omit and pass `--n` for the anti-hole on n vertices.
    #[arg(required_unless_present = "n")]
    pub input: Option<String>,
    #[arg(long, conflicts_with = "input")]
    pub n: Option<usize>,
    /// Enumerate one orientation per orbit of the automorphism group.
    #[arg(long)]
    pub symmetry: bool,
    /// Worker threads; 0 or absent uses every core.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Resume from and save progress to this file.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Cap on orientations examined.
    #[command(flatten)]
    pub budget: BudgetArg,
}

#[derive(Subcommand, Debug)]
pub enum AntiholeCmd {
    /// The anti-hole on n vertices as an undirected graph.
    Gen { n: usize },
    /// The kernel-free simple orientation of the 7-vertex anti-hole.
    C7,
    /// Check that every simple clique-acyclic orientation has a kernel.
    VerifySimple(SearchArgs),
    /// Look for a kernel-free orientation with reversible edges allowed.
    SearchWitness {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value_t = WitnessMode::General)]
        mode: WitnessMode,
    },
    /// Inward vertex and kernel assembly for an orientation of an odd
    /// anti-hole on at least 9 vertices.
    FindIstar(InputArg),
}

#[derive(Subcommand, Debug)]
pub enum PosetCmd {
    /// A longest strictly increasing chain of antichains.
    MaxChain(InputArg),
    /// Compare two antichains.
    Compare {
        #[command(flatten)]
        graph: InputArg,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        a: Vec<usize>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        b: Vec<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConvertTo {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum GraphCmd {
    /// Re-emit a graph in another format.
    Convert {
        #[command(flatten)]
        graph: InputArg,
        /// Defaults to `--format`.
        #[arg(long, value_enum)]
        to: Option<ConvertTo>,
    },
}

/// What a command prints and how it exits.
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    pub fn new(text: impl Into<String>, code: u8) -> Self {
        Outcome { text: text.into(), code }
    }

    pub fn json(value: &serde_json::Value, holds: bool) -> Self {
        Outcome::new(value.to_string(), if holds { 0 } else { 1 })
    }
}

fn emit(cli_output: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match cli_output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = commands::run(&cli).unwrap_or_else(commands::from_error);
    if !outcome.text.is_empty() {
        if let Err(e) = emit(&cli.output, &outcome.text) {
            eprintln!("kernelkit: cannot write output: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(outcome.code)
}
