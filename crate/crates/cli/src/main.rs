mod commands;
mod input;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Baxter permutations and plane bipolar orientations.
#[derive(Debug, Parser)]
#[command(name = "baxter", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub guards: Guards,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Guards {
    /// Largest size accepted by exhaustive commands.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_n: usize,
    /// Largest edge count for brute-force orientation enumeration.
    #[arg(long, global = true, default_value_t = baxter::planar::DEFAULT_MAX_BRUTE_EDGES)]
    pub max_brute_edges: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test the Baxter property; prints a witnessing triple on failure.
    Check {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        perm: Vec<String>,
    },
    /// Map a Baxter permutation to its orientation, with the point/edge table.
    ToMap {
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    /// Map an orientation file back to its permutation (`-` reads stdin).
    ToPerm { map: PathBuf },
    /// Statistics of a permutation or of an orientation file.
    Stats {
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
    },
    /// Apply a symmetry to a permutation.
    Sym {
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
        #[arg(long)]
        op: PermOp,
    },
    /// Apply a symmetry to an orientation file.
    SymMap {
        map: PathBuf,
        #[arg(long)]
        op: MapOp,
    },
    /// Insertion sequence of a Baxter permutation in the generating tree.
    Seq {
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    /// Replay an insertion sequence such as `L1 R2`.
    Replay {
        #[arg(num_args = 0..)]
        steps: Vec<String>,
        #[arg(long, value_enum, default_value_t = Tree::B)]
        tree: Tree,
    },
    /// List one level of a generating tree.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Tree::B)]
        tree: Tree,
        #[arg(long, value_enum)]
        filter: Option<Avoid>,
    },
    /// Counts by ascents, lr-maxima and rl-maxima as TSV.
    Counts {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        source: CountSource,
    },
    /// Joint distribution of five statistics as TSV.
    Census {
        #[arg(long)]
        n: usize,
        /// Read the table off the orientation tree instead.
        #[arg(long)]
        orientations: bool,
    },
    /// Run exhaustive checks for every size up to `n`.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Random permutations checked by the symmetry suite.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Size of the random permutations.
        #[arg(long, default_value_t = 10)]
        sample_n: usize,
    },
    /// Draw a permutation's diagram or an orientation.
    Render {
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, Args)]
#[group(multiple = false)]
pub struct CountSource {
    /// Closed formula (default).
    #[arg(long)]
    pub formula: bool,
    /// Exhaustive count.
    #[arg(long)]
    pub brute: bool,
    /// Cells where the formula and the exhaustive count differ.
    #[arg(long)]
    pub diff: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PermOp {
    Inv,
    Rev,
    Rot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapOp {
    Mir,
    Dual,
    Revall,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Tree {
    B,
    O,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Avoid {
    #[value(name = "2413")]
    P2413,
    #[value(name = "3142")]
    P3142,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Roundtrip,
    Stats,
    Symmetry,
    Lambda,
    Rop,
    Sp,
    Tm,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Svg,
}

/// A failure that has already been reported on stdout, such as a
/// non-Baxter witness or a verification counterexample.
#[derive(Debug)]
pub struct Reported;

impl std::fmt::Display for Reported {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("reported")
    }
}

impl std::error::Error for Reported {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<Reported>() => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
