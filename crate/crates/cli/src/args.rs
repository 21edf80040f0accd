use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use covg_core::FieldChoice;

#[derive(Debug, Parser)]
#[command(name = "covg", version, about = "Conditional oriented matroids and orbit-harmonics Hilbert series")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Coefficient field: `rational` or `fp:<prime>`.
    #[arg(long, global = true, env = "COVG_FIELD", default_value = "rational")]
    pub field: FieldChoice,

    /// Cap on worker threads.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Reserved; every computation is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Record wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Small,
    Big,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Rank,
    Nbc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    BigTheorem,
    SmallGenerators,
    TwoValues,
    TopeCount,
    BasicLemma,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Kostant,
    Permutohedral,
    Permmatrix,
}

/// COM inputs accept a JSON path, `-` for stdin, `braid:N` or
/// `fixture:NAME`.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the COM axioms.
    Check { input: String },
    /// Enumerate the covectors of an arrangement over its region.
    Enumerate { input: PathBuf },
    /// The braid arrangement COM.
    Braid {
        #[arg(long)]
        n: usize,
    },
    /// A shipped fixture COM.
    Fixture {
        #[arg(long)]
        name: String,
    },
    /// Circuits, with the symmetric ones marked.
    Circuits { input: String },
    /// NBC sets under a total order.
    Nbc {
        input: String,
        /// Comma-separated labels, smallest first.
        #[arg(long)]
        order: Option<String>,
    },
    /// Flats with codimension and basic sets.
    Flats { input: String },
    /// Basic sets of one flat.
    Basic {
        input: String,
        /// Comma-separated labels; empty for the empty flat.
        #[arg(long, allow_hyphen_values = true)]
        flat: String,
    },
    /// Hilbert series of the small or big locus.
    Hilbert {
        input: String,
        #[arg(long, value_enum, default_value_t = Which::Big)]
        which: Which,
        #[arg(long, value_enum, default_value_t = Method::Rank)]
        method: Method,
        #[arg(long)]
        order: Option<String>,
    },
    /// Run a verification suite; exits nonzero on any failed assertion.
    Verify {
        input: String,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long)]
        order: Option<String>,
    },
    /// Permutation loci.
    Loci {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Also compute the Hilbert series.
        #[arg(long)]
        hilbert: bool,
    },
    /// Graded character of a group on the big (or small) locus.
    Character {
        input: String,
        /// Group JSON path, or `sym:N` for the symmetric group on braid:N.
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = Which::Big)]
        which: Which,
        #[arg(long)]
        verify_decomposition: bool,
    },
}
