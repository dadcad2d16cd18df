use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "flatcert", version, about = "Exact verification of the complete-quadrics flat family")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Seed for every random choice; recorded in the report.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, env = "FLATCERT_WORKERS")]
    pub workers: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Initial,
    Rank,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare the Hilbert polynomials of fibers of the family with the generic one.
    VerifyFlatness {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(3..))]
        t_max: u32,
        /// `standard`, `sampled:K` (K nondegenerate and K degenerate random
        /// points), or a JSON file of chart points.
        #[arg(long, default_value = "standard")]
        points: String,
        /// Fault injection, e.g. `drop-generator:1`.
        #[arg(long)]
        corrupt: Option<String>,
    },
    /// Check that the 2x2 minors of [x; y] form a Gröbner basis under several orders.
    VerifyGroebner {
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Number of seeded random variable permutations.
        #[arg(long, default_value_t = 3)]
        random_orders: usize,
    },
    /// Tabulate the diagonal Hilbert function of an ideal file and interpolate.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 8)]
        t_max: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Initial)]
        method: MethodArg,
    },
    /// Random plane-curve pairs against the closed Hilbert polynomial formula.
    XiTrials {
        d0: u32,
        d1: u32,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Torus equivariance of the family, symbolically and at sample points.
    TorusCheck {
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Chart points as for verify-flatness.
        #[arg(long, default_value = "standard")]
        points: String,
    },
    /// Global equations of complete conics on sampled points.
    ConicEquations {
        /// Rows separated by `;`, entries by `,`; random conics when absent.
        #[arg(long)]
        z: Option<String>,
        #[arg(long, default_value_t = 5)]
        conics: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Primary decomposition of the initial ideal and regularity of x.y.
    PrimaryCheck {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
}
