use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "fano-lines", version, about = "Count and enumerate lines on surfaces in P^3")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Numerical tolerance, in (0, 1e-2).
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cap on Gröbner pair reductions.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads (0: one per core).
    #[arg(long, global = true, env = "FANO_LINES_THREADS")]
    pub threads: Option<usize>,
    /// Catalog file replacing the bundled one.
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count lines on a surface.
    #[command(subcommand)]
    Lines(LinesCmd),
    /// Lines on the cyclic cover t^d = f(x, y, z) from total inflection points.
    Covering {
        /// Plane curve in x, y, z, or `fermat:d`.
        #[arg(long)]
        curve: String,
        #[arg(long)]
        emit: bool,
    },
    /// Disjoint line families.
    #[command(subcommand)]
    Skew(SkewCmd),
    /// Upper bounds on line counts; the published row when --d is absent.
    Bounds {
        #[arg(long)]
        d: Option<u64>,
    },
    /// A binary form of given degree with prescribed projective symmetry group.
    Construct {
        #[arg(long)]
        degree: usize,
        /// cyclic:k, dihedral:k, T, O, I or trivial.
        #[arg(long)]
        group: String,
    },
    /// List the named surfaces.
    Catalog,
}

#[derive(Subcommand, Debug)]
pub enum LinesCmd {
    /// Surfaces phi(x, y) = psi(z, t).
    Separable {
        /// Binary form in x, y.
        #[arg(long)]
        phi: String,
        /// Binary form in z, t (or x, y); defaults to phi.
        #[arg(long)]
        psi: Option<String>,
        /// Also count real lines.
        #[arg(long)]
        real: bool,
        #[arg(long)]
        emit: bool,
    },
    /// Exact count over the six Plücker strata.
    Plucker {
        /// Surface in x, y, z, t, or a catalog name.
        #[arg(long)]
        surface: String,
        #[arg(long)]
        emit: bool,
        #[arg(long)]
        skip_smooth_check: bool,
        /// Only these strata (comma separated, 1..=6).
        #[arg(long, value_delimiter = ',')]
        strata: Option<Vec<u8>>,
    },
}

#[derive(Subcommand, Debug)]
pub enum SkewCmd {
    /// The d(d-2)+4 disjoint lines on x^(d-1)y + xy^(d-1) + z^(d-1)t + zt^(d-1).
    Rams {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        emit: bool,
    },
}
