use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser)]
#[command(
    name = "hopflab",
    version,
    about = "Exact checks for finite-dimensional Hopf algebras and Hopf group-(co)algebras"
)]
struct Cli {
    #[command(flatten)]
    out: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Output {
    /// Emit machine-readable JSON instead of a report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the result to this file instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
    Lie,
    Liecoalg,
    Group,
    TuraevAlg,
    TuraevCoalg,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Coalgebra => "coalgebra",
            Kind::Bialgebra => "bialgebra",
            Kind::Hopf => "hopf",
            Kind::Lie => "lie",
            Kind::Liecoalg => "liecoalg",
            Kind::Group => "group",
            Kind::TuraevAlg => "turaev-alg",
            Kind::TuraevCoalg => "turaev-coalg",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Verify every axiom of the object in a file.
    Check {
        path: PathBuf,
        /// Object kind; detected from the document when omitted.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// Write the linear dual (structure maps transposed).
    Dual { path: PathBuf },
    /// Write the componentwise dual of a Hopf group-(co)algebra.
    Dagger { path: PathBuf },
    /// Primitive elements with their Lie bracket.
    Primitives { path: PathBuf },
    /// Indecomposables with their Lie co-bracket.
    Indecomposables { path: PathBuf },
    /// Certify that Q(H)* and P(H*) are isomorphic Lie algebras.
    Michaelis { path: PathBuf },
    /// g-primitive elements of a Hopf group-coalgebra (or of the dagger of a Hopf group-algebra).
    Gprimitives {
        path: PathBuf,
        /// Group element, by name or index.
        #[arg(long)]
        g: String,
    },
    /// Degree-g indecomposables of a Hopf group-algebra.
    Gindecomposables { path: PathBuf },
    /// Certify the per-element isomorphisms between Q_g(H)* and P_g(H†).
    GroupMichaelis { path: PathBuf },
    /// Certify that the primitives of the total Hopf algebra are those of H_e.
    Michtur1 { path: PathBuf },
    /// Left integrals on a Hopf algebra.
    Integrals { path: PathBuf },
    /// Emit a standard example as a document.
    Zoo(ZooArgs),
    /// Check several files concurrently; results are printed in argument order.
    VerifySuite { paths: Vec<PathBuf> },
}

#[derive(Args)]
pub struct ZooArgs {
    /// trivial, group-algebra, function-hopf, sweedler4, truncated-poly,
    /// exterior-super, diagonal-group-algebra or matrix-algebra.
    pub name: String,
    /// Q, Fp:<p> or F<p>.
    #[arg(long, default_value = "Q")]
    pub field: String,
    /// zN, sN or trivial.
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub n: Option<usize>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let Cli { out, command } = cli;
    let code = match command {
        Command::Check { path, kind } => commands::check(&path, kind, &out),
        Command::Dual { path } => commands::dual(&path, &out),
        Command::Dagger { path } => commands::dagger(&path, &out),
        Command::Primitives { path } => commands::primitives(&path, &out),
        Command::Indecomposables { path } => commands::indecomposables(&path, &out),
        Command::Michaelis { path } => commands::michaelis(&path, &out),
        Command::Gprimitives { path, g } => commands::gprimitives(&path, &g, &out),
        Command::Gindecomposables { path } => commands::gindecomposables(&path, &out),
        Command::GroupMichaelis { path } => commands::group_michaelis(&path, &out),
        Command::Michtur1 { path } => commands::michtur1(&path, &out),
        Command::Integrals { path } => commands::integrals(&path, &out),
        Command::Zoo(args) => commands::zoo(&args, &out),
        Command::VerifySuite { paths } => commands::verify_suite(&paths, &out),
    };
    ExitCode::from(code)
}
