//! `nakit`: command-line front end for the exact algebra toolkit.
//!
//! Exit status 0 means every check passed, 1 that a checked property is false
//! (a witness is printed), 2 a usage or parse error.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "nakit",
    version,
    about = "Exact computations with nonassociative algebras"
)]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit data of a group algebra element.
    #[command(subcommand)]
    Vector(VectorCmd),
    /// Evaluate identities on an algebra.
    Check {
        /// Identity name (e.g. `anti-associative`) or `v:<vector>`; repeatable.
        #[arg(long = "identity", required = true)]
        identities: Vec<String>,
        #[command(flatten)]
        source: Source,
    },
    /// Split a product into its symmetric and skew parts.
    Polarize {
        /// Structure to test on the pair: a Poisson kind, `anti` or `leibniz`; repeatable.
        #[arg(long = "check")]
        checks: Vec<String>,
        #[command(flatten)]
        source: Source,
    },
    /// Second cocycles of an algebra.
    Cocycles {
        /// `h`, `aa`, `v:<vec>`, `aav:<vec>` or `lr:<vec>;<vec>`; several flavors give the joint kernel.
        #[arg(long = "flavor", required = true)]
        flavors: Vec<String>,
        /// Print a basis of the cocycle space.
        #[arg(long)]
        basis: bool,
        #[command(flatten)]
        source: Source,
    },
    /// Truncated formal deformations.
    #[command(subcommand)]
    Deform(DeformCmd),
    /// Graded free algebras of quadratic presentations.
    Free(FreeArgs),
    /// Truncated power series.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Built-in example algebras and deformations.
    #[command(subcommand)]
    Corpus(CorpusCmd),
    /// Compare deformation and polarization structures across algebra families.
    Survey,
}

#[derive(Args)]
struct Source {
    /// A file path or `corpus:<name>`.
    input: String,
    /// Parameter override `name=value`; repeatable.
    #[arg(long = "param")]
    params: Vec<String>,
}

#[derive(Subcommand)]
enum VectorCmd {
    /// Dimension of the orbit span, v_Lad membership and type.
    Classify {
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// Dimension of the orbit span.
    Rank {
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// Whether v_Lad or v_3Pa lies in the orbit span, with a certificate.
    Contains {
        #[arg(allow_hyphen_values = true)]
        vector: String,
        #[arg(long, value_enum, default_value_t = TargetArg::Lad)]
        target: TargetArg,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Lad,
    #[value(name = "3pa")]
    ThreePa,
}

#[derive(Subcommand)]
enum DeformCmd {
    /// Evaluate the deformation equations order by order.
    Verify {
        /// `plain`, `v:<vec>`, `l:<vec>`, `r:<vec>` or `vw:<vec>;<vec>`.
        #[arg(long)]
        flavor: String,
        /// Highest order to check; defaults to the truncation order.
        #[arg(long)]
        through: Option<usize>,
        #[command(flatten)]
        source: Source,
    },
    /// Test the structure induced by the first-order term.
    Poisson {
        /// `poisson`, `nonassoc-poisson`, `v-poisson:<vec>`, `nonassoc-v-poisson:<vec>`,
        /// `anti-poisson`, `pseudo-left` or `pseudo-right`.
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Args)]
struct FreeArgs {
    /// One of the built-in presentations.
    #[arg(
        long,
        conflicts_with = "presentation",
        required_unless_present = "presentation"
    )]
    preset: Option<String>,
    /// A presentation file.
    #[arg(long)]
    presentation: Option<String>,
    /// Number of generators.
    #[arg(long, default_value_t = 1)]
    gens: usize,
    /// Highest degree computed.
    #[arg(long = "max-deg", default_value_t = 4)]
    max_deg: usize,
    /// Report the multilinear dimension in this arity instead.
    #[arg(long)]
    multilinear: Option<usize>,
    /// List basis monomials per degree.
    #[arg(long)]
    basis: bool,
}

#[derive(Subcommand)]
enum SeriesCmd {
    /// Compositional inverse of `c1,c2,...`.
    Inverse {
        #[arg(allow_hyphen_values = true)]
        series: String,
    },
    /// `g(f(t))`.
    Compose {
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Generating series `sum (-1)^k d_k t^k / k!` of arity dimensions.
    Gen {
        dims: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Test the Koszul functional equation between a series and its dual's.
    Koszul {
        #[arg(allow_hyphen_values = true)]
        series: String,
        #[arg(allow_hyphen_values = true)]
        dual: String,
        #[arg(long, value_enum, default_value_t = ConventionArg::Signed)]
        convention: ConventionArg,
        /// Read both arguments as arity dimensions rather than coefficients.
        #[arg(long)]
        dims: bool,
        /// Truncation order when reading dimensions.
        #[arg(long)]
        order: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Signed,
    Unsigned,
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// Names and descriptions.
    List,
    /// Source text of one entry.
    Show { name: String },
    /// Check expected properties, of one entry or all.
    Check { name: Option<String> },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fmt = cli.format;
    let result = match cli.command {
        Command::Vector(VectorCmd::Classify { vector }) => commands::classify(&vector, fmt),
        Command::Vector(VectorCmd::Rank { vector }) => commands::rank(&vector, fmt),
        Command::Vector(VectorCmd::Contains { vector, target }) => {
            commands::contains(&vector, target, fmt)
        }
        Command::Check { identities, source } => {
            commands::check(&identities, &source.input, &source.params, fmt)
        }
        Command::Polarize { checks, source } => {
            commands::polarize(&checks, &source.input, &source.params, fmt)
        }
        Command::Cocycles {
            flavors,
            basis,
            source,
        } => commands::cocycles(&flavors, basis, &source.input, &source.params, fmt),
        Command::Deform(DeformCmd::Verify {
            flavor,
            through,
            source,
        }) => commands::deform_verify(&flavor, through, &source.input, &source.params, fmt),
        Command::Deform(DeformCmd::Poisson { kind, source }) => {
            commands::deform_poisson(&kind, &source.input, &source.params, fmt)
        }
        Command::Free(a) => commands::free(
            a.preset.as_deref(),
            a.presentation.as_deref(),
            a.gens,
            a.max_deg,
            a.multilinear,
            a.basis,
            fmt,
        ),
        Command::Series(SeriesCmd::Inverse { series }) => commands::inverse(&series, fmt),
        Command::Series(SeriesCmd::Compose { g, f }) => commands::compose(&g, &f, fmt),
        Command::Series(SeriesCmd::Gen { dims, order }) => commands::gen(&dims, order, fmt),
        Command::Series(SeriesCmd::Koszul {
            series,
            dual,
            convention,
            dims,
            order,
        }) => commands::koszul(&series, &dual, convention, dims, order, fmt),
        Command::Corpus(CorpusCmd::List) => commands::corpus_list(fmt),
        Command::Corpus(CorpusCmd::Show { name }) => commands::corpus_show(&name),
        Command::Corpus(CorpusCmd::Check { name }) => commands::corpus_check(name.as_deref(), fmt),
        Command::Survey => commands::survey(fmt),
    };
    match result {
        Ok(report) => {
            print!("{}", report.text);
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
