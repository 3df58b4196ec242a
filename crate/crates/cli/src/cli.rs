//! Command-line surface.  Every subcommand writes the same report shape
//! with `--json`; exit codes are 0 = holds, 1 = fails, 2 = bad input.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "laxcomma", version, about = "monotone maps over a finite base, checked")]
pub struct Cli {
    /// Workspace documents, loaded in order into one namespace.
    #[arg(long = "file", global = true)]
    pub files: Vec<PathBuf>,

    /// Write the machine-readable report here (atomically).
    #[arg(long = "json", global = true)]
    pub json: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Parse and validate the loaded documents.
    Check {
        /// Echo the workspace back in canonical form.
        #[arg(long)]
        print: bool,
    },
    /// Build a limit, colimit, lift, or mapping object and print it.
    Construct {
        #[command(subcommand)]
        what: Construction,
    },
    /// Classify a morphism: effective for descent, not, or in between.
    Descent {
        #[arg(long)]
        morphism: String,
        /// Demand stability as well before ruling anything out.
        #[arg(long)]
        strict: bool,
    },
    /// Work on the diagram side of the embedding.
    Presheaf {
        #[command(subcommand)]
        op: PresheafOp,
    },
    /// Randomized search for morphisms the ladder cannot classify.
    Hunt {
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 2)]
        max_size: usize,
        /// Required: randomized commands must be reproducible.
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Also run the obstruction search on each find, at this probe bound.
        #[arg(long)]
        obstruct_bound: Option<usize>,
    },
    /// Brute-force cross-checks, independent of the closed forms.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
}

#[derive(Subcommand)]
pub enum Construction {
    Product {
        /// Repeatable: the factors, in order.
        #[arg(long = "of", required = true)]
        of: Vec<String>,
    },
    Coproduct {
        #[arg(long = "of", required = true)]
        of: Vec<String>,
    },
    Equalizer {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    Coequalizer {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    Pullback {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Initial structure on a carrier induced by maps into structured objects.
    Lift {
        #[arg(long)]
        carrier: String,
        #[arg(long)]
        over: String,
        /// Repeatable, formatted MAP:OBJECT.
        #[arg(long = "leg")]
        legs: Vec<String>,
    },
    /// The mapping object B^A, when A is exponentiable.
    Exponential {
        /// B, the target of the mapping object.
        #[arg(long)]
        of: String,
        /// A, the exponent.
        #[arg(long)]
        exp: String,
    },
    Power {
        /// The weight preorder.
        #[arg(long)]
        w: String,
        #[arg(long)]
        of: String,
    },
    Copower {
        #[arg(long)]
        w: String,
        #[arg(long)]
        of: String,
    },
}

#[derive(Subcommand)]
pub enum PresheafOp {
    /// Embed an object as a diagram of level sets.
    Pi {
        #[arg(long)]
        object: String,
    },
    /// Pointwise descent check on the embedded morphism.
    Descent {
        #[arg(long)]
        morphism: String,
    },
    /// Recover an object from its embedding and round-trip it.
    Represent {
        #[arg(long)]
        object: String,
    },
    /// Probe an unclassified morphism for obstruction certificates.
    Obstruct {
        #[arg(long)]
        morphism: String,
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
}

#[derive(Subcommand)]
pub enum OracleOp {
    /// Kernel-pair test: coequalize the pullback of f against itself.
    RegularEpi {
        #[arg(long)]
        morphism: String,
        #[arg(long, value_enum)]
        category: Category,
    },
    /// Pull back along every probe up to the bound and re-test.
    Stable {
        #[arg(long)]
        morphism: String,
        #[arg(long, default_value_t = 2)]
        bound: usize,
    },
    /// Build a construction and check its universal property by enumeration.
    Verify {
        #[arg(long, default_value_t = 2)]
        bound: usize,
        #[command(subcommand)]
        what: Construction,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Category {
    Ord,
    Lax,
}
