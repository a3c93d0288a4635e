use clap::{Args, Parser, Subcommand, ValueEnum};

/// Geometric vertex decompositions, subword complexes and Schubert patch
/// degenerations.
///
/// Any value may be given as `@path` to read it from a file. Resource caps
/// for Gröbner computations can be set with
/// `GVDKIT_CAPS=max_basis=N,max_degree=D`.
#[derive(Debug, Parser)]
#[command(name = "gvdkit", version)]
pub struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix, positive roots and the longest element.
    Roots {
        #[arg(long = "type")]
        cartan: String,
    },
    #[command(subcommand)]
    Bruhat(BruhatCmd),
    #[command(subcommand)]
    Subword(SubwordCmd),
    /// Restriction of a Schubert class to a fixed point.
    Localize(LocalizeArgs),
    #[command(subcommand)]
    Ideal(IdealCmd),
    #[command(subcommand)]
    Gvd(GvdCmd),
    #[command(subcommand)]
    Patch(PatchCmd),
    #[command(subcommand)]
    Simplicial(SimplicialCmd),
    /// Run the acceptance battery.
    Suite {
        /// Comma-separated criterion ids (default: all).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BruhatCmd {
    /// Decide u ≤ w.
    Leq {
        #[arg(long = "type")]
        cartan: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        w: String,
    },
    /// All reduced words of w.
    Words {
        #[arg(long = "type")]
        cartan: String,
        #[arg(long)]
        w: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum SubwordCmd {
    /// The subword complex of a word Q and an element w.
    Complex {
        #[arg(long = "type")]
        cartan: String,
        #[arg(long = "Q")]
        q: String,
        #[arg(long)]
        w: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingKind {
    #[value(name = "H")]
    H,
    #[value(name = "K")]
    K,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Recursive,
}

#[derive(Debug, Args)]
pub struct LocalizeArgs {
    #[arg(long = "type")]
    pub cartan: String,
    #[arg(long)]
    pub w: String,
    /// A word for v; `direct` requires it to be reduced.
    #[arg(long)]
    pub v: String,
    #[arg(long, value_enum, default_value = "H")]
    pub ring: RingKind,
    #[arg(long, value_enum, default_value = "direct")]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct IdealInput {
    /// Comma-separated variable names.
    #[arg(long)]
    pub ring: String,
    /// Generators separated by `;` or newlines.
    #[arg(long)]
    pub gens: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GradingKind {
    /// Coarsest grading that makes the ideal homogeneous.
    Natural,
    /// Every variable in degree 1.
    Standard,
    /// One degree per variable.
    Fine,
}

#[derive(Debug, Subcommand)]
pub enum IdealCmd {
    /// Reduced Gröbner basis.
    Gb {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// Krull dimension and codimension.
    Dim {
        #[command(flatten)]
        input: IdealInput,
    },
    /// K-polynomial of the quotient.
    Kpoly {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long, default_value = "grevlex")]
        order: String,
        #[arg(long, value_enum, default_value = "natural")]
        grading: GradingKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum GvdCmd {
    /// The ideals I', C and P of a geometric vertex decomposition.
    Split {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        y: String,
    },
    /// The family scaling y, with its fibers at z = 0 and z = 1.
    Family {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        y: String,
        #[arg(long, default_value = "z")]
        z: String,
    },
    /// Reducedness certificate for a monomial limit.
    Rll {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Singular locus and Serre-condition probe.
    Probe {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        y: Option<String>,
        /// Declare the ideal a complete intersection.
        #[arg(long)]
        ci: bool,
    },
    /// Check I_X = I_A ∩ I_B and report the gluing ideal I_A + I_B.
    Glue {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        x: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoordsKind {
    Standard,
    Right,
    Left,
}

#[derive(Debug, Subcommand)]
pub enum PatchCmd {
    /// Patch ideal of X_w at v, permutations in one-line notation.
    Ideal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: String,
        #[arg(long, value_enum, default_value = "standard")]
        coords: CoordsKind,
        /// Simple index for adapted coordinates.
        #[arg(long)]
        alpha: Option<usize>,
    },
    /// One GVD step along a right descent alpha of v.
    Step {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        alpha: usize,
    },
    /// Degenerate X_w at the product of Q down to a Stanley–Reisner scheme.
    Degenerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: String,
        #[arg(long = "Q")]
        q: String,
        /// Skip checking each step on the patch ideals.
        #[arg(long)]
        no_verify: bool,
    },
}

#[derive(Debug, Args)]
pub struct ComplexInput {
    /// Complex file: one facet per line, vertices comma-separated.
    #[arg(long = "in")]
    pub input: String,
}

#[derive(Debug, Subcommand)]
pub enum SimplicialCmd {
    /// Reisner's criterion.
    Cm(ComplexInput),
    /// Search for a shelling.
    Shell(ComplexInput),
    /// Reduced rational homology.
    Homology(ComplexInput),
    /// Vertex decomposition.
    Vd(ComplexInput),
    /// Stanley–Reisner ideal.
    Sr(ComplexInput),
}
