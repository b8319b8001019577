use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "cellrim", version, about = "Rims of Kazhdan-Lusztig right cells in symmetric groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Ascii, global = true)]
    pub format: Format,

    /// Use 'x' and '.' instead of the Unicode glyphs in diagrams.
    #[arg(long, global = true)]
    pub plain_x: bool,

    /// Largest n for group-wide enumeration (overrides CELLRIM_MAX_N).
    #[arg(long, global = true)]
    pub max_group_n: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Ascii,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rim of Z(λ): reduced words of its elements and their diagrams.
    Rim(RimArgs),
    /// Robinson-Schensted tableaux and right cell of a permutation, or Z(λ).
    Cell(CellArgs),
    /// Build, check and annotate diagrams.
    #[command(subcommand)]
    Diagram(DiagramCommand),
    /// Run a verification suite; exits 3 if any assertion fails.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Calibrate the tableau side used for right cells.
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
pub struct RimArgs {
    /// Composition, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub composition: Vec<usize>,
    /// Ignore the closed form and enumerate.
    #[arg(long)]
    pub brute_force: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct CellArgs {
    /// Permutation in one-line notation.
    #[arg(long, value_delimiter = ',')]
    pub perm: Option<Vec<usize>>,
    /// Composition whose ideal Z(λ) is listed.
    #[arg(long, value_delimiter = ',')]
    pub composition: Option<Vec<usize>>,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// (s, t, u) with s >= t >= u >= 1.
    #[arg(long, value_delimiter = ',', required = true)]
    pub stu: Vec<usize>,
    /// Ordering of (λ₁, λ₂, λ₃), e.g. u,s,t. Defaults to the family's ordering.
    #[arg(long)]
    pub order: Option<String>,
    /// Integer parameters: (ε,η,θ,ζ,ψ) for M, (η,ε,θ,φ,ζ) for N.
    #[arg(long, value_delimiter = ',')]
    pub params: Vec<usize>,
    /// The set C (C̃ for H).
    #[arg(long = "C", value_delimiter = ',')]
    pub c: Vec<usize>,
    /// v for H.
    #[arg(long)]
    pub v: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum DiagramCommand {
    /// Young diagram of a partition.
    Young {
        #[arg(long, value_delimiter = ',', required = true)]
        partition: Vec<usize>,
    },
    #[command(name = "F")]
    F(FamilyArgs),
    #[command(name = "G")]
    G(FamilyArgs),
    #[command(name = "H")]
    H(FamilyArgs),
    #[command(name = "M")]
    M(FamilyArgs),
    #[command(name = "N")]
    N(FamilyArgs),
    /// Diagram from a node list "a,b;a,b;...".
    Check {
        #[arg(long, required = true)]
        nodes: String,
    },
    /// D(d, λ), the diagram with fewest columns and w_D = d.
    MinColumn {
        #[arg(long, value_delimiter = ',', required = true)]
        perm: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        composition: Vec<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Closed-form rims against the count tables and brute force, all six orderings.
    Tables {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        u: usize,
        /// Number of trailing parts equal to 1.
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Cell membership against admissibility for every composition of n <= max-n.
    Oracle {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Extra random (λ, e) samples at degree max-n + 1.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 20170101)]
        seed: u64,
    },
    /// Rotation and ψ transport, and induced rims, for every composition of n <= max-n.
    Bijections {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
}
