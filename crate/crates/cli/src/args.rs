use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "symchar",
    version,
    about = "Exact characters, class algebras and modular criteria for S_n and A_n"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Directory for cached character tables (default: $SYMCHAR_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Upper bound on worker threads.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    Sn,
    An,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full character table of S_n.
    Chartable {
        #[arg(long)]
        n: usize,
        /// Ignore and do not write the cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Character value and central character omega_lambda(s_mu).
    Central {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Product of two class sums, or one structure constant with --rho.
    Structconst {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Sn)]
        algebra: AlgebraArg,
        /// Left class, e.g. "3,1,1" or "5+" (fixed points may be omitted).
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        rho: Option<String>,
    },
    /// Dimension of the subalgebra generated by a named generating set.
    VerifyGeneration {
        #[arg(long)]
        n: usize,
        /// One of xl, yl, zl, xan.
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 0)]
        ell: usize,
    },
    /// Non-self-conjugate characters vanishing on a set of classes.
    OracleVanishing {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        classes: ClassSetArgs,
    },
    /// Pairs of characters agreeing on a set of classes.
    OracleAgreement {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        classes: ClassSetArgs,
    },
    /// Smallest set of odd classes on which only self-conjugate characters vanish.
    SearchCn {
        #[arg(long, required_unless_present = "certify_pair")]
        n: Option<usize>,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        /// Instead of searching, check the pair {(2,1^(n-2)), (4,1^(n-4))} for n in --from..=--to.
        #[arg(long)]
        certify_pair: bool,
        #[arg(long, default_value_t = 2)]
        from: usize,
        #[arg(long, default_value_t = 25)]
        to: usize,
    },
    /// Smallest set of classes separating all irreducible characters.
    SearchBn {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
    },
    /// Values of the two A_n constituents of a self-conjugate character on its split class.
    SplitValues {
        #[arg(long)]
        lambda: String,
    },
    /// Whether S^lambda decomposes on restriction to A_n.
    Restriction {
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Reducibility of S^lambda in odd characteristic p.
    Fayers {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        p: u64,
    },
    /// Closed-form restriction answer for the hook (n-r, 1^r).
    HookCase {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Counts of ell-regular partitions and comparison with the asymptotic rate.
    RegularCount {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        max_n: usize,
        /// Comma-separated n values (default: max_n only).
        #[arg(long, value_delimiter = ',')]
        checkpoints: Vec<usize>,
    },
    /// Check a decomposition matrix fixture against the character table.
    VerifyFixture {
        /// Built-in fixture name (d3_5, trivial).
        name: Option<String>,
        /// Fixture JSON file.
        #[arg(long, conflicts_with = "name", required_unless_present = "name")]
        file: Option<PathBuf>,
    },
    /// Run acceptance criteria by number (1-13) or "all".
    Check {
        #[arg(default_value = "all")]
        which: String,
    },
}

#[derive(Debug, Args)]
pub struct ClassSetArgs {
    /// Semicolon-separated classes, e.g. "2,1^3;4,1".
    #[arg(long, conflicts_with = "set")]
    pub classes: Option<String>,
    /// Named set: even-cycles, z-ell, odd-regular, regular, all.
    #[arg(long)]
    pub set: Option<String>,
    #[arg(long, default_value_t = 2)]
    pub ell: usize,
    /// ell' convention: order-coprime or no-part-divisible.
    #[arg(long, default_value = "order-coprime")]
    pub convention: String,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: u64,
    /// Degree of GF(p^k).
    #[arg(long, conflicts_with = "algebraically_closed")]
    pub k: Option<u32>,
    #[arg(long)]
    pub algebraically_closed: bool,
}
