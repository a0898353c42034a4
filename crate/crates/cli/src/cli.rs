use std::path::PathBuf;

use apsa::SynthCase;
use clap::{Args, Parser, Subcommand};

/// Strings with arithmetically progressed suffix arrays, and test corpora built from them.
///
/// Output is one record per line of space-separated `key=value` tokens.
/// Exit codes: 0 success, 1 verification failure, 2 invalid parameters, 3 I/O error.
#[derive(Debug, Parser)]
#[command(name = "apsa", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Synthesize the string whose suffix array is the progression (n, k, p1).
    Synth(SynthArgs),
    /// Report whether a text's suffix array is arithmetically progressed.
    Classify {
        /// Text over the letters a..z.
        text: String,
    },
    /// Lower Christoffel word with p letters a and q letters b.
    Christoffel {
        #[arg(short = 'p')]
        p: usize,
        #[arg(short = 'q')]
        q: usize,
    },
    /// Fibonacci word F_m (F_1 = b, F_2 = a).
    Fib {
        #[arg(short = 'm')]
        m: u32,
    },
    /// List every string over sigma letters with suffix array (n, k, p1).
    Enumerate(EnumerateArgs),
    /// Generate or verify suffix-array test corpora.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Debug, Args)]
pub struct PermArgs {
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(short = 'k')]
    pub k: usize,
    #[arg(long)]
    pub p1: usize,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[command(flatten)]
    pub perm: PermArgs,
    /// Alphabet size; defaults to the smallest possible one.
    #[arg(long)]
    pub sigma: Option<u32>,
    /// Extra split after these values of the permutation (needs a larger --sigma).
    #[arg(long = "split-after", value_delimiter = ',')]
    pub split_after: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub perm: PermArgs,
    #[arg(long)]
    pub sigma: u32,
}

#[derive(Debug, Subcommand)]
pub enum CorpusCommand {
    /// Write texts, suffix arrays, BWTs and a manifest without suffix sorting.
    Gen(GenArgs),
    /// Check suffix-array, BWT and text files against a manifest.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Output directory.
    #[arg(long)]
    pub out: PathBuf,
    /// Text lengths; one entry per (size, case) pair.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    /// Cases: unary, binary1, binary2, binary3, ternary.
    #[arg(long, value_delimiter = ',', default_value = "binary3")]
    pub cases: Vec<SynthCase>,
    /// Seed for choosing k and p1.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Fix the ratio instead of drawing it.
    #[arg(short = 'k', long)]
    pub k: Option<usize>,
    /// Fix the first entry instead of drawing it.
    #[arg(long)]
    pub p1: Option<usize>,
    /// Write 0-based suffix-array values.
    #[arg(long)]
    pub zero_based: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Manifest written by `corpus gen`.
    pub manifest: PathBuf,
    /// Directory with the candidate files; defaults to the manifest's directory.
    #[arg(long)]
    pub candidates: Option<PathBuf>,
    /// Candidate suffix arrays are 0-based (default: as declared in the manifest).
    #[arg(long)]
    pub zero_based: bool,
}
