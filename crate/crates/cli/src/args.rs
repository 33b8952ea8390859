//! Command-line grammar.

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

const EXIT_CODES: &str = "Exit codes:\n  0  success\n  2  usage or domain error\n  3  resource limit exceeded\n  4  a claim reported a counterexample (only with --strict)";

#[derive(Debug, Parser)]
#[command(
    name = "sievelab",
    version,
    about = "Sieve constructions over the primes, checked against brute-force oracles",
    after_help = EXIT_CODES
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Write the report to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Worker threads (default: all cores); results are byte-identical for
    /// any thread count
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,

    /// Exit 4 when any claim reports a counterexample (documented anomalies
    /// never trip strict mode)
    #[arg(long, global = true)]
    pub strict: bool,

    /// Suppress the timestamp header and zero the elapsed-time fields so
    /// repeated runs are byte-identical
    #[arg(long, global = true)]
    pub no_timestamp: bool,

    /// Cap on pattern bitmap size in bits
    #[arg(long, global = true, value_name = "N",
          default_value_t = sievelab::pattern::DEFAULT_MEMORY_CAP_BITS)]
    pub memory_cap_bits: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Twin-index sieve: pairs from unmarked indices, marked-run statistics
    #[command(after_help = "CSV columns: claim,status,seq,kind,data")]
    Twin {
        /// Highest twin index to sieve
        #[arg(long = "max-n", value_name = "U64")]
        max_n: u64,
        /// Restrict generators to primes at most this cap and report the
        /// longest marked run against the cap's spacing bound
        #[arg(long, value_name = "P")]
        generator_cap: Option<u64>,
    },

    /// Goldbach-style double sieve: witnesses for one even target or a sweep
    #[command(
        group(ArgGroup::new("target").required(true).args(["even", "sweep_max"])),
        after_help = "CSV columns: claim,status,seq,kind,data"
    )]
    Goldbach {
        /// One even target ≥ 4
        #[arg(long, value_name = "U64")]
        even: Option<u64>,
        /// Check every even target up to this bound
        #[arg(long, value_name = "U64")]
        sweep_max: Option<u64>,
        /// Run the mod-3 reduced variant instead of the full sieve
        #[arg(long)]
        reduced: bool,
    },

    /// Primorial occupancy patterns and cyclic window scans
    #[command(subcommand)]
    Pattern(PatternCmd),

    /// Segmented prime-gap scan with the 2√p + 1 bound check
    #[command(
        after_help = "CSV columns: p,next_p,gap,within_bound (record-breaking gaps, then any bound violations)"
    )]
    Gaps {
        /// Scan the gap after every prime below this limit
        #[arg(long, value_name = "U64", default_value_t = 1_000_000_000)]
        limit: u64,
        /// Segment size in integers (≥ 64)
        #[arg(long, value_name = "U64", default_value_t = 4_194_304)]
        segment: u64,
    },

    /// Run registered claims at their desk-scale defaults
    #[command(
        after_help = "CSV columns: claim,status,seq,kind,data (claim list: claim,summary,defaults)"
    )]
    Verify {
        /// List every claim identifier and exit
        #[arg(long)]
        list: bool,
        /// Run only these claims (repeatable)
        #[arg(long = "claim", value_name = "ID")]
        claims: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum PatternCmd {
    /// Integers mode: residues sharing a factor with the primorial of P
    Scan {
        /// Cap prime
        #[arg(long, value_name = "P")]
        prime: u64,
        /// Window length (default 2P+1)
        #[arg(long, value_name = "L")]
        window_len: Option<u64>,
    },
    /// Odd-integers mode over a divisor family
    Odd {
        /// Cap prime
        #[arg(long, value_name = "P")]
        prime: u64,
        /// all = every odd number in 3..=P; primes = odd primes in 3..=P
        #[arg(long, value_enum)]
        divisors: OddFamily,
    },
    /// Twin-index mode: the translated wheel window of P
    Wheel {
        /// Cap prime (≥ 7 for the canonical window)
        #[arg(long, value_name = "P")]
        prime: u64,
    },
    /// Power-distance minimality for odd bases up to P
    Power {
        /// Cap prime
        #[arg(long, value_name = "P")]
        prime: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OddFamily {
    All,
    Primes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}
