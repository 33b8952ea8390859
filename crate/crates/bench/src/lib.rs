//! Shared sizes for the kernel benchmarks, kept in one place so the bench
//! targets and any profiling scripts agree on what "desk scale" means.

/// Twin-index sieve size used by the mark-set benchmark.
pub const TWIN_N_MAX: u64 = 1_000_000;

/// Even target for the double-sieve benchmark.
pub const GOLDBACH_TARGET: u64 = 100_000;

/// Cap prime for the odd-integers window-scan benchmark (modulus 765765).
pub const PATTERN_PRIME: u64 = 17;

/// Gap-scan limit for the segmented-sieve benchmark.
pub const GAPS_LIMIT: u64 = 10_000_000;

/// Sieve limit for the prime-bitmap benchmark.
pub const SIEVE_LIMIT: u64 = 10_000_000;
