//! Sieve laboratory: wheel-based mark sets and occupancy patterns over the
//! primes, each paired with an independent brute-force oracle.
//!
//! The crate provides four construction families and the plumbing to check
//! them against ground truth on desk-scale ranges:
//!
//! * [`twin`] — the 6k±1 twin-index sieve: indices `n` where `6n−1` or
//!   `6n+1` picks up a factor are marked; unmarked indices are twin-prime
//!   candidates.
//! * [`goldbach`] — a double sieve over `[2, P_a − 2]`: prime multiples plus
//!   their translations from the even target `P_a`; unmarked values witness
//!   a two-prime decomposition.
//! * [`pattern`] — primorial-period occupancy bitmaps (integer, odd-integer
//!   and twin-index residue spaces) with cyclic window scans, used to probe
//!   where multiples of small primes crowd together.
//! * [`gaps`] — a segmented prime-gap scanner with an exact integer form of
//!   the `2√p + 1` gap bound.
//!
//! Outcomes are reported as [`report::FindingsReport`] values: a stable
//! claim identifier, the run parameters, a confirmed / counterexample /
//! documented-anomaly status, and typed detail records.

pub mod bitmap;
pub mod error;
pub mod gaps;
pub mod goldbach;
pub mod pattern;
pub mod report;
pub mod twin;
pub mod wheel;

pub use bitmap::Bitmap;
pub use error::{Error, Result};
pub use gaps::{GapRecord, GapScan};
pub use goldbach::{GoldbachMarkSet, GoldbachSweep, GoldbachWitness, ReducedSieve};
pub use pattern::{
    DivisorFamily, DmaDmPartition, IndexSpace, ResiduePattern, Window, WindowScanReport,
};
pub use report::{ClaimStatus, Detail, FindingsReport};
pub use twin::{IntervalBound, MarkedRun, TwinMarkSet, TwinPair};
pub use wheel::{PrimeTable, Primorial, WheelClass, WheelSign};
