//! The twin-index sieve over the 6n−1 / 6n+1 progressions.
//!
//! A wheel value `P` with index `i` (so `P = 6i ∓ 1`) marks the twin
//! indices `n = P·k + i` and `n = P·k − i` for `k ≥ i`; at every marked
//! index one of `6n−1`, `6n+1` is divisible by `P`. Equivalently, `n` is
//! marked by `P` when `n ≡ ±i (mod P)` and `n` is at or past the square-
//! driven first mark (`P·i + i` for the `+i` class, `P·i − i` for the
//! `−i` class). Unmarked indices are exactly the candidates where both
//! `6n−1` and `6n+1` stay prime, which the oracle checks verify.

use serde::{Deserialize, Serialize};
use serde_json::json;

use rayon::prelude::*;

use crate::bitmap::Bitmap;
use crate::error::{Error, Result};
use crate::report::{claims, ClaimStatus, Detail, FindingsReport, DETAIL_CAP};
use crate::wheel::{self, WheelClass, WheelSign};

/// Marked twin indices over `[1, n_max]` with the generators that made them.
#[derive(Debug, Clone)]
pub struct TwinMarkSet {
    n_max: u64,
    marked: Bitmap,
    generators: Vec<WheelClass>,
}

impl TwinMarkSet {
    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    pub fn generators(&self) -> &[WheelClass] {
        &self.generators
    }

    /// Bit `n` set means index `n` is marked; bit 0 is unused.
    pub fn marked(&self) -> &Bitmap {
        &self.marked
    }

    pub fn is_marked(&self, n: u64) -> bool {
        n >= 1 && n <= self.n_max && self.marked.get(n)
    }

    pub fn marked_count(&self) -> u64 {
        self.marked.count_ones()
    }

    pub fn marked_indices(&self) -> Vec<u64> {
        self.marked.iter_ones().collect()
    }

    pub fn unmarked_indices(&self) -> Vec<u64> {
        (1..=self.n_max).filter(|&n| !self.marked.get(n)).collect()
    }
}

#[derive(Debug, Clone, Default)]
pub struct BuildOptions {
    /// Only use generators with value ≤ cap.
    pub generator_cap: Option<u64>,
    /// Experiment path: also run composite wheel values as generators.
    /// Redundant by construction; exists so the redundancy is testable.
    pub include_composites: bool,
    /// Number of independently marked bitmap chunks; 0 picks one chunk per
    /// rayon thread. The result is bit-identical for every chunk count.
    pub chunks: usize,
}

/// Wheel generators whose first mark lands at or below `n_max`.
fn generator_set(n_max: u64, opts: &BuildOptions) -> Vec<WheelClass> {
    // the first mark of value v with index i is i·(v−1) ≥ (v−1)²/6
    if n_max < 4 {
        return Vec::new();
    }
    let mut bound = wheel::isqrt(6 * n_max) + 2;
    if let Some(cap) = opts.generator_cap {
        bound = bound.min(cap);
    }
    if bound < 5 {
        return Vec::new();
    }
    let mut gens: Vec<WheelClass> = if opts.include_composites {
        (5..=bound).filter_map(WheelClass::of).collect()
    } else {
        wheel::sieve_primes(bound)
            .expect("bound ≥ 5")
            .primes()
            .iter()
            .filter_map(|&p| WheelClass::of(p))
            .collect()
    };
    gens.retain(|w| w.first_marked_index() <= n_max);
    gens
}

pub fn build_twin_marks(n_max: u64) -> TwinMarkSet {
    build_twin_marks_opts(n_max, &BuildOptions::default())
}

pub fn build_twin_marks_capped(n_max: u64, generator_cap: Option<u64>) -> TwinMarkSet {
    build_twin_marks_opts(
        n_max,
        &BuildOptions {
            generator_cap,
            ..BuildOptions::default()
        },
    )
}

pub fn build_twin_marks_opts(n_max: u64, opts: &BuildOptions) -> TwinMarkSet {
    let generators = generator_set(n_max, opts);
    let mut marked = Bitmap::new(n_max + 1);
    let chunks = match opts.chunks {
        0 => rayon::current_num_threads().max(1),
        c => c,
    };
    let total_words = marked.words().len();
    let chunk_words = total_words.div_ceil(chunks).max(1);
    let len = marked.len();
    marked
        .words_mut()
        .par_chunks_mut(chunk_words)
        .enumerate()
        .for_each(|(ci, words)| {
            let bit_lo = (ci * chunk_words * 64) as u64;
            let bit_hi = (bit_lo + (words.len() * 64) as u64).min(len);
            for w in &generators {
                let (p, i) = (w.value(), w.index());
                mark_progression(words, bit_lo, bit_hi, p * i + i, p);
                mark_progression(words, bit_lo, bit_hi, p * i - i, p);
            }
        });
    TwinMarkSet {
        n_max,
        marked,
        generators,
    }
}

/// Set bits `start, start+step, …` within `[bit_lo, bit_hi)`, where `words`
/// covers exactly that word-aligned range.
fn mark_progression(words: &mut [u64], bit_lo: u64, bit_hi: u64, start: u64, step: u64) {
    let mut j = if start >= bit_lo {
        start
    } else {
        start + (bit_lo - start).div_ceil(step) * step
    };
    while j < bit_hi {
        let rel = j - bit_lo;
        words[(rel >> 6) as usize] |= 1u64 << (rel & 63);
        j += step;
    }
}

/// Twin indices ≤ `n_max` marked by the prime generator `p`, by direct
/// enumeration of `p·k − i` and `p·k + i` over `k ≥ i`. Ascending.
pub fn composite_indices(p: WheelClass, n_max: u64) -> Result<Vec<u64>> {
    if !wheel::is_prime(p.value()) {
        return Err(Error::domain(format!(
            "generator {} is composite; composite generators are redundant and only run through the experiment path",
            p.value()
        )));
    }
    Ok(marked_indices_unchecked(p, n_max))
}

/// The same enumeration without the primality gate, for the
/// composite-generator experiment.
pub fn marked_indices_unchecked(w: WheelClass, n_max: u64) -> Vec<u64> {
    let (p, i) = (w.value(), w.index());
    let mut out = Vec::new();
    let mut k = i;
    loop {
        let minus = p * k - i;
        if minus > n_max {
            break;
        }
        out.push(minus);
        let plus = p * k + i;
        if plus <= n_max {
            out.push(plus);
        }
        k += 1;
    }
    out
}

/// A twin candidate pair `(6n−1, 6n+1)` at index `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinPair {
    pub index: u64,
    pub low: u64,
    pub high: u64,
}

pub fn twin_pairs(n_max: u64) -> Vec<TwinPair> {
    twin_pairs_from(&build_twin_marks(n_max))
}

pub fn twin_pairs_from(set: &TwinMarkSet) -> Vec<TwinPair> {
    set.unmarked_indices()
        .into_iter()
        .map(|n| TwinPair {
            index: n,
            low: 6 * n - 1,
            high: 6 * n + 1,
        })
        .collect()
}

/// Compare the unmarked set against the primality oracle's twin indicator.
pub fn verify_twin_equivalence(n_max: u64) -> FindingsReport {
    let set = build_twin_marks(n_max);
    let primes = wheel::prime_bitmap(6 * n_max + 1);
    let mut mismatches = Vec::new();
    let mut mismatch_total = 0u64;
    let mut twins = 0u64;
    for n in 1..=n_max {
        let unmarked = !set.marked.get(n);
        let oracle_twin = primes.get(6 * n - 1) && primes.get(6 * n + 1);
        if oracle_twin {
            twins += 1;
        }
        if unmarked != oracle_twin {
            mismatch_total += 1;
            if mismatches.len() < DETAIL_CAP {
                mismatches.push(Detail::TwinMismatch {
                    n,
                    sieve_unmarked: unmarked,
                    oracle_twin,
                });
            }
        }
    }
    let status = if mismatch_total == 0 {
        ClaimStatus::Confirmed
    } else {
        ClaimStatus::Counterexample
    };
    FindingsReport::new(
        claims::TWIN_EQUIVALENCE,
        json!({
            "n_max": n_max,
            "twins": twins,
            "marked": set.marked_count(),
            "generators": set.generators().len(),
            "mismatches": mismatch_total,
        }),
        status,
        mismatches,
    )
}

/// The spacing bound `P + 2·index + 3` for a 6n+1 prime, together with the
/// first-mark difference that realizes it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalBound {
    pub prime: u64,
    pub index: u64,
    pub bound: u64,
    pub neighbor: u64,
    /// First index where `6n+1` is divisible by the prime: `P·i + i`.
    pub first_mark_prime: u64,
    /// First such index for the neighbor `6(i+1)−1`: `Q·(i+1) − (i+1)`.
    pub first_mark_neighbor: u64,
    pub holds: bool,
}

pub fn interval_bound(p: WheelClass) -> Result<IntervalBound> {
    if p.sign() != WheelSign::Plus {
        return Err(Error::domain(format!(
            "the spacing bound is derived for 6n+1 values; {} is 6n−1",
            p.value()
        )));
    }
    let (value, i) = (p.value(), p.index());
    let bound = value + 2 * i + 3;
    let neighbor = 6 * (i + 1) - 1;
    let first_mark_prime = value * i + i;
    let first_mark_neighbor = neighbor * (i + 1) - (i + 1);
    Ok(IntervalBound {
        prime: value,
        index: i,
        bound,
        neighbor,
        first_mark_prime,
        first_mark_neighbor,
        holds: first_mark_neighbor - first_mark_prime == bound,
    })
}

/// Longest run of consecutive marked indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedRun {
    pub length: u64,
    pub start: Option<u64>,
}

pub fn max_marked_run(n_max: u64, generator_cap: Option<u64>) -> MarkedRun {
    let set = build_twin_marks_capped(n_max, generator_cap);
    max_marked_run_of(&set)
}

pub fn max_marked_run_of(set: &TwinMarkSet) -> MarkedRun {
    let (length, start) = set.marked.longest_run();
    MarkedRun { length, start }
}
