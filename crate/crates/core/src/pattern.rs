//! Primorial-period occupancy patterns and cyclic window scans.
//!
//! A pattern fixes a cap prime `P`, an index space, and a divisor family,
//! then records which residues of one full period are occupied by the
//! family's multiples:
//!
//! * integers — residues mod `2·3·…·P` sharing a factor with the modulus;
//! * odd integers — slot `i` stands for the odd value `2i+1`; the period is
//!   the lcm of the divisors (all odds or the odd primes in `3..=P`);
//! * twin indices — residues `±index (mod q)` for each wheel prime
//!   `q = 6·index ∓ 1` in `5..=P`, one period of the twin-sieve marks.
//!
//! Window scans slide a fixed-length window over the whole cycle and report
//! where occupancy peaks, in particular whether the mirror-symmetric window
//! (the one centered on the self-negating slots) attains the maximum.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::bitmap::Bitmap;
use crate::error::{Error, Result};
use crate::report::{claims, ClaimStatus, Detail, FindingsReport, DETAIL_CAP};
use crate::wheel::{self, WheelClass};

/// Default cap on pattern size: 2³² bits (512 MiB), enough for the
/// integers-mode pattern of P = 23 (modulus 223092870).
pub const DEFAULT_MEMORY_CAP_BITS: u64 = 1 << 32;

/// Cap on reported argmax starts.
pub const ARGMAX_CAP: usize = DETAIL_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndexSpace {
    Integers,
    OddIntegers,
    TwinIndices,
}

impl IndexSpace {
    pub fn as_str(self) -> &'static str {
        match self {
            IndexSpace::Integers => "integers",
            IndexSpace::OddIntegers => "odd-integers",
            IndexSpace::TwinIndices => "twin-indices",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DivisorFamily {
    /// All primes `2..=P` (integers mode).
    PrimesThrough,
    /// Odd primes `3..=P` (odd-integers mode).
    OddPrimes,
    /// All odd numbers `3..=P` (odd-integers mode).
    AllOdds,
    /// Wheel primes `5..=P` with `±index` residues (twin-indices mode).
    TwinWheel,
}

impl DivisorFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            DivisorFamily::PrimesThrough => "primes",
            DivisorFamily::OddPrimes => "odd-primes",
            DivisorFamily::AllOdds => "all-odds",
            DivisorFamily::TwinWheel => "twin-wheel",
        }
    }
}

/// One period of occupancy for a divisor family.
#[derive(Debug, Clone)]
pub struct ResiduePattern {
    prime: u64,
    index_space: IndexSpace,
    family: DivisorFamily,
    divisors: Vec<u64>,
    modulus: u64,
    occupied: Bitmap,
}

impl ResiduePattern {
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn index_space(&self) -> IndexSpace {
        self.index_space
    }

    pub fn family(&self) -> DivisorFamily {
        self.family
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn occupied(&self) -> &Bitmap {
        &self.occupied
    }

    pub fn occupied_count(&self) -> u64 {
        self.occupied.count_ones()
    }

    /// The slot holding the negation of slot `r`'s value.
    pub fn mirror(&self, r: u64) -> u64 {
        match self.index_space {
            // slot i is the odd value 2i+1; its negation sits at L−1−i
            IndexSpace::OddIntegers => self.modulus - 1 - r,
            _ => (self.modulus - r) % self.modulus,
        }
    }

    /// Slot of the integer value `v` (integers / twin modes) or of the odd
    /// value `v` (odd mode), reduced into the period.
    pub fn slot_of_value(&self, v: i64) -> u64 {
        let m = self.modulus as i64;
        match self.index_space {
            IndexSpace::OddIntegers => {
                debug_assert!(v.rem_euclid(2) == 1);
                (v - 1).div_euclid(2).rem_euclid(m) as u64
            }
            _ => v.rem_euclid(m) as u64,
        }
    }

    /// Start of the mirror-symmetric window for the canonical length:
    /// `−P` (integers), the slot of the odd value `−P` (odd integers), or
    /// `(F − P)/2 − index` (twin indices).
    pub fn symmetric_start(&self) -> u64 {
        match self.index_space {
            IndexSpace::Integers => self.modulus - self.prime,
            IndexSpace::OddIntegers => self.slot_of_value(-(self.prime as i64)),
            IndexSpace::TwinIndices => {
                let w = WheelClass::of(self.prime).expect("cap prime is on the wheel");
                let half = (self.modulus - self.prime) / 2;
                (half + self.modulus - w.index() % self.modulus) % self.modulus
            }
        }
    }

    /// Canonical window length: `2P+1`, `P+1`, or `P + 2·index + 1`.
    pub fn canonical_window_length(&self) -> u64 {
        match self.index_space {
            IndexSpace::Integers => 2 * self.prime + 1,
            IndexSpace::OddIntegers => self.prime + 1,
            IndexSpace::TwinIndices => {
                let w = WheelClass::of(self.prime).expect("cap prime is on the wheel");
                self.prime + 2 * w.index() + 1
            }
        }
    }
}

pub fn build_pattern(
    p: u64,
    mode: IndexSpace,
    family: DivisorFamily,
    cap_bits: u64,
) -> Result<ResiduePattern> {
    if !wheel::is_prime(p) {
        return Err(Error::domain(format!("pattern cap {p} is not prime")));
    }
    let min_p = match mode {
        IndexSpace::Integers => 2,
        IndexSpace::OddIntegers => 3,
        IndexSpace::TwinIndices => 5,
    };
    if p < min_p {
        return Err(Error::domain(format!(
            "{} patterns need a cap prime ≥ {min_p}, got {p}",
            mode.as_str()
        )));
    }
    let divisors: Vec<u64> = match (mode, family) {
        (IndexSpace::Integers, DivisorFamily::PrimesThrough) => {
            wheel::sieve_primes(p)?.primes().to_vec()
        }
        (IndexSpace::OddIntegers, DivisorFamily::OddPrimes) => wheel::sieve_primes(p)?
            .primes()
            .iter()
            .copied()
            .filter(|&q| q >= 3)
            .collect(),
        (IndexSpace::OddIntegers, DivisorFamily::AllOdds) => (3..=p).step_by(2).collect(),
        (IndexSpace::TwinIndices, DivisorFamily::TwinWheel) => wheel::sieve_primes(p)?
            .primes()
            .iter()
            .copied()
            .filter(|&q| q >= 5)
            .collect(),
        (m, f) => {
            return Err(Error::domain(format!(
                "divisor family {} does not apply to {} patterns",
                f.as_str(),
                m.as_str()
            )))
        }
    };
    let modulus = {
        let mut acc: u128 = 1;
        let mut overflowed = false;
        for &d in &divisors {
            let g = gcd_u128(acc, u128::from(d));
            match (acc / g).checked_mul(u128::from(d)) {
                Some(v) => acc = v,
                None => {
                    overflowed = true;
                    break;
                }
            }
        }
        if overflowed || acc > u128::from(cap_bits) {
            return Err(Error::ResourceLimit {
                required_bits: u64::try_from(acc).unwrap_or(u64::MAX),
                cap_bits,
            });
        }
        acc as u64
    };
    let mut occupied = Bitmap::new(modulus);
    match mode {
        IndexSpace::Integers => {
            for &q in &divisors {
                occupied.mark_stride(0, q);
            }
        }
        IndexSpace::OddIntegers => {
            // d divides 2i+1 ⟺ i ≡ (d−1)/2 (mod d)
            for &d in &divisors {
                occupied.mark_stride((d - 1) / 2, d);
            }
        }
        IndexSpace::TwinIndices => {
            for &q in &divisors {
                let w = WheelClass::of(q).expect("wheel prime");
                occupied.mark_stride(w.index(), q);
                occupied.mark_stride(q - w.index(), q);
            }
        }
    }
    Ok(ResiduePattern {
        prime: p,
        index_space: mode,
        family,
        divisors,
        modulus,
        occupied,
    })
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u128(b, a % b)
    }
}

/// Longest cyclic run of occupied slots: `(length, start)`.
pub fn max_occupied_run(pattern: &ResiduePattern) -> (u64, Option<u64>) {
    pattern.occupied.longest_cyclic_run()
}

/// Where a fixed-length cyclic window catches the most occupied slots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowScanReport {
    pub window_length: u64,
    pub max_occupied: u64,
    /// Starts attaining the maximum, ascending, capped at [`ARGMAX_CAP`].
    pub argmax_starts: Vec<u64>,
    pub argmax_total: u64,
    pub symmetric_start: u64,
    pub symmetric_count: u64,
    pub symmetric_attains_max: bool,
    pub unique: bool,
}

pub fn scan_windows(pattern: &ResiduePattern, window_length: u64) -> Result<WindowScanReport> {
    let m = pattern.modulus;
    if window_length == 0 || window_length > m {
        return Err(Error::domain(format!(
            "window length {window_length} outside 1..={m}"
        )));
    }
    let occ = &pattern.occupied;
    let symmetric_start = pattern.symmetric_start();
    let mut count: u64 = (0..window_length).map(|i| u64::from(occ.get(i))).sum();
    let mut max = 0u64;
    let mut argmax: Vec<u64> = Vec::new();
    let mut argmax_total = 0u64;
    let mut symmetric_count = 0u64;
    for s in 0..m {
        if s == symmetric_start {
            symmetric_count = count;
        }
        if count > max {
            max = count;
            argmax_total = 1;
            argmax.clear();
            argmax.push(s);
        } else if count == max {
            argmax_total += 1;
            if argmax.len() < ARGMAX_CAP {
                argmax.push(s);
            }
        }
        count -= u64::from(occ.get(s));
        count += u64::from(occ.get((s + window_length) % m));
    }
    Ok(WindowScanReport {
        window_length,
        max_occupied: max,
        argmax_starts: argmax,
        argmax_total,
        symmetric_start,
        symmetric_count,
        symmetric_attains_max: symmetric_count == max,
        unique: argmax_total == 1,
    })
}

/// Occupancy count of one cyclic window, recomputed naively.
pub fn window_count_naive(pattern: &ResiduePattern, start: u64, window_length: u64) -> u64 {
    (0..window_length)
        .map(|i| u64::from(pattern.occupied.get((start + i) % pattern.modulus)))
        .sum()
}

/// Odd numbers `3..=p` split at `p/2`: the high half can occupy at most two
/// slots of a `p+1`-length odd window, the low half is the translating set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DmaDmPartition {
    pub p: u64,
    /// Odd d with p/2 < d ≤ p.
    pub d_ma: Vec<u64>,
    /// Odd d with 1 < d < p/2.
    pub d_m: Vec<u64>,
}

pub fn partition_dma_dm(p: u64) -> Result<DmaDmPartition> {
    if p < 5 || !wheel::is_prime(p) {
        return Err(Error::domain(format!(
            "partition needs an odd prime ≥ 5, got {p}"
        )));
    }
    let mut d_ma = Vec::new();
    let mut d_m = Vec::new();
    let mut d = 3u64;
    while d <= p {
        if 2 * d > p {
            d_ma.push(d);
        } else {
            d_m.push(d);
        }
        d += 2;
    }
    Ok(DmaDmPartition { p, d_ma, d_m })
}

/// In the symmetric odd window `[−p, p]`, every high-half odd number must
/// occupy exactly the two slots `±d`, pairwise disjoint across the family.
pub fn check_dma_double_occupancy(p: u64) -> Result<FindingsReport> {
    let part = partition_dma_dm(p)?;
    let mut details = Vec::new();
    let mut all_slots = Vec::new();
    let mut ok = true;
    for &d in &part.d_ma {
        let occupied: Vec<i64> = (-(p as i64)..=p as i64)
            .filter(|v| v.rem_euclid(2) == 1 && v.rem_euclid(d as i64) == 0)
            .collect();
        ok &= occupied == vec![-(d as i64), d as i64];
        all_slots.extend(occupied.iter().copied());
        details.push(Detail::OddSlots {
            divisor: d,
            slots: occupied,
        });
    }
    let total = all_slots.len();
    all_slots.sort_unstable();
    all_slots.dedup();
    let disjoint = all_slots.len() == total;
    let expected = 2 * part.d_ma.len();
    let status = if ok && disjoint && total == expected {
        ClaimStatus::Confirmed
    } else {
        ClaimStatus::Counterexample
    };
    Ok(FindingsReport::new(
        claims::PATTERN_DMA_DOUBLE,
        json!({
            "p": p,
            "d_ma": part.d_ma,
            "slots": total,
            "disjoint": disjoint,
        }),
        status,
        details,
    ))
}

/// The translation argument for the low-half odds: each `d` anchors a
/// multiple `d·⌊p/d⌋` past `p/2`, and no window that gives `d` an extra
/// slot may beat the symmetric window's total.
pub fn check_dm_translation(p: u64) -> Result<FindingsReport> {
    if p < 7 {
        return Err(Error::domain(format!(
            "translation check needs a prime ≥ 7, got {p}"
        )));
    }
    let part = partition_dma_dm(p)?;
    let pattern = build_pattern(
        p,
        IndexSpace::OddIntegers,
        DivisorFamily::AllOdds,
        DEFAULT_MEMORY_CAP_BITS,
    )?;
    let m = pattern.modulus();
    let window = p + 1;
    let sym = pattern.symmetric_start();
    let sym_total = window_count_naive(&pattern, sym, window);
    let mut details = Vec::new();
    let mut ok = true;
    for &d in &part.d_m {
        let anchor = d * (p / d);
        let anchor_exceeds_half = 2 * anchor > p;
        // slots occupied by d alone
        let mut d_only = Bitmap::new(m);
        d_only.mark_stride((d - 1) / 2, d);
        let sym_d = (0..window)
            .map(|i| u64::from(d_only.get((sym + i) % m)))
            .sum::<u64>();
        let mut d_count: u64 = (0..window).map(|i| u64::from(d_only.get(i))).sum();
        let mut total: u64 = (0..window)
            .map(|i| u64::from(pattern.occupied().get(i)))
            .sum();
        let mut windows_with_extra = 0u64;
        let mut max_total_with_extra = 0u64;
        let mut holds = anchor_exceeds_half;
        for s in 0..m {
            if d_count > sym_d {
                windows_with_extra += 1;
                max_total_with_extra = max_total_with_extra.max(total);
                if total > sym_total {
                    holds = false;
                }
            }
            d_count -= u64::from(d_only.get(s));
            d_count += u64::from(d_only.get((s + window) % m));
            total -= u64::from(pattern.occupied().get(s));
            total += u64::from(pattern.occupied().get((s + window) % m));
        }
        ok &= holds;
        details.push(Detail::DmCase {
            divisor: d,
            anchor,
            anchor_exceeds_half,
            windows_with_extra,
            max_total_with_extra,
            symmetric_total: sym_total,
            holds,
        });
    }
    Ok(FindingsReport::new(
        claims::PATTERN_DM_TRANSLATION,
        json!({ "p": p, "d_m": part.d_m, "symmetric_total": sym_total }),
        if ok {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::Counterexample
        },
        details,
    ))
}

/// A plain integer interval `[start, start + length − 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub start: i64,
    pub length: u64,
}

/// `d, d², d³, …` while at most `reach`.
fn powers_up_to(d: u64, reach: u64) -> impl Iterator<Item = u64> {
    std::iter::successors(Some(1u64), move |&p| p.checked_mul(d))
        .skip(1)
        .take_while(move |&p| p <= reach)
}

impl Window {
    pub fn end(&self) -> i64 {
        self.start + self.length as i64 - 1
    }
}

/// Minimum distance between two distinct values `±d^k` (k ≥ 1) inside the
/// window; `None` when fewer than two powers land there.
pub fn min_power_distance(window: &Window, d: u64) -> Result<Option<u64>> {
    if d < 2 {
        return Err(Error::domain(format!("power base must be ≥ 2, got {d}")));
    }
    let lo = window.start;
    let hi = window.end();
    let reach = lo.unsigned_abs().max(hi.unsigned_abs());
    let mut members = Vec::new();
    for power in powers_up_to(d, reach) {
        let v = power as i64;
        if v >= lo && v <= hi {
            members.push(v);
        }
        if -v >= lo && -v <= hi {
            members.push(-v);
        }
    }
    members.sort_unstable();
    Ok(members.windows(2).map(|w| (w[1] - w[0]) as u64).min())
}

/// Minimum distance over all pairs of powers `±d^a, ±d^b` that fit together
/// inside some window of `window_length` consecutive integers, with every
/// pair attaining it.
fn min_fitting_power_pair(d: u64, window_length: u64) -> Option<(u64, Vec<(i64, i64)>)> {
    let span = window_length - 1; // max distance inside the window
                                  // consecutive same-sign powers are a factor d ≥ 2 apart, so a fitting
                                  // pair never has a member beyond 2·span; powers up to 3·span cover all
    let reach = 3 * span;
    let mut values = Vec::new();
    for power in powers_up_to(d, reach) {
        values.push(power as i64);
        values.push(-(power as i64));
    }
    values.sort_unstable();
    let mut best: Option<u64> = None;
    let mut pairs = Vec::new();
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            let dist = (values[j] - values[i]) as u64;
            if dist == 0 || dist > span {
                continue;
            }
            match best {
                Some(b) if dist > b => {}
                Some(b) if dist == b => pairs.push((values[i], values[j])),
                _ => {
                    best = Some(dist);
                    pairs = vec![(values[i], values[j])];
                }
            }
        }
    }
    pairs.sort_unstable();
    best.map(|b| (b, pairs))
}

/// For every odd base `3 ≤ d ≤ p`, the symmetric window `[−p, p]` must
/// realize distance `2d` and no window of `2p+1` consecutive integers may
/// do better. Ties (d = 3 via the pair {3, 9}) and the even edge d = 2 are
/// reported as documented anomalies.
pub fn verify_power_minimality(p: u64) -> Result<Vec<FindingsReport>> {
    if p < 5 || !wheel::is_prime(p) {
        return Err(Error::domain(format!(
            "power minimality needs an odd prime ≥ 5, got {p}"
        )));
    }
    let window_length = 2 * p + 1;
    let symmetric = Window {
        start: -(p as i64),
        length: window_length,
    };
    let mut cases = Vec::new();
    let mut anomalies = Vec::new();
    let mut all_min = true;
    let mut d = 3u64;
    while d <= p {
        let expected = 2 * d;
        let sym_min = min_power_distance(&symmetric, d)?;
        let (global_min, achieved_by) =
            min_fitting_power_pair(d, window_length).expect("±d always fit");
        let tie = achieved_by.len() > 1;
        let holds = sym_min == Some(expected) && global_min == expected;
        all_min &= holds;
        let case = Detail::PowerCase {
            base: d,
            min_distance: global_min,
            expected,
            achieved_by: achieved_by.clone(),
            tie,
        };
        if tie {
            anomalies.push(case.clone());
        }
        cases.push(case);
        d += 2;
    }
    // even edge: d = 2 undercuts 2d because 4 − 2 < 4
    let (edge_min, edge_pairs) = min_fitting_power_pair(2, window_length).expect("2 and 4 fit");
    anomalies.push(Detail::PowerCase {
        base: 2,
        min_distance: edge_min,
        expected: 4,
        tie: edge_pairs.len() > 1,
        achieved_by: edge_pairs,
    });
    let min_report = FindingsReport::new(
        claims::PATTERN_POWER_MIN,
        json!({ "p": p, "window_length": window_length, "all_minimal": all_min }),
        if all_min {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::Counterexample
        },
        cases,
    );
    let edge_report = FindingsReport::new(
        claims::PATTERN_POWER_EDGE,
        json!({ "p": p, "window_length": window_length }),
        ClaimStatus::DocumentedAnomaly,
        anomalies,
    );
    Ok(vec![min_report, edge_report])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cap() -> u64 {
        DEFAULT_MEMORY_CAP_BITS
    }

    #[test]
    fn integers_pattern_for_five() {
        let pat =
            build_pattern(5, IndexSpace::Integers, DivisorFamily::PrimesThrough, cap()).unwrap();
        assert_eq!(pat.modulus(), 30);
        assert_eq!(pat.occupied_count(), 22);
        let free: Vec<u64> = (0..30).filter(|&r| !pat.occupied().get(r)).collect();
        assert_eq!(free, vec![1, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn twin_pattern_for_seven() {
        let pat =
            build_pattern(7, IndexSpace::TwinIndices, DivisorFamily::TwinWheel, cap()).unwrap();
        assert_eq!(pat.modulus(), 35);
        assert_eq!(pat.occupied_count(), 20);
        assert!(!pat.occupied().get(17));
        assert!(!pat.occupied().get(18));
    }

    #[test]
    fn odd_pattern_period_is_lcm() {
        let pat = build_pattern(7, IndexSpace::OddIntegers, DivisorFamily::AllOdds, cap()).unwrap();
        assert_eq!(pat.modulus(), 105);
        let primes_only =
            build_pattern(13, IndexSpace::OddIntegers, DivisorFamily::OddPrimes, cap()).unwrap();
        assert_eq!(primes_only.modulus(), 3 * 5 * 7 * 11 * 13);
        let with_squares =
            build_pattern(13, IndexSpace::OddIntegers, DivisorFamily::AllOdds, cap()).unwrap();
        assert_eq!(with_squares.modulus(), 45045); // lcm(3,5,7,9,11,13)
    }

    #[test]
    fn resource_cap_reports_required_bits() {
        let err =
            build_pattern(13, IndexSpace::Integers, DivisorFamily::PrimesThrough, 100).unwrap_err();
        assert_eq!(
            err,
            Error::ResourceLimit {
                required_bits: 30030,
                cap_bits: 100
            }
        );
    }

    #[test]
    fn family_mode_mismatch_is_domain_error() {
        assert!(build_pattern(7, IndexSpace::Integers, DivisorFamily::AllOdds, cap()).is_err());
        assert!(
            build_pattern(7, IndexSpace::TwinIndices, DivisorFamily::OddPrimes, cap()).is_err()
        );
        assert!(
            build_pattern(9, IndexSpace::Integers, DivisorFamily::PrimesThrough, cap()).is_err()
        );
    }

    #[test]
    fn run_lengths_small_primorials() {
        let p30 =
            build_pattern(5, IndexSpace::Integers, DivisorFamily::PrimesThrough, cap()).unwrap();
        assert_eq!(max_occupied_run(&p30), (5, Some(2)));
        let p210 =
            build_pattern(7, IndexSpace::Integers, DivisorFamily::PrimesThrough, cap()).unwrap();
        assert_eq!(max_occupied_run(&p210).0, 9);
    }

    #[test]
    fn integers_scan_for_five() {
        let pat =
            build_pattern(5, IndexSpace::Integers, DivisorFamily::PrimesThrough, cap()).unwrap();
        let report = scan_windows(&pat, 11).unwrap();
        assert_eq!(report.max_occupied, 9);
        assert_eq!(report.symmetric_start, 25);
        assert_eq!(report.symmetric_count, 9);
        assert!(report.symmetric_attains_max);
        assert!(!report.unique);
    }

    #[test]
    fn odd_scan_for_seven_symmetric_ties() {
        let pat = build_pattern(7, IndexSpace::OddIntegers, DivisorFamily::AllOdds, cap()).unwrap();
        let report = scan_windows(&pat, 8).unwrap();
        assert_eq!(report.max_occupied, 6);
        assert_eq!(report.symmetric_start, 101); // slot of −7 mod 105
        assert!(report.symmetric_attains_max);
        // the symmetric window is not alone at the maximum: translating 3
        // onto ±9 trades its extra slot against one of 7's, a net tie, and
        // two windows away from ±1 tie as well
        assert!(!report.unique);
        assert_eq!(report.argmax_starts, vec![40, 42, 55, 57, 100, 101, 102]);
        for &s in &report.argmax_starts {
            assert_eq!(window_count_naive(&pat, s, 8), 6);
        }
    }

    #[test]
    fn twin_scan_for_seven_window_13_to_22() {
        let pat =
            build_pattern(7, IndexSpace::TwinIndices, DivisorFamily::TwinWheel, cap()).unwrap();
        assert_eq!(pat.canonical_window_length(), 10);
        let report = scan_windows(&pat, 10).unwrap();
        assert_eq!(report.max_occupied, 8);
        assert_eq!(report.argmax_starts, vec![13]);
        assert_eq!(report.symmetric_start, 13);
        assert!(report.symmetric_attains_max);
        assert!(report.unique);
    }

    #[test]
    fn scan_rejects_oversized_windows() {
        let pat =
            build_pattern(5, IndexSpace::TwinIndices, DivisorFamily::TwinWheel, cap()).unwrap();
        assert_eq!(pat.modulus(), 5);
        assert!(scan_windows(&pat, 8).is_err());
    }

    #[test]
    fn partition_examples() {
        let p13 = partition_dma_dm(13).unwrap();
        assert_eq!(p13.d_ma, vec![7, 9, 11, 13]);
        assert_eq!(p13.d_m, vec![3, 5]);
        let p5 = partition_dma_dm(5).unwrap();
        assert_eq!(p5.d_ma, vec![3, 5]);
        assert!(p5.d_m.is_empty());
        let p23 = partition_dma_dm(23).unwrap();
        assert_eq!(p23.d_m, vec![3, 5, 7, 9, 11]);
    }

    #[test]
    fn dma_double_occupancy_confirmed() {
        for p in [5u64, 7, 13] {
            let r = check_dma_double_occupancy(p).unwrap();
            assert_eq!(r.status, ClaimStatus::Confirmed, "p = {p}");
        }
        let r7 = check_dma_double_occupancy(7).unwrap();
        assert_eq!(r7.params["slots"], 4);
        let r13 = check_dma_double_occupancy(13).unwrap();
        assert_eq!(r13.params["slots"], 8);
    }

    #[test]
    fn dm_translation_confirmed_small() {
        let r7 = check_dm_translation(7).unwrap();
        assert_eq!(r7.status, ClaimStatus::Confirmed);
        match &r7.details[0] {
            Detail::DmCase {
                divisor,
                anchor,
                anchor_exceeds_half,
                symmetric_total,
                holds,
                ..
            } => {
                assert_eq!((*divisor, *anchor), (3, 6));
                assert!(anchor_exceeds_half);
                assert_eq!(*symmetric_total, 6);
                assert!(holds);
            }
            other => panic!("unexpected {other:?}"),
        }
        let r11 = check_dm_translation(11).unwrap();
        assert_eq!(r11.status, ClaimStatus::Confirmed);
        let r13 = check_dm_translation(13).unwrap();
        assert_eq!(r13.status, ClaimStatus::Confirmed);
        assert_eq!(r13.details.len(), 2); // d ∈ {3, 5}
    }

    #[test]
    fn power_distance_examples() {
        let w = Window {
            start: -7,
            length: 15,
        };
        assert_eq!(min_power_distance(&w, 5).unwrap(), Some(10));
        assert_eq!(
            min_power_distance(
                &Window {
                    start: 2,
                    length: 15
                },
                3
            )
            .unwrap(),
            Some(6)
        );
        assert_eq!(min_power_distance(&w, 2).unwrap(), Some(2));
        assert!(min_power_distance(&w, 1).is_err());
        assert_eq!(
            min_power_distance(
                &Window {
                    start: 40,
                    length: 5
                },
                7
            )
            .unwrap(),
            None
        );
    }

    #[test]
    fn power_minimality_for_seven() {
        let reports = verify_power_minimality(7).unwrap();
        assert_eq!(reports[0].status, ClaimStatus::Confirmed);
        assert_eq!(reports[1].status, ClaimStatus::DocumentedAnomaly);
        // d = 3 ties through {3, 9}
        match &reports[0].details[0] {
            Detail::PowerCase {
                base,
                min_distance,
                achieved_by,
                tie,
                ..
            } => {
                assert_eq!((*base, *min_distance), (3, 6));
                assert!(tie);
                assert!(achieved_by.contains(&(3, 9)));
                assert!(achieved_by.contains(&(-3, 3)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn power_minimality_for_five_unique_at_five() {
        let reports = verify_power_minimality(5).unwrap();
        match &reports[0].details[1] {
            Detail::PowerCase {
                base,
                min_distance,
                achieved_by,
                tie,
                ..
            } => {
                assert_eq!((*base, *min_distance), (5, 10));
                assert_eq!(achieved_by.as_slice(), &[(-5, 5)]);
                assert!(!tie);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn mirror_involution_fixes_occupancy() {
        for (mode, family) in [
            (IndexSpace::Integers, DivisorFamily::PrimesThrough),
            (IndexSpace::OddIntegers, DivisorFamily::AllOdds),
            (IndexSpace::OddIntegers, DivisorFamily::OddPrimes),
            (IndexSpace::TwinIndices, DivisorFamily::TwinWheel),
        ] {
            let pat = build_pattern(7, mode, family, cap()).unwrap();
            for r in 0..pat.modulus() {
                assert_eq!(
                    pat.occupied().get(r),
                    pat.occupied().get(pat.mirror(r)),
                    "mode {mode:?} r {r}"
                );
            }
        }
    }
}
