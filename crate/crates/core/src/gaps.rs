//! Segmented prime-gap scanner.
//!
//! Walks consecutive primes `(p, next_p)` for every prime `p < limit`,
//! emits a record whenever a gap beats all earlier gaps, and checks every
//! gap against `2√p + 1` in exact integer arithmetic:
//! `gap < 2√p + 1  ⟺  (gap − 1)² < 4p` for `gap ≥ 1`.
//!
//! Segments are sieved in parallel batches; stitching across segment
//! boundaries runs in ascending order, so the output does not depend on
//! segment size or thread count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::bitmap::Bitmap;
use crate::error::{Error, Result};
use crate::report::{claims, ClaimStatus, Detail, FindingsReport, DETAIL_CAP};
use crate::wheel::{self, isqrt};

/// A gap between consecutive primes with its bound check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapRecord {
    pub p: u64,
    pub next_p: u64,
    pub gap: u64,
    /// `2√p + 1`, for display; the check itself is integer-exact.
    pub bound: f64,
    pub within_bound: bool,
}

impl GapRecord {
    fn new(p: u64, next_p: u64) -> Self {
        let gap = next_p - p;
        GapRecord {
            p,
            next_p,
            gap,
            bound: 2.0 * (p as f64).sqrt() + 1.0,
            within_bound: gap_within_bound(p, gap),
        }
    }
}

/// `gap < 2√p + 1` without floating point: `(gap − 1)² < 4p`.
pub fn gap_within_bound(p: u64, gap: u64) -> bool {
    if gap == 0 {
        return true;
    }
    let g1 = u128::from(gap - 1);
    g1 * g1 < 4 * u128::from(p)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapScan {
    pub limit: u64,
    pub segment_size: u64,
    /// Record-breaking gaps in ascending order of `p`.
    pub records: Vec<GapRecord>,
    /// Gaps with `within_bound == false` (expected: none at desk scale).
    pub violations: Vec<GapRecord>,
    pub max_gap: u64,
    pub max_gap_at: u64,
    pub primes_scanned: u64,
}

struct SegmentSummary {
    first: Option<u64>,
    last: Option<u64>,
    /// Primes in the segment below the scan limit.
    count_below_limit: u64,
    /// Pairs whose gap beats every earlier gap within the segment; any
    /// global record inside the segment is among them.
    candidates: Vec<(u64, u64)>,
    /// Every in-segment pair failing the bound.
    violations: Vec<(u64, u64)>,
}

/// Primes in `[lo, hi)` summarized for stitching. `base` must cover √hi.
fn segment_summary(lo: u64, hi: u64, limit: u64, base: &[u64]) -> SegmentSummary {
    let lo_odd = lo.max(3) | 1;
    let slots = if hi > lo_odd {
        (hi - lo_odd).div_ceil(2)
    } else {
        0
    };
    let mut composite = Bitmap::new(slots);
    for &q in base.iter().skip(1) {
        // first odd multiple of q at or past max(q², lo_odd)
        let mut m = (q * q).max(lo_odd.div_ceil(q) * q);
        if m % 2 == 0 {
            m += q;
        }
        while m < hi {
            composite.set((m - lo_odd) / 2);
            m += 2 * q;
        }
    }
    let mut summary = SegmentSummary {
        first: None,
        last: None,
        count_below_limit: 0,
        candidates: Vec::new(),
        violations: Vec::new(),
    };
    let mut prev: Option<u64> = None;
    let mut local_best = 0u64;
    let mut push = |p: u64, summary: &mut SegmentSummary| {
        if p < limit {
            summary.count_below_limit += 1;
        }
        summary.first.get_or_insert(p);
        summary.last = Some(p);
        if let Some(q) = prev {
            let gap = p - q;
            if gap > local_best {
                local_best = gap;
                summary.candidates.push((q, p));
            }
            if !gap_within_bound(q, gap) {
                summary.violations.push((q, p));
            }
        }
        prev = Some(p);
    };
    if lo <= 2 && hi > 2 {
        push(2, &mut summary);
    }
    for slot in 0..slots {
        if !composite.get(slot) {
            push(lo_odd + 2 * slot, &mut summary);
        }
    }
    summary
}

pub fn scan_gaps(limit: u64, segment_size: u64) -> Result<GapScan> {
    scan_gaps_with(limit, segment_size, None)
}

/// Scan with an optional progress callback `(scanned_up_to, limit)`.
pub fn scan_gaps_with(
    limit: u64,
    segment_size: u64,
    progress: Option<&(dyn Fn(u64, u64) + Sync)>,
) -> Result<GapScan> {
    if limit < 3 {
        return Err(Error::domain(format!(
            "gap scan needs limit ≥ 3, got {limit}"
        )));
    }
    if segment_size < 64 {
        return Err(Error::domain(format!(
            "segment size must be at least 64, got {segment_size}"
        )));
    }
    let mut base = wheel::sieve_primes(isqrt(limit + 10_000_000).max(3))?;
    let mut scan = GapScan {
        limit,
        segment_size,
        records: Vec::new(),
        violations: Vec::new(),
        max_gap: 0,
        max_gap_at: 0,
        primes_scanned: 0,
    };
    let mut prev_last: Option<u64> = None;
    let mut done = false;
    let batch_len = rayon::current_num_threads().max(1) * 2;
    let mut lo = 2u64;
    while !done {
        let batch_end = lo + segment_size * batch_len as u64;
        if u128::from(base.limit()) * u128::from(base.limit()) < u128::from(batch_end) {
            base = wheel::sieve_primes(isqrt(batch_end) + 1)?;
        }
        let bounds: Vec<(u64, u64)> = (0..batch_len)
            .map(|i| {
                let s = lo + i as u64 * segment_size;
                (s, s + segment_size)
            })
            .collect();
        lo = batch_end;
        let summaries: Vec<SegmentSummary> = bounds
            .par_iter()
            .map(|&(s, e)| segment_summary(s, e, limit, base.primes()))
            .collect();
        for summary in summaries {
            stitch(&mut scan, summary, &mut prev_last, &mut done);
            if done {
                break;
            }
        }
        if let Some(cb) = progress {
            cb(lo.min(limit), limit);
        }
    }
    Ok(scan)
}

fn stitch(
    scan: &mut GapScan,
    summary: SegmentSummary,
    prev_last: &mut Option<u64>,
    done: &mut bool,
) {
    let limit = scan.limit;
    let boundary = match (*prev_last, summary.first) {
        (Some(q), Some(f)) => Some((q, f)),
        _ => None,
    };
    // records: the boundary pair, then the segment's rising-maxima pairs,
    // re-filtered against the global maximum
    for (p, next_p) in boundary.iter().copied().chain(summary.candidates) {
        if p >= limit {
            *done = true;
            break;
        }
        let gap = next_p - p;
        if gap > scan.max_gap {
            scan.max_gap = gap;
            scan.max_gap_at = p;
            scan.records.push(GapRecord::new(p, next_p));
        }
    }
    // violations: the boundary pair plus every in-segment pair that failed
    for (p, next_p) in boundary.iter().copied().chain(summary.violations) {
        if p < limit && !gap_within_bound(p, next_p - p) {
            scan.violations.push(GapRecord::new(p, next_p));
        }
    }
    scan.primes_scanned += summary.count_below_limit;
    if summary.last.is_some() {
        *prev_last = summary.last;
    }
}

/// Findings report over a finished scan.
pub fn gap_report(scan: &GapScan) -> FindingsReport {
    let mut details: Vec<Detail> = scan
        .records
        .iter()
        .take(DETAIL_CAP)
        .map(|r| Detail::Gap {
            p: r.p,
            next_p: r.next_p,
            gap: r.gap,
            within_bound: r.within_bound,
        })
        .collect();
    for v in scan.violations.iter().take(DETAIL_CAP) {
        details.push(Detail::Gap {
            p: v.p,
            next_p: v.next_p,
            gap: v.gap,
            within_bound: v.within_bound,
        });
    }
    FindingsReport::new(
        claims::GAPS_WITHIN_BOUND,
        json!({
            "limit": scan.limit,
            "segment_size": scan.segment_size,
            "max_gap": scan.max_gap,
            "max_gap_at": scan.max_gap_at,
            "records": scan.records.len(),
            "violations": scan.violations.len(),
            "primes_scanned": scan.primes_scanned,
        }),
        if scan.violations.is_empty() {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::Counterexample
        },
        details,
    )
}

/// For every `n ≤ n_max`, some prime must lie strictly between `n²` and
/// `(n+1)²`.
pub fn legendre_check(n_max: u64) -> Result<FindingsReport> {
    if n_max < 1 {
        return Err(Error::domain("legendre check needs n_max ≥ 1".to_string()));
    }
    let top = (n_max + 1) * (n_max + 1);
    let primes = wheel::prime_bitmap(top);
    let mut failures = Vec::new();
    let mut failure_total = 0u64;
    for n in 1..=n_max {
        let lo = n * n;
        let hi = (n + 1) * (n + 1);
        let found = (lo + 1..hi).any(|m| primes.get(m));
        if !found {
            failure_total += 1;
            if failures.len() < DETAIL_CAP {
                failures.push(Detail::LegendreFailure {
                    n,
                    low: lo,
                    high: hi,
                });
            }
        }
    }
    Ok(FindingsReport::new(
        claims::GAPS_LEGENDRE,
        json!({ "n_max": n_max, "failures": failure_total }),
        if failure_total == 0 {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::Counterexample
        },
        failures,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_to_one_hundred() {
        let scan = scan_gaps(100, 64).unwrap();
        let pairs: Vec<(u64, u64, u64)> = scan
            .records
            .iter()
            .map(|r| (r.p, r.next_p, r.gap))
            .collect();
        assert_eq!(
            pairs,
            vec![(2, 3, 1), (3, 5, 2), (7, 11, 4), (23, 29, 6), (89, 97, 8)]
        );
        assert_eq!(scan.max_gap, 8);
        assert_eq!(scan.max_gap_at, 89);
        assert!(scan.violations.is_empty());
        assert_eq!(scan.primes_scanned, 25); // π(100)
    }

    #[test]
    fn scan_to_ten_includes_the_crossing_gap() {
        let scan = scan_gaps(10, 64).unwrap();
        let pairs: Vec<(u64, u64)> = scan.records.iter().map(|r| (r.p, r.next_p)).collect();
        assert_eq!(pairs, vec![(2, 3), (3, 5), (7, 11)]);
    }

    #[test]
    fn scan_to_three_is_a_single_record() {
        let scan = scan_gaps(3, 64).unwrap();
        let pairs: Vec<(u64, u64, u64)> = scan
            .records
            .iter()
            .map(|r| (r.p, r.next_p, r.gap))
            .collect();
        assert_eq!(pairs, vec![(2, 3, 1)]);
    }

    #[test]
    fn segment_size_does_not_matter() {
        let baseline = scan_gaps(100_000, 64).unwrap();
        for seg in [100u64, 1000, 4096, 131_072] {
            let other = scan_gaps(100_000, seg).unwrap();
            assert_eq!(baseline.records, other.records, "segment {seg}");
            assert_eq!(baseline.violations, other.violations);
            assert_eq!(baseline.primes_scanned, other.primes_scanned);
        }
    }

    #[test]
    fn records_agree_with_primality_oracle() {
        let scan = scan_gaps(1_000_000, 1 << 16).unwrap();
        assert!(scan.violations.is_empty());
        for r in &scan.records {
            assert!(wheel::is_prime(r.p), "{} not prime", r.p);
            assert!(wheel::is_prime(r.next_p), "{} not prime", r.next_p);
            for m in r.p + 1..r.next_p {
                assert!(!wheel::is_prime(m), "{m} interior prime in record {r:?}");
            }
        }
        assert_eq!(scan.max_gap, 114); // gap after 492113
        assert_eq!(scan.max_gap_at, 492_113);
    }

    #[test]
    fn bound_check_is_exact_at_the_boundary() {
        // (gap−1)² == 4p sits exactly on the bound and is not within
        assert!(!gap_within_bound(9, 7)); // 36 == 36
        assert!(!gap_within_bound(16, 9)); // 64 == 64
        assert!(gap_within_bound(17, 9)); // 64 < 68
        assert!(gap_within_bound(2, 1));
        assert!(gap_within_bound(u64::MAX, 1 << 33)); // u128 math, no overflow
        assert!(!gap_within_bound(u64::MAX, (1 << 33) + 2));
    }

    #[test]
    fn legendre_small() {
        let r = legendre_check(1000).unwrap();
        assert_eq!(r.status, ClaimStatus::Confirmed);
        assert_eq!(r.params["failures"], 0);
        let r1 = legendre_check(1).unwrap();
        assert_eq!(r1.status, ClaimStatus::Confirmed);
        // n = 3: 11 sits in (9, 16)
        let bits = wheel::prime_bitmap(16);
        assert!((10..16).filter(|&m| bits.get(m)).any(|m| m == 11));
    }
}
