//! Double sieve over `[2, P_a − 2]` for an even target `P_a`: direct marks
//! `P·n` (n > 1) for primes `P² < P_a`, translated marks `P_a − P·n`
//! (n > 1) for odd primes in the same range, and the rewritten translation
//! `P·n − (P·(⌊P_a/P⌋ + 1) − P_a)`. A value left unmarked by both layers,
//! other than the N = 2 edge, splits `P_a` into two primes; the sweep
//! checks that against the primality oracle and records the N = 2 cases
//! as documented anomalies.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::bitmap::Bitmap;
use crate::error::{Error, Result};
use crate::report::{claims, ClaimStatus, Detail, FindingsReport, DETAIL_CAP};
use crate::wheel::{self, isqrt};

/// Layered mark bitmaps for one even target; bit `N` indexes the value `N`.
#[derive(Debug, Clone)]
pub struct GoldbachMarkSet {
    p_a: u64,
    direct: Bitmap,
    translated: Bitmap,
    union: Bitmap,
}

impl GoldbachMarkSet {
    pub fn p_a(&self) -> u64 {
        self.p_a
    }

    pub fn direct(&self) -> &Bitmap {
        &self.direct
    }

    pub fn translated(&self) -> &Bitmap {
        &self.translated
    }

    pub fn union_marks(&self) -> &Bitmap {
        &self.union
    }

    pub fn is_marked(&self, n: u64) -> bool {
        n >= 2 && n <= self.p_a - 2 && self.union.get(n)
    }

    pub fn marked_count(&self) -> u64 {
        self.union.count_ones()
    }

    pub fn direct_values(&self) -> Vec<u64> {
        self.direct.iter_ones().collect()
    }

    pub fn translated_values(&self) -> Vec<u64> {
        self.translated.iter_ones().collect()
    }

    pub fn unmarked(&self) -> Vec<u64> {
        (2..=self.p_a - 2).filter(|&n| !self.union.get(n)).collect()
    }
}

fn check_even_target(p_a: u64, least: u64) -> Result<()> {
    if p_a < least || !p_a.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "target must be an even number ≥ {least}, got {p_a}"
        )));
    }
    Ok(())
}

pub fn build_goldbach_marks(p_a: u64) -> Result<GoldbachMarkSet> {
    check_even_target(p_a, 4)?;
    // P < √p_a taken exactly: P² < p_a
    let sieve_bound = isqrt(p_a - 1).max(2);
    let primes = wheel::sieve_primes(sieve_bound)?;
    let size = p_a - 1; // values 0..=p_a−2; bits 0 and 1 unused
    let mut direct = Bitmap::new(size);
    let mut translated = Bitmap::new(size);
    for &p in primes.primes().iter().filter(|&&p| p * p < p_a) {
        direct.mark_stride(2 * p, p);
        if p >= 3 {
            let mut n = 2u64;
            while p * n + 2 <= p_a {
                translated.set(p_a - p * n);
                n += 1;
            }
        }
    }
    let mut union = direct.clone();
    union.or_assign(&translated);
    Ok(GoldbachMarkSet {
        p_a,
        direct,
        translated,
        union,
    })
}

/// Translated marks for a single odd prime, straight from `P_a − P·n`.
pub fn marks_translated(p_a: u64, p: u64) -> Result<Vec<u64>> {
    check_translation_prime(p_a, p)?;
    let mut out = Vec::new();
    let mut n = 2u64;
    while p * n + 2 <= p_a {
        out.push(p_a - p * n);
        n += 1;
    }
    out.reverse();
    Ok(out)
}

/// Translated marks for a single odd prime in the rewritten form
/// `P·n − (P·(⌊P_a/P⌋ + 1) − P_a)` over `0 < n < ⌊P_a/P⌋`, clipped to
/// `[2, P_a − 2]`. Ascending.
pub fn marks_translated_rewritten(p_a: u64, p: u64) -> Result<Vec<u64>> {
    check_translation_prime(p_a, p)?;
    let k = p_a / p;
    let offset = p * (k + 1) - p_a;
    let mut out = Vec::new();
    for n in 1..k {
        let v = p * n - offset; // offset ≤ p, so p·n ≥ offset
        if v >= 2 && v <= p_a - 2 {
            out.push(v);
        }
    }
    Ok(out)
}

fn check_translation_prime(p_a: u64, p: u64) -> Result<()> {
    check_even_target(p_a, 4)?;
    if p.is_multiple_of(2) || p < 3 {
        return Err(Error::domain(format!(
            "translation needs an odd prime ≥ 3, got {p}"
        )));
    }
    if p * p >= p_a {
        return Err(Error::domain(format!(
            "translation prime {p} is out of range for target {p_a} (needs p² < target)"
        )));
    }
    Ok(())
}

/// A split `P_a = n_low + n_high` proposed by an unmarked value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldbachWitness {
    pub n_low: u64,
    pub n_high: u64,
    pub valid: bool,
}

pub fn goldbach_witnesses(p_a: u64) -> Result<Vec<GoldbachWitness>> {
    Ok(witnesses_from(&build_goldbach_marks(p_a)?))
}

pub fn witnesses_from(set: &GoldbachMarkSet) -> Vec<GoldbachWitness> {
    set.unmarked()
        .into_iter()
        .map(|n| GoldbachWitness {
            n_low: n,
            n_high: set.p_a - n,
            valid: wheel::is_prime(n) && wheel::is_prime(set.p_a - n),
        })
        .collect()
}

/// Raw sweep outcome across all even targets up to `p_a_max`, uncapped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldbachSweep {
    pub p_a_max: u64,
    pub targets_checked: u64,
    /// `(p_a, n, unmarked, both_prime)` where unmarked ≠ both-prime for n ≠ 2.
    pub mismatches: Vec<(u64, u64, bool, bool)>,
    /// `(p_a, p_a − 2)` where N = 2 is unmarked and `p_a − 2` is composite.
    pub invalid_n2: Vec<(u64, u64)>,
    /// `(p_a, marked)` where the marked count exceeds `p_a − 4`.
    pub bound_violations: Vec<(u64, u64)>,
}

struct TargetOutcome {
    mismatches: Vec<(u64, u64, bool, bool)>,
    invalid_n2: Option<(u64, u64)>,
    bound_violation: Option<(u64, u64)>,
}

pub fn goldbach_sweep(p_a_max: u64) -> Result<GoldbachSweep> {
    check_even_target(p_a_max, 4)?;
    let oracle = wheel::prime_bitmap(p_a_max);
    let per_target: Vec<TargetOutcome> = (2..=p_a_max / 2)
        .into_par_iter()
        .map(|half| {
            let p_a = 2 * half;
            let set = build_goldbach_marks(p_a).expect("even target in range");
            let mut mismatches = Vec::new();
            let mut invalid_n2 = None;
            for n in 2..=p_a - 2 {
                let unmarked = !set.union.get(n);
                let both = oracle.get(n) && oracle.get(p_a - n);
                if n == 2 {
                    if unmarked && !both {
                        invalid_n2 = Some((p_a, p_a - 2));
                    }
                    // completeness still applies at n = 2
                    if both && !unmarked {
                        mismatches.push((p_a, n, unmarked, both));
                    }
                } else if unmarked != both {
                    mismatches.push((p_a, n, unmarked, both));
                }
            }
            let marked = set.marked_count();
            TargetOutcome {
                mismatches,
                invalid_n2,
                bound_violation: (marked > p_a - 4).then_some((p_a, marked)),
            }
        })
        .collect();
    let mut sweep = GoldbachSweep {
        p_a_max,
        targets_checked: p_a_max / 2 - 1,
        mismatches: Vec::new(),
        invalid_n2: Vec::new(),
        bound_violations: Vec::new(),
    };
    for outcome in per_target {
        sweep.mismatches.extend(outcome.mismatches);
        sweep.invalid_n2.extend(outcome.invalid_n2);
        sweep.bound_violations.extend(outcome.bound_violation);
    }
    Ok(sweep)
}

/// Sweep reports: witness soundness/completeness, the N = 2 anomaly list,
/// and the marked-count bound.
pub fn verify_goldbach_equivalence(p_a_max: u64) -> Result<Vec<FindingsReport>> {
    let sweep = goldbach_sweep(p_a_max)?;
    Ok(sweep_reports(&sweep))
}

pub fn sweep_reports(sweep: &GoldbachSweep) -> Vec<FindingsReport> {
    let mismatch_details: Vec<Detail> = sweep
        .mismatches
        .iter()
        .take(DETAIL_CAP)
        .map(|&(p_a, n, unmarked, both_prime)| Detail::GoldbachMismatch {
            p_a,
            n,
            unmarked,
            both_prime,
        })
        .collect();
    let equivalence = FindingsReport::new(
        claims::GOLDBACH_EQUIVALENCE,
        json!({
            "p_a_max": sweep.p_a_max,
            "targets_checked": sweep.targets_checked,
            "mismatches": sweep.mismatches.len(),
        }),
        if sweep.mismatches.is_empty() {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::Counterexample
        },
        mismatch_details,
    );

    let n2_details: Vec<Detail> = sweep
        .invalid_n2
        .iter()
        .take(DETAIL_CAP)
        .map(|&(p_a, partner)| Detail::InvalidN2 {
            p_a,
            partner,
            factorization: wheel::factorization_string(partner),
            power_of_two: partner.is_power_of_two(),
        })
        .collect();
    let n2 = FindingsReport::new(
        claims::GOLDBACH_N2_ANOMALY,
        json!({
            "p_a_max": sweep.p_a_max,
            "invalid_n2_cases": sweep.invalid_n2.len(),
            "power_of_two_cases": sweep.invalid_n2.iter().filter(|&&(_, d)| d.is_power_of_two()).count(),
        }),
        if sweep.invalid_n2.is_empty() {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::DocumentedAnomaly
        },
        n2_details,
    );

    let bound_details: Vec<Detail> = sweep
        .bound_violations
        .iter()
        .take(DETAIL_CAP)
        .map(|&(p_a, marked)| Detail::MarkedCount {
            p_a,
            marked,
            allowed_max: p_a - 4,
            holds: false,
        })
        .collect();
    let bound = FindingsReport::new(
        claims::GOLDBACH_MARKED_BOUND,
        json!({
            "p_a_max": sweep.p_a_max,
            "targets_checked": sweep.targets_checked,
            "violations": sweep.bound_violations.len(),
        }),
        if sweep.bound_violations.is_empty() {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::Counterexample
        },
        bound_details,
    );
    vec![equivalence, n2, bound]
}

/// Rewritten-translation equivalence: for every admissible `(p_a, p)` the
/// clipped rewritten marks must equal the clipped direct translations.
pub fn verify_eq15_equivalence(p_a_max: u64) -> Result<FindingsReport> {
    check_even_target(p_a_max, 4)?;
    let primes = wheel::sieve_primes(isqrt(p_a_max - 1).max(3))?;
    let odd_primes: Vec<u64> = primes
        .primes()
        .iter()
        .copied()
        .filter(|&p| p >= 3)
        .collect();
    let mismatches: Vec<Detail> = (2..=p_a_max / 2)
        .into_par_iter()
        .map(|half| {
            let p_a = 2 * half;
            let mut found = Vec::new();
            for &p in odd_primes.iter().take_while(|&&p| p * p < p_a) {
                let rewritten = marks_translated_rewritten(p_a, p).expect("admissible");
                let translated = marks_translated(p_a, p).expect("admissible");
                if rewritten != translated {
                    found.push(Detail::Eq15Mismatch {
                        p_a,
                        prime: p,
                        rewritten,
                        translated,
                    });
                }
            }
            found
        })
        .reduce(Vec::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut sorted = mismatches;
    sorted.sort_by_key(|d| match d {
        Detail::Eq15Mismatch { p_a, prime, .. } => (*p_a, *prime),
        _ => (0, 0),
    });
    let total = sorted.len();
    sorted.truncate(DETAIL_CAP);
    Ok(FindingsReport::new(
        claims::GOLDBACH_EQ15,
        json!({ "p_a_max": p_a_max, "mismatches": total }),
        if total == 0 {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::Counterexample
        },
        sorted,
    ))
}

/// The mod-3 reduced sieve: drop multiples of 3 and the 3-translations
/// (including the top translation index), then mark what remains using
/// primes strictly between 3 and √P_a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedSieve {
    pub p_a: u64,
    /// Values of `[2, P_a − 2]` that survive the 3-removals, ascending.
    pub kept: Vec<u64>,
    /// Survivors marked by the remaining primes' multiples or translations.
    pub marked: Vec<u64>,
    /// Whether consecutive survivors all differ by exactly 3.
    pub spacing_uniform: bool,
    /// Distinct residues mod 3 among survivors.
    pub residue_classes: Vec<u64>,
    pub divisible_by_three: bool,
}

pub fn reduced_sieve(p_a: u64) -> Result<ReducedSieve> {
    check_even_target(p_a, 8)?;
    let size = p_a - 1;
    let mut removed = Bitmap::new(size);
    let mut v = 3u64;
    while v <= p_a - 2 {
        removed.set(v);
        v += 3;
    }
    let k3 = p_a / 3;
    let offset3 = 3 * (k3 + 1) - p_a;
    for n in 1..=k3 {
        let t = 3 * n - offset3;
        if (2..=p_a - 2).contains(&t) {
            removed.set(t);
        }
    }
    let kept: Vec<u64> = (2..=p_a - 2).filter(|&n| !removed.get(n)).collect();

    let mut marks = Bitmap::new(size);
    let bound = isqrt(p_a - 1);
    if bound >= 5 {
        for &p in wheel::sieve_primes(bound)?
            .primes()
            .iter()
            .filter(|&&p| p > 3 && p * p < p_a)
        {
            marks.mark_stride(2 * p, p);
            for t in marks_translated_rewritten(p_a, p)? {
                marks.set(t);
            }
        }
    }
    let marked: Vec<u64> = kept.iter().copied().filter(|&n| marks.get(n)).collect();
    let spacing_uniform = kept.windows(2).all(|w| w[1] - w[0] == 3);
    let mut residue_classes: Vec<u64> = kept.iter().map(|&n| n % 3).collect();
    residue_classes.sort_unstable();
    residue_classes.dedup();
    Ok(ReducedSieve {
        p_a,
        kept,
        marked,
        spacing_uniform,
        residue_classes,
        divisible_by_three: p_a.is_multiple_of(3),
    })
}

/// Report for one reduced sieve run.
pub fn reduced_report(sieve: &ReducedSieve) -> FindingsReport {
    let status = if sieve.divisible_by_three {
        ClaimStatus::DocumentedAnomaly
    } else if sieve.spacing_uniform {
        ClaimStatus::Confirmed
    } else {
        ClaimStatus::Counterexample
    };
    FindingsReport::new(
        claims::GOLDBACH_REDUCED,
        json!({
            "p_a": sieve.p_a,
            "kept": sieve.kept.len(),
            "marked": sieve.marked.len(),
        }),
        status,
        vec![Detail::ReducedDomain {
            p_a: sieve.p_a,
            kept: sieve.kept.len() as u64,
            residue_classes: sieve.residue_classes.clone(),
            spacing_uniform: sieve.spacing_uniform,
            divisible_by_three: sieve.divisible_by_three,
        }],
    )
}

/// Reduced-sieve sweep: spacing must be uniform whenever 3 ∤ P_a; targets
/// divisible by 3 are flagged, not failed.
pub fn verify_reduced_spacing(p_a_max: u64) -> Result<FindingsReport> {
    check_even_target(p_a_max.max(8), 8)?;
    let mut details = Vec::new();
    let mut failures = 0u64;
    let mut flagged = 0u64;
    let mut p_a = 8u64;
    while p_a <= p_a_max {
        let s = reduced_sieve(p_a)?;
        if s.divisible_by_three {
            flagged += 1;
            if !s.spacing_uniform && details.len() < DETAIL_CAP {
                details.push(Detail::ReducedDomain {
                    p_a,
                    kept: s.kept.len() as u64,
                    residue_classes: s.residue_classes.clone(),
                    spacing_uniform: s.spacing_uniform,
                    divisible_by_three: true,
                });
            }
        } else if !s.spacing_uniform {
            failures += 1;
            if details.len() < DETAIL_CAP {
                details.push(Detail::ReducedDomain {
                    p_a,
                    kept: s.kept.len() as u64,
                    residue_classes: s.residue_classes.clone(),
                    spacing_uniform: false,
                    divisible_by_three: false,
                });
            }
        }
        p_a += 2;
    }
    let status = if failures > 0 {
        ClaimStatus::Counterexample
    } else if flagged > 0 {
        ClaimStatus::DocumentedAnomaly
    } else {
        ClaimStatus::Confirmed
    };
    Ok(FindingsReport::new(
        claims::GOLDBACH_REDUCED,
        json!({ "p_a_max": p_a_max, "spacing_failures": failures, "flagged_mod3": flagged }),
        status,
        details,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn marks_for_ten() {
        let set = build_goldbach_marks(10).unwrap();
        assert_eq!(set.direct_values(), vec![4, 6, 8]);
        assert_eq!(set.translated_values(), vec![4]);
        assert_eq!(set.unmarked(), vec![2, 3, 5, 7]);
    }

    #[test]
    fn marks_for_twenty() {
        let set = build_goldbach_marks(20).unwrap();
        assert_eq!(set.translated_values(), vec![2, 5, 8, 11, 14]);
        assert_eq!(set.unmarked(), vec![3, 7, 13, 17]);
    }

    #[test]
    fn marks_for_four_are_empty() {
        let set = build_goldbach_marks(4).unwrap();
        assert_eq!(set.marked_count(), 0);
        assert_eq!(set.unmarked(), vec![2]);
    }

    #[test]
    fn rejects_bad_targets() {
        assert!(build_goldbach_marks(9).is_err());
        assert!(build_goldbach_marks(2).is_err());
    }

    #[test]
    fn rewritten_translation_examples() {
        assert_eq!(marks_translated_rewritten(10, 3).unwrap(), vec![4]);
        assert_eq!(
            marks_translated_rewritten(20, 3).unwrap(),
            vec![2, 5, 8, 11, 14]
        );
        assert_eq!(marks_translated_rewritten(26, 5).unwrap(), vec![6, 11, 16]);
        assert!(marks_translated_rewritten(20, 2).is_err());
        assert!(marks_translated_rewritten(20, 5).is_err()); // 25 ≥ 20
    }

    #[test]
    fn witnesses_for_small_targets() {
        let w10 = goldbach_witnesses(10).unwrap();
        let ns: Vec<u64> = w10.iter().map(|w| w.n_low).collect();
        assert_eq!(ns, vec![2, 3, 5, 7]);
        assert!(!w10[0].valid); // 2 + 8
        assert!(w10[1..].iter().all(|w| w.valid));

        let w20 = goldbach_witnesses(20).unwrap();
        assert_eq!(w20.len(), 4);
        assert!(w20.iter().all(|w| w.valid));

        let w4 = goldbach_witnesses(4).unwrap();
        assert_eq!(
            w4,
            vec![GoldbachWitness {
                n_low: 2,
                n_high: 2,
                valid: true
            }]
        );
    }

    #[test]
    fn sweep_to_one_hundred() {
        let sweep = goldbach_sweep(100).unwrap();
        assert!(sweep.mismatches.is_empty());
        assert!(sweep.bound_violations.is_empty());
        let invalid: Vec<u64> = sweep.invalid_n2.iter().map(|&(p_a, _)| p_a).collect();
        // brute-force ground truth: N = 2 stays unmarked exactly when every
        // odd prime factor of p_a − 2 is at least √p_a, and the witness is
        // then invalid whenever p_a − 2 is composite
        let expected: Vec<u64> = (2..=50u64)
            .map(|h| 2 * h)
            .filter(|&p_a| {
                let d = p_a - 2;
                let unmarked = wheel::factorize(d)
                    .into_iter()
                    .all(|(q, _)| q == 2 || q * q >= p_a);
                unmarked && !wheel::is_prime(d)
            })
            .collect();
        assert_eq!(invalid, expected);
        // the power-of-two targets are among them
        for p_a in [6u64, 10, 18, 34, 66] {
            assert!(invalid.contains(&p_a), "{p_a} missing");
        }
        assert_eq!(
            invalid,
            vec![
                6, 8, 10, 12, 16, 18, 22, 24, 28, 30, 34, 36, 40, 46, 48, 54, 60, 64, 66, 70, 76,
                78, 84, 88, 90, 94, 96
            ]
        );
    }

    #[test]
    fn sweep_of_four_is_clean() {
        let sweep = goldbach_sweep(4).unwrap();
        assert!(sweep.mismatches.is_empty());
        assert!(sweep.invalid_n2.is_empty());
        assert!(sweep.bound_violations.is_empty());
    }

    #[test]
    fn reduced_sieve_spacing() {
        let r20 = reduced_sieve(20).unwrap();
        assert_eq!(r20.kept, vec![4, 7, 10, 13, 16]);
        assert!(r20.spacing_uniform);
        assert_eq!(r20.residue_classes, vec![1]);
        assert!(r20.marked.is_empty()); // no prime with 3 < p, p² < 20

        let r24 = reduced_sieve(24).unwrap();
        assert!(r24.divisible_by_three);
        assert!(!r24.spacing_uniform);
        assert_eq!(r24.residue_classes, vec![1, 2]);

        let r8 = reduced_sieve(8).unwrap();
        assert_eq!(r8.kept, vec![4]);
        assert!(r8.marked.is_empty());

        assert!(reduced_sieve(6).is_err());
    }

    #[test]
    fn reduced_sweep_statuses() {
        let r = verify_reduced_spacing(100).unwrap();
        assert_eq!(r.status, ClaimStatus::DocumentedAnomaly);
        assert_eq!(r.params["spacing_failures"], 0);
    }

    #[test]
    fn eq15_equivalence_holds() {
        let r = verify_eq15_equivalence(2000).unwrap();
        assert_eq!(r.status, ClaimStatus::Confirmed);
        assert_eq!(r.params["mismatches"], 0);
    }

    #[test]
    fn n2_report_is_documented_anomaly() {
        let reports = verify_goldbach_equivalence(100).unwrap();
        assert_eq!(reports.len(), 3);
        assert_eq!(reports[0].status, ClaimStatus::Confirmed);
        assert_eq!(reports[1].status, ClaimStatus::DocumentedAnomaly);
        assert_eq!(reports[2].status, ClaimStatus::Confirmed);
        // the recorded factorizations name the partner
        match &reports[1].details[0] {
            Detail::InvalidN2 {
                p_a,
                partner,
                factorization,
                power_of_two,
            } => {
                assert_eq!((*p_a, *partner), (6, 4));
                assert_eq!(factorization, "2^2");
                assert!(power_of_two);
            }
            other => panic!("unexpected detail {other:?}"),
        }
    }
}
