//! Claim registry and report builders. `verify --list` prints exactly this
//! table; every claim identifier that can appear in any report is here.

use serde::Serialize;
use serde_json::json;
use std::time::Instant;

use sievelab::pattern::{self, DivisorFamily, IndexSpace, ResiduePattern, WindowScanReport};
use sievelab::report::{claims, ClaimStatus, Detail, FindingsReport, DETAIL_CAP};
use sievelab::twin;
use sievelab::wheel::{self, WheelClass};
use sievelab::{gaps, goldbach, Error, Result};

pub struct RunCtx {
    pub memory_cap_bits: u64,
}

/// Runner groups; several claims can share one computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Runner {
    TwinPairs,
    TwinEquivalence,
    TwinIntervalBound,
    TwinRunBound,
    GoldbachSweep,
    GoldbachEq15,
    GoldbachReduced,
    PatternInt,
    PatternOdd,
    PatternWheel,
    PatternDma,
    PatternDm,
    PatternPower,
    GapsWithinBound,
    GapsLegendre,
}

pub struct ClaimSpec {
    pub id: &'static str,
    pub summary: &'static str,
    pub defaults: &'static str,
    runner: Runner,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimInfo {
    pub claim: &'static str,
    pub summary: &'static str,
    pub defaults: &'static str,
}

pub const REGISTRY: &[ClaimSpec] = &[
    ClaimSpec {
        id: claims::TWIN_PAIRS,
        summary: "twin pairs read off the unmarked indices",
        defaults: "max-n 1000",
        runner: Runner::TwinPairs,
    },
    ClaimSpec {
        id: claims::TWIN_EQUIVALENCE,
        summary: "unmarked twin indices equal the oracle's twin indicator",
        defaults: "max-n 1000000",
        runner: Runner::TwinEquivalence,
    },
    ClaimSpec {
        id: claims::TWIN_INTERVAL_BOUND,
        summary: "first-mark spacing of 6n+1 primes equals P + 2n + 3",
        defaults: "primes to 10000",
        runner: Runner::TwinIntervalBound,
    },
    ClaimSpec {
        id: claims::TWIN_RUN_BOUND,
        summary: "longest marked run stays below the cap's spacing bound",
        defaults: "max-n 100000, caps 7,13,19,31",
        runner: Runner::TwinRunBound,
    },
    ClaimSpec {
        id: claims::GOLDBACH_EQUIVALENCE,
        summary: "unmarked values other than 2 split the target into two primes",
        defaults: "sweep to 100000",
        runner: Runner::GoldbachSweep,
    },
    ClaimSpec {
        id: claims::GOLDBACH_N2_ANOMALY,
        summary: "targets whose N = 2 witness is invalid, with factorizations",
        defaults: "sweep to 100000",
        runner: Runner::GoldbachSweep,
    },
    ClaimSpec {
        id: claims::GOLDBACH_MARKED_BOUND,
        summary: "marked count never exceeds target − 4",
        defaults: "sweep to 100000",
        runner: Runner::GoldbachSweep,
    },
    ClaimSpec {
        id: claims::GOLDBACH_EQ15,
        summary: "rewritten translation marks equal the direct translations",
        defaults: "targets to 10000",
        runner: Runner::GoldbachEq15,
    },
    ClaimSpec {
        id: claims::GOLDBACH_REDUCED,
        summary: "mod-3 reduced domain is spaced by 3 when 3 does not divide the target",
        defaults: "targets 8..=1000",
        runner: Runner::GoldbachReduced,
    },
    ClaimSpec {
        id: claims::PATTERN_INT_SYMMETRIC,
        summary: "integers mode: the window centered on 0 attains maximal occupancy",
        defaults: "primes 5,7,11,13",
        runner: Runner::PatternInt,
    },
    ClaimSpec {
        id: claims::PATTERN_RUN_LENGTH,
        summary: "longest occupied run equals the totative-gap oracle minus one",
        defaults: "primes 5,7,11,13",
        runner: Runner::PatternInt,
    },
    ClaimSpec {
        id: claims::PATTERN_ODD_SYMMETRIC,
        summary: "odd mode: the window centered on ±1 attains maximal occupancy",
        defaults: "primes 5,7,11,13,17,19 × both families",
        runner: Runner::PatternOdd,
    },
    ClaimSpec {
        id: claims::PATTERN_WHEEL_WINDOW,
        summary: "twin mode: the translated window attains the maximum and spares the centers",
        defaults: "primes 7,11,13,17,19",
        runner: Runner::PatternWheel,
    },
    ClaimSpec {
        id: claims::PATTERN_WHEEL_CENTERS,
        summary: "twin mode: the two center residues are never occupied",
        defaults: "primes 7,11,13,17,19",
        runner: Runner::PatternWheel,
    },
    ClaimSpec {
        id: claims::PATTERN_DMA_DOUBLE,
        summary: "odds above P/2 occupy exactly the two slots ±d in the symmetric window",
        defaults: "primes 5,7,13,23",
        runner: Runner::PatternDma,
    },
    ClaimSpec {
        id: claims::PATTERN_DM_TRANSLATION,
        summary: "translating a small odd never beats the symmetric window's total",
        defaults: "primes 7,11,13",
        runner: Runner::PatternDm,
    },
    ClaimSpec {
        id: claims::PATTERN_POWER_MIN,
        summary: "minimum power distance over any window of length 2P+1 is 2d",
        defaults: "primes 5,7,11,13",
        runner: Runner::PatternPower,
    },
    ClaimSpec {
        id: claims::PATTERN_POWER_EDGE,
        summary: "documented power-distance edges: the d = 3 tie and the d = 2 undercut",
        defaults: "primes 5,7,11,13",
        runner: Runner::PatternPower,
    },
    ClaimSpec {
        id: claims::GAPS_WITHIN_BOUND,
        summary: "every prime gap satisfies gap < 2√p + 1",
        defaults: "limit 100000000",
        runner: Runner::GapsWithinBound,
    },
    ClaimSpec {
        id: claims::GAPS_LEGENDRE,
        summary: "a prime lies strictly between n² and (n+1)²",
        defaults: "n to 1000",
        runner: Runner::GapsLegendre,
    },
];

pub fn claim_list() -> Vec<ClaimInfo> {
    REGISTRY
        .iter()
        .map(|c| ClaimInfo {
            claim: c.id,
            summary: c.summary,
            defaults: c.defaults,
        })
        .collect()
}

/// Run the requested claims (all of them when `requested` is empty) at
/// registry defaults, deduplicating shared computations.
pub fn run_claims(requested: &[String], ctx: &RunCtx) -> Result<Vec<FindingsReport>> {
    let specs: Vec<&ClaimSpec> = if requested.is_empty() {
        REGISTRY.iter().collect()
    } else {
        let mut specs = Vec::new();
        for id in requested {
            let spec = REGISTRY.iter().find(|c| c.id == id).ok_or_else(|| {
                Error::domain(format!("unknown claim '{id}' (see verify --list)"))
            })?;
            specs.push(spec);
        }
        specs
    };
    let mut runners: Vec<Runner> = Vec::new();
    for spec in &specs {
        if !runners.contains(&spec.runner) {
            runners.push(spec.runner);
        }
    }
    let mut reports = Vec::new();
    for runner in runners {
        let t0 = Instant::now();
        let mut batch = execute(runner, ctx)?;
        let elapsed = t0.elapsed().as_millis() as u64;
        for r in &mut batch {
            r.elapsed_ms = elapsed;
        }
        reports.extend(batch);
    }
    if !requested.is_empty() {
        reports.retain(|r| requested.contains(&r.claim));
    }
    Ok(reports)
}

fn execute(runner: Runner, ctx: &RunCtx) -> Result<Vec<FindingsReport>> {
    Ok(match runner {
        Runner::TwinPairs => twin_reports(1000, None)?,
        Runner::TwinEquivalence => vec![twin::verify_twin_equivalence(1_000_000)],
        Runner::TwinIntervalBound => vec![interval_bound_report(10_000)?],
        Runner::TwinRunBound => vec![run_bound_report(100_000, &[7, 13, 19, 31])?],
        Runner::GoldbachSweep => goldbach::verify_goldbach_equivalence(100_000)?,
        Runner::GoldbachEq15 => vec![goldbach::verify_eq15_equivalence(10_000)?],
        Runner::GoldbachReduced => vec![goldbach::verify_reduced_spacing(1000)?],
        Runner::PatternInt => {
            let mut out = Vec::new();
            for p in [5u64, 7, 11, 13] {
                out.extend(pattern_scan_reports(p, None, ctx.memory_cap_bits)?);
            }
            out
        }
        Runner::PatternOdd => {
            let mut out = Vec::new();
            for p in [5u64, 7, 11, 13, 17, 19] {
                for family in [DivisorFamily::AllOdds, DivisorFamily::OddPrimes] {
                    out.push(pattern_odd_report(p, family, ctx.memory_cap_bits)?);
                }
            }
            out
        }
        Runner::PatternWheel => {
            let mut out = Vec::new();
            for p in [7u64, 11, 13, 17, 19] {
                out.extend(pattern_wheel_reports(p, ctx.memory_cap_bits)?);
            }
            out
        }
        Runner::PatternDma => {
            let mut out = Vec::new();
            for p in [5u64, 7, 13, 23] {
                out.push(pattern::check_dma_double_occupancy(p)?);
            }
            out
        }
        Runner::PatternDm => {
            let mut out = Vec::new();
            for p in [7u64, 11, 13] {
                out.push(pattern::check_dm_translation(p)?);
            }
            out
        }
        Runner::PatternPower => {
            let mut out = Vec::new();
            for p in [5u64, 7, 11, 13] {
                out.extend(pattern::verify_power_minimality(p)?);
            }
            out
        }
        Runner::GapsWithinBound => {
            let scan = gaps::scan_gaps(100_000_000, 4_194_304)?;
            vec![gaps::gap_report(&scan)]
        }
        Runner::GapsLegendre => vec![gaps::legendre_check(1000)?],
    })
}

/// Reports for the `twin` subcommand: the pair list, plus the marked-run
/// bound when a generator cap narrows the sieve.
pub fn twin_reports(max_n: u64, generator_cap: Option<u64>) -> Result<Vec<FindingsReport>> {
    if let Some(cap) = generator_cap {
        if !wheel::is_prime(cap) || WheelClass::of(cap).is_none() {
            return Err(Error::domain(format!(
                "generator cap must be a prime ≥ 5 on the 6k±1 wheel, got {cap}"
            )));
        }
    }
    let set = twin::build_twin_marks_capped(max_n, generator_cap);
    let pairs = twin::twin_pairs_from(&set);
    let details: Vec<Detail> = pairs
        .iter()
        .take(DETAIL_CAP)
        .map(|t| Detail::TwinPair {
            n: t.index,
            low: t.low,
            high: t.high,
        })
        .collect();
    let mut reports = vec![FindingsReport::new(
        claims::TWIN_PAIRS,
        json!({
            "n_max": max_n,
            "generator_cap": generator_cap,
            "twins": pairs.len(),
            "marked": set.marked_count(),
            "generators": set.generators().len(),
        }),
        ClaimStatus::Confirmed,
        details,
    )];
    if let Some(cap) = generator_cap {
        reports.push(run_bound_report(max_n, &[cap])?);
    }
    Ok(reports)
}

/// First-mark spacing check for every 6n+1 prime up to `limit`.
pub fn interval_bound_report(limit: u64) -> Result<FindingsReport> {
    let table = wheel::sieve_primes(limit)?;
    let mut checked = 0u64;
    let mut violations = Vec::new();
    for &p in table.primes().iter().filter(|&&p| p % 6 == 1) {
        let b = twin::interval_bound(WheelClass::of(p).expect("p ≡ 1 mod 6"))?;
        checked += 1;
        if !b.holds && violations.len() < DETAIL_CAP {
            violations.push(Detail::IntervalBound {
                prime: b.prime,
                index: b.index,
                neighbor: b.neighbor,
                first_mark_prime: b.first_mark_prime,
                first_mark_neighbor: b.first_mark_neighbor,
                bound: b.bound,
                holds: b.holds,
            });
        }
    }
    let status = if violations.is_empty() {
        ClaimStatus::Confirmed
    } else {
        ClaimStatus::Counterexample
    };
    Ok(FindingsReport::new(
        claims::TWIN_INTERVAL_BOUND,
        json!({ "limit": limit, "checked": checked, "violations": violations.len() }),
        status,
        violations,
    ))
}

/// Longest marked runs under each generator cap, against the cap's spacing
/// bound P + 2n + 3 and the translated window size P + 2n + 1. Both numbers
/// are reported; the status keys on the strict bound.
pub fn run_bound_report(n_max: u64, caps: &[u64]) -> Result<FindingsReport> {
    let mut details = Vec::new();
    let mut all_hold = true;
    for &cap in caps {
        let w = WheelClass::of(cap)
            .ok_or_else(|| Error::domain(format!("generator cap {cap} is not a 6n±1 value")))?;
        let run = twin::max_marked_run(n_max, Some(cap));
        let strict = cap + 2 * w.index() + 3;
        let window = cap + 2 * w.index() + 1;
        all_hold &= run.length < strict;
        details.push(Detail::MarkedRun {
            length: run.length,
            start: run.start,
            generator_cap: Some(cap),
            strict_bound: Some(strict),
            window_size: Some(window),
        });
    }
    Ok(FindingsReport::new(
        claims::TWIN_RUN_BOUND,
        json!({ "n_max": n_max, "caps": caps }),
        if all_hold {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::Counterexample
        },
        details,
    ))
}

/// Reports for `goldbach --even`: the witness table, the N = 2 anomaly
/// (when present), and the marked-count bound for this target.
pub fn goldbach_even_reports(p_a: u64) -> Result<Vec<FindingsReport>> {
    let set = goldbach::build_goldbach_marks(p_a)?;
    let witnesses = goldbach::witnesses_from(&set);
    let invalid_non2 = witnesses
        .iter()
        .filter(|w| !w.valid && w.n_low != 2)
        .count();
    let witness_details: Vec<Detail> = witnesses
        .iter()
        .take(DETAIL_CAP)
        .map(|w| Detail::GoldbachWitness {
            n_low: w.n_low,
            n_high: w.n_high,
            valid: w.valid,
        })
        .collect();
    let equivalence = FindingsReport::new(
        claims::GOLDBACH_EQUIVALENCE,
        json!({
            "p_a": p_a,
            "witnesses": witnesses.len(),
            "valid": witnesses.iter().filter(|w| w.valid).count(),
            "invalid_non2": invalid_non2,
        }),
        if invalid_non2 == 0 {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::Counterexample
        },
        witness_details,
    );
    let n2_case = witnesses.iter().find(|w| w.n_low == 2 && !w.valid);
    let n2 = match n2_case {
        Some(w) => FindingsReport::new(
            claims::GOLDBACH_N2_ANOMALY,
            json!({ "p_a": p_a, "invalid_n2_cases": 1 }),
            ClaimStatus::DocumentedAnomaly,
            vec![Detail::InvalidN2 {
                p_a,
                partner: w.n_high,
                factorization: wheel::factorization_string(w.n_high),
                power_of_two: w.n_high.is_power_of_two(),
            }],
        ),
        None => FindingsReport::new(
            claims::GOLDBACH_N2_ANOMALY,
            json!({ "p_a": p_a, "invalid_n2_cases": 0 }),
            ClaimStatus::Confirmed,
            Vec::new(),
        ),
    };
    let marked = set.marked_count();
    let holds = marked <= p_a - 4;
    let bound = FindingsReport::new(
        claims::GOLDBACH_MARKED_BOUND,
        json!({ "p_a": p_a, "marked": marked }),
        if holds {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::Counterexample
        },
        vec![Detail::MarkedCount {
            p_a,
            marked,
            allowed_max: p_a - 4,
            holds,
        }],
    );
    Ok(vec![equivalence, n2, bound])
}

fn window_detail(pat: &ResiduePattern, scan: &WindowScanReport) -> Detail {
    Detail::WindowScan {
        mode: pat.index_space().as_str().to_string(),
        family: pat.family().as_str().to_string(),
        prime: pat.prime(),
        modulus: pat.modulus(),
        window_length: scan.window_length,
        max_occupied: scan.max_occupied,
        argmax_total: scan.argmax_total,
        argmax_starts: scan.argmax_starts.clone(),
        symmetric_start: scan.symmetric_start,
        symmetric_count: scan.symmetric_count,
        symmetric_attains_max: scan.symmetric_attains_max,
        unique: scan.unique,
    }
}

fn attains(scan: &WindowScanReport) -> ClaimStatus {
    if scan.symmetric_attains_max {
        ClaimStatus::Confirmed
    } else {
        ClaimStatus::Counterexample
    }
}

/// Integers-mode scan plus the occupied-run / totative-gap cross-check.
pub fn pattern_scan_reports(
    prime: u64,
    window_len: Option<u64>,
    cap_bits: u64,
) -> Result<Vec<FindingsReport>> {
    let pat = pattern::build_pattern(
        prime,
        IndexSpace::Integers,
        DivisorFamily::PrimesThrough,
        cap_bits,
    )?;
    let len = window_len.unwrap_or_else(|| pat.canonical_window_length());
    let scan = pattern::scan_windows(&pat, len)?;
    let symmetric = FindingsReport::new(
        claims::PATTERN_INT_SYMMETRIC,
        json!({ "prime": prime, "modulus": pat.modulus(), "window_length": len }),
        attains(&scan),
        vec![window_detail(&pat, &scan)],
    );
    let (run, start) = pattern::max_occupied_run(&pat);
    let oracle_gap = totative_gap_oracle(pat.modulus());
    let matches = run + 1 == oracle_gap;
    let run_report = FindingsReport::new(
        claims::PATTERN_RUN_LENGTH,
        json!({ "prime": prime, "modulus": pat.modulus() }),
        if matches {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::Counterexample
        },
        vec![Detail::RunLength {
            modulus: pat.modulus(),
            length: run,
            start: start.unwrap_or(0),
            totative_gap: oracle_gap,
            matches_oracle: matches,
        }],
    );
    Ok(vec![symmetric, run_report])
}

/// Largest circular gap between consecutive residues coprime to `f`,
/// recomputed from scratch by gcd scan.
fn totative_gap_oracle(f: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let mut first = None;
    let mut prev = None;
    let mut max_gap = 0u64;
    for r in 0..f {
        if gcd(r, f) == 1 {
            if let Some(p) = prev {
                max_gap = max_gap.max(r - p);
            }
            first.get_or_insert(r);
            prev = Some(r);
        }
    }
    match (first, prev) {
        (Some(f0), Some(last)) => max_gap.max(f0 + f - last),
        _ => 0,
    }
}

/// Odd-integers scan for one divisor family at the canonical length P+1.
pub fn pattern_odd_report(
    prime: u64,
    family: DivisorFamily,
    cap_bits: u64,
) -> Result<FindingsReport> {
    let pat = pattern::build_pattern(prime, IndexSpace::OddIntegers, family, cap_bits)?;
    let scan = pattern::scan_windows(&pat, pat.canonical_window_length())?;
    Ok(FindingsReport::new(
        claims::PATTERN_ODD_SYMMETRIC,
        json!({
            "prime": prime,
            "family": family.as_str(),
            "modulus": pat.modulus(),
            "window_length": scan.window_length,
        }),
        attains(&scan),
        vec![window_detail(&pat, &scan)],
    ))
}

/// Twin-index scan at the translated window length, plus the center check.
pub fn pattern_wheel_reports(prime: u64, cap_bits: u64) -> Result<Vec<FindingsReport>> {
    let pat = pattern::build_pattern(
        prime,
        IndexSpace::TwinIndices,
        DivisorFamily::TwinWheel,
        cap_bits,
    )?;
    let len = pat.canonical_window_length();
    let scan = pattern::scan_windows(&pat, len)?;
    let f = pat.modulus();
    let (low, high) = ((f - 1) / 2, f.div_ceil(2));
    let low_occupied = pat.occupied().get(low);
    let high_occupied = pat.occupied().get(high);
    // the hypothesis: the translated window peaks and never fills past
    // length − 2 (the two centers stay free)
    let window_ok = scan.symmetric_attains_max && scan.max_occupied <= len - 2;
    let window = FindingsReport::new(
        claims::PATTERN_WHEEL_WINDOW,
        json!({ "prime": prime, "modulus": f, "window_length": len }),
        if window_ok {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::Counterexample
        },
        vec![window_detail(&pat, &scan)],
    );
    let centers_ok = !low_occupied && !high_occupied;
    let centers = FindingsReport::new(
        claims::PATTERN_WHEEL_CENTERS,
        json!({ "prime": prime, "modulus": f }),
        if centers_ok {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::Counterexample
        },
        vec![Detail::Centers {
            modulus: f,
            low,
            high,
            low_occupied,
            high_occupied,
        }],
    );
    Ok(vec![window, centers])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique_and_complete() {
        let mut ids: Vec<&str> = REGISTRY.iter().map(|c| c.id).collect();
        let before = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), before);
        assert_eq!(before, 20);
    }

    #[test]
    fn unknown_claim_is_a_domain_error() {
        let ctx = RunCtx {
            memory_cap_bits: pattern::DEFAULT_MEMORY_CAP_BITS,
        };
        let err = run_claims(&["no.such".to_string()], &ctx).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn filtered_run_returns_only_requested_claims() {
        let ctx = RunCtx {
            memory_cap_bits: pattern::DEFAULT_MEMORY_CAP_BITS,
        };
        let reports = run_claims(&[claims::GAPS_LEGENDRE.to_string()], &ctx).unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].claim, claims::GAPS_LEGENDRE);
    }

    #[test]
    fn twin_reports_carry_the_pairs() {
        let reports = twin_reports(20, None).unwrap();
        assert_eq!(reports.len(), 1);
        let ns: Vec<u64> = reports[0]
            .details
            .iter()
            .map(|d| match d {
                Detail::TwinPair { n, .. } => *n,
                other => panic!("unexpected {other:?}"),
            })
            .collect();
        assert_eq!(ns, vec![1, 2, 3, 5, 7, 10, 12, 17, 18]);
    }

    #[test]
    fn run_bound_holds_at_desk_scale() {
        let r = run_bound_report(10_000, &[7, 13]).unwrap();
        assert_eq!(r.status, ClaimStatus::Confirmed);
    }

    #[test]
    fn interval_bound_sweep_confirms() {
        let r = interval_bound_report(1000).unwrap();
        assert_eq!(r.status, ClaimStatus::Confirmed);
        assert_eq!(r.params["violations"], 0);
    }

    #[test]
    fn goldbach_even_ten_matches_spec_shape() {
        let reports = goldbach_even_reports(10).unwrap();
        assert_eq!(reports[0].status, ClaimStatus::Confirmed);
        assert_eq!(reports[1].status, ClaimStatus::DocumentedAnomaly);
        assert_eq!(reports[2].status, ClaimStatus::Confirmed);
        let valid_pairs: Vec<(u64, u64)> = reports[0]
            .details
            .iter()
            .filter_map(|d| match d {
                Detail::GoldbachWitness {
                    n_low,
                    n_high,
                    valid: true,
                } => Some((*n_low, *n_high)),
                _ => None,
            })
            .collect();
        assert_eq!(valid_pairs, vec![(3, 7), (5, 5), (7, 3)]);
    }

    #[test]
    fn totative_oracle_small_values() {
        assert_eq!(totative_gap_oracle(30), 6);
        assert_eq!(totative_gap_oracle(210), 10);
    }

    #[test]
    fn pattern_scan_run_length_matches_oracle() {
        let ctx_cap = pattern::DEFAULT_MEMORY_CAP_BITS;
        for p in [5u64, 7, 11] {
            let reports = pattern_scan_reports(p, None, ctx_cap).unwrap();
            assert_eq!(reports[1].status, ClaimStatus::Confirmed, "P = {p}");
        }
    }

    #[test]
    fn wheel_reports_for_seven() {
        let reports = pattern_wheel_reports(7, pattern::DEFAULT_MEMORY_CAP_BITS).unwrap();
        assert_eq!(reports[0].status, ClaimStatus::Confirmed);
        assert_eq!(reports[1].status, ClaimStatus::Confirmed);
    }
}
