//! Structured findings. Every verification emits one report per claim: a
//! stable claim identifier, the run parameters, a status, and typed detail
//! records. Reports serialize to JSON losslessly; detail lists are capped
//! at [`DETAIL_CAP`] rows with totals carried in `params`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Cap on detail rows per report; totals beyond the cap live in `params`.
pub const DETAIL_CAP: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    /// The checked hypothesis held everywhere in range.
    Confirmed,
    /// The check found a violation; details carry the evidence.
    Counterexample,
    /// A known, reproducible deviation recorded as a finding. Never fails
    /// strict mode.
    DocumentedAnomaly,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FindingsReport {
    pub claim: String,
    pub params: Value,
    pub status: ClaimStatus,
    pub details: Vec<Detail>,
    #[serde(default)]
    pub elapsed_ms: u64,
}

impl FindingsReport {
    pub fn new(claim: &str, params: Value, status: ClaimStatus, details: Vec<Detail>) -> Self {
        debug_assert!(
            status != ClaimStatus::Counterexample || !details.is_empty(),
            "a counterexample report must carry evidence"
        );
        FindingsReport {
            claim: claim.to_string(),
            params,
            status,
            details,
            elapsed_ms: 0,
        }
    }
}

/// One typed record inside a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Detail {
    TwinPair {
        n: u64,
        low: u64,
        high: u64,
    },
    TwinMismatch {
        n: u64,
        sieve_unmarked: bool,
        oracle_twin: bool,
    },
    MarkedRun {
        length: u64,
        start: Option<u64>,
        generator_cap: Option<u64>,
        /// The derived spacing bound `P + 2·index + 3` for the cap prime.
        strict_bound: Option<u64>,
        /// The translated-arrangement size `P + 2·index + 1` for the cap.
        window_size: Option<u64>,
    },
    IntervalBound {
        prime: u64,
        index: u64,
        neighbor: u64,
        first_mark_prime: u64,
        first_mark_neighbor: u64,
        bound: u64,
        holds: bool,
    },
    GoldbachWitness {
        n_low: u64,
        n_high: u64,
        valid: bool,
    },
    GoldbachMismatch {
        p_a: u64,
        n: u64,
        unmarked: bool,
        both_prime: bool,
    },
    InvalidN2 {
        p_a: u64,
        partner: u64,
        factorization: String,
        power_of_two: bool,
    },
    MarkedCount {
        p_a: u64,
        marked: u64,
        allowed_max: u64,
        holds: bool,
    },
    Eq15Mismatch {
        p_a: u64,
        prime: u64,
        rewritten: Vec<u64>,
        translated: Vec<u64>,
    },
    ReducedDomain {
        p_a: u64,
        kept: u64,
        residue_classes: Vec<u64>,
        spacing_uniform: bool,
        divisible_by_three: bool,
    },
    WindowScan {
        mode: String,
        family: String,
        prime: u64,
        modulus: u64,
        window_length: u64,
        max_occupied: u64,
        argmax_total: u64,
        argmax_starts: Vec<u64>,
        symmetric_start: u64,
        symmetric_count: u64,
        symmetric_attains_max: bool,
        unique: bool,
    },
    Centers {
        modulus: u64,
        low: u64,
        high: u64,
        low_occupied: bool,
        high_occupied: bool,
    },
    OddSlots {
        divisor: u64,
        slots: Vec<i64>,
    },
    DmCase {
        divisor: u64,
        anchor: u64,
        anchor_exceeds_half: bool,
        windows_with_extra: u64,
        max_total_with_extra: u64,
        symmetric_total: u64,
        holds: bool,
    },
    PowerCase {
        base: u64,
        min_distance: u64,
        expected: u64,
        achieved_by: Vec<(i64, i64)>,
        tie: bool,
    },
    RunLength {
        modulus: u64,
        length: u64,
        start: u64,
        totative_gap: u64,
        matches_oracle: bool,
    },
    Gap {
        p: u64,
        next_p: u64,
        gap: u64,
        within_bound: bool,
    },
    LegendreFailure {
        n: u64,
        low: u64,
        high: u64,
    },
}

/// Stable claim identifiers. Every identifier that can appear in a report
/// is listed here and by `verify --list`.
pub mod claims {
    pub const TWIN_PAIRS: &str = "twin.pairs";
    pub const TWIN_EQUIVALENCE: &str = "twin.equivalence";
    pub const TWIN_INTERVAL_BOUND: &str = "twin.interval-bound";
    pub const TWIN_RUN_BOUND: &str = "twin.run-bound";
    pub const GOLDBACH_EQUIVALENCE: &str = "goldbach.equivalence";
    pub const GOLDBACH_N2_ANOMALY: &str = "goldbach.n2-anomaly";
    pub const GOLDBACH_MARKED_BOUND: &str = "goldbach.marked-bound";
    pub const GOLDBACH_EQ15: &str = "goldbach.eq15-equivalence";
    pub const GOLDBACH_REDUCED: &str = "goldbach.reduced-spacing";
    pub const PATTERN_INT_SYMMETRIC: &str = "pattern.int-symmetric-max";
    pub const PATTERN_RUN_LENGTH: &str = "pattern.run-length";
    pub const PATTERN_ODD_SYMMETRIC: &str = "pattern.odd-symmetric-max";
    pub const PATTERN_WHEEL_WINDOW: &str = "pattern.wheel-window";
    pub const PATTERN_WHEEL_CENTERS: &str = "pattern.wheel-centers";
    pub const PATTERN_DMA_DOUBLE: &str = "pattern.dma-double";
    pub const PATTERN_DM_TRANSLATION: &str = "pattern.dm-translation";
    pub const PATTERN_POWER_MIN: &str = "pattern.power-min";
    pub const PATTERN_POWER_EDGE: &str = "pattern.power-edge";
    pub const GAPS_WITHIN_BOUND: &str = "gaps.within-bound";
    pub const GAPS_LEGENDRE: &str = "gaps.legendre";
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_round_trip() {
        let report = FindingsReport::new(
            claims::TWIN_EQUIVALENCE,
            json!({"n_max": 20, "twins": 9}),
            ClaimStatus::Confirmed,
            vec![
                Detail::TwinPair {
                    n: 1,
                    low: 5,
                    high: 7,
                },
                Detail::PowerCase {
                    base: 3,
                    min_distance: 6,
                    expected: 6,
                    achieved_by: vec![(-3, 3), (3, 9)],
                    tie: true,
                },
            ],
        );
        let text = serde_json::to_string(&report).unwrap();
        let back: FindingsReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn status_strings_are_kebab_case() {
        assert_eq!(
            serde_json::to_string(&ClaimStatus::DocumentedAnomaly).unwrap(),
            "\"documented-anomaly\""
        );
        assert_eq!(
            serde_json::to_string(&ClaimStatus::Counterexample).unwrap(),
            "\"counterexample\""
        );
    }

    #[test]
    fn details_are_kind_tagged() {
        let d = Detail::Gap {
            p: 89,
            next_p: 97,
            gap: 8,
            within_bound: true,
        };
        let v = serde_json::to_value(&d).unwrap();
        assert_eq!(v["kind"], "gap");
        assert_eq!(v["p"], 89);
    }
}
