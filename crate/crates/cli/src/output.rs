//! Report writers. JSON is the lossless format; CSV has fixed per-command
//! columns; the table format is for reading at a terminal. With
//! `--no-timestamp` the payload is byte-identical across runs and thread
//! counts: the header field is dropped and elapsed times are zeroed.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::time::{SystemTime, UNIX_EPOCH};

use serde_json::json;

use sievelab::report::{ClaimStatus, Detail, FindingsReport};

use crate::args::{Cli, Format};
use crate::claims::ClaimInfo;

pub enum Payload {
    Reports(Vec<FindingsReport>),
    ClaimList(Vec<ClaimInfo>),
}

/// CSV column layout per subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsvSchema {
    /// `claim,status,seq,kind,data`
    Findings,
    /// `p,next_p,gap,within_bound`
    Gaps,
}

pub fn write_payload(cli: &Cli, payload: &Payload, schema: CsvSchema) -> io::Result<()> {
    let timestamp = if cli.no_timestamp {
        None
    } else {
        Some(
            SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        )
    };
    let text = match payload {
        Payload::Reports(reports) => {
            let reports = if cli.no_timestamp {
                reports
                    .iter()
                    .cloned()
                    .map(|mut r| {
                        r.elapsed_ms = 0;
                        r
                    })
                    .collect()
            } else {
                reports.clone()
            };
            match cli.format {
                Format::Json => reports_json(&reports, timestamp),
                Format::Csv => reports_csv(&reports, timestamp, schema),
                Format::Table => reports_table(&reports, timestamp),
            }
        }
        Payload::ClaimList(list) => match cli.format {
            Format::Json => claims_json(list, timestamp),
            Format::Csv => claims_csv(list, timestamp),
            Format::Table => claims_table(list, timestamp),
        },
    };
    match &cli.output {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn reports_json(reports: &[FindingsReport], timestamp: Option<u64>) -> String {
    let value = match timestamp {
        Some(ts) => json!({ "generated_at": ts, "reports": reports }),
        None => json!({ "reports": reports }),
    };
    let mut text = serde_json::to_string_pretty(&value).expect("reports serialize");
    text.push('\n');
    text
}

fn claims_json(list: &[ClaimInfo], timestamp: Option<u64>) -> String {
    let value = match timestamp {
        Some(ts) => json!({ "generated_at": ts, "claims": list }),
        None => json!({ "claims": list }),
    };
    let mut text = serde_json::to_string_pretty(&value).expect("claims serialize");
    text.push('\n');
    text
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn status_str(status: ClaimStatus) -> &'static str {
    match status {
        ClaimStatus::Confirmed => "confirmed",
        ClaimStatus::Counterexample => "counterexample",
        ClaimStatus::DocumentedAnomaly => "documented-anomaly",
    }
}

fn reports_csv(reports: &[FindingsReport], timestamp: Option<u64>, schema: CsvSchema) -> String {
    let mut out = String::new();
    if let Some(ts) = timestamp {
        let _ = writeln!(out, "# generated_at: {ts}");
    }
    match schema {
        CsvSchema::Gaps => {
            out.push_str("p,next_p,gap,within_bound\n");
            for report in reports {
                for detail in &report.details {
                    if let Detail::Gap {
                        p,
                        next_p,
                        gap,
                        within_bound,
                    } = detail
                    {
                        let _ = writeln!(out, "{p},{next_p},{gap},{within_bound}");
                    }
                }
            }
        }
        CsvSchema::Findings => {
            out.push_str("claim,status,seq,kind,data\n");
            for report in reports {
                let _ = writeln!(
                    out,
                    "{},{},0,params,{}",
                    report.claim,
                    status_str(report.status),
                    csv_escape(&report.params.to_string())
                );
                for (i, detail) in report.details.iter().enumerate() {
                    let value = serde_json::to_value(detail).expect("detail serializes");
                    let kind = value["kind"].as_str().unwrap_or("detail").to_string();
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{}",
                        report.claim,
                        status_str(report.status),
                        i + 1,
                        kind,
                        csv_escape(&value.to_string())
                    );
                }
            }
        }
    }
    out
}

fn claims_csv(list: &[ClaimInfo], timestamp: Option<u64>) -> String {
    let mut out = String::new();
    if let Some(ts) = timestamp {
        let _ = writeln!(out, "# generated_at: {ts}");
    }
    out.push_str("claim,summary,defaults\n");
    for c in list {
        let _ = writeln!(
            out,
            "{},{},{}",
            c.claim,
            csv_escape(c.summary),
            csv_escape(c.defaults)
        );
    }
    out
}

fn reports_table(reports: &[FindingsReport], timestamp: Option<u64>) -> String {
    let mut out = String::new();
    if let Some(ts) = timestamp {
        let _ = writeln!(out, "generated_at: {ts}");
    }
    for report in reports {
        let elapsed = if report.elapsed_ms > 0 {
            format!(" ({} ms)", report.elapsed_ms)
        } else {
            String::new()
        };
        let _ = writeln!(
            out,
            "== {} — {}{elapsed}",
            report.claim,
            status_str(report.status)
        );
        let _ = writeln!(out, "   params: {}", report.params);
        for detail in &report.details {
            let _ = writeln!(out, "   - {}", describe(detail));
        }
    }
    out
}

fn claims_table(list: &[ClaimInfo], timestamp: Option<u64>) -> String {
    let mut out = String::new();
    if let Some(ts) = timestamp {
        let _ = writeln!(out, "generated_at: {ts}");
    }
    let width = list.iter().map(|c| c.claim.len()).max().unwrap_or(0);
    for c in list {
        let _ = writeln!(
            out,
            "{:width$}  {}  [defaults: {}]",
            c.claim,
            c.summary,
            c.defaults,
            width = width
        );
    }
    out
}

fn fmt_i64_list(values: &[i64]) -> String {
    let items: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(","))
}

fn fmt_u64_list(values: &[u64]) -> String {
    let items: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(","))
}

fn describe(detail: &Detail) -> String {
    match detail {
        Detail::TwinPair { n, low, high } => format!("n={n} pair=({low},{high})"),
        Detail::TwinMismatch {
            n,
            sieve_unmarked,
            oracle_twin,
        } => format!("MISMATCH n={n} sieve_unmarked={sieve_unmarked} oracle_twin={oracle_twin}"),
        Detail::MarkedRun {
            length,
            start,
            generator_cap,
            strict_bound,
            window_size,
        } => {
            let start = start.map_or("-".to_string(), |s| s.to_string());
            let cap = generator_cap.map_or("-".to_string(), |c| c.to_string());
            let strict = strict_bound.map_or("-".to_string(), |b| b.to_string());
            let window = window_size.map_or("-".to_string(), |w| w.to_string());
            format!(
                "run length={length} start={start} cap={cap} strict_bound={strict} window_size={window}"
            )
        }
        Detail::IntervalBound {
            prime,
            index,
            neighbor,
            first_mark_prime,
            first_mark_neighbor,
            bound,
            holds,
        } => format!(
            "p={prime} (n={index}) neighbor={neighbor} first_marks={first_mark_prime},{first_mark_neighbor} bound={bound} holds={holds}"
        ),
        Detail::GoldbachWitness { n_low, n_high, valid } => {
            format!("witness {n_low} + {n_high} valid={valid}")
        }
        Detail::GoldbachMismatch {
            p_a,
            n,
            unmarked,
            both_prime,
        } => format!("MISMATCH p_a={p_a} n={n} unmarked={unmarked} both_prime={both_prime}"),
        Detail::InvalidN2 {
            p_a,
            partner,
            factorization,
            power_of_two,
        } => format!("p_a={p_a} partner={partner}={factorization} power_of_two={power_of_two}"),
        Detail::MarkedCount {
            p_a,
            marked,
            allowed_max,
            holds,
        } => format!("p_a={p_a} marked={marked} allowed_max={allowed_max} holds={holds}"),
        Detail::Eq15Mismatch {
            p_a,
            prime,
            rewritten,
            translated,
        } => format!(
            "MISMATCH p_a={p_a} p={prime} rewritten={} translated={}",
            fmt_u64_list(rewritten),
            fmt_u64_list(translated)
        ),
        Detail::ReducedDomain {
            p_a,
            kept,
            residue_classes,
            spacing_uniform,
            divisible_by_three,
        } => format!(
            "p_a={p_a} kept={kept} classes={} spacing_uniform={spacing_uniform} mod3_target={divisible_by_three}",
            fmt_u64_list(residue_classes)
        ),
        Detail::WindowScan {
            mode,
            family,
            prime,
            modulus,
            window_length,
            max_occupied,
            argmax_total,
            argmax_starts,
            symmetric_start,
            symmetric_count,
            symmetric_attains_max,
            unique,
        } => format!(
            "{mode}/{family} prime={prime} modulus={modulus} max={max_occupied}/{window_length} at start {} ({argmax_total} windows) symmetric={symmetric_start}:{symmetric_count} attains_max={symmetric_attains_max} unique={unique}",
            fmt_u64_list(argmax_starts)
        ),
        Detail::Centers {
            modulus,
            low,
            high,
            low_occupied,
            high_occupied,
        } => format!(
            "centers {low},{high} occupied={low_occupied},{high_occupied} (modulus {modulus})"
        ),
        Detail::OddSlots { divisor, slots } => {
            format!("d={divisor} slots={}", fmt_i64_list(slots))
        }
        Detail::DmCase {
            divisor,
            anchor,
            anchor_exceeds_half,
            windows_with_extra,
            max_total_with_extra,
            symmetric_total,
            holds,
        } => format!(
            "d={divisor} anchor={anchor} anchor>p/2={anchor_exceeds_half} windows_with_extra={windows_with_extra} max_total={max_total_with_extra} symmetric_total={symmetric_total} holds={holds}"
        ),
        Detail::PowerCase {
            base,
            min_distance,
            expected,
            achieved_by,
            tie,
        } => {
            let pairs: Vec<String> = achieved_by
                .iter()
                .map(|(a, b)| format!("({a},{b})"))
                .collect();
            format!(
                "d={base} min={min_distance} expected={expected} pairs=[{}] tie={tie}",
                pairs.join(",")
            )
        }
        Detail::RunLength {
            modulus,
            length,
            start,
            totative_gap,
            matches_oracle,
        } => format!(
            "modulus={modulus} run={length} start={start} totative_gap={totative_gap} matches_oracle={matches_oracle}"
        ),
        Detail::Gap {
            p,
            next_p,
            gap,
            within_bound,
        } => format!("p={p} next={next_p} gap={gap} within_bound={within_bound}"),
        Detail::LegendreFailure { n, low, high } => {
            format!("FAILURE n={n} empty range ({low},{high})")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sievelab::report::claims;

    fn sample_report() -> FindingsReport {
        FindingsReport::new(
            claims::GAPS_WITHIN_BOUND,
            json!({"limit": 100}),
            ClaimStatus::Confirmed,
            vec![Detail::Gap {
                p: 89,
                next_p: 97,
                gap: 8,
                within_bound: true,
            }],
        )
    }

    #[test]
    fn gaps_csv_has_the_mandated_header() {
        let text = reports_csv(&[sample_report()], None, CsvSchema::Gaps);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("p,next_p,gap,within_bound"));
        assert_eq!(lines.next(), Some("89,97,8,true"));
    }

    #[test]
    fn findings_csv_quotes_json_payloads() {
        let text = reports_csv(&[sample_report()], None, CsvSchema::Findings);
        assert!(text.starts_with("claim,status,seq,kind,data\n"));
        assert!(text.contains("gaps.within-bound,confirmed,1,gap,"));
        assert!(text.contains("\"\"kind\"\":\"\"gap\"\""));
    }

    #[test]
    fn json_omits_timestamp_when_asked() {
        let with = reports_json(&[sample_report()], Some(42));
        assert!(with.contains("\"generated_at\": 42"));
        let without = reports_json(&[sample_report()], None);
        assert!(!without.contains("generated_at"));
    }

    #[test]
    fn table_mentions_window_fields() {
        let report = FindingsReport::new(
            claims::PATTERN_WHEEL_WINDOW,
            json!({}),
            ClaimStatus::Confirmed,
            vec![Detail::WindowScan {
                mode: "twin-indices".into(),
                family: "twin-wheel".into(),
                prime: 7,
                modulus: 35,
                window_length: 10,
                max_occupied: 8,
                argmax_total: 1,
                argmax_starts: vec![13],
                symmetric_start: 13,
                symmetric_count: 8,
                symmetric_attains_max: true,
                unique: true,
            }],
        );
        let text = reports_table(&[report], None);
        assert!(text.contains("8/10"));
        assert!(text.contains("[13]"));
    }
}
