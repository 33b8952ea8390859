//! CLI front end: argument parsing, dispatch, and the exit-code contract.
//!
//! Exit codes: 0 success, 2 usage/domain error, 3 resource limit, 4 a
//! counterexample under `--strict` (documented anomalies never trip it),
//! 1 for I/O failures.

pub mod args;
pub mod claims;
pub mod output;

use std::ffi::OsString;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

use sievelab::pattern::DivisorFamily;
use sievelab::report::ClaimStatus;
use sievelab::{gaps, goldbach, Error, Result};

use args::{Cli, Command, OddFamily, PatternCmd};
use claims::RunCtx;
use output::{CsvSchema, Payload};

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    0
                }
                _ => {
                    eprintln!("usage error: {}", one_line(&err));
                    2
                }
            };
        }
    };
    let outcome = match cli.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n as usize)
                .build();
            match pool {
                Ok(pool) => pool.install(|| dispatch(&cli)),
                Err(err) => {
                    eprintln!("error: {err}");
                    return 1;
                }
            }
        }
        None => dispatch(&cli),
    };
    let schema = match cli.command {
        Command::Gaps { .. } => CsvSchema::Gaps,
        _ => CsvSchema::Findings,
    };
    match outcome {
        Ok(payload) => {
            if let Err(err) = output::write_payload(&cli, &payload, schema) {
                eprintln!("io error: {err}");
                return 1;
            }
            let counterexample = match &payload {
                Payload::Reports(reports) => reports
                    .iter()
                    .any(|r| r.status == ClaimStatus::Counterexample),
                Payload::ClaimList(_) => false,
            };
            if cli.strict && counterexample {
                4
            } else {
                0
            }
        }
        Err(err) => {
            let code = exit_code_for(&err);
            match code {
                2 => eprintln!("usage error: {err}"),
                _ => eprintln!("resource error: {err}"),
            }
            code
        }
    }
}

/// Clap renders multi-line messages; the contract is one diagnostic line.
fn one_line(err: &clap::Error) -> String {
    err.to_string()
        .lines()
        .next()
        .unwrap_or("invalid arguments")
        .trim_start_matches("error: ")
        .to_string()
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Domain(_) => 2,
        Error::ResourceLimit { .. } | Error::PrimorialOverflow { .. } => 3,
    }
}

fn dispatch(cli: &Cli) -> Result<Payload> {
    let ctx = RunCtx {
        memory_cap_bits: cli.memory_cap_bits,
    };
    let t0 = Instant::now();
    let mut reports = match &cli.command {
        Command::Twin {
            max_n,
            generator_cap,
        } => claims::twin_reports(*max_n, *generator_cap)?,
        Command::Goldbach {
            even,
            sweep_max,
            reduced,
        } => match (even, sweep_max, reduced) {
            (Some(p_a), _, false) => claims::goldbach_even_reports(*p_a)?,
            (Some(p_a), _, true) => {
                vec![goldbach::reduced_report(&goldbach::reduced_sieve(*p_a)?)]
            }
            (None, Some(max), false) => goldbach::verify_goldbach_equivalence(*max)?,
            (None, Some(max), true) => vec![goldbach::verify_reduced_spacing(*max)?],
            (None, None, _) => unreachable!("clap group enforces a target"),
        },
        Command::Pattern(cmd) => match cmd {
            PatternCmd::Scan { prime, window_len } => {
                claims::pattern_scan_reports(*prime, *window_len, ctx.memory_cap_bits)?
            }
            PatternCmd::Odd { prime, divisors } => {
                let family = match divisors {
                    OddFamily::All => DivisorFamily::AllOdds,
                    OddFamily::Primes => DivisorFamily::OddPrimes,
                };
                vec![claims::pattern_odd_report(
                    *prime,
                    family,
                    ctx.memory_cap_bits,
                )?]
            }
            PatternCmd::Wheel { prime } => {
                claims::pattern_wheel_reports(*prime, ctx.memory_cap_bits)?
            }
            PatternCmd::Power { prime } => sievelab::pattern::verify_power_minimality(*prime)?,
        },
        Command::Gaps { limit, segment } => {
            let progress: Option<&(dyn Fn(u64, u64) + Sync)> = if *limit >= 10_000_000 {
                Some(&|done, total| {
                    eprintln!("gap scan: {}%", done.saturating_mul(100) / total.max(1))
                })
            } else {
                None
            };
            let scan = gaps::scan_gaps_with(*limit, *segment, progress)?;
            vec![gaps::gap_report(&scan)]
        }
        Command::Verify { list, claims: ids } => {
            if *list {
                return Ok(Payload::ClaimList(claims::claim_list()));
            }
            // per-claim timing happens inside the runner
            return Ok(Payload::Reports(claims::run_claims(ids, &ctx)?));
        }
    };
    let elapsed = t0.elapsed().as_millis() as u64;
    for r in &mut reports {
        r.elapsed_ms = elapsed;
    }
    Ok(Payload::Reports(reports))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;
    use sievelab::report::FindingsReport;

    #[test]
    fn strict_mode_exit_code_logic() {
        let confirmed = FindingsReport::new("x.y", json!({}), ClaimStatus::Confirmed, vec![]);
        let anomaly = FindingsReport::new("x.z", json!({}), ClaimStatus::DocumentedAnomaly, vec![]);
        let bad = FindingsReport::new(
            "x.w",
            json!({}),
            ClaimStatus::Counterexample,
            vec![sievelab::report::Detail::LegendreFailure {
                n: 1,
                low: 1,
                high: 4,
            }],
        );
        let no_trip = [confirmed.clone(), anomaly.clone()];
        assert!(!no_trip
            .iter()
            .any(|r| r.status == ClaimStatus::Counterexample));
        let trip = [confirmed, anomaly, bad];
        assert!(trip.iter().any(|r| r.status == ClaimStatus::Counterexample));
    }

    #[test]
    fn error_exit_codes() {
        assert_eq!(exit_code_for(&Error::domain("nope")), 2);
        assert_eq!(
            exit_code_for(&Error::ResourceLimit {
                required_bits: 10,
                cap_bits: 1
            }),
            3
        );
        assert_eq!(
            exit_code_for(&Error::PrimorialOverflow {
                top_prime: 53,
                base_prime: 2,
                max_top_prime: 47
            }),
            3
        );
    }
}
