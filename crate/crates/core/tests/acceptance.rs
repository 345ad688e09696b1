//! Runs every acceptance criterion and prints one pass/fail line per criterion.
//! Built with `harness = false`, so the lines are shown by a plain `cargo test`.

use std::process::ExitCode;
use std::time::Instant;

use weylspin::verify::{run_suite, Suite, VerifyConfig};

const CRITERIA: [(u32, &str, Suite); 10] = [
    (1, "final chart replication", Suite::FinalChart),
    (2, "E8 uniform spin", Suite::E8),
    (3, "center table", Suite::Center),
    (4, "Coxeter signatures", Suite::Coxeter),
    (5, "B partition diagrams", Suite::BPartitions),
    (6, "C classes and linkage", Suite::CClasses),
    (7, "worked examples", Suite::Examples),
    (8, "relation suite", Suite::Braid),
    (9, "oracle equivalence", Suite::Oracles),
    (10, "property suite", Suite::Properties),
];

fn main() -> ExitCode {
    let cfg = VerifyConfig::default();
    let only: Vec<u32> = std::env::var("ACCEPTANCE_ONLY")
        .map(|v| v.split(',').filter_map(|s| s.trim().parse().ok()).collect())
        .unwrap_or_default();
    let mut failed = 0;
    for (k, label, suite) in CRITERIA {
        if !only.is_empty() && !only.contains(&k) {
            continue;
        }
        let start = Instant::now();
        let result = run_suite(suite, &cfg);
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(rep) => {
                let limit_ok = suite != Suite::Properties || secs < 60.0;
                let pass = rep.pass && limit_ok;
                println!(
                    "criterion {k:>2} ({label}): {} [{} checks, {} failed, {secs:.1}s]",
                    if pass { "PASS" } else { "FAIL" },
                    rep.checks.len(),
                    rep.failures().count()
                );
                if std::env::var_os("ACCEPTANCE_VERBOSE").is_some() {
                    for c in &rep.checks {
                        println!(
                            "    {} {}: {}",
                            if c.pass { "ok  " } else { "FAIL" },
                            c.name,
                            c.detail
                        );
                    }
                } else {
                    for c in rep.failures() {
                        println!("    FAIL {}: {}", c.name, c.detail);
                    }
                }
                if !limit_ok {
                    println!("    FAIL runtime {secs:.1}s exceeds 60s");
                }
                if !pass {
                    failed += 1;
                }
            }
            Err(e) => {
                println!("criterion {k:>2} ({label}): FAIL [{e}, {secs:.1}s]");
                failed += 1;
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
