//! The eleven acceptance criteria at desk scale, one line per criterion.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;
use rootpoly::verify::{criterion_cases, run_some, Check, Outcome, CRITERIA};
use rootpoly::{Family, RootSystem};

fn main() -> ExitCode {
    let start = Instant::now();
    // Each root system runs once, with every criterion that lists it.
    let mut systems: BTreeMap<(Family, usize), Vec<u8>> = BTreeMap::new();
    for (k, _) in CRITERIA {
        for case in criterion_cases(k) {
            systems.entry(case).or_default().push(k);
        }
    }
    let results: Vec<((Family, usize), Vec<Check>)> = systems
        .into_par_iter()
        .map(|((family, rank), ks)| {
            let rs = RootSystem::new(family, rank).expect("valid case");
            ((family, rank), run_some(&rs, &ks))
        })
        .collect();

    let mut failed = 0;
    for (k, name) in CRITERIA {
        let mut cases = 0;
        let mut failures = Vec::new();
        for ((family, rank), checks) in &results {
            for c in checks.iter().filter(|c| c.criterion == k) {
                cases += 1;
                if c.outcome != Outcome::Pass {
                    failures.push(format!("{family}{rank}: {:?} {}", c.outcome, c.detail));
                }
            }
        }
        let verdict = if failures.is_empty() && cases > 0 {
            "PASS"
        } else {
            "FAIL"
        };
        println!("criterion {k:>2} {verdict} {name} ({cases} cases)");
        for f in &failures {
            println!("    {f}");
        }
        if verdict == "FAIL" {
            failed += 1;
        }
    }
    println!("total {:.1}s", start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
