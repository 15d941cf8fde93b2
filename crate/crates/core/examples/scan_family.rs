// A batch scan over a box of exponent tuples, with its summary.

use std::error::Error;

use brieskorn_invariants::cli::report::ReportOptions;
use brieskorn_invariants::cli::scan::{run_scan, ScanRequest};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let outcome = run_scan(&ScanRequest {
        n: 3,
        min: 2,
        max: 12,
        all_orderings: false,
        budget: 10_000,
        jobs: 2,
        report: ReportOptions::default(),
    });
    for r in &outcome.reports {
        let label = r.verdict.as_ref().map(|v| v.label.as_str()).unwrap_or("-");
        let mec = r.mec.as_ref().map(|m| m.to_string()).unwrap_or_default();
        println!("{:?}: χ_m = {mec}, {label}", r.input);
    }
    println!("{}", serde_json::to_string(&outcome.summary)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
