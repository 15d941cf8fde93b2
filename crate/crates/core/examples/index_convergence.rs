// Cesàro partial sums of a periodic generator count converging to χ_m.

use std::error::Error;

use brieskorn_invariants::arith::fmt_rational;
use brieskorn_invariants::brieskorn::{self, DEFAULT_ORACLE_CAP};
use brieskorn_invariants::engine::{boundedness_check, mec_partial_sums, IndexCountSequence};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (strata, mu_p) = brieskorn::representative_page(&[2, 3, 5, 7], DEFAULT_ORACLE_CAP)?;
    let counts = IndexCountSequence::from_page(&strata, mu_p)?;
    println!(
        "shift {mu_p}, {} generators per period, signed {}",
        counts.period_generator_count(),
        counts.signed_period_sum()
    );
    println!("{:?}", boundedness_check(&counts, 0..=2 * mu_p));
    let sums = mec_partial_sums(&counts, 10_000);
    for n in [10, 100, 1000, 10_000] {
        println!("N = {n:>5}: {}", fmt_rational(&sums[n - 1]));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
