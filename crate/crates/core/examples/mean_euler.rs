// Mean Euler characteristic by the closed form, the brute-force oracle and
// the orbibundle engine.

use std::error::Error;

use brieskorn_invariants::arith::fmt_rational;
use brieskorn_invariants::brieskorn;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for t in [
        &[2, 3, 5, 7][..],
        &[1, 2, 3, 5],
        &[2, 3, 5],
        &[3, 4, 5, 7, 11],
    ] {
        let closed = brieskorn::mec_closed_form(t)?;
        let oracle = brieskorn::mec_bruteforce(t)?;
        let engine = brieskorn::mec_via_engine(t)?;
        assert!(closed == oracle && oracle == engine);
        println!("{t:?}: χ_m = {}", fmt_rational(&closed));
    }
    match brieskorn::mec_closed_form(&[2, 3, 4]) {
        Err(e) => println!("[2, 3, 4]: {e}"),
        Ok(v) => return Err(format!("expected a refusal, got {v}").into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
