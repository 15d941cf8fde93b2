// The orbibundle formula on hand-written strata.

use std::error::Error;

use brieskorn_invariants::arith::fmt_rational;
use brieskorn_invariants::brieskorn;
use brieskorn_invariants::engine::{mec_orbibundle, MecInput};

const STRATA: &str = "\
# Σ(2,3,5): period, degree sign, χ^S¹, multiplicity
mu_p 2
stratum 6 -1 1 4
stratum 10 -1 1 2
stratum 15 -1 1 1
stratum 30 -1 2 1
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let input: MecInput = STRATA.parse()?;
    let mec = mec_orbibundle(&input)?;
    println!("from text: χ_m = {}", fmt_rational(&mec));
    assert_eq!(mec, brieskorn::mec_closed_form(&[2, 3, 5])?);

    let generated = brieskorn::engine_input(&[2, 3, 5, 7])?;
    let json = serde_json::to_string(&generated)?;
    let back = MecInput::from_json(&json)?;
    println!("Σ(2,3,5,7) as text:\n{back}");
    println!("χ_m = {}", fmt_rational(&mec_orbibundle(&back)?));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
