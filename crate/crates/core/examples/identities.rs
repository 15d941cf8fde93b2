// Sweeps of the combinatorial identities behind the unit-exponent case.

use std::error::Error;

use brieskorn_invariants::identities::{
    f_value, reduction_check, sweep_f_identity, sweep_reduction, sweep_unit_fractions,
    unit_fraction_sum_check,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!(
        "f(1..=6) = {:?}",
        (1..=6).map(|n| f_value(n).to_string()).collect::<Vec<_>>()
    );
    println!(
        "reduction holds on (1,2,3,5): {}",
        reduction_check(&[1, 2, 3, 5])?
    );
    let c = unit_fraction_sum_check(&[2, 3, 6])?;
    println!(
        "(2,3,6): equals one {}, witness {:?}",
        c.equals_one, c.divisibility_witness
    );
    for r in [
        sweep_f_identity(100),
        sweep_reduction(3, 15),
        sweep_unit_fractions(3, 15),
    ] {
        println!(
            "{}: {} ({} cases, passed {})",
            r.identity, r.tested_range, r.cases, r.passed
        );
        if !r.passed {
            return Err(format!("counterexample: {:?}", r.counterexample).into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
