// Morse-Bott E² page dimensions and their periodicity in the column index.

use std::error::Error;

use brieskorn_invariants::engine::{e2_page_dims, PageStratum};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // A circle stratum at degree 2 and a 3-sphere quotient at degree 5,
    // iterated with principal Maslov index 8.
    let strata = [PageStratum::new(2, 1, 3), PageStratum::new(5, 3, 1)];
    let page = e2_page_dims(&strata, 8, 0..=23)?;
    for (&(q, p), dim) in &page.entries {
        println!("E²[q = {q:>2}, p = {p}] = {dim}");
    }
    let first = page.restricted(0..=7);
    let second = page.restricted(8..=15).shifted(-8);
    assert_eq!(first, second);
    println!("signed total per window: {}", first.signed_total());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
