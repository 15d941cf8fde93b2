// Displaceability verdicts with their reason chains.

use std::error::Error;

use brieskorn_invariants::obstruction::classify_displaceability;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for t in [
        &[2, 3, 5, 7][..],
        &[2, 3, 7, 43],
        &[1, 2, 3, 5],
        &[2, 3, 5],
        &[2, 3, 4, 5],
    ] {
        let v = classify_displaceability(t);
        println!("{t:?}: {}", v.label.as_str());
        for r in &v.reasons {
            println!("    {} ({})", r.rule, r.citation);
        }
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&classify_displaceability(&[2, 3, 5, 7]))?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
