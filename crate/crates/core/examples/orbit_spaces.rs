// Strata of the Reeb flow and their multiplicities.

use std::error::Error;

use brieskorn_invariants::orbit;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let t = [2, 3, 5, 7];
    println!("lattice periods: {:?}", orbit::lattice_periods(&t)?);
    for s in orbit::enumerate_orbit_spaces(&t)? {
        let counted = orbit::phi_from_definition(&t, &s.support)?;
        assert_eq!(s.multiplicity, counted.into());
        println!(
            "support {:?}: period {}, dim {}, χ^S¹ {}, φ {}",
            s.support, s.period, s.manifold_dim, s.equivariant_euler, s.multiplicity
        );
    }
    // Period 6 inside period 210, skipping times on the strata of periods
    // 30 and 42.
    println!(
        "φ(6 | 30, 42; 210) = {}",
        orbit::phi_count(6, &[30, 42], 210)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
