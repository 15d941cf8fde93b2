// Principal Maslov index, index sign and Conley-Zehnder windows of iterates.

use std::error::Error;

use brieskorn_invariants::arith::{fmt_rational, from_int};
use brieskorn_invariants::brieskorn;
use brieskorn_invariants::obstruction::{cz_bounds, index_negative_contradiction};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for t in [&[2, 3, 5, 7][..], &[2, 3, 7, 43], &[1, 1, 1]] {
        let forms = brieskorn::principal_maslov_forms(t)?;
        println!(
            "{t:?}: μ_P = {} (symmetric form {:?}), {:?}",
            fmt_rational(&forms.lcm_form),
            forms.symmetric_form.map(|v| v.to_string()),
            brieskorn::index_sign(t)?
        );
    }
    let delta = from_int(-1);
    for iterations in [1, 10, 100] {
        let w = cz_bounds(&delta, 4, iterations)?;
        println!(
            "n = 4, Δ = -1, N = {iterations}: μ_CZ in [{}, {}]",
            w.lo, w.hi
        );
    }
    println!(
        "degree 5 unreachable: {}",
        index_negative_contradiction(4, &[delta])?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
