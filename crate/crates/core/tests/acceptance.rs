//! Acceptance suite. Each test prints exactly one `PASS`/`FAIL` line and then
//! asserts, so `cargo test --test acceptance -- --nocapture` gives a one-line
//! summary per criterion.

use std::time::{Duration, Instant};

use brieskorn_invariants::arith::{self, from_int, int, minus_one_pow, ratio, Rational};
use brieskorn_invariants::brieskorn::{self, IndexSign, DEFAULT_ORACLE_CAP};
use brieskorn_invariants::engine::{
    e2_page_dims, mec_partial_sum, mec_partial_sums, IndexCountSequence,
};
use brieskorn_invariants::identities::{self, coprime_tuples};
use brieskorn_invariants::obstruction::{self, VerdictLabel};
use brieskorn_invariants::orbit;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn verdict(id: u32, title: &str, ok: bool, detail: String) {
    let status = if ok { "PASS" } else { "FAIL" };
    println!("{status} [{id:>2}] {title}: {detail}");
    assert!(ok, "criterion {id} failed: {detail}");
}

/// Nondecreasing pairwise coprime tuples with `n ∈ {2,3,4}`, entries in
/// `1..=20` and product at most `10^6`.
fn agreement_range() -> Vec<Vec<u64>> {
    (2..=4)
        .flat_map(|n| coprime_tuples(n + 1, 1, 20))
        .filter(|t| t.iter().product::<u64>() <= 1_000_000)
        .collect()
}

#[test]
fn c01_three_route_agreement() {
    let start = Instant::now();
    let tuples = agreement_range();
    let failures: Vec<String> = tuples
        .par_iter()
        .filter_map(|t| {
            let closed = brieskorn::mec_closed_form(t);
            let oracle = brieskorn::mec_bruteforce(t);
            let engine = brieskorn::mec_via_engine(t);
            match (&closed, &oracle, &engine) {
                (Ok(c), Ok(o), Ok(e)) if c == o && o == e => None,
                _ => Some(format!("{t:?}: {closed:?} / {oracle:?} / {engine:?}")),
            }
        })
        .collect();
    let elapsed = start.elapsed();
    verdict(
        1,
        "three-route agreement",
        failures.is_empty() && elapsed < Duration::from_secs(60),
        format!(
            "{} tuples, {} mismatches, {:.2?} (limit 60 s){}",
            tuples.len(),
            failures.len(),
            elapsed,
            failures
                .first()
                .map(|f| format!("; first: {f}"))
                .unwrap_or_default()
        ),
    );
}

#[test]
fn c02_sigma_2357() {
    let t = [2, 3, 5, 7];
    // Warm once, then take the fastest of several runs of closed form plus
    // oracle.
    let mut best = Duration::MAX;
    let mut values = None;
    for _ in 0..5 {
        let start = Instant::now();
        let closed = brieskorn::mec_closed_form(&t).unwrap();
        let oracle = brieskorn::mec_bruteforce(&t).unwrap();
        best = best.min(start.elapsed());
        values = Some((closed, oracle));
    }
    let (closed, oracle) = values.unwrap();
    let mu = brieskorn::principal_maslov(&t).unwrap();
    let sign = brieskorn::index_sign(&t).unwrap();
    let label = obstruction::classify_displaceability(&t).label;
    let ok = closed == ratio(85, 74)
        && oracle == closed
        && mu == from_int(74)
        && sign == IndexSign::Positive
        && label == VerdictLabel::ObstructedMecMismatch
        && best < Duration::from_millis(1);
    verdict(
        2,
        "Σ(2,3,5,7)",
        ok,
        format!(
            "χ_m = {} (oracle {}), μ_P = {}, {:?}, {}, {:.0?} (limit 1 ms)",
            arith::fmt_rational(&closed),
            arith::fmt_rational(&oracle),
            arith::fmt_rational(&mu),
            sign,
            label.as_str(),
            best
        ),
    );
}

fn random_unit_tuple(rng: &mut ChaCha8Rng) -> Vec<u64> {
    let n = rng.gen_range(2..=5usize);
    let mut t = vec![1u64];
    while t.len() < n + 1 {
        let v = rng.gen_range(1..=30u64);
        if t.iter().all(|&p| num_integer::gcd(p, v) == 1) {
            t.push(v);
        }
    }
    t.shuffle(rng);
    t
}

#[test]
fn c03_unit_exponent_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let tuples: Vec<Vec<u64>> = (0..200).map(|_| random_unit_tuple(&mut rng)).collect();
    let mut oracle_checked = 0;
    let mut failures = Vec::new();
    for t in &tuples {
        let expected = ratio(minus_one_pow(t.len()), 2);
        let mut values = vec![brieskorn::mec_closed_form(t), brieskorn::mec_via_engine(t)];
        if t.iter().product::<u64>() <= 1_000_000 {
            values.push(brieskorn::mec_bruteforce(t));
            oracle_checked += 1;
        }
        if values.iter().any(|v| v.as_ref() != Ok(&expected)) {
            failures.push(format!("{t:?}: {values:?}"));
        }
    }
    verdict(
        3,
        "unit-exponent law",
        failures.is_empty(),
        format!(
            "200 seeded tuples (n ≤ 5, {oracle_checked} also by oracle), {} exceptions{}",
            failures.len(),
            failures
                .first()
                .map(|f| format!("; first: {f}"))
                .unwrap_or_default()
        ),
    );
}

#[test]
fn c04_half_iff_unit_exponent() {
    let tuples: Vec<Vec<u64>> = coprime_tuples(4, 1, 30)
        .into_iter()
        .filter(|t| arith::unit_fraction_sum(t).unwrap() > Rational::one())
        .collect();
    let half = ratio(minus_one_pow(4), 2);
    let exceptions: Vec<String> = tuples
        .par_iter()
        .filter_map(|t| {
            let (closed, engine) =
                match (brieskorn::mec_closed_form(t), brieskorn::mec_via_engine(t)) {
                    (Ok(c), Ok(e)) => (c, e),
                    (c, e) => return Some(format!("{t:?}: {c:?} / {e:?}")),
                };
            let is_half = closed == half;
            (closed != engine || is_half != (t[0] == 1)).then(|| format!("{t:?}: {closed}"))
        })
        .collect();
    let with_unit = tuples.iter().filter(|t| t[0] == 1).count();
    verdict(
        4,
        "χ_m = (-1)^(n+1)/2 iff min a_i = 1",
        exceptions.is_empty(),
        format!(
            "{} tuples with Σ1/a > 1 ({} with a unit exponent), {} exceptions",
            tuples.len(),
            with_unit,
            exceptions.len()
        ),
    );
}

#[test]
fn c05_all_obstructed() {
    let tuples = coprime_tuples(4, 2, 30);
    let labels: Vec<VerdictLabel> = tuples
        .par_iter()
        .map(|t| obstruction::classify_displaceability(t).label)
        .collect();
    let negative = labels
        .iter()
        .filter(|l| **l == VerdictLabel::ObstructedIndexNegative)
        .count();
    let mismatch = labels
        .iter()
        .filter(|l| **l == VerdictLabel::ObstructedMecMismatch)
        .count();
    let other: Vec<String> = tuples
        .iter()
        .zip(&labels)
        .filter(|(_, l)| !l.is_obstructed())
        .map(|(t, l)| format!("{t:?} {}", l.as_str()))
        .collect();
    verdict(
        5,
        "every exotic tuple obstructed",
        other.is_empty(),
        format!(
            "{} tuples: {negative} index-negative, {mismatch} mec-mismatch, {} other",
            tuples.len(),
            other.len()
        ),
    );
}

#[test]
fn c06_f_identity() {
    let report = identities::sweep_f_identity(200);
    let pointwise = (1..=200u64).all(|n| {
        let expected = int(minus_one_pow(n as usize + 1));
        identities::f_value(n) == expected && identities::f_value_via_derivative(n) == expected
    });
    verdict(
        6,
        "f(n) = (-1)^(n+1)",
        report.passed && pointwise,
        format!("1 ≤ n ≤ 200, {} cases, both routes", report.cases),
    );
}

#[test]
fn c07_phi_equivalence() {
    let tuples = agreement_range();
    let results: Vec<(usize, Option<String>)> = tuples
        .par_iter()
        .map(|t| {
            let strata = orbit::enumerate_orbit_spaces(t).unwrap();
            let bad = strata.iter().find_map(|s| {
                let def = orbit::phi_from_definition(t, &s.support).unwrap();
                let prod = orbit::phi_product_formula(t, &s.support).unwrap();
                (BigInt::from(def) != prod)
                    .then(|| format!("{t:?} {:?}: {def} vs {prod}", s.support))
            });
            (strata.len(), bad)
        })
        .collect();
    let strata: usize = results.iter().map(|r| r.0).sum();
    let bad: Vec<&String> = results.iter().filter_map(|r| r.1.as_ref()).collect();
    verdict(
        7,
        "φ definition = product formula",
        bad.is_empty(),
        format!(
            "{} tuples, {strata} strata, {} mismatches{}",
            tuples.len(),
            bad.len(),
            bad.first()
                .map(|f| format!("; first: {f}"))
                .unwrap_or_default()
        ),
    );
}

#[test]
fn c08_unit_fraction_lemma() {
    let sweep = identities::sweep_unit_fractions(3, 30);
    let witness = identities::unit_fraction_sum_check(&[2, 3, 6]).unwrap();
    let coprime = arith::pairwise_coprime(&[2, 3, 6]).unwrap();
    let fired = witness.equals_one
        && !coprime
        && witness
            .divisibility_witness
            .as_ref()
            .is_some_and(|w| w.divisor == 2 && w.product == int(18));
    verdict(
        8,
        "coprime unit fractions never sum to 1",
        sweep.passed && fired,
        format!(
            "{} coprime tuples, {} hits; (2,3,6): Σ = {}, witness 2 | 18 {}",
            sweep.cases,
            if sweep.passed { 0 } else { 1 },
            arith::fmt_rational(&witness.sum),
            if fired { "fired" } else { "missing" }
        ),
    );
}

#[test]
fn c09_cesaro_convergence() {
    let (strata, mu_p) = brieskorn::representative_page(&[2, 3, 5, 7], DEFAULT_ORACLE_CAP).unwrap();
    let counts = IndexCountSequence::from_page(&strata, mu_p).unwrap();
    let k = counts.period_generator_count();
    let limit = ratio(85, 74);
    let sums = mec_partial_sums(&counts, 10_000);
    let worst = sums
        .iter()
        .enumerate()
        .map(|(i, s)| ((s - &limit).abs() * from_int(i as u64 + 1), i as u64 + 1))
        .max()
        .unwrap();
    let spot = [1u64, 7, 74, 1000, 10_000]
        .iter()
        .all(|&n| mec_partial_sum(&counts, n) == sums[n as usize - 1]);
    let signed_limit = ratio(counts.signed_period_sum(), mu_p.abs());
    verdict(
        9,
        "Cesàro convergence for Σ(2,3,5,7)",
        worst.0 <= from_int(k) && spot && signed_limit == limit,
        format!(
            "K = {k}, max N·|S_N - 85/74| = {} at N = {} over N ≤ 10^4",
            arith::fmt_rational(&worst.0),
            worst.1
        ),
    );
}

#[test]
fn c10_e2_periodicity() {
    let (strata, mu_p) = brieskorn::representative_page(&[2, 3, 5, 7], DEFAULT_ORACLE_CAP).unwrap();
    let first = e2_page_dims(&strata, mu_p, 0..=mu_p - 1).unwrap();
    let second = e2_page_dims(&strata, mu_p, mu_p..=2 * mu_p - 1).unwrap();
    let identical = second.shifted(-mu_p) == first;
    verdict(
        10,
        "E² page periodic in q",
        identical && first.signed_total() == 85,
        format!(
            "windows [0,{}] and [{},{}]: {} entries each, signed total {}",
            mu_p - 1,
            mu_p,
            2 * mu_p - 1,
            first.entries.len(),
            first.signed_total()
        ),
    );
}

#[test]
fn c11_cz_bounds() {
    let delta = from_int(-1);
    let n = 4;
    let target = int(n + 1);
    let reached: Vec<u64> = (1..=1000u64)
        .filter(|&k| {
            obstruction::cz_bounds(&delta, n, k)
                .unwrap()
                .contains(&target)
        })
        .collect();
    let max_hi = (1..=1000u64)
        .map(|k| obstruction::cz_bounds(&delta, n, k).unwrap().hi)
        .max()
        .unwrap();
    let at_ten = obstruction::cz_bounds(&delta, n, 10).unwrap();
    let contradiction =
        obstruction::index_negative_contradiction(n, std::slice::from_ref(&delta)).unwrap();
    let ok = reached.is_empty()
        && max_hi < target
        && at_ten.lo == int(-13)
        && at_ten.hi == int(-7)
        && contradiction;
    verdict(
        11,
        "Conley-Zehnder range never reaches n+1",
        ok,
        format!(
            "n = 4, Δ = -1: max upper bound {max_hi} over N ≤ 1000, N = 10 gives [{}, {}], contradiction {}",
            at_ten.lo, at_ten.hi, contradiction
        ),
    );
}
