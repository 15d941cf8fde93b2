//! Periodic-orbit structure of the Brieskorn Reeb flow.
//!
//! The flow rotates coordinate `j` with angular speed `4/a_j`, so in units of
//! `π/2` coordinate `j` returns after time `a_j` and every period is an
//! integer. A point whose nonzero coordinates are indexed by `I` lies on an
//! orbit of period `lcm{a_j : j ∈ I}`. Supports of size 0 or 1 are empty on
//! the Brieskorn variety and never appear.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::arith::{self, json};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `(-1)^k` for any `k` of this parity.
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn bit(self) -> i64 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// One stratum `N_I` of periodic Reeb orbits, indexed by its support `I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSpace {
    /// Sorted coordinate indices, at least two of them.
    pub support: Vec<usize>,
    #[serde(with = "json::int")]
    pub period: BigInt,
    /// `2|I| - 3`
    pub manifold_dim: u32,
    /// `|I| - 1`, the Euler characteristic of its circle-equivariant homology.
    pub equivariant_euler: u32,
    /// How many times the stratum contributes within one principal period.
    #[serde(with = "json::int")]
    pub multiplicity: BigInt,
    /// Parity of `μ(S_T) - dim S_T / 2`.
    pub degree_parity: Parity,
}

impl OrbitSpace {
    pub fn is_principal(&self, exponent_count: usize) -> bool {
        self.support.len() == exponent_count
    }
}

fn support_period(exponents: &[u64], support: &[usize]) -> BigInt {
    support.iter().fold(BigInt::one(), |acc, &j| {
        acc.lcm(&BigInt::from(exponents[j]))
    })
}

fn check_support(exponents: &[u64], support: &[usize]) -> Result<()> {
    if support.iter().any(|&j| j >= exponents.len()) {
        return Err(Error::domain(format!(
            "support {support:?} is not a subset of 0..{}",
            exponents.len()
        )));
    }
    let mut sorted = support.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != support.len() {
        return Err(Error::domain(format!(
            "support {support:?} repeats an index"
        )));
    }
    if support.len() < 2 {
        return Err(Error::domain(
            "orbit-space supports need at least two indices",
        ));
    }
    Ok(())
}

/// All strata of the orbit space, sorted by `(period, support)`.
///
/// Multiplicities come from [`phi_product_formula`]; the full support has
/// multiplicity 1.
pub fn enumerate_orbit_spaces(exponents: &[u64]) -> Result<Vec<OrbitSpace>> {
    if exponents.len() < 3 {
        return Err(Error::domain(format!(
            "need at least 3 exponents, got {}",
            exponents.len()
        )));
    }
    if !arith::pairwise_coprime(exponents)? {
        return Err(Error::PeriodLatticeNotCoprime);
    }
    let count = exponents.len();
    let n = count - 1;
    let parity = Parity::of(n as i64 + 1);
    let mut strata = Vec::with_capacity((1usize << count) - count - 1);
    for mask in 0u64..(1u64 << count) {
        let support: Vec<usize> = (0..count).filter(|&j| mask & (1 << j) != 0).collect();
        if support.len() < 2 {
            continue;
        }
        let size = support.len() as u32;
        strata.push(OrbitSpace {
            period: support_period(exponents, &support),
            manifold_dim: 2 * size - 3,
            equivariant_euler: size - 1,
            multiplicity: phi_product_formula(exponents, &support)?,
            degree_parity: parity,
            support,
        });
    }
    strata.sort_by(|a, b| match a.period.cmp(&b.period) {
        Ordering::Equal => a.support.cmp(&b.support),
        other => other,
    });
    Ok(strata)
}

/// Counts `a ≥ 1` with `a·t_i < t_k` and `a·t_i` not a multiple of any of
/// `larger`.
///
/// The inequality is strict, so `t_i = t_k` yields zero.
pub fn phi_count(t_i: u64, larger: &[u64], t_k: u64) -> Result<u64> {
    if t_i == 0 || t_k == 0 {
        return Err(Error::domain("periods must be positive"));
    }
    if !t_k.is_multiple_of(t_i) {
        return Err(Error::domain(format!("{t_i} does not divide {t_k}")));
    }
    for &t_j in larger {
        if t_j <= t_i || !t_k.is_multiple_of(t_j) {
            return Err(Error::domain(format!(
                "larger period {t_j} must exceed {t_i} and divide {t_k}"
            )));
        }
    }
    // a·t_i ∈ t_j·N  iff  a is a multiple of t_j / gcd(t_i, t_j).
    let steps: Vec<u64> = larger.iter().map(|&t_j| t_j / t_i.gcd(&t_j)).collect();
    let bound = (t_k / t_i) as usize; // a ranges over 1..bound
    let mut excluded = vec![false; bound];
    for step in steps {
        let step = step as usize;
        let mut a = step;
        while a < bound {
            excluded[a] = true;
            a += step;
        }
    }
    Ok(excluded.iter().skip(1).filter(|&&x| !x).count() as u64)
}

/// `Π_{j ∉ support} (a_j - 1)`: the number of times the stratum contributes
/// in one principal period, for pairwise coprime exponents.
pub fn phi_product_formula(exponents: &[u64], support: &[usize]) -> Result<BigInt> {
    check_support(exponents, support)?;
    if !arith::pairwise_coprime(exponents)? {
        return Err(Error::PeriodLatticeNotCoprime);
    }
    Ok((0..exponents.len())
        .filter(|j| !support.contains(j))
        .map(|j| BigInt::from(exponents[j] - 1))
        .product())
}

/// Multiplicity of a stratum straight from the counting definition, using
/// every distinct period of the lattice above the stratum's own.
///
/// A support that is not saturated (some strictly larger support has the
/// same period, which happens with unit exponents) is not an orbit space of
/// its own: every point of that period lies on the larger stratum, so the
/// count is zero. The principal stratum counts once.
pub fn phi_from_definition(exponents: &[u64], support: &[usize]) -> Result<u64> {
    check_support(exponents, support)?;
    let principal = period_u64(&arith::lcm_all(exponents)?)?;
    let period = period_u64(&support_period(exponents, support))?;
    let mut saturated = support.to_vec();
    saturated.sort_unstable();
    if support_at_time(exponents, period) != saturated {
        return Ok(0);
    }
    if period == principal {
        return Ok(1);
    }
    let mut larger: Vec<u64> = lattice_periods(exponents)?
        .into_iter()
        .filter(|&t| t > period)
        .collect();
    larger.dedup();
    phi_count(period, &larger, principal)
}

/// Sorted distinct periods of all strata.
pub fn lattice_periods(exponents: &[u64]) -> Result<Vec<u64>> {
    let count = exponents.len();
    let mut periods = Vec::new();
    for mask in 0u64..(1u64 << count) {
        if mask.count_ones() < 2 {
            continue;
        }
        let support: Vec<usize> = (0..count).filter(|&j| mask & (1 << j) != 0).collect();
        periods.push(period_u64(&support_period(exponents, &support))?);
    }
    periods.sort_unstable();
    periods.dedup();
    Ok(periods)
}

fn period_u64(p: &BigInt) -> Result<u64> {
    p.to_u64()
        .ok_or_else(|| Error::domain(format!("period {p} exceeds 64 bits")))
}

/// Circle-equivariant Euler characteristic of a rational homology sphere of
/// dimension `2m + 1` with a fixed-point free circle action: `m + 1`.
pub fn equivariant_euler_of_sphere(manifold_dim: u32) -> Result<u32> {
    if manifold_dim.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "manifold dimension {manifold_dim} is even"
        )));
    }
    Ok((manifold_dim - 1) / 2 + 1)
}

/// `{j : a_j divides t}`, the support of points periodic at time `t`.
pub fn support_at_time(exponents: &[u64], t: u64) -> Vec<usize> {
    exponents
        .iter()
        .enumerate()
        .filter(|(_, &a)| t.is_multiple_of(a))
        .map(|(j, _)| j)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn periods(strata: &[OrbitSpace]) -> Vec<u64> {
        strata.iter().map(|s| s.period.to_u64().unwrap()).collect()
    }

    fn mults(strata: &[OrbitSpace]) -> Vec<u64> {
        strata
            .iter()
            .map(|s| s.multiplicity.to_u64().unwrap())
            .collect()
    }

    #[test]
    fn strata_of_235() {
        let s = enumerate_orbit_spaces(&[2, 3, 5]).unwrap();
        assert_eq!(periods(&s), vec![6, 10, 15, 30]);
        assert_eq!(mults(&s), vec![4, 2, 1, 1]);
        assert_eq!(s[3].support, vec![0, 1, 2]);
        assert_eq!(s[3].manifold_dim, 3);
        assert_eq!(s[3].equivariant_euler, 2);
        assert!(s.iter().all(|o| o.degree_parity == Parity::Odd));
    }

    #[test]
    fn strata_of_2357() {
        let s = enumerate_orbit_spaces(&[2, 3, 5, 7]).unwrap();
        assert_eq!(s.len(), 11);
        let first = &s[0];
        assert_eq!(first.support, vec![0, 1]);
        assert_eq!(first.period, BigInt::from(6));
        assert_eq!(first.manifold_dim, 1);
        assert_eq!(first.equivariant_euler, 1);
        assert_eq!(first.multiplicity, BigInt::from(24));
        let last = s.last().unwrap();
        assert_eq!(last.period, BigInt::from(210));
        assert_eq!(last.multiplicity, BigInt::from(1));
        assert!(s.iter().all(|o| o.degree_parity == Parity::Even));
    }

    #[test]
    fn strata_with_unit_exponents() {
        let s = enumerate_orbit_spaces(&[1, 1, 1]).unwrap();
        assert_eq!(periods(&s), vec![1, 1, 1, 1]);
        // Supports in order {0,1}, {0,1,2}, {0,2}, {1,2}.
        assert_eq!(mults(&s), vec![0, 1, 0, 0]);
    }

    #[test]
    fn enumerate_rejects() {
        assert_eq!(
            enumerate_orbit_spaces(&[2, 3, 4]),
            Err(Error::PeriodLatticeNotCoprime)
        );
        assert!(matches!(
            enumerate_orbit_spaces(&[2, 3]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn phi_count_examples() {
        let larger = [10, 14, 15, 21, 30, 35, 42, 70, 105, 210];
        assert_eq!(phi_count(6, &larger, 210).unwrap(), 24);
        assert_eq!(phi_count(210, &[], 210).unwrap(), 0);
        assert_eq!(phi_count(1, &[], 5).unwrap(), 4);
    }

    #[test]
    fn phi_count_brute_force_agrees() {
        // Direct transcription of the set definition.
        let larger = [10u64, 14, 15, 21, 30, 35, 42, 70, 105, 210];
        for t_i in [2u64, 3, 5, 6, 7, 30] {
            let above: Vec<u64> = larger.iter().copied().filter(|&t| t > t_i).collect();
            let direct = (1..)
                .take_while(|a| a * t_i < 210)
                .filter(|a| above.iter().all(|t| (a * t_i) % t != 0))
                .count() as u64;
            assert_eq!(phi_count(t_i, &above, 210).unwrap(), direct, "t_i = {t_i}");
        }
    }

    #[test]
    fn phi_count_preconditions() {
        assert!(phi_count(4, &[], 10).is_err());
        assert!(phi_count(6, &[6], 30).is_err());
        assert!(phi_count(6, &[20], 30).is_err());
        assert!(phi_count(0, &[], 30).is_err());
    }

    #[test]
    fn phi_product_examples() {
        assert_eq!(
            phi_product_formula(&[2, 3, 5, 7], &[0, 1]).unwrap(),
            BigInt::from(24)
        );
        assert_eq!(
            phi_product_formula(&[2, 3, 5, 7], &[0, 1, 2, 3]).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            phi_product_formula(&[1, 3, 5], &[1, 2]).unwrap(),
            BigInt::from(0)
        );
        assert!(phi_product_formula(&[2, 3, 5], &[0, 3]).is_err());
        assert!(phi_product_formula(&[2, 3, 5], &[0, 0]).is_err());
    }

    #[test]
    fn phi_definition_with_unit_exponent() {
        // {1,2} in (1,3,5,7) shares period 15 with {0,1,2}.
        assert_eq!(phi_from_definition(&[1, 3, 5, 7], &[1, 2]).unwrap(), 0);
        assert_eq!(phi_from_definition(&[1, 3, 5, 7], &[0, 1, 2]).unwrap(), 6);
        assert_eq!(phi_from_definition(&[1, 2, 3, 5], &[0, 1]).unwrap(), 8);
        assert_eq!(phi_from_definition(&[1, 1, 1], &[0, 1, 2]).unwrap(), 1);
        assert_eq!(phi_from_definition(&[1, 1, 1], &[0, 2]).unwrap(), 0);
    }

    #[test]
    fn sphere_euler() {
        assert_eq!(equivariant_euler_of_sphere(3).unwrap(), 2);
        assert_eq!(equivariant_euler_of_sphere(1).unwrap(), 1);
        // Σ(a_0..a_n) has dimension 2n - 1; with n = 4 the answer is n.
        assert_eq!(equivariant_euler_of_sphere(7).unwrap(), 4);
        assert!(equivariant_euler_of_sphere(4).is_err());
    }

    #[test]
    fn supports_at_time() {
        assert_eq!(support_at_time(&[2, 3, 5, 7], 6), vec![0, 1]);
        assert!(support_at_time(&[2, 3, 5, 7], 1).is_empty());
        assert_eq!(support_at_time(&[2, 3, 5], 30), vec![0, 1, 2]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn coprime_tuple() -> impl Strategy<Value = Vec<u64>> {
            prop::collection::vec(1u64..14, 3..6)
                .prop_filter("pairwise coprime, small period", |v| {
                    arith::pairwise_coprime(v).unwrap() && v.iter().product::<u64>() <= 100_000
                })
        }

        proptest! {
            #[test]
            fn definition_matches_product(exps in coprime_tuple()) {
                for s in enumerate_orbit_spaces(&exps).unwrap() {
                    let def = phi_from_definition(&exps, &s.support).unwrap();
                    prop_assert_eq!(BigInt::from(def), s.multiplicity.clone(), "support {:?}", s.support);
                }
            }

            #[test]
            fn generator_count_matches_time_enumeration(exps in coprime_tuple()) {
                let strata = enumerate_orbit_spaces(&exps).unwrap();
                let by_strata: BigInt = strata
                    .iter()
                    .map(|s| &s.multiplicity * BigInt::from(s.equivariant_euler))
                    .sum();
                let principal: u64 = exps.iter().product();
                let by_time: u64 = (1..=principal)
                    .map(|t| support_at_time(&exps, t).len().saturating_sub(1) as u64)
                    .sum();
                prop_assert_eq!(by_strata, BigInt::from(by_time));
            }

            #[test]
            fn periods_divide_principal(exps in coprime_tuple()) {
                let principal = arith::lcm_all(&exps).unwrap();
                for s in enumerate_orbit_spaces(&exps).unwrap() {
                    prop_assert!(principal.is_multiple_of(&s.period));
                    prop_assert_eq!(
                        equivariant_euler_of_sphere(s.manifold_dim).unwrap(),
                        s.equivariant_euler
                    );
                }
            }

            #[test]
            fn permutation_invariant(exps in coprime_tuple(), rot in 0usize..5) {
                let mut permuted = exps.clone();
                permuted.rotate_left(rot % exps.len());
                permuted.swap(0, exps.len() - 1);
                let key = |v: &[u64]| {
                    let mut k: Vec<_> = enumerate_orbit_spaces(v)
                        .unwrap()
                        .into_iter()
                        .map(|s| {
                            let mut vals: Vec<u64> = s.support.iter().map(|&j| v[j]).collect();
                            vals.sort_unstable();
                            (s.period, vals, s.manifold_dim, s.multiplicity)
                        })
                        .collect();
                    k.sort();
                    k
                };
                prop_assert_eq!(key(&exps), key(&permuted));
            }
        }
    }
}
