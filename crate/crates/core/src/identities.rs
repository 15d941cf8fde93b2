//! Combinatorial identities behind the characterization of the unit-exponent
//! case, evaluated pointwise over exact integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{self, binomial, json, minus_one_pow, Rational};
use crate::brieskorn;
use crate::error::{Error, Result};

/// `f(n) = Σ_{j=0}^{n} (-1)^j (n - j) C(n+1, j)`.
pub fn f_value(n: u64) -> BigInt {
    (0..=n)
        .map(|j| BigInt::from(minus_one_pow(j as usize) * (n - j) as i64) * binomial(n + 1, j))
        .sum()
}

/// `f(n)` through the derivative of `(x - 1)^{n+1}` at `x = 1`: the sum
/// `Σ_{j=0}^{n} (-1)^j (n+1-j) C(n+1, j)` (which vanishes) minus
/// `Σ_{j=0}^{n} (-1)^j C(n+1, j)`.
pub fn f_value_via_derivative(n: u64) -> BigInt {
    let derivative: BigInt = (0..=n)
        .map(|j| BigInt::from(minus_one_pow(j as usize) * (n + 1 - j) as i64) * binomial(n + 1, j))
        .sum();
    let alternating: BigInt = (0..=n)
        .map(|j| BigInt::from(minus_one_pow(j as usize)) * binomial(n + 1, j))
        .sum();
    derivative - alternating
}

fn check_reduction_preconditions(exponents: &[u64]) -> Result<()> {
    brieskorn::validate(exponents)?;
    if !arith::pairwise_coprime(exponents)? {
        return Err(Error::domain(
            "reduction check needs pairwise coprime exponents",
        ));
    }
    if arith::unit_fraction_sum(exponents)? <= Rational::one() {
        return Err(Error::domain("reduction check needs Σ 1/a_j > 1"));
    }
    Ok(())
}

/// Evaluates both sides of the equivalence
/// `[Σ_{j<n} (n-j) e_j(a-1) = e_n(a) - e_{n+1}(a)] ⟺ [Π (a_j - 1) = 0]`.
///
/// Returns true when the two predicates agree. A false return is a
/// counterexample.
pub fn reduction_check(exponents: &[u64]) -> Result<bool> {
    check_reduction_preconditions(exponents)?;
    let n = exponents.len() - 1;
    let a: Vec<BigInt> = exponents.iter().map(|&v| BigInt::from(v)).collect();
    let e = arith::elementary_symmetric_all(&a);
    let lhs = brieskorn::closed_form_numerator(exponents)?;
    let mec_is_half = lhs == &e[n] - &e[n + 1];
    let product_vanishes = exponents.contains(&1);
    Ok(mec_is_half == product_vanishes)
}

/// `Σ 1/a_j` with the divisibility witness `a_0 | a_1 ⋯ a_n` when it is 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitFractionCheck {
    #[serde(with = "json::rational")]
    pub sum: Rational,
    pub equals_one: bool,
    pub divisibility_witness: Option<DivisibilityWitness>,
}

/// `divisor` divides `product`, so `divisor` shares a factor with some
/// other exponent unless it is 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityWitness {
    pub divisor: u64,
    #[serde(with = "json::int")]
    pub product: BigInt,
}

pub fn unit_fraction_sum_check(exponents: &[u64]) -> Result<UnitFractionCheck> {
    let sum = arith::unit_fraction_sum(exponents)?;
    let equals_one = sum == Rational::one();
    let divisibility_witness = if equals_one && exponents.len() > 1 {
        let product = arith::product(&exponents[1..]);
        debug_assert!((&product % BigInt::from(exponents[0])).is_zero());
        Some(DivisibilityWitness {
            divisor: exponents[0],
            product,
        })
    } else {
        None
    };
    Ok(UnitFractionCheck {
        sum,
        equals_one,
        divisibility_witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub tested_range: String,
    pub cases: u64,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl IdentityReport {
    fn from_failures(
        identity: &str,
        tested_range: String,
        cases: u64,
        first: Option<String>,
    ) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            tested_range,
            cases,
            passed: first.is_none(),
            counterexample: first,
        }
    }
}

/// Checks `f(n) = (-1)^{n+1}` by both evaluation routes for `1 ≤ n ≤ f_max`.
pub fn sweep_f_identity(f_max: u64) -> IdentityReport {
    let first = (1..=f_max).find_map(|n| {
        let expected = BigInt::from(minus_one_pow(n as usize + 1));
        let direct = f_value(n);
        let derived = f_value_via_derivative(n);
        (direct != expected || derived != expected)
            .then(|| format!("n = {n}: direct {direct}, derivative {derived}, expected {expected}"))
    });
    IdentityReport::from_failures(
        "alternating_binomial_f",
        format!("1 <= n <= {f_max}"),
        f_max,
        first,
    )
}

/// Nondecreasing pairwise coprime tuples of the given length with entries
/// in `min..=max`, in lexicographic order.
pub fn coprime_tuples(len: usize, min: u64, max: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, len: usize, start: u64, max: u64, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for v in start..=max {
            if prefix.iter().all(|&p| num_integer::gcd(p, v) == 1) {
                prefix.push(v);
                extend(prefix, len, v, max, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if len > 0 && min >= 1 && min <= max {
        extend(&mut Vec::with_capacity(len), len, min, max, &mut out);
    }
    out
}

fn first_failure<F>(tuples: &[Vec<u64>], check: F) -> Option<String>
where
    F: Fn(&[u64]) -> Option<String> + Sync,
{
    // Deterministic: the lexicographically first failing tuple wins.
    tuples
        .par_iter()
        .map(|t| check(t))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next()
}

/// Runs [`reduction_check`] over every admissible tuple of length `n + 1`
/// with entries in `1..=tuple_max`.
pub fn sweep_reduction(n: usize, tuple_max: u64) -> IdentityReport {
    let tuples: Vec<Vec<u64>> = coprime_tuples(n + 1, 1, tuple_max)
        .into_iter()
        .filter(|t| {
            arith::unit_fraction_sum(t)
                .map(|s| s > Rational::one())
                .unwrap_or(false)
        })
        .collect();
    let first = first_failure(&tuples, |t| match reduction_check(t) {
        Ok(true) => None,
        Ok(false) => Some(format!("{t:?}")),
        Err(e) => Some(format!("{t:?}: {e}")),
    });
    IdentityReport::from_failures(
        "mec_half_iff_unit_exponent",
        format!("n = {n}, 1 <= a_i <= {tuple_max}, pairwise coprime, Σ1/a > 1"),
        tuples.len() as u64,
        first,
    )
}

/// No pairwise coprime tuple has `Σ 1/a_j = 1`.
pub fn sweep_unit_fractions(n: usize, tuple_max: u64) -> IdentityReport {
    let tuples = coprime_tuples(n + 1, 1, tuple_max);
    let first = first_failure(&tuples, |t| match unit_fraction_sum_check(t) {
        Ok(c) if !c.equals_one => None,
        Ok(_) => Some(format!("{t:?}: Σ 1/a_j = 1")),
        Err(e) => Some(format!("{t:?}: {e}")),
    });
    IdentityReport::from_failures(
        "coprime_unit_fractions_not_one",
        format!("n = {n}, 1 <= a_i <= {tuple_max}, pairwise coprime"),
        tuples.len() as u64,
        first,
    )
}
