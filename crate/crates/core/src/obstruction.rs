//! Displaceability obstruction for Brieskorn manifolds.
//!
//! If a simply-connected, index-definite contact manifold admits a
//! displaceable exact contact embedding, it must be index-positive, the mean
//! Euler characteristic of the filling is a half-integer, and for a rational
//! homology sphere it equals `(-1)^{n+1}/2`. [`classify_displaceability`]
//! applies this to `Σ(a_0, …, a_n)` and records every step it takes.
//!
//! Verdicts never assert that an embedding exists; they only report whether
//! the obstruction applies.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::arith::{self, json, minus_one_pow, ratio, Rational};
use crate::brieskorn;
use crate::error::{Error, Result};
use crate::orbit;

/// Ambient hypotheses of the obstruction with no computational content.
pub const AMBIENT_HYPOTHESES: &str =
    "ambient exact symplectic manifold assumed convex with c_1 vanishing on π_2 (not checked)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictLabel {
    ObstructedIndexNegative,
    ObstructedMecMismatch,
    UnobstructedStandardSphere,
    OutOfTheoremScope,
    Indeterminate,
}

impl VerdictLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictLabel::ObstructedIndexNegative => "obstructed_index_negative",
            VerdictLabel::ObstructedMecMismatch => "obstructed_mec_mismatch",
            VerdictLabel::UnobstructedStandardSphere => "unobstructed_standard_sphere",
            VerdictLabel::OutOfTheoremScope => "out_of_theorem_scope",
            VerdictLabel::Indeterminate => "indeterminate",
        }
    }

    pub fn is_obstructed(self) -> bool {
        matches!(
            self,
            VerdictLabel::ObstructedIndexNegative | VerdictLabel::ObstructedMecMismatch
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reason {
    pub rule: String,
    pub citation: String,
    #[serde(with = "json::rational_map")]
    pub values: BTreeMap<String, Rational>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub flags: BTreeMap<String, bool>,
}

impl Reason {
    fn new(rule: &str, citation: &str) -> Self {
        Reason {
            rule: rule.to_string(),
            citation: citation.to_string(),
            values: BTreeMap::new(),
            flags: BTreeMap::new(),
        }
    }

    fn value(mut self, name: &str, v: Rational) -> Self {
        self.values.insert(name.to_string(), v);
        self
    }

    fn int(self, name: &str, v: impl Into<BigInt>) -> Self {
        self.value(name, Rational::from_integer(v.into()))
    }

    fn flag(mut self, name: &str, v: bool) -> Self {
        self.flags.insert(name.to_string(), v);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub label: VerdictLabel,
    pub reasons: Vec<Reason>,
    pub inputs: Vec<u64>,
}

/// Rational homology of a filling relative to its boundary, and the mean
/// Euler characteristic a displaceable embedding would force.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingExpectation {
    pub n: i64,
    pub relative_homology: BTreeMap<u32, u64>,
    pub relative_euler: i64,
    #[serde(with = "json::rational")]
    pub expected_mec: Rational,
}

/// `χ_m(W) = (-1)^{n+1} · χ(W, Σ) / 2`.
pub fn expected_filling_mec(n: i64, relative_euler: i64) -> Rational {
    ratio(
        minus_one_pow((n + 1).rem_euclid(2) as usize) * relative_euler,
        2,
    )
}

/// For a simply-connected rational homology sphere boundary of dimension
/// `2n - 1`, the filling's relative homology is `Q` in degree `2n` only.
pub fn filling_profile_of_homology_sphere(n: i64) -> Result<FillingExpectation> {
    if n < 2 {
        return Err(Error::domain(format!("n = {n} below 2")));
    }
    let relative_homology = BTreeMap::from([(2 * n as u32, 1u64)]);
    let relative_euler = relative_homology
        .iter()
        .map(|(&deg, &b)| minus_one_pow(deg as usize) * b as i64)
        .sum();
    Ok(FillingExpectation {
        n,
        relative_homology,
        relative_euler,
        expected_mec: expected_filling_mec(n, relative_euler),
    })
}

/// Admissible Conley–Zehnder indices of an `N`-fold cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CzInterval {
    #[serde(with = "json::int")]
    pub lo: BigInt,
    #[serde(with = "json::int")]
    pub hi: BigInt,
}

impl CzInterval {
    pub fn contains(&self, degree: &BigInt) -> bool {
        &self.lo <= degree && degree <= &self.hi
    }
}

/// `[N·Δ - (n-1), N·Δ + (n-1)]`, rounded outward to integers.
pub fn cz_bounds(mean_index: &Rational, n: i64, iterations: u64) -> Result<CzInterval> {
    if iterations == 0 {
        return Err(Error::domain("iteration count must be at least 1"));
    }
    let center = mean_index * Rational::from_integer(iterations.into());
    let err = Rational::from_integer((n - 1).into());
    Ok(CzInterval {
        lo: arith::floor(&(&center - &err)),
        hi: arith::ceil(&(&center + &err)),
    })
}

/// True when no iterate of any orbit with the given negative mean indices
/// can reach degree `n + 1`, where the filling forces a generator.
///
/// For `Δ < 0` the upper bound `N·Δ + (n-1)` is largest at `N = 1`.
pub fn index_negative_contradiction(n: i64, mean_indices: &[Rational]) -> Result<bool> {
    if mean_indices.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(d) = mean_indices.iter().find(|d| !d.is_negative()) {
        return Err(Error::domain(format!(
            "mean index {} is not negative",
            arith::fmt_rational(d)
        )));
    }
    let target = BigInt::from(n + 1);
    Ok(mean_indices
        .iter()
        .all(|d| cz_bounds(d, n, 1).map(|r| r.hi < target).unwrap_or(false)))
}

/// Mean indices of the Brieskorn strata: `μ_P · T / T_principal`.
fn stratum_mean_indices(exponents: &[u64], mu_p: &Rational) -> Result<Vec<Rational>> {
    let principal = Rational::from_integer(arith::lcm_all(exponents)?);
    Ok(orbit::lattice_periods(exponents)?
        .into_iter()
        .map(|t| mu_p * Rational::from_integer(t.into()) / &principal)
        .collect())
}

/// Runs the decision procedure on an exponent tuple. Every input gets a
/// verdict.
pub fn classify_displaceability(exponents: &[u64]) -> Verdict {
    let mut reasons = Vec::new();
    let label = decide(exponents, &mut reasons);
    Verdict {
        label,
        reasons,
        inputs: exponents.to_vec(),
    }
}

fn decide(exponents: &[u64], reasons: &mut Vec<Reason>) -> VerdictLabel {
    if exponents.is_empty() || exponents.contains(&0) {
        reasons.push(
            Reason::new("invalid_exponents", "exponents must be positive integers")
                .int("length", exponents.len()),
        );
        return VerdictLabel::OutOfTheoremScope;
    }
    let count = exponents.len();
    if count < 4 {
        let mut r = Reason::new(
            "dimension_gate",
            "the obstruction needs dimension at least 5; in dimension 3 non-trivial \
             Brieskorn spheres are not simply connected and Reeb orbits can become \
             contractible in the filling",
        )
        .int("n", count as i64 - 1)
        .int("dimension", 2 * count as i64 - 3);
        if count == 3 {
            if let Ok(mec) = brieskorn::mec_closed_form(exponents) {
                r = r.value("mec", mec);
            }
        }
        reasons.push(r);
        return VerdictLabel::OutOfTheoremScope;
    }
    let n = count as i64 - 1;
    reasons.push(
        Reason::new("dimension_ok", "dimension 2n - 1 ≥ 5, simply connected")
            .int("n", n)
            .int("dimension", 2 * n - 1),
    );

    let sum = arith::unit_fraction_sum(exponents).expect("positive exponents");
    if !arith::pairwise_coprime(exponents).expect("positive exponents") {
        reasons.push(
            Reason::new(
                "coprimality_gate",
                "exponents not pairwise coprime: integral homology sphere and \
                 closed-form mean Euler characteristic unavailable",
            )
            .value("unit_fraction_sum", sum),
        );
        return VerdictLabel::OutOfTheoremScope;
    }
    reasons.push(Reason::new(
        "pairwise_coprime",
        "pairwise coprime exponents: integral homology sphere, homeomorphic to S^{2n-1}",
    ));

    let mu_p = brieskorn::principal_maslov(exponents).expect("validated exponents");
    let expected = expected_filling_mec(n, 1);
    if exponents.contains(&1) {
        let mut r = Reason::new(
            "unit_exponent",
            "a unit exponent makes the Brieskorn variety a graph biholomorphic to C^n, \
             so the manifold is the standard contact sphere; no obstruction",
        )
        .value("unit_fraction_sum", sum)
        .value("expected_mec", expected);
        if let Ok(mec) = brieskorn::mec_closed_form(exponents) {
            r = r.value("mec", mec);
        }
        reasons.push(r);
        return VerdictLabel::UnobstructedStandardSphere;
    }
    reasons.push(Reason::new(
        "non_trivial",
        "all exponents at least 2: non-trivial Brieskorn sphere",
    ));

    let one = Rational::one();
    if sum < one {
        let means = stratum_mean_indices(exponents, &mu_p).unwrap_or_default();
        let contradiction = index_negative_contradiction(n, &means).unwrap_or(false);
        reasons.push(
            Reason::new(
                "index_negative",
                &format!(
                    "Σ 1/a_j < 1 makes the manifold index-negative, but a displaceable \
                     exact contact embedding forces index-positivity; {AMBIENT_HYPOTHESES}"
                ),
            )
            .value("unit_fraction_sum", sum)
            .value("mu_p", mu_p)
            .flag("degree_n_plus_1_unreachable", contradiction),
        );
        return VerdictLabel::ObstructedIndexNegative;
    }
    if sum > one {
        let mec = match brieskorn::mec_closed_form(exponents) {
            Ok(m) => m,
            Err(_) => return VerdictLabel::Indeterminate,
        };
        let half_integer = arith::is_half_integer(&mec);
        if mec != expected {
            reasons.push(
                Reason::new(
                    "mec_mismatch",
                    &format!(
                        "index-positive rational homology sphere whose mean Euler \
                         characteristic differs from (-1)^{{n+1}}/2, the value forced by \
                         a displaceable exact contact embedding; {AMBIENT_HYPOTHESES}"
                    ),
                )
                .value("unit_fraction_sum", sum)
                .value("mu_p", mu_p)
                .value("mec", mec)
                .value("expected_mec", expected)
                .flag("mec_is_half_integer", half_integer),
            );
            return VerdictLabel::ObstructedMecMismatch;
        }
    }
    // Unreachable for coprime exponents: Σ 1/a_j = 1 forces a common
    // factor, and a matching χ_m forces a unit exponent.
    VerdictLabel::Indeterminate
}
