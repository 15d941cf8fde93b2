//! Mean Euler characteristic of Morse–Bott contact forms whose Reeb flow is
//! a circle action with finitely many orbit spaces.
//!
//! [`mec_orbibundle`] evaluates the orbibundle formula from per-stratum
//! data: only the parity of each stratum's degree is needed. The
//! [`page`] and [`counts`] submodules work with explicit integer degrees:
//! the second page of the Morse–Bott spectral sequence, the graded
//! generator counts read off from it, and the Cesàro partial sums whose
//! limit defines the mean Euler characteristic.
//!
//! Bad orbits contribute nothing over the rationals and are represented by
//! omission.

pub mod counts;
pub mod page;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{json, Rational};
use crate::error::{Error, Result};

pub use counts::{
    boundedness_check, mec_partial_sum, mec_partial_sums, Boundedness, IndexCountSequence,
};
pub use page::{e2_page_dims, E2Page, PageStratum};

/// `(-1)^{μ(S_T) - dim S_T / 2}`, serialized as `1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum DegreeSign {
    Plus,
    Minus,
}

impl DegreeSign {
    pub fn value(self) -> i64 {
        match self {
            DegreeSign::Plus => 1,
            DegreeSign::Minus => -1,
        }
    }

    pub fn from_parity_of(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            DegreeSign::Plus
        } else {
            DegreeSign::Minus
        }
    }
}

impl TryFrom<i8> for DegreeSign {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(DegreeSign::Plus),
            -1 => Ok(DegreeSign::Minus),
            other => Err(format!("degree sign must be 1 or -1, got {other}")),
        }
    }
}

impl From<DegreeSign> for i8 {
    fn from(s: DegreeSign) -> i8 {
        s.value() as i8
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRecord {
    #[serde(with = "json::int")]
    pub period: BigInt,
    pub degree_sign: DegreeSign,
    pub equivariant_euler: i64,
    #[serde(with = "json::int")]
    pub multiplicity: BigInt,
}

/// Input to the orbibundle formula.
///
/// JSON form:
///
/// ```json
/// {"strata": [{"period": 6, "degree_sign": 1, "equivariant_euler": 1, "multiplicity": 24}],
///  "principal_maslov": 74}
/// ```
///
/// The plain-text form has one record per line, `#` comments and blank
/// lines ignored:
///
/// ```text
/// mu_p 74
/// stratum 6 +1 1 24
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MecInput {
    pub strata: Vec<StratumRecord>,
    #[serde(with = "json::int")]
    pub principal_maslov: BigInt,
}

impl MecInput {
    /// Checks the period lattice: positive periods and multiplicities, and
    /// every period dividing the largest one.
    pub fn validate(&self) -> Result<()> {
        if self.strata.is_empty() {
            return Err(Error::EmptyInput);
        }
        for s in &self.strata {
            if !s.period.is_positive() {
                return Err(Error::domain(format!(
                    "period {} is not positive",
                    s.period
                )));
            }
            if !s.multiplicity.is_positive() {
                return Err(Error::domain(format!(
                    "multiplicity {} is not positive",
                    s.multiplicity
                )));
            }
        }
        let principal = self.principal_period();
        if let Some(bad) = self
            .strata
            .iter()
            .find(|s| !principal.is_multiple_of(&s.period))
        {
            return Err(Error::domain(format!(
                "period {} does not divide the principal period {principal}",
                bad.period
            )));
        }
        Ok(())
    }

    pub fn principal_period(&self) -> BigInt {
        self.strata
            .iter()
            .map(|s| s.period.clone())
            .max()
            .unwrap_or_default()
    }

    /// Deduplicated periods in increasing order.
    pub fn periods(&self) -> Vec<BigInt> {
        let mut p: Vec<BigInt> = self.strata.iter().map(|s| s.period.clone()).collect();
        p.sort();
        p.dedup();
        p
    }

    /// `Σ sign · multiplicity · χ^{S¹}` over all strata.
    pub fn signed_generator_count(&self) -> BigInt {
        self.strata
            .iter()
            .map(|s| BigInt::from(s.degree_sign.value() * s.equivariant_euler) * &s.multiplicity)
            .sum()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let input: MecInput = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        input.validate()?;
        Ok(input)
    }
}

impl FromStr for MecInput {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut strata = Vec::new();
        let mut mu_p = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |what: &str| Error::Parse(format!("line {}: {what}: {raw:?}", lineno + 1));
            let fields: Vec<&str> = line.split_whitespace().collect();
            let big = |s: &str| {
                BigInt::from_str(s.trim_start_matches('+')).map_err(|_| bad("bad integer"))
            };
            match fields.as_slice() {
                ["mu_p", v] => mu_p = Some(big(v)?),
                ["stratum", period, sign, euler, mult] => {
                    let sign: i8 = sign
                        .trim_start_matches('+')
                        .parse()
                        .map_err(|_| bad("bad sign"))?;
                    strata.push(StratumRecord {
                        period: big(period)?,
                        degree_sign: DegreeSign::try_from(sign).map_err(|e| bad(&e))?,
                        equivariant_euler: euler
                            .parse()
                            .map_err(|_| bad("bad Euler characteristic"))?,
                        multiplicity: big(mult)?,
                    });
                }
                _ => {
                    return Err(bad(
                        "expected `mu_p <int>` or `stratum <period> <sign> <euler> <multiplicity>`",
                    ))
                }
            }
        }
        let input = MecInput {
            strata,
            principal_maslov: mu_p.ok_or_else(|| Error::Parse("missing `mu_p` line".into()))?,
        };
        input.validate()?;
        Ok(input)
    }
}

impl fmt::Display for MecInput {
    /// Writes the plain-text form accepted by `FromStr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mu_p {}", self.principal_maslov)?;
        for s in &self.strata {
            let sign = if s.degree_sign == DegreeSign::Plus {
                "+1"
            } else {
                "-1"
            };
            writeln!(
                f,
                "stratum {} {} {} {}",
                s.period, sign, s.equivariant_euler, s.multiplicity
            )?;
        }
        Ok(())
    }
}

/// `χ_m = Σ sign · φ · χ^{S¹} / |μ_P|`, exactly.
pub fn mec_orbibundle(input: &MecInput) -> Result<Rational> {
    input.validate()?;
    if input.principal_maslov.is_zero() {
        return Err(Error::MecUndefined);
    }
    Ok(Rational::new(
        input.signed_generator_count(),
        input.principal_maslov.abs(),
    ))
}

/// A cover is bad when its index differs from the underlying simple
/// orbit's index by an odd number.
pub fn is_bad_orbit(mu_cover: i64, mu_underlying: i64) -> bool {
    (mu_cover - mu_underlying).rem_euclid(2) == 1
}
