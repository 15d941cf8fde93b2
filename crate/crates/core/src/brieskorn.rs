//! Brieskorn manifolds `Σ(a_0, …, a_n)` with their natural contact form.
//!
//! The mean Euler characteristic is computed three ways that share no
//! intermediate quantity beyond the exponents:
//!
//! * [`mec_closed_form`]: the symmetric-polynomial closed form,
//! * [`mec_bruteforce`]: enumeration of the Reeb flow over one principal
//!   period, counting equivariant generators time by time,
//! * [`mec_via_engine`]: the orbibundle formula fed with the enumerated
//!   orbit spaces and their product-formula multiplicities.
//!
//! All three require pairwise coprime exponents.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{self, json, minus_one_pow, Rational};
use crate::engine::{self, DegreeSign, MecInput, PageStratum, StratumRecord};
use crate::error::{Error, Result};
use crate::orbit::{self, OrbitSpace};

/// Default ceiling on the principal period the brute-force oracle walks.
pub const DEFAULT_ORACLE_CAP: u64 = 10_000_000;

/// Validated exponent tuple with its topological profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrieskornExponents {
    pub exponents: Vec<u64>,
    pub n: usize,
    /// `2n - 1`
    pub dimension: usize,
    pub pairwise_coprime: bool,
    pub has_unit_exponent: bool,
    pub integral_homology_sphere: bool,
    pub homeomorphic_to_sphere: bool,
}

impl BrieskornExponents {
    /// A unit exponent makes the manifold contactomorphic to the standard
    /// sphere.
    pub fn standard_sphere(&self) -> bool {
        self.has_unit_exponent
    }
}

pub fn validate(exponents: &[u64]) -> Result<BrieskornExponents> {
    if exponents.len() < 3 {
        return Err(Error::DimensionTooLow);
    }
    let pairwise_coprime = arith::pairwise_coprime(exponents)?;
    let n = exponents.len() - 1;
    Ok(BrieskornExponents {
        exponents: exponents.to_vec(),
        n,
        dimension: 2 * n - 1,
        pairwise_coprime,
        has_unit_exponent: exponents.contains(&1),
        integral_homology_sphere: pairwise_coprime,
        homeomorphic_to_sphere: pairwise_coprime && n > 2,
    })
}

/// `2 · lcm(a) · (Σ 1/a_j - 1)`, exact for any exponents.
pub fn principal_maslov(exponents: &[u64]) -> Result<Rational> {
    validate(exponents)?;
    let lcm = Rational::from_integer(arith::lcm_all(exponents)?);
    let excess = arith::unit_fraction_sum(exponents)? - Rational::one();
    Ok(Rational::from_integer(2.into()) * lcm * excess)
}

/// `2 (e_n(a) - e_{n+1}(a))`, the integer form valid for pairwise coprime
/// exponents.
pub fn principal_maslov_symmetric(exponents: &[u64]) -> Result<BigInt> {
    let profile = validate(exponents)?;
    if !profile.pairwise_coprime {
        return Err(Error::ClosedFormNotCoprime);
    }
    let e = symmetric_of(exponents, 0);
    Ok(2 * (&e[profile.n] - &e[profile.n + 1]))
}

/// Both forms of `μ_P`; the integer form only for coprime exponents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrincipalMaslov {
    #[serde(with = "json::rational")]
    pub lcm_form: Rational,
    #[serde(with = "json::opt_int")]
    pub symmetric_form: Option<BigInt>,
}

pub fn principal_maslov_forms(exponents: &[u64]) -> Result<PrincipalMaslov> {
    Ok(PrincipalMaslov {
        lcm_form: principal_maslov(exponents)?,
        symmetric_form: principal_maslov_symmetric(exponents).ok(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexSign {
    Positive,
    Negative,
}

/// Index-positive iff `Σ 1/a_j > 1`, index-negative iff `< 1`.
pub fn index_sign(exponents: &[u64]) -> Result<IndexSign> {
    validate(exponents)?;
    let sum = arith::unit_fraction_sum(exponents)?;
    match sum.cmp(&Rational::one()) {
        std::cmp::Ordering::Greater => Ok(IndexSign::Positive),
        std::cmp::Ordering::Less => Ok(IndexSign::Negative),
        std::cmp::Ordering::Equal => Err(Error::IndexSignUndefined),
    }
}

fn symmetric_of(exponents: &[u64], offset: i64) -> Vec<BigInt> {
    let shifted: Vec<BigInt> = exponents
        .iter()
        .map(|&a| BigInt::from(a as i64 - offset))
        .collect();
    arith::elementary_symmetric_all(&shifted)
}

/// `Σ_{j=0}^{n-1} (n - j) · e_j(a_0 - 1, …, a_n - 1)`.
pub fn closed_form_numerator(exponents: &[u64]) -> Result<BigInt> {
    let n = validate(exponents)?.n;
    let e = symmetric_of(exponents, 1);
    Ok((0..n).map(|j| BigInt::from(n - j) * &e[j]).sum())
}

pub fn mec_closed_form(exponents: &[u64]) -> Result<Rational> {
    let profile = validate(exponents)?;
    if !profile.pairwise_coprime {
        return Err(Error::ClosedFormNotCoprime);
    }
    let n = profile.n;
    let e = symmetric_of(exponents, 0);
    let denom: BigInt = (&e[n] - &e[n + 1]).abs() * 2;
    if denom.is_zero() {
        return Err(Error::MecUndefined);
    }
    let numer = closed_form_numerator(exponents)? * minus_one_pow(n + 1);
    Ok(Rational::new(numer, denom))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest principal period the oracle agrees to enumerate.
    pub cap: u64,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap: DEFAULT_ORACLE_CAP,
            jobs: 1,
        }
    }
}

const ORACLE_CHUNK: u64 = 1 << 18;

/// `Σ_{t ∈ [lo, hi]} max(0, |{j : a_j | t}| - 1)`, by marking multiples.
fn generator_count_between(exponents: &[u64], lo: u64, hi: u64) -> u64 {
    let mut hits = vec![0u8; (hi - lo + 1) as usize];
    for &a in exponents {
        let mut t = lo.div_ceil(a) * a;
        while t <= hi {
            hits[(t - lo) as usize] += 1;
            t += a;
        }
    }
    hits.iter().map(|&h| h.saturating_sub(1) as u64).sum()
}

fn oracle_period(exponents: &[u64], cap: u64) -> Result<u64> {
    let profile = validate(exponents)?;
    if !profile.pairwise_coprime {
        return Err(Error::PeriodLatticeNotCoprime);
    }
    let principal = arith::product(exponents);
    match principal.to_u64() {
        Some(p) if p <= cap => Ok(p),
        _ => Err(Error::OracleTooLarge {
            period: principal.to_string(),
            cap,
        }),
    }
}

/// Walks the Reeb flow over one principal period and counts equivariant
/// generators at each return time.
pub fn oracle_generator_count(exponents: &[u64], config: &OracleConfig) -> Result<u64> {
    let period = oracle_period(exponents, config.cap)?;
    let chunks: Vec<(u64, u64)> = (0..period.div_ceil(ORACLE_CHUNK))
        .map(|c| (c * ORACLE_CHUNK + 1, ((c + 1) * ORACLE_CHUNK).min(period)))
        .collect();
    let total = if config.jobs <= 1 {
        chunks
            .iter()
            .map(|&(lo, hi)| generator_count_between(exponents, lo, hi))
            .sum()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::domain(format!("thread pool: {e}")))?;
        pool.install(|| {
            chunks
                .par_iter()
                .map(|&(lo, hi)| generator_count_between(exponents, lo, hi))
                .sum()
        })
    };
    Ok(total)
}

pub fn mec_bruteforce(exponents: &[u64]) -> Result<Rational> {
    mec_bruteforce_with(exponents, &OracleConfig::default())
}

pub fn mec_bruteforce_with(exponents: &[u64], config: &OracleConfig) -> Result<Rational> {
    let count = oracle_generator_count(exponents, config)?;
    // |μ_P| from the lcm form, independent of the symmetric polynomials.
    let mu_p = principal_maslov(exponents)?;
    if mu_p.is_zero() {
        return Err(Error::MecUndefined);
    }
    let n = exponents.len() - 1;
    Ok(Rational::from_integer(BigInt::from(count) * minus_one_pow(n + 1)) / mu_p.abs())
}

/// Orbibundle input assembled from the enumerated orbit spaces.
///
/// Every degree sign is `(-1)^{n+1}`; strata with zero multiplicity (those
/// absorbed by a larger stratum of the same period) are dropped.
pub fn engine_input(exponents: &[u64]) -> Result<MecInput> {
    let profile = validate(exponents)?;
    let strata = orbit::enumerate_orbit_spaces(exponents)?;
    let sign = DegreeSign::from_parity_of(profile.n as i64 + 1);
    Ok(MecInput {
        strata: strata
            .into_iter()
            .filter(|s| s.multiplicity.is_positive())
            .map(|s| StratumRecord {
                period: s.period,
                degree_sign: sign,
                equivariant_euler: s.equivariant_euler as i64,
                multiplicity: s.multiplicity,
            })
            .collect(),
        principal_maslov: principal_maslov_symmetric(exponents)?,
    })
}

pub fn mec_via_engine(exponents: &[u64]) -> Result<Rational> {
    engine::mec_orbibundle(&engine_input(exponents)?)
}

/// Invariants of a coprime Brieskorn manifold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrieskornInvariants {
    #[serde(with = "json::int")]
    pub mu_p: BigInt,
    #[serde(with = "json::rational")]
    pub unit_fraction_sum: Rational,
    pub index_sign: IndexSign,
    #[serde(with = "json::rational")]
    pub mec: Rational,
    pub orbit_spaces: Vec<OrbitSpace>,
}

pub fn invariants(exponents: &[u64]) -> Result<BrieskornInvariants> {
    Ok(BrieskornInvariants {
        mu_p: principal_maslov_symmetric(exponents)?,
        unit_fraction_sum: arith::unit_fraction_sum(exponents)?,
        index_sign: index_sign(exponents)?,
        mec: mec_closed_form(exponents)?,
        orbit_spaces: orbit::enumerate_orbit_spaces(exponents)?,
    })
}

/// Page strata with a representative integer degree for every return time
/// in one principal period.
///
/// Only the parity of the Brieskorn degrees enters the mean Euler
/// characteristic. This placement keeps that parity, orders the copies by
/// return time and fits the whole period's generators inside one window of
/// `|μ_P|` degrees (`[0, |μ_P|)` when index-positive, `(-|μ_P|, 0]` when
/// index-negative) whenever `|μ_P|` leaves room for the widest fiber.
/// Actual Maslov degrees of exceptional orbits must be supplied externally.
pub fn representative_page(exponents: &[u64], cap: u64) -> Result<(Vec<PageStratum>, i64)> {
    let period = oracle_period(exponents, cap)?;
    let n = exponents.len() - 1;
    let mu_p = principal_maslov_symmetric(exponents)?
        .to_i64()
        .ok_or_else(|| Error::domain("principal Maslov index exceeds 64 bits"))?;
    if mu_p == 0 {
        return Err(Error::MecUndefined);
    }
    let parity = ((n + 1) % 2) as i64;
    let widest_fiber = 2 * n as i64 - 2;
    let slots = ((mu_p.abs() - parity - widest_fiber - 1) / 2).max(0) as u128;
    let mut grouped: BTreeMap<(i64, u32), u64> = BTreeMap::new();
    for t in 1..=period {
        let support = orbit::support_at_time(exponents, t);
        if support.len() < 2 {
            continue;
        }
        let dim = 2 * support.len() as u32 - 3;
        let base = parity + 2 * (slots * t as u128 / period as u128) as i64;
        let q = if mu_p > 0 { base } else { -base - widest_fiber };
        *grouped.entry((q, dim)).or_insert(0) += 1;
    }
    let strata = grouped
        .into_iter()
        .map(|((q, dim), mult)| PageStratum::new(q, dim, mult))
        .collect();
    Ok((strata, mu_p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{from_int, ratio};

    #[test]
    fn profile_flags() {
        let p = validate(&[2, 3, 5, 7]).unwrap();
        assert!(p.pairwise_coprime && p.integral_homology_sphere && p.homeomorphic_to_sphere);
        assert!(!p.has_unit_exponent);
        assert_eq!(p.dimension, 5);
        let p = validate(&[1, 2, 3, 4]).unwrap();
        assert!(p.has_unit_exponent && p.standard_sphere());
        assert!(!p.pairwise_coprime);
        let p = validate(&[2, 3, 5]).unwrap();
        assert!(p.pairwise_coprime && !p.homeomorphic_to_sphere);
        assert_eq!(validate(&[2, 3]), Err(Error::DimensionTooLow));
    }

    #[test]
    fn maslov_examples() {
        assert_eq!(principal_maslov(&[2, 3, 5, 7]).unwrap(), from_int(74));
        assert_eq!(
            principal_maslov_symmetric(&[2, 3, 5, 7]).unwrap(),
            BigInt::from(74)
        );
        assert_eq!(principal_maslov(&[1, 1, 1]).unwrap(), from_int(4));
        let neg = principal_maslov(&[2, 3, 7, 43]).unwrap();
        assert_eq!(neg, from_int(-2));
        // Non-coprime: lcm form only.
        let forms = principal_maslov_forms(&[2, 3, 4]).unwrap();
        assert_eq!(
            forms.lcm_form,
            from_int(2 * 12) * (ratio(13, 12) - from_int(1))
        );
        assert_eq!(forms.symmetric_form, None);
        assert_eq!(principal_maslov(&[2, 3, 6]).unwrap(), from_int(0));
    }

    #[test]
    fn index_signs() {
        assert_eq!(index_sign(&[2, 3, 5, 7]).unwrap(), IndexSign::Positive);
        assert_eq!(index_sign(&[2, 3, 7, 43]).unwrap(), IndexSign::Negative);
        assert_eq!(index_sign(&[2, 3, 6]), Err(Error::IndexSignUndefined));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(mec_closed_form(&[2, 3, 5, 7]).unwrap(), ratio(85, 74));
        assert_eq!(mec_closed_form(&[1, 1, 1]).unwrap(), ratio(-1, 2));
        assert_eq!(mec_closed_form(&[1, 2, 3, 5]).unwrap(), ratio(1, 2));
        assert_eq!(mec_closed_form(&[2, 3, 5]).unwrap(), ratio(-9, 2));
        assert_eq!(
            mec_closed_form(&[2, 3, 4]),
            Err(Error::ClosedFormNotCoprime)
        );
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(mec_bruteforce(&[2, 3, 5]).unwrap(), ratio(-9, 2));
        assert_eq!(mec_bruteforce(&[2, 3, 5, 7]).unwrap(), ratio(85, 74));
        assert_eq!(mec_bruteforce(&[1, 1, 1]).unwrap(), ratio(-1, 2));
        let tight = OracleConfig { cap: 209, jobs: 1 };
        assert!(matches!(
            mec_bruteforce_with(&[2, 3, 5, 7], &tight),
            Err(Error::OracleTooLarge { .. })
        ));
        assert_eq!(
            mec_bruteforce(&[2, 4, 5]),
            Err(Error::PeriodLatticeNotCoprime)
        );
    }

    #[test]
    fn bruteforce_hand_count_235() {
        // t = 6, 12, 18, 24, 10, 20, 15 contribute 1 each and t = 30 two.
        let cfg = OracleConfig::default();
        assert_eq!(oracle_generator_count(&[2, 3, 5], &cfg).unwrap(), 9);
        assert_eq!(oracle_generator_count(&[2, 3, 5, 7], &cfg).unwrap(), 85);
    }

    #[test]
    fn oracle_parallel_matches_serial() {
        let exps = [3, 5, 7, 11, 13, 17];
        let serial = oracle_generator_count(&exps, &OracleConfig::default()).unwrap();
        for jobs in [2, 3, 8] {
            let cfg = OracleConfig {
                jobs,
                ..OracleConfig::default()
            };
            assert_eq!(oracle_generator_count(&exps, &cfg).unwrap(), serial);
        }
    }

    #[test]
    fn engine_examples() {
        assert_eq!(mec_via_engine(&[2, 3, 5, 7]).unwrap(), ratio(85, 74));
        assert_eq!(mec_via_engine(&[2, 3, 5]).unwrap(), ratio(-9, 2));
        assert_eq!(mec_via_engine(&[1, 2, 3]).unwrap(), ratio(-1, 2));
        assert_eq!(
            mec_via_engine(&[2, 3, 4]),
            Err(Error::PeriodLatticeNotCoprime)
        );
    }

    #[test]
    fn invariants_2357() {
        let inv = invariants(&[2, 3, 5, 7]).unwrap();
        assert_eq!(inv.mu_p, BigInt::from(74));
        assert_eq!(inv.unit_fraction_sum, ratio(247, 210));
        assert_eq!(inv.index_sign, IndexSign::Positive);
        assert_eq!(inv.mec, ratio(85, 74));
        assert_eq!(inv.orbit_spaces.len(), 11);
    }

    #[test]
    fn representative_page_fits_one_window() {
        let (strata, mu) = representative_page(&[2, 3, 5, 7], DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(mu, 74);
        for s in &strata {
            let q = s.degree.unwrap();
            assert_eq!(q.rem_euclid(2), 0);
            assert!(q >= 0 && q + s.manifold_dim as i64 - 1 < 74);
        }
        let total: u64 = strata
            .iter()
            .map(|s| s.multiplicity * (s.manifold_dim as u64 + 1) / 2)
            .sum();
        assert_eq!(total, 85);

        let (strata, mu) = representative_page(&[2, 3, 7, 43], DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(mu, -2);
        assert!(strata.iter().all(|s| s.degree.unwrap() <= 0));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn coprime_tuple() -> impl Strategy<Value = Vec<u64>> {
            prop::collection::vec(1u64..16, 3..6).prop_filter("coprime", |v| {
                arith::pairwise_coprime(v).unwrap() && v.iter().product::<u64>() <= 200_000
            })
        }

        proptest! {
            #[test]
            fn three_routes_agree(exps in coprime_tuple()) {
                let closed = mec_closed_form(&exps).unwrap();
                prop_assert_eq!(&mec_bruteforce(&exps).unwrap(), &closed);
                prop_assert_eq!(&mec_via_engine(&exps).unwrap(), &closed);
            }

            #[test]
            fn permutation_invariance(exps in coprime_tuple(), seed in 0usize..120) {
                let mut p = exps.clone();
                let len = p.len();
                p.rotate_left(seed % len);
                p.swap(seed % len, (seed / len) % len);
                prop_assert_eq!(mec_closed_form(&p).unwrap(), mec_closed_form(&exps).unwrap());
                prop_assert_eq!(mec_via_engine(&p).unwrap(), mec_via_engine(&exps).unwrap());
                prop_assert_eq!(principal_maslov(&p).unwrap(), principal_maslov(&exps).unwrap());
                prop_assert_eq!(index_sign(&p).unwrap(), index_sign(&exps).unwrap());
            }

            #[test]
            fn sign_law_and_unit_law(exps in coprime_tuple()) {
                let n = exps.len() - 1;
                let mec = mec_closed_form(&exps).unwrap();
                let expected_sign = minus_one_pow(n + 1) as i8;
                if index_sign(&exps).unwrap() == IndexSign::Positive {
                    prop_assert_eq!(arith::sign_of(&mec), expected_sign);
                    prop_assert!(principal_maslov(&exps).unwrap().is_positive());
                } else {
                    prop_assert!(principal_maslov(&exps).unwrap().is_negative());
                }
                if exps.contains(&1) {
                    prop_assert_eq!(mec, ratio(minus_one_pow(n + 1), 2));
                }
            }

            #[test]
            fn maslov_forms_agree(exps in coprime_tuple()) {
                let forms = principal_maslov_forms(&exps).unwrap();
                prop_assert_eq!(Some(forms.lcm_form.to_integer()), forms.symmetric_form);
                prop_assert!(forms.lcm_form.is_integer());
            }
        }
    }
}
