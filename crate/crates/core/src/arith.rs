//! Exact integer and rational arithmetic.
//!
//! Big integers and rationals come from `num-bigint` / `num-rational`;
//! [`Rational`] is always stored in lowest terms with a positive
//! denominator. This module adds the symmetric-function and number-theory
//! primitives the rest of the crate is written against.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt as Int;

/// Exact fraction of unbounded integers, always in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn int(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn from_int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// `(-1)^k` as a small integer.
pub fn minus_one_pow(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All elementary symmetric polynomials `e_0 ..= e_len` of `values`.
pub fn elementary_symmetric_all(values: &[BigInt]) -> Vec<BigInt> {
    // e[d] after processing a prefix; standard one-pass recurrence.
    let mut e = vec![BigInt::zero(); values.len() + 1];
    e[0] = BigInt::one();
    for (i, v) in values.iter().enumerate() {
        for d in (1..=i + 1).rev() {
            let term = &e[d - 1] * v;
            e[d] += term;
        }
    }
    e
}

/// The elementary symmetric polynomial `e_degree(values)`.
///
/// Degrees past the number of values are rejected rather than read as zero.
pub fn elementary_symmetric(values: &[BigInt], degree: usize) -> Result<BigInt> {
    if degree > values.len() {
        return Err(Error::domain(format!(
            "elementary symmetric degree {degree} exceeds {} values",
            values.len()
        )));
    }
    Ok(elementary_symmetric_all(values).swap_remove(degree))
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact.
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn check_positive(values: &[u64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    if values.contains(&0) {
        return Err(Error::domain("values must be positive integers"));
    }
    Ok(())
}

/// True iff every pair of entries is coprime.
pub fn pairwise_coprime(values: &[u64]) -> Result<bool> {
    check_positive(values)?;
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            if a.gcd(b) != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn lcm_all(values: &[u64]) -> Result<BigInt> {
    check_positive(values)?;
    Ok(values
        .iter()
        .fold(BigInt::one(), |acc, &v| acc.lcm(&BigInt::from(v))))
}

pub fn product(values: &[u64]) -> BigInt {
    values.iter().map(|&v| BigInt::from(v)).product()
}

/// `Σ 1/a_j` as an exact rational.
pub fn unit_fraction_sum(values: &[u64]) -> Result<Rational> {
    check_positive(values)?;
    Ok(values
        .iter()
        .fold(Rational::zero(), |acc, &v| acc + ratio(1, v)))
}

pub fn is_half_integer(q: &Rational) -> bool {
    q.denom() == &BigInt::from(2)
}

/// Floor of an exact rational.
pub fn floor(q: &Rational) -> BigInt {
    q.numer().div_floor(q.denom())
}

pub fn ceil(q: &Rational) -> BigInt {
    -((-q.numer()).div_floor(q.denom()))
}

/// Formats `p/q`, or just `p` for integers.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(from_int(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Parses a comma-separated list of positive integers such as `2,3,5,7`.
pub fn parse_exponents(s: &str) -> Result<Vec<u64>> {
    let values = s
        .split(',')
        .map(|part| {
            let part = part.trim();
            match part.parse::<u64>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(Error::Parse(format!(
                    "expected a positive integer, got {part:?}"
                ))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(values)
}

pub fn sign_of(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Serde adapters: integers become JSON numbers when they fit in 64 bits
/// and decimal strings otherwise; rationals become `{"num": p, "den": q}`.
pub mod json {
    use std::fmt;
    use std::str::FromStr;

    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::de::{self, Visitor};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::Rational;

    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct JsonInt(pub BigInt);

    impl Serialize for JsonInt {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            match self.0.to_i64() {
                Some(v) => s.serialize_i64(v),
                None => s.serialize_str(&self.0.to_string()),
            }
        }
    }

    impl<'de> Deserialize<'de> for JsonInt {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            struct IntVisitor;
            impl Visitor<'_> for IntVisitor {
                type Value = JsonInt;
                fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                    f.write_str("an integer or a decimal integer string")
                }
                fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                    Ok(JsonInt(v.into()))
                }
                fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                    Ok(JsonInt(v.into()))
                }
                fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                    BigInt::from_str(v).map(JsonInt).map_err(E::custom)
                }
            }
            d.deserialize_any(IntVisitor)
        }
    }

    #[derive(Serialize, Deserialize)]
    struct RationalRepr {
        num: JsonInt,
        den: JsonInt,
    }

    impl From<&Rational> for RationalRepr {
        fn from(q: &Rational) -> Self {
            RationalRepr {
                num: JsonInt(q.numer().clone()),
                den: JsonInt(q.denom().clone()),
            }
        }
    }

    fn to_rational<E: de::Error>(r: RationalRepr) -> Result<Rational, E> {
        if r.den.0 == BigInt::from(0) {
            return Err(E::custom("zero denominator"));
        }
        Ok(Rational::new(r.num.0, r.den.0))
    }

    pub mod int {
        use super::*;

        pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
            JsonInt(v.clone()).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
            JsonInt::deserialize(d).map(|v| v.0)
        }
    }

    pub mod opt_int {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
            v.as_ref().map(|v| JsonInt(v.clone())).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
            Ok(Option::<JsonInt>::deserialize(d)?.map(|v| v.0))
        }
    }

    pub mod rational {
        use super::*;

        pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
            RationalRepr::from(q).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
            to_rational(RationalRepr::deserialize(d)?)
        }
    }

    pub mod opt_rational {
        use super::*;

        pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            q.as_ref().map(RationalRepr::from).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            Option::<RationalRepr>::deserialize(d)?
                .map(to_rational)
                .transpose()
        }
    }

    pub mod rational_map {
        use std::collections::BTreeMap;

        use super::*;

        pub fn serialize<S: Serializer>(
            m: &BTreeMap<String, Rational>,
            s: S,
        ) -> Result<S::Ok, S::Error> {
            m.iter()
                .map(|(k, v)| (k, RationalRepr::from(v)))
                .collect::<BTreeMap<_, _>>()
                .serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<BTreeMap<String, Rational>, D::Error> {
            BTreeMap::<String, RationalRepr>::deserialize(d)?
                .into_iter()
                .map(|(k, v)| Ok((k, to_rational(v)?)))
                .collect()
        }
    }
}
