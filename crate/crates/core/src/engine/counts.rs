//! Graded generator counts and the Cesàro limit defining `χ_m`.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use crate::arith::Rational;
use crate::error::{Error, Result};

use super::page::PageStratum;

/// Number of good-orbit generators in each degree.
///
/// A periodic sequence is a finite block of counts repeated forever with a
/// fixed degree shift (the principal Maslov index), starting from the block
/// itself: `count(i) = Σ_{k ≥ 0} block(i - k·shift)`. A finite sequence is
/// just its block, observed data with no claim about other degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexCountSequence {
    block: BTreeMap<i64, u64>,
    shift: Option<i64>,
}

impl IndexCountSequence {
    pub fn periodic(block: BTreeMap<i64, u64>, shift: i64) -> Result<Self> {
        if shift == 0 {
            return Err(Error::MecUndefined);
        }
        Ok(IndexCountSequence {
            block,
            shift: Some(shift),
        })
    }

    pub fn finite(block: BTreeMap<i64, u64>) -> Self {
        IndexCountSequence { block, shift: None }
    }

    pub fn zero() -> Self {
        IndexCountSequence {
            block: BTreeMap::new(),
            shift: Some(1),
        }
    }

    /// Total-degree counts of the page built from `strata`: a stratum at
    /// degree `q` on a `(2m+1)`-dimensional orbit space puts one generator
    /// in each degree `q, q+2, …, q+2m` per copy.
    pub fn from_page(strata: &[PageStratum], principal_maslov: i64) -> Result<Self> {
        let mut block = BTreeMap::new();
        for s in strata {
            let q = s.degree.ok_or(Error::DegreeDataRequired)?;
            if !s.good {
                continue;
            }
            for p in s.fiber_degrees() {
                *block.entry(q + p as i64).or_insert(0) += s.multiplicity;
            }
        }
        block.retain(|_, c| *c > 0);
        Self::periodic(block, principal_maslov)
    }

    pub fn shift(&self) -> Option<i64> {
        self.shift
    }

    pub fn block(&self) -> &BTreeMap<i64, u64> {
        &self.block
    }

    pub fn count(&self, degree: i64) -> u64 {
        match self.shift {
            None => self.block.get(&degree).copied().unwrap_or(0),
            Some(shift) => self
                .block
                .iter()
                .filter(|(&d, _)| {
                    let diff = degree - d;
                    diff % shift == 0 && diff / shift >= 0
                })
                .map(|(_, &c)| c)
                .sum(),
        }
    }

    /// Generators contributed by one period of the block, unsigned.
    pub fn period_generator_count(&self) -> u64 {
        self.block.values().sum()
    }

    /// `Σ (-1)^d · block(d)`: the signed count per period. Every copy of the
    /// block carries the same sign only when the shift is even.
    pub fn signed_period_sum(&self) -> i64 {
        self.block.iter().map(|(&d, &c)| signed(d, c)).sum()
    }

    /// A window of `|shift|` consecutive degrees past which every block
    /// entry has started repeating.
    fn steady_window(&self) -> Option<RangeInclusive<i64>> {
        let shift = self.shift?;
        let (&lo, _) = self.block.first_key_value()?;
        let (&hi, _) = self.block.last_key_value()?;
        Some(if shift > 0 {
            hi..=hi + shift - 1
        } else {
            lo + shift + 1..=lo
        })
    }
}

/// `(1/N) Σ_{i=-N}^{N} (-1)^i count(i)`, exactly.
pub fn mec_partial_sum(counts: &IndexCountSequence, n: u64) -> Rational {
    assert!(n > 0, "partial sums need N ≥ 1");
    let n = n as i64;
    let total: i64 = (-n..=n).map(|i| signed(i, counts.count(i))).sum();
    Rational::new(total.into(), n.into())
}

fn signed(degree: i64, count: u64) -> i64 {
    if degree.rem_euclid(2) == 0 {
        count as i64
    } else {
        -(count as i64)
    }
}

/// `mec_partial_sum` for every `N` in `1..=n_max`, accumulated in one pass.
pub fn mec_partial_sums(counts: &IndexCountSequence, n_max: u64) -> Vec<Rational> {
    let mut total = signed(0, counts.count(0));
    (1..=n_max as i64)
        .map(|n| {
            total += signed(n, counts.count(n)) + signed(-n, counts.count(-n));
            Rational::new(total.into(), n.into())
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Boundedness {
    /// Whether declared periodicity certifies a bound on every degree.
    pub bounded: bool,
    pub bound: u64,
}

/// Largest count on `window`; for periodic data the bound also covers a
/// full steady-state period and holds in every degree.
pub fn boundedness_check(counts: &IndexCountSequence, window: RangeInclusive<i64>) -> Boundedness {
    let observed = window.map(|i| counts.count(i)).max().unwrap_or(0);
    match counts.steady_window() {
        Some(steady) => Boundedness {
            bounded: true,
            bound: observed.max(steady.map(|i| counts.count(i)).max().unwrap_or(0)),
        },
        None => Boundedness {
            bounded: counts.shift.is_some(),
            bound: observed,
        },
    }
}
