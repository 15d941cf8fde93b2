//! Dimensions of the second page of the Morse–Bott spectral sequence.
//!
//! Each good stratum of degree `q = μ(S_T) - dim S_T / 2` whose orbit space
//! is a rational homology sphere of dimension `2m + 1` contributes the
//! equivariant homology of `CP^m`: one generator at every even fiber degree
//! `p = 0, 2, …, 2m`. Iterating past the principal period shifts every
//! column by `μ_P`, so the page is periodic in `q`.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageStratum {
    /// Integer degree `μ(S_T) - dim S_T / 2`; parity alone is not enough to
    /// place the stratum on the page.
    pub degree: Option<i64>,
    /// Odd dimension of the orbit space `N_T`.
    pub manifold_dim: u32,
    pub multiplicity: u64,
    /// Bad orbits are carried along but contribute nothing.
    #[serde(default = "default_good")]
    pub good: bool,
}

fn default_good() -> bool {
    true
}

impl PageStratum {
    pub fn new(degree: i64, manifold_dim: u32, multiplicity: u64) -> Self {
        PageStratum {
            degree: Some(degree),
            manifold_dim,
            multiplicity,
            good: true,
        }
    }

    pub(crate) fn fiber_degrees(&self) -> impl Iterator<Item = u32> {
        (0..self.manifold_dim).step_by(2)
    }
}

/// Sparse table `(q, p) -> dimension`; absent entries are zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct E2Page {
    pub entries: BTreeMap<(i64, u32), u64>,
}

impl E2Page {
    pub fn get(&self, q: i64, p: u32) -> u64 {
        self.entries.get(&(q, p)).copied().unwrap_or(0)
    }

    pub fn column_sum(&self, q: i64) -> u64 {
        self.entries
            .range((q, 0)..=(q, u32::MAX))
            .map(|(_, &d)| d)
            .sum()
    }

    /// `Σ (-1)^q · dim` over all entries.
    pub fn signed_total(&self) -> i64 {
        self.entries
            .iter()
            .map(|(&(q, _), &d)| {
                if q.rem_euclid(2) == 0 {
                    d as i64
                } else {
                    -(d as i64)
                }
            })
            .sum()
    }

    /// The same table with every column moved by `delta`.
    pub fn shifted(&self, delta: i64) -> E2Page {
        E2Page {
            entries: self
                .entries
                .iter()
                .map(|(&(q, p), &d)| ((q + delta, p), d))
                .collect(),
        }
    }

    pub fn restricted(&self, window: RangeInclusive<i64>) -> E2Page {
        E2Page {
            entries: self
                .entries
                .iter()
                .filter(|((q, _), _)| window.contains(q))
                .map(|(&k, &d)| (k, d))
                .collect(),
        }
    }
}

/// Degrees `q + k·shift` for `k ≥ 0` inside `lo..=hi`.
pub(crate) fn iterated_degrees(q: i64, shift: i64, lo: i64, hi: i64) -> impl Iterator<Item = i64> {
    debug_assert!(shift != 0);
    let (k_lo, k_hi) = if shift > 0 {
        (div_ceil(lo - q, shift), (hi - q).div_euclid(shift))
    } else {
        (div_ceil(q - hi, -shift), (q - lo).div_euclid(-shift))
    };
    (k_lo.max(0)..=k_hi).map(move |k| q + k * shift)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Page dimensions for columns `q` inside `degree_window`, with every
/// stratum iterated forward by multiples of `principal_maslov`.
pub fn e2_page_dims(
    strata: &[PageStratum],
    principal_maslov: i64,
    degree_window: RangeInclusive<i64>,
) -> Result<E2Page> {
    if principal_maslov == 0 {
        return Err(Error::MecUndefined);
    }
    let (lo, hi) = (*degree_window.start(), *degree_window.end());
    let mut page = E2Page::default();
    for s in strata {
        let q0 = s.degree.ok_or(Error::DegreeDataRequired)?;
        if s.manifold_dim % 2 == 0 {
            return Err(Error::domain(format!(
                "orbit space dimension {} is even",
                s.manifold_dim
            )));
        }
        if !s.good || s.multiplicity == 0 {
            continue;
        }
        for q in iterated_degrees(q0, principal_maslov, lo, hi) {
            for p in s.fiber_degrees() {
                *page.entries.entry((q, p)).or_insert(0) += s.multiplicity;
            }
        }
    }
    Ok(page)
}
