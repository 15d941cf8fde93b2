use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{minus_one_pow, ratio};
use crate::identities::coprime_tuples;

use super::report::{build_report, Report, ReportOptions};

#[derive(Debug, Clone)]
pub struct ScanRequest {
    pub n: usize,
    pub min: u64,
    pub max: u64,
    pub all_orderings: bool,
    /// Maximum number of reports; the scan stops early past it.
    pub budget: u64,
    pub jobs: usize,
    pub report: ReportOptions,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub tuples: u64,
    pub labels: BTreeMap<String, u64>,
    /// Tuples whose χ_m equals `(-1)^{n+1}/2`.
    pub mec_half_hits: u64,
    /// Of those, the ones with a unit exponent.
    pub mec_half_hits_with_unit: u64,
    pub route_disagreements: u64,
    pub truncated: bool,
}

#[derive(Debug, Clone)]
pub struct ScanOutcome {
    pub reports: Vec<Report>,
    pub summary: ScanSummary,
}

/// Distinct permutations in lexicographic order, starting from a sorted
/// tuple.
fn orderings(sorted: &[u64]) -> Vec<Vec<u64>> {
    let mut current = sorted.to_vec();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (0..current.len().saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            return out;
        };
        let j = (i + 1..current.len())
            .rev()
            .find(|&j| current[j] > current[i])
            .expect("a larger element exists to the right");
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone());
    }
}

pub fn scan_tuples(req: &ScanRequest) -> (Vec<Vec<u64>>, bool) {
    let mut tuples = Vec::new();
    let mut truncated = false;
    for base in coprime_tuples(req.n + 1, req.min, req.max) {
        let expanded = if req.all_orderings {
            orderings(&base)
        } else {
            vec![base]
        };
        for t in expanded {
            if tuples.len() as u64 >= req.budget {
                truncated = true;
                return (tuples, truncated);
            }
            tuples.push(t);
        }
    }
    (tuples, truncated)
}

/// Reports for every tuple, in enumeration order regardless of `jobs`.
pub fn run_scan(req: &ScanRequest) -> ScanOutcome {
    let (tuples, truncated) = scan_tuples(req);
    let reports: Vec<Report> = if req.jobs <= 1 {
        tuples
            .iter()
            .map(|t| build_report(t, &req.report))
            .collect()
    } else {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(req.jobs)
            .build()
        {
            Ok(pool) => pool.install(|| {
                tuples
                    .par_iter()
                    .map(|t| build_report(t, &req.report))
                    .collect()
            }),
            Err(_) => tuples
                .iter()
                .map(|t| build_report(t, &req.report))
                .collect(),
        }
    };
    let half = ratio(minus_one_pow(req.n + 1), 2);
    let mut summary = ScanSummary {
        tuples: reports.len() as u64,
        truncated,
        ..ScanSummary::default()
    };
    for r in &reports {
        if let Some(v) = &r.verdict {
            *summary
                .labels
                .entry(v.label.as_str().to_string())
                .or_insert(0) += 1;
        }
        if r.mec.as_ref() == Some(&half) {
            summary.mec_half_hits += 1;
            if r.input.contains(&1) {
                summary.mec_half_hits_with_unit += 1;
            }
        }
        if !r.agreement && r.routes.iter().filter(|x| x.value.is_some()).count() > 1 {
            summary.route_disagreements += 1;
        }
    }
    ScanOutcome { reports, summary }
}
