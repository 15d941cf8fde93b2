use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::arith::{self, json, Rational};
use crate::brieskorn::{self, BrieskornExponents, IndexSign, OracleConfig, PrincipalMaslov};
use crate::error::Error;
use crate::obstruction::{self, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Closed,
    Oracle,
    Engine,
    All,
}

impl Method {
    fn routes(self) -> &'static [Route] {
        match self {
            Method::Closed => &[Route::Closed],
            Method::Oracle => &[Route::Oracle],
            Method::Engine => &[Route::Engine],
            Method::All => &[Route::Closed, Route::Oracle, Route::Engine],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Route {
    Closed,
    Oracle,
    Engine,
}

impl Route {
    fn name(self) -> &'static str {
        match self {
            Route::Closed => "closed",
            Route::Oracle => "oracle",
            Route::Engine => "engine",
        }
    }

    fn compute(self, exponents: &[u64], oracle: &OracleConfig) -> Result<Rational, Error> {
        match self {
            Route::Closed => brieskorn::mec_closed_form(exponents),
            Route::Oracle => brieskorn::mec_bruteforce_with(exponents, oracle),
            Route::Engine => brieskorn::mec_via_engine(exponents),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteValue {
    pub route: String,
    #[serde(with = "json::opt_rational")]
    pub value: Option<Rational>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSummary {
    pub mu_p: PrincipalMaslov,
    #[serde(with = "json::rational")]
    pub unit_fraction_sum: Rational,
    pub index_sign: Option<IndexSign>,
}

/// Everything computed for one exponent tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: Vec<u64>,
    pub profile: Option<BrieskornExponents>,
    pub invariants: Option<InvariantSummary>,
    pub routes: Vec<RouteValue>,
    /// The common value when every computed route agrees.
    #[serde(with = "json::opt_rational")]
    pub mec: Option<Rational>,
    /// True iff at least one route produced a value and all produced values
    /// are identical.
    pub agreement: bool,
    pub verdict: Option<Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_micros: Option<u64>,
}

impl Report {
    /// The first route error, when no route produced a value.
    pub fn refusal(&self) -> Option<&str> {
        if self.routes.iter().any(|r| r.value.is_some()) {
            return None;
        }
        self.routes.iter().find_map(|r| r.error.as_deref())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ReportOptions {
    pub method: Method,
    pub oracle: OracleConfig,
    pub verdict: bool,
    pub timing: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            method: Method::All,
            oracle: OracleConfig::default(),
            verdict: true,
            timing: false,
        }
    }
}

pub fn build_report(exponents: &[u64], opts: &ReportOptions) -> Report {
    let start = Instant::now();
    let profile = brieskorn::validate(exponents).ok();
    let invariants = profile.as_ref().and_then(|_| {
        Some(InvariantSummary {
            mu_p: brieskorn::principal_maslov_forms(exponents).ok()?,
            unit_fraction_sum: arith::unit_fraction_sum(exponents).ok()?,
            index_sign: brieskorn::index_sign(exponents).ok(),
        })
    });
    let routes: Vec<RouteValue> = opts
        .method
        .routes()
        .iter()
        .map(|route| match route.compute(exponents, &opts.oracle) {
            Ok(v) => RouteValue {
                route: route.name().into(),
                value: Some(v),
                error: None,
            },
            Err(e) => RouteValue {
                route: route.name().into(),
                value: None,
                error: Some(e.to_string()),
            },
        })
        .collect();
    let values: Vec<&Rational> = routes.iter().filter_map(|r| r.value.as_ref()).collect();
    let agreement = !values.is_empty() && values.windows(2).all(|w| w[0] == w[1]);
    let mec = if agreement {
        Some(values[0].clone())
    } else {
        None
    };
    let verdict = opts
        .verdict
        .then(|| obstruction::classify_displaceability(exponents));
    Report {
        input: exponents.to_vec(),
        profile,
        invariants,
        routes,
        mec,
        agreement,
        verdict,
        elapsed_micros: opts.timing.then(|| start.elapsed().as_micros() as u64),
    }
}
