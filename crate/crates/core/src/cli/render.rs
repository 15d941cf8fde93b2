use std::io::{self, Write};

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::{fmt_rational, Rational};
use crate::engine::MecInput;
use crate::identities::IdentityReport;
use crate::orbit::OrbitSpace;

use super::report::Report;
use super::scan::ScanOutcome;
use super::{Format, Io, MaslovSummary};

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn opt_rational(q: Option<&Rational>) -> String {
    q.map(fmt_rational).unwrap_or_else(|| "-".into())
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new().from_writer(out)
}

fn csv_err(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

const REPORT_COLUMNS: [&str; 9] = [
    "input",
    "n",
    "pairwise_coprime",
    "mu_p",
    "unit_fraction_sum",
    "index_sign",
    "mec",
    "agreement",
    "verdict",
];

fn report_row(r: &Report) -> [String; 9] {
    let inv = r.invariants.as_ref();
    [
        join(&r.input),
        r.profile
            .as_ref()
            .map(|p| p.n.to_string())
            .unwrap_or_default(),
        r.profile
            .as_ref()
            .map(|p| p.pairwise_coprime.to_string())
            .unwrap_or_default(),
        inv.map(|i| fmt_rational(&i.mu_p.lcm_form))
            .unwrap_or_default(),
        inv.map(|i| fmt_rational(&i.unit_fraction_sum))
            .unwrap_or_default(),
        inv.and_then(|i| i.index_sign)
            .map(|s| format!("{s:?}").to_lowercase())
            .unwrap_or_default(),
        r.mec.as_ref().map(fmt_rational).unwrap_or_default(),
        r.agreement.to_string(),
        r.verdict
            .as_ref()
            .map(|v| v.label.as_str().to_string())
            .unwrap_or_default(),
    ]
}

fn report_table(out: &mut dyn Write, r: &Report) -> io::Result<()> {
    writeln!(out, "exponents        {}", join(&r.input))?;
    if let Some(p) = &r.profile {
        writeln!(
            out,
            "dimension        {} (n = {}), pairwise coprime: {}, unit exponent: {}, homeomorphic to sphere: {}",
            p.dimension, p.n, p.pairwise_coprime, p.has_unit_exponent, p.homeomorphic_to_sphere
        )?;
    }
    if let Some(inv) = &r.invariants {
        let sym = inv
            .mu_p
            .symmetric_form
            .as_ref()
            .map(BigInt::to_string)
            .unwrap_or_else(|| "n/a".into());
        writeln!(
            out,
            "mu_P             {} (lcm form), {} (2(e_n - e_(n+1)))",
            fmt_rational(&inv.mu_p.lcm_form),
            sym
        )?;
        writeln!(
            out,
            "sum 1/a_j        {}",
            fmt_rational(&inv.unit_fraction_sum)
        )?;
        if let Some(s) = inv.index_sign {
            writeln!(out, "index sign       {}", format!("{s:?}").to_lowercase())?;
        }
    }
    for route in &r.routes {
        match (&route.value, &route.error) {
            (Some(v), _) => writeln!(
                out,
                "{:<17}{}",
                format!("mec[{}]", route.route),
                fmt_rational(v)
            )?,
            (None, Some(e)) => {
                writeln!(out, "{:<17}refused: {e}", format!("mec[{}]", route.route))?
            }
            _ => {}
        }
    }
    if r.routes.len() > 1 {
        writeln!(out, "agreement        {}", r.agreement)?;
    }
    if let Some(v) = &r.verdict {
        writeln!(out, "verdict          {}", v.label.as_str())?;
        for reason in &v.reasons {
            let values: Vec<String> = reason
                .values
                .iter()
                .map(|(k, q)| format!("{k}={}", fmt_rational(q)))
                .chain(reason.flags.iter().map(|(k, b)| format!("{k}={b}")))
                .collect();
            if values.is_empty() {
                writeln!(out, "  - {}", reason.rule)?;
            } else {
                writeln!(out, "  - {}: {}", reason.rule, values.join(" "))?;
            }
        }
    }
    if let Some(us) = r.elapsed_micros {
        writeln!(out, "elapsed          {us} µs")?;
    }
    Ok(())
}

pub(super) fn report(io: &mut Io, r: &Report) -> io::Result<()> {
    match io.format {
        Format::Json => io.json(r),
        Format::Table => report_table(io.out, r),
        Format::Csv => {
            let mut w = csv_writer(io.out);
            w.write_record(REPORT_COLUMNS).map_err(csv_err)?;
            w.write_record(report_row(r)).map_err(csv_err)?;
            w.flush()
        }
    }
}

pub(super) fn scan(io: &mut Io, outcome: &ScanOutcome) -> io::Result<()> {
    let s = &outcome.summary;
    match io.format {
        Format::Json => {
            for r in &outcome.reports {
                io.json(r)?;
            }
            io.json(&serde_json::json!({ "summary": s }))
        }
        Format::Csv => {
            let mut w = csv_writer(io.out);
            w.write_record(REPORT_COLUMNS).map_err(csv_err)?;
            for r in &outcome.reports {
                w.write_record(report_row(r)).map_err(csv_err)?;
            }
            w.flush()?;
            drop(w);
            writeln!(
                io.err,
                "{}",
                serde_json::to_string(s).map_err(io::Error::other)?
            )
        }
        Format::Table => {
            for r in &outcome.reports {
                writeln!(
                    io.out,
                    "{:<24} mec={:<12} agree={:<5} {}",
                    join(&r.input),
                    opt_rational(r.mec.as_ref()),
                    r.agreement,
                    r.verdict.as_ref().map(|v| v.label.as_str()).unwrap_or("-")
                )?;
            }
            writeln!(io.out, "tuples: {}", s.tuples)?;
            for (label, count) in &s.labels {
                writeln!(io.out, "  {label}: {count}")?;
            }
            writeln!(
                io.out,
                "mec = (-1)^(n+1)/2: {} (with a unit exponent: {})",
                s.mec_half_hits, s.mec_half_hits_with_unit
            )?;
            writeln!(io.out, "route disagreements: {}", s.route_disagreements)
        }
    }
}

pub(super) fn orbits(io: &mut Io, strata: &[OrbitSpace]) -> io::Result<()> {
    match io.format {
        Format::Json => io.json(&strata),
        Format::Csv => {
            let mut w = csv_writer(io.out);
            w.write_record([
                "support",
                "period",
                "manifold_dim",
                "equivariant_euler",
                "multiplicity",
                "degree_parity",
            ])
            .map_err(csv_err)?;
            for s in strata {
                let support: Vec<u64> = s.support.iter().map(|&j| j as u64).collect();
                w.write_record([
                    join(&support),
                    s.period.to_string(),
                    s.manifold_dim.to_string(),
                    s.equivariant_euler.to_string(),
                    s.multiplicity.to_string(),
                    format!("{:?}", s.degree_parity).to_lowercase(),
                ])
                .map_err(csv_err)?;
            }
            w.flush()
        }
        Format::Table => {
            writeln!(
                io.out,
                "{:<16} {:>10} {:>4} {:>6} {:>12} parity",
                "support", "period", "dim", "chi_S1", "mult"
            )?;
            for s in strata {
                let support: Vec<u64> = s.support.iter().map(|&j| j as u64).collect();
                writeln!(
                    io.out,
                    "{:<16} {:>10} {:>4} {:>6} {:>12} {}",
                    format!("{{{}}}", join(&support)),
                    s.period,
                    s.manifold_dim,
                    s.equivariant_euler,
                    s.multiplicity,
                    format!("{:?}", s.degree_parity).to_lowercase()
                )?;
            }
            Ok(())
        }
    }
}

pub(super) fn phi(io: &mut Io, rule: &str, value: &BigInt) -> io::Result<()> {
    #[derive(Serialize)]
    struct Phi<'a> {
        rule: &'a str,
        #[serde(with = "crate::arith::json::int")]
        phi: BigInt,
    }
    match io.format {
        Format::Json => io.json(&Phi {
            rule,
            phi: value.clone(),
        }),
        Format::Csv => writeln!(io.out, "rule,phi\n{rule},{value}"),
        Format::Table => writeln!(io.out, "phi ({rule}) = {value}"),
    }
}

pub(super) fn maslov(io: &mut Io, m: &MaslovSummary) -> io::Result<()> {
    match io.format {
        Format::Json => io.json(m),
        Format::Csv => {
            let mut w = csv_writer(io.out);
            w.write_record(["period", "mean_index"]).map_err(csv_err)?;
            for s in &m.mean_indices {
                w.write_record([s.period.to_string(), fmt_rational(&s.mean_index)])
                    .map_err(csv_err)?;
            }
            w.flush()
        }
        Format::Table => {
            writeln!(io.out, "exponents        {}", join(&m.input))?;
            writeln!(
                io.out,
                "mu_P (lcm form)  {}",
                fmt_rational(&m.mu_p.lcm_form)
            )?;
            if let Some(sym) = &m.mu_p.symmetric_form {
                writeln!(io.out, "mu_P (symmetric) {sym}")?;
            }
            writeln!(
                io.out,
                "sum 1/a_j        {}",
                fmt_rational(&m.unit_fraction_sum)
            )?;
            let sign = m
                .index_sign
                .map(|s| format!("{s:?}").to_lowercase())
                .unwrap_or_else(|| "undefined (mu_P = 0)".into());
            writeln!(io.out, "index sign       {sign}")?;
            for s in &m.mean_indices {
                writeln!(
                    io.out,
                    "  period {:>10}  mean index {}",
                    s.period,
                    fmt_rational(&s.mean_index)
                )?;
            }
            Ok(())
        }
    }
}

pub(super) fn identities(io: &mut Io, reports: &[IdentityReport]) -> io::Result<()> {
    match io.format {
        Format::Json => io.json(&reports),
        Format::Csv => {
            let mut w = csv_writer(io.out);
            w.write_record([
                "identity",
                "tested_range",
                "cases",
                "passed",
                "counterexample",
            ])
            .map_err(csv_err)?;
            for r in reports {
                w.write_record([
                    r.identity.clone(),
                    r.tested_range.clone(),
                    r.cases.to_string(),
                    r.passed.to_string(),
                    r.counterexample.clone().unwrap_or_default(),
                ])
                .map_err(csv_err)?;
            }
            w.flush()
        }
        Format::Table => {
            for r in reports {
                let status = if r.passed { "pass" } else { "FAIL" };
                writeln!(
                    io.out,
                    "{status}  {:<34} {} ({} cases)",
                    r.identity, r.tested_range, r.cases
                )?;
                if let Some(c) = &r.counterexample {
                    writeln!(io.out, "      counterexample: {c}")?;
                }
            }
            Ok(())
        }
    }
}

pub(super) fn orbibundle(io: &mut Io, input: &MecInput, mec: &Rational) -> io::Result<()> {
    #[derive(Serialize)]
    struct Out<'a> {
        input: &'a MecInput,
        #[serde(with = "crate::arith::json::rational")]
        mec: Rational,
    }
    match io.format {
        Format::Json => io.json(&Out {
            input,
            mec: mec.clone(),
        }),
        Format::Csv => writeln!(
            io.out,
            "strata,principal_maslov,mec\n{},{},{}",
            input.strata.len(),
            input.principal_maslov,
            fmt_rational(mec)
        ),
        Format::Table => {
            writeln!(io.out, "strata           {}", input.strata.len())?;
            writeln!(io.out, "mu_P             {}", input.principal_maslov)?;
            writeln!(
                io.out,
                "signed count     {}",
                input.signed_generator_count()
            )?;
            writeln!(io.out, "mec              {}", fmt_rational(mec))
        }
    }
}
