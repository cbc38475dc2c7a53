//! Command bodies. Each returns the text to print; `main` owns I/O and exit codes.

use std::fs;
use std::path::Path;

use rayon::prelude::*;
use trace_divisors::genus::genus_data;
use trace_divisors::m0n::{count_boundary, intersect_nonempty};
use trace_divisors::slope::{
    ample_boundary_excess, induced_slope_report, kappa_bound, kappa_slope_bound, SlopeReport,
    Variant,
};
use trace_divisors::verify::{expand_checks, run_check, CheckResult, Outcome};
use trace_divisors::{ExternalCoeffs, Normalization, Rational};

use crate::json::externals_from_json;
use crate::names::ClassName;
use crate::render::{affine_text, render_class, Cell, OutputFormat, Table};
use crate::sets::parse_marked_set;
use crate::{check_k, check_range, CliError, CliResult};

pub fn load_externals(path: &Path) -> CliResult<ExternalCoeffs> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    externals_from_json(&text)
}

pub fn cmd_class(
    name: &str,
    k: u32,
    format: OutputFormat,
    normalized: bool,
    externals: Option<&ExternalCoeffs>,
) -> CliResult<String> {
    let name: ClassName = name.parse()?;
    let requested = if normalized {
        Normalization::PerFactorialB
    } else {
        Normalization::Raw
    };
    let mut class = name.evaluate(k, requested)?;
    if let Some(ext) = externals {
        if ext.k() != k {
            return Err(CliError::usage(format!(
                "externals are for k = {}, not {k}",
                ext.k()
            )));
        }
        class = ext.apply(&class)?;
    }
    render_class(&class, name.effective_normalization(requested), format)
}

pub struct VerifyReport {
    pub text: String,
    pub passed: bool,
}

pub fn cmd_verify(
    k_min: u32,
    k_max: u32,
    checks: &[String],
    externals: Option<&ExternalCoeffs>,
) -> CliResult<VerifyReport> {
    check_range(k_min, k_max)?;
    let checks = expand_checks(checks).map_err(CliError::Usage)?;
    let jobs: Vec<(u32, &'static str)> = (k_min..=k_max)
        .flat_map(|k| checks.iter().map(move |c| (k, *c)))
        .collect();
    // results come back in job order, so the report is ordered by k, then check
    let results: Vec<CheckResult> = jobs
        .par_iter()
        .map(|&(k, check)| CheckResult {
            check,
            k,
            outcome: run_check(check, k, externals),
        })
        .collect();

    let width = checks.iter().map(|c| c.len()).max().unwrap_or(0);
    let mut text = String::new();
    let (mut pass, mut fail, mut skipped, mut na) = (0, 0, 0, 0);
    for r in &results {
        match r.outcome {
            Outcome::Pass => pass += 1,
            Outcome::Fail(_) => fail += 1,
            Outcome::Skipped(_) => skipped += 1,
            Outcome::NotApplicable => na += 1,
        }
        text.push_str(&format!(
            "k={:<3} {:<width$}  {}\n",
            r.k, r.check, r.outcome
        ));
    }
    text.push_str(&format!(
        "passed {pass}, failed {fail}, skipped {skipped}, not applicable {na}\n"
    ));
    text.push_str(if fail == 0 { "PASS\n" } else { "FAIL\n" });
    Ok(VerifyReport {
        text,
        passed: fail == 0,
    })
}

fn slope_line(report: &SlopeReport) -> String {
    format!(
        "{} \u{2248} {} validity={}\n",
        report.slope,
        report.slope.to_decimal_string(6),
        report.validity
    )
}

pub fn cmd_slope(
    k: u32,
    s_prime: Option<&str>,
    variant: &str,
    externals: Option<&ExternalCoeffs>,
) -> CliResult<String> {
    check_k(k)?;
    if let Some(ext) = externals {
        if ext.k() != k {
            return Err(CliError::usage(format!(
                "externals are for k = {}, not {k}",
                ext.k()
            )));
        }
    }
    let s_prime = s_prime.filter(|s| *s != "-");
    let report = match variant {
        "kappa" => {
            if s_prime.is_some() {
                return Err(CliError::usage("the kappa slope takes no s-prime"));
            }
            kappa_slope_bound(k, externals)?
        }
        "trace" | "reduced" => {
            let s = s_prime
                .ok_or_else(|| CliError::usage(format!("the {variant} slope needs --s-prime")))?;
            let s: Rational = s.parse()?;
            let v = if variant == "trace" {
                Variant::Trace
            } else {
                Variant::Reduced
            };
            induced_slope_report(v, k, &s, externals)?
        }
        other => return Err(CliError::usage(format!("unknown variant `{other}`"))),
    };
    Ok(slope_line(&report))
}

pub enum M0nQuery<'a> {
    Count,
    Normalize(&'a str),
    Intersect(&'a str, &'a str),
}

pub fn cmd_m0n(b: u32, query: M0nQuery<'_>) -> CliResult<String> {
    let out = match query {
        M0nQuery::Count => count_boundary(b)?.to_string(),
        M0nQuery::Normalize(set) => parse_marked_set(b, set)?.to_string(),
        M0nQuery::Intersect(x, y) => {
            let x = parse_marked_set(b, x)?;
            let y = parse_marked_set(b, y)?;
            if intersect_nonempty(&x, &y)? {
                "nonempty"
            } else {
                "empty"
            }
            .to_string()
        }
    };
    Ok(out + "\n")
}

/// Columns of each table quantity, in output order.
pub const TABLE_HELP: &str = "\
genus:               k, g, d, b, g_prime, g_hat, prym_dim
kappa-slope:         k, g, slope, bound (slope of p_* q^* kappa and 6 + 18/(g+2))
slope-bound:         k, g, trace_excess, reduced_excess, bound (excess over 6 at s' = 11, and 20/g; k >= 3)
coefficients:<name>: k, generator, coefficient (one row per stored coefficient)";

fn genus_row(k: u32) -> CliResult<Vec<Cell>> {
    let gd = genus_data(k);
    Ok(vec![
        k.into(),
        gd.g.into(),
        gd.d.into(),
        gd.b.into(),
        gd.g_prime.into(),
        gd.g_hat.into(),
        gd.prym_dim.into(),
    ])
}

fn kappa_row(k: u32) -> CliResult<Vec<Cell>> {
    let report = kappa_slope_bound(k, None)?;
    Ok(vec![
        k.into(),
        genus_data(k).g.into(),
        report.slope.into(),
        kappa_bound(k).into(),
    ])
}

fn slope_bound_row(k: u32) -> CliResult<Vec<Cell>> {
    let (trace, bound) = ample_boundary_excess(Variant::Trace, k)?;
    let (reduced, _) = ample_boundary_excess(Variant::Reduced, k)?;
    Ok(vec![
        k.into(),
        genus_data(k).g.into(),
        trace.into(),
        reduced.into(),
        bound.into(),
    ])
}

fn coefficient_rows(name: ClassName, k: u32) -> CliResult<Vec<Vec<Cell>>> {
    let class = name.evaluate(k, Normalization::Raw)?;
    let mut rows: Vec<(String, String)> = class
        .terms()
        .map(|(g, e)| (g.to_string(), affine_text(e)))
        .collect();
    rows.sort();
    Ok(rows
        .into_iter()
        .map(|(g, c)| vec![k.into(), g.into(), c.into()])
        .collect())
}

fn par_rows<F>(k_min: u32, k_max: u32, f: F) -> CliResult<Vec<Vec<Cell>>>
where
    F: Fn(u32) -> CliResult<Vec<Vec<Cell>>> + Sync,
{
    let chunks: Vec<CliResult<Vec<Vec<Cell>>>> = (k_min..=k_max).into_par_iter().map(&f).collect();
    let mut rows = Vec::new();
    for chunk in chunks {
        rows.extend(chunk?);
    }
    Ok(rows)
}

pub fn cmd_table(
    k_min: u32,
    k_max: u32,
    quantity: &str,
    format: OutputFormat,
) -> CliResult<String> {
    check_range(k_min, k_max)?;
    let single = |f: fn(u32) -> CliResult<Vec<Cell>>| move |k| f(k).map(|r| vec![r]);
    let (columns, rows) = match quantity {
        "genus" => (
            vec!["k", "g", "d", "b", "g_prime", "g_hat", "prym_dim"],
            par_rows(k_min, k_max, single(genus_row))?,
        ),
        "kappa-slope" => (
            vec!["k", "g", "slope", "bound"],
            par_rows(k_min, k_max, single(kappa_row))?,
        ),
        "slope-bound" => {
            if k_min < 3 {
                return Err(CliError::usage("slope-bound needs k >= 3"));
            }
            (
                vec!["k", "g", "trace_excess", "reduced_excess", "bound"],
                par_rows(k_min, k_max, single(slope_bound_row))?,
            )
        }
        other => {
            let Some(name) = other.strip_prefix("coefficients:") else {
                return Err(CliError::usage(format!("unknown quantity `{other}`")));
            };
            let name: ClassName = name.parse()?;
            (
                vec!["k", "generator", "coefficient"],
                par_rows(k_min, k_max, |k| coefficient_rows(name, k))?,
            )
        }
    };
    Table {
        quantity: quantity.to_string(),
        columns,
        rows,
    }
    .render(format)
}
