//! Named identity checks, run per `k`.

use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};

use crate::basis::{Basis, Generator};
use crate::class::DivisorClass;
use crate::genus::{genus_data, n_of_k};
use crate::m0n::{
    count_boundary, delta_restricted, enumerate_boundary, kappa_class, psi_restricted,
};
use crate::pushforward::{
    closed, eisenbud_harris, eisenbud_harris_termwise, p_q_kappa, p_q_map, pushed_boundary_hat,
    pushed_boundary_prime, theorem_lambda, theorem_lambda_hat, ExternalCoeffs, LambdaDelta0,
    Normalization,
};
use crate::rational::{q, Rational};
use crate::reduced::{delta_s, phihat_pull_lambda, twelve_phihat_lambda_closed};
use crate::slope::{
    ample_boundary_excess, ample_boundary_polys, induced_class, induced_slope_closed,
    kappa_slope_bound, InducedSlope, Validity, Variant,
};
use crate::trace::{
    alpha_kj, delta_tau, e_coeff, grr_pieces, omega_tau_sq, phi_pull_lambda,
    twelve_phi_lambda_closed,
};
use crate::Error;

/// Every check, in run order.
pub const CHECKS: &[&str] = &[
    "specializations",
    "genus",
    "m0n",
    "catalan-alpha",
    "grr-assembly",
    "hodge-closed-forms",
    "pushforward-closed-forms",
    "delta-j-symbolic",
    "slope-closed-form",
    "slope-bound",
    "kappa-bound",
    "delta-j-checks",
];

/// Checks that compare an assembled class with its closed form.
pub const CLOSED_FORMS: &[&str] = &[
    "hodge-closed-forms",
    "pushforward-closed-forms",
    "slope-closed-form",
    "kappa-bound",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// Needs a table of external coefficients.
    Skipped(String),
    /// The check has no content at this `k`.
    NotApplicable,
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail(_) => "FAIL",
            Outcome::Skipped(_) => "SKIPPED",
            Outcome::NotApplicable => "N/A",
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }

    pub fn detail(&self) -> Option<&str> {
        match self {
            Outcome::Fail(s) | Outcome::Skipped(s) => Some(s),
            _ => None,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.detail() {
            Some(d) => write!(f, "{} ({d})", self.label()),
            None => f.write_str(self.label()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub check: &'static str,
    pub k: u32,
    pub outcome: Outcome,
}

/// Resolves check names and the groups `all` and `closed-forms`, keeping
/// run order and dropping duplicates.
pub fn expand_checks<S: AsRef<str>>(names: &[S]) -> Result<Vec<&'static str>, String> {
    let mut wanted = Vec::new();
    for name in names {
        let name = name.as_ref().trim();
        match name {
            "all" => wanted.extend_from_slice(CHECKS),
            "closed-forms" => wanted.extend_from_slice(CLOSED_FORMS),
            _ => match CHECKS.iter().find(|c| **c == name) {
                Some(c) => wanted.push(*c),
                None => return Err(format!("unknown check `{name}`")),
            },
        }
    }
    Ok(CHECKS
        .iter()
        .copied()
        .filter(|c| wanted.contains(c))
        .collect())
}

type Check = Result<Outcome, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + fmt::Display>(what: &str, got: T, want: T) -> Result<(), String> {
    ensure(got == want, || {
        format!("{what}: got {got}, expected {want}")
    })
}

fn err(e: Error) -> String {
    e.to_string()
}

fn hurwitz(k: u32, terms: &[(Generator, Rational)]) -> DivisorClass {
    DivisorClass::from_terms(Basis::Hurwitz(k), terms.iter().cloned()).expect("Hurwitz generators")
}

fn e(j: u32, c: u32) -> Generator {
    Generator::E { j, c }
}

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn specializations(k: u32) -> Check {
    match k {
        1 => {
            eq(
                "delta_tau(1)",
                delta_tau(1),
                hurwitz(1, &[(Generator::E0, r(2)), (e(1, 0), r(1))]),
            )?;
            eq(
                "delta_s(1)",
                delta_s(1),
                hurwitz(1, &[(Generator::E0, r(1)), (e(1, 0), r(1))]),
            )?;
            let fifth = q(1, 5);
            eq(
                "phi^* lambda at k = 1",
                phi_pull_lambda(1),
                hurwitz(1, &[(Generator::E0, fifth.clone()), (e(1, 0), fifth)]),
            )?;
        }
        2 => {
            let tau = [
                (Generator::E0, 6),
                (Generator::E3, 2),
                (e(1, 0), 3),
                (e(2, 0), 2),
                (e(2, 1), 6),
            ];
            let s = [
                (Generator::E0, 3),
                (Generator::E3, 1),
                (e(1, 0), 3),
                (e(2, 0), 1),
                (e(2, 1), 3),
            ];
            let to = |t: &[(Generator, i64)]| {
                hurwitz(2, &t.iter().map(|(g, c)| (*g, r(*c))).collect::<Vec<_>>())
            };
            eq("delta_tau(2)", delta_tau(2), to(&tau))?;
            eq("delta_s(2)", delta_s(2), to(&s))?;
            let hat = hurwitz(
                2,
                &[
                    (Generator::E0, q(30, 11)),
                    (Generator::E3, q(2, 11)),
                    (e(1, 0), q(48, 11)),
                    (e(2, 0), q(74, 11)),
                    (e(2, 1), q(54, 11)),
                ],
            );
            eq(
                "12 phihat^* lambda at k = 2",
                phihat_pull_lambda(2).scale(&r(12)),
                hat,
            )?;
        }
        _ => return Ok(Outcome::NotApplicable),
    }
    Ok(Outcome::Pass)
}

fn genus(k: u32) -> Check {
    let gd = genus_data(k);
    let kk = u64::from(k);
    let (g, d) = (2 * kk, kk + 1);
    eq(
        "g'",
        (g - 1) * (2 * d - 3) + (d - 1) * (d - 1),
        5 * kk * kk - 4 * kk + 1,
    )?;
    eq("g'", gd.g_prime, 5 * kk * kk - 4 * kk + 1)?;
    eq("2 g^", 2 * gd.g_hat, (5 * kk - 2) * (kk - 1))?;
    eq("prym dim", gd.prym_dim, gd.g_prime - gd.g_hat)?;
    eq("2 prym dim", 2 * gd.prym_dim, 5 * kk * kk - kk)?;
    match k {
        2 => eq("(g', g^) at k = 2", (gd.g_prime, gd.g_hat) == (13, 4), true)?,
        3 => eq("g^ at k = 3", gd.g_hat, 13)?,
        _ => {}
    }
    Ok(Outcome::Pass)
}

fn m0n(k: u32) -> Check {
    let lhs = &kappa_class(k) + &delta_restricted(k);
    eq("kappa + delta", lhs, psi_restricted(k))?;
    let b = k + 3;
    if b <= 12 {
        let count = count_boundary(b).map_err(err)?;
        let listed = enumerate_boundary(b).map_err(err)?.len();
        eq("boundary count", count, listed.into())?;
    }
    Ok(Outcome::Pass)
}

fn catalan_alpha(k: u32) -> Check {
    eq("e(1,0)", e_coeff(k, 1, 0).map_err(err)?, n_of_k(k))?;
    let map = p_q_map(k, Normalization::PerFactorialB);
    for j in 1..=k {
        let alpha = alpha_kj(k, j).map_err(err)?;
        let sum: Rational = (0..=j / 2)
            .map(|c| {
                r(i64::from(j) + 1 - 2 * i64::from(c)) * e_coeff(k, j, c).expect("valid index")
            })
            .sum();
        eq("alpha", alpha.clone(), sum)?;
        let row = map.row(Generator::T3j(j)).map_err(err)?;
        let want =
            DivisorClass::from_terms(Basis::Mg(k), [(Generator::Delta(j), alpha)]).map_err(err)?;
        eq("p_* q^* T3j", row, want)?;
    }
    Ok(Outcome::Pass)
}

fn grr_assembly(k: u32) -> Check {
    eq("omega_tau^2", omega_tau_sq(k), grr_pieces(k).assemble())?;
    Ok(Outcome::Pass)
}

fn hodge_closed_forms(k: u32) -> Check {
    eq(
        "12 phi^* lambda",
        phi_pull_lambda(k).scale(&r(12)),
        twelve_phi_lambda_closed(k),
    )?;
    eq(
        "12 phihat^* lambda",
        phihat_pull_lambda(k).scale(&r(12)),
        twelve_phihat_lambda_closed(k),
    )?;
    Ok(Outcome::Pass)
}

fn lambda_delta0(what: &str, d: &DivisorClass, want: LambdaDelta0) -> Result<(), String> {
    let got = LambdaDelta0::of(d).map_err(|e| format!("{what}: {e}"))?;
    ensure(got == want, || {
        format!(
            "{what}: got ({}, {}), expected ({}, {})",
            got.lambda, got.delta0, want.lambda, want.delta0
        )
    })
}

fn pushforward_closed_forms(k: u32) -> Check {
    if k < 3 {
        return Ok(Outcome::NotApplicable);
    }
    let per = Normalization::PerFactorialB;
    lambda_delta0(
        "p_* phi^* lambda",
        &theorem_lambda(k, per),
        closed::theorem_lambda(k, per),
    )?;
    lambda_delta0(
        "p_* phihat^* lambda",
        &theorem_lambda_hat(k, per),
        closed::theorem_lambda_hat(k, per),
    )?;
    let w = pushed_boundary_prime(k, 0, per).map_err(err)?;
    lambda_delta0("w", &w, closed::boundary_prime(k, per))?;
    let v = pushed_boundary_hat(k, 0, per).map_err(err)?;
    lambda_delta0("v", &v, closed::boundary_hat(k, per))?;
    let eh = eisenbud_harris(k, per);
    lambda_delta0("branch divisor", &eh, closed::eisenbud_harris(k, per))?;
    lambda_delta0(
        "branch divisor, termwise",
        &eisenbud_harris_termwise(k, per),
        closed::eisenbud_harris(k, per),
    )?;
    lambda_delta0(
        "p_* q^* kappa",
        &p_q_kappa(k, per),
        closed::p_q_kappa(k, per),
    )?;
    Ok(Outcome::Pass)
}

fn delta_j_symbolic(k: u32) -> Check {
    if k < 3 {
        return Ok(Outcome::NotApplicable);
    }
    let per = Normalization::PerFactorialB;
    let t2 = p_q_map(k, per).row(Generator::T2).map_err(err)?;
    eq("p_* q^* T2", t2, closed::p_q_t2(k, per))?;
    eq(
        "p_* q^* kappa",
        p_q_kappa(k, per),
        closed::p_q_kappa_full(k, per),
    )?;
    Ok(Outcome::Pass)
}

fn slope_grid() -> Vec<Rational> {
    vec![q(23, 2), r(12), r(13), r(20)]
}

fn slope_closed_form(k: u32) -> Check {
    if k < 3 {
        return Ok(Outcome::NotApplicable);
    }
    for variant in [Variant::Trace, Variant::Reduced] {
        let induced = InducedSlope::new(variant, k).map_err(err)?;
        induced.mobius_check().map_err(err)?;
        for s in slope_grid() {
            induced.report(&s, None).map_err(err)?;
        }
    }
    if k == 3 {
        eq(
            "trace slope at s = 12",
            induced_slope_closed(Variant::Trace, 3, &r(12)).map_err(err)?,
            q(489, 59),
        )?;
    }
    Ok(Outcome::Pass)
}

fn slope_bound(k: u32) -> Check {
    if k < 3 {
        return Ok(Outcome::NotApplicable);
    }
    for variant in [Variant::Trace, Variant::Reduced] {
        let (lhs, rhs) = ample_boundary_polys(variant, k);
        ensure(lhs < rhs, || {
            format!("{} bound polynomials: {lhs} >= {rhs}", variant.as_str())
        })?;
        let (excess, bound) = ample_boundary_excess(variant, k).map_err(err)?;
        ensure(excess < bound, || {
            format!("{} excess {excess} >= {bound}", variant.as_str())
        })?;
    }
    Ok(Outcome::Pass)
}

fn kappa_bound(k: u32) -> Check {
    kappa_slope_bound(k, None).map_err(err)?;
    Ok(Outcome::Pass)
}

fn delta_j_checks(k: u32, externals: Option<&ExternalCoeffs>) -> Check {
    let Some(ext) = externals else {
        return Ok(Outcome::Skipped("needs external coefficients".into()));
    };
    if ext.k() != k {
        return Ok(Outcome::Skipped(format!("table is for k = {}", ext.k())));
    }
    let per = Normalization::PerFactorialB;
    let mut classes = vec![
        ("p_* phi^* lambda", theorem_lambda(k, per)),
        ("p_* phihat^* lambda", theorem_lambda_hat(k, per)),
        ("p_* q^* kappa", p_q_kappa(k, per)),
        ("branch divisor", eisenbud_harris(k, per)),
    ];
    if k >= 3 {
        for variant in [Variant::Trace, Variant::Reduced] {
            classes.push((
                variant.as_str(),
                induced_class(variant, k, &r(12), None).map_err(err)?,
            ));
        }
    }
    for (name, class) in classes {
        ensure(ext.apply(&class).map_err(err)?.is_constant(), || {
            format!("{name} keeps symbols")
        })?;
    }
    let report = kappa_slope_bound(k, Some(ext)).map_err(err)?;
    if report.validity == Validity::Fails {
        let js: Vec<String> = report
            .witnesses
            .iter()
            .map(|(j, _)| j.to_string())
            .collect();
        return Err(format!(
            "kappa class: b_j < b_0 for j in {{{}}}",
            js.join(",")
        ));
    }
    Ok(Outcome::Pass)
}

/// Runs one check; panics inside are reported as failures.
pub fn run_check(name: &str, k: u32, externals: Option<&ExternalCoeffs>) -> Outcome {
    if k == 0 {
        return Outcome::Fail("k must be positive".into());
    }
    let result = catch_unwind(AssertUnwindSafe(|| match name {
        "specializations" => specializations(k),
        "genus" => genus(k),
        "m0n" => m0n(k),
        "catalan-alpha" => catalan_alpha(k),
        "grr-assembly" => grr_assembly(k),
        "hodge-closed-forms" => hodge_closed_forms(k),
        "pushforward-closed-forms" => pushforward_closed_forms(k),
        "delta-j-symbolic" => delta_j_symbolic(k),
        "slope-closed-form" => slope_closed_form(k),
        "slope-bound" => slope_bound(k),
        "kappa-bound" => kappa_bound(k),
        "delta-j-checks" => delta_j_checks(k, externals),
        other => Err(format!("unknown check `{other}`")),
    }));
    match result {
        Ok(Ok(outcome)) => outcome,
        Ok(Err(msg)) => Outcome::Fail(msg),
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Outcome::Fail(msg)
        }
    }
}

/// Runs `checks` for every `k` in the range, ordered by `k` then check.
pub fn run(
    k_min: u32,
    k_max: u32,
    checks: &[&'static str],
    externals: Option<&ExternalCoeffs>,
) -> Vec<CheckResult> {
    (k_min..=k_max)
        .flat_map(|k| {
            checks.iter().map(move |check| CheckResult {
                check,
                k,
                outcome: run_check(check, k, externals),
            })
        })
        .collect()
}
