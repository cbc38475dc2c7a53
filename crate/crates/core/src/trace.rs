//! Classes on the normalized Hurwitz space of degree-`(k+1)` covers by
//! genus-`2k` curves coming from the family of trace curves: the node class,
//! the Grothendieck-Riemann-Roch ingredients and the pulled-back Hodge class.

use crate::basis::{e_indices, Basis, Generator};
use crate::class::DivisorClass;
use crate::combinatorics::{binomial, choose2};
use crate::error::{Error, Result};
use crate::m0n::{delta_restricted, psi_restricted};
use crate::map::ClassMap;
use crate::rational::{q, Rational};

/// Builds a Hurwitz class, dropping `E2`/`E3` terms when those generators do
/// not exist for this `k`.
pub(crate) fn hurwitz_class<I>(k: u32, terms: I) -> DivisorClass
where
    I: IntoIterator<Item = (Generator, Rational)>,
{
    let basis = Basis::Hurwitz(k);
    let kept = terms.into_iter().filter(|(g, _)| match g {
        Generator::E2 | Generator::E3 => basis.contains(g),
        _ => true,
    });
    DivisorClass::from_terms(basis, kept).expect("Hurwitz generator out of range")
}

pub(crate) fn check_e_index(k: u32, j: u32, c: u32) -> Result<()> {
    if !(1..=k).contains(&j) {
        return Err(Error::IndexOutOfRange {
            what: "j",
            index: j.into(),
            min: 1,
            max: k.into(),
        });
    }
    if c > j / 2 {
        return Err(Error::IndexOutOfRange {
            what: "c",
            index: c.into(),
            min: 0,
            max: (j / 2).into(),
        });
    }
    Ok(())
}

/// Multiplicity `j + 1 - 2c` of `E(j,c)` in the pullback of `T3j(j)`.
pub(crate) fn weight(j: u32, c: u32) -> i64 {
    i64::from(j) + 1 - 2 * i64::from(c)
}

/// Degree of `p` on `E(j,c)` relative to `(6k)!`, so that
/// `p_* E(j,c) = (6k)! e(j,c) delta_j`.
pub fn e_coeff(k: u32, j: u32, c: u32) -> Result<Rational> {
    check_e_index(k, j, c)?;
    let (k, j, c) = (u64::from(k), u64::from(j), u64::from(c));
    let w = (j + 1 - 2 * c) as i64;
    let denom = ((j + 1) * (2 * k - j + 1)) as i64;
    Ok(q(w * w, denom) * binomial(j + 1, c as i64) * binomial(2 * k - j + 1, (k + 1 - c) as i64))
}

/// `sum_c (j + 1 - 2c) e(j,c)`, so that `p_* q^* T3j(j) = (6k)! alpha(k,j) delta_j`.
pub fn alpha_kj(k: u32, j: u32) -> Result<Rational> {
    check_e_index(k, j, 0)?;
    (0..=j / 2)
        .map(|c| Ok(Rational::from(weight(j, c)) * e_coeff(k, j, c)?))
        .sum()
}

/// Pullback `q^*` from the symmetric boundary classes of the `6k`-pointed
/// rational curves to the Hurwitz space.
pub fn q_pullback(k: u32) -> ClassMap {
    assert!(k >= 1, "k must be positive");
    let mut m = ClassMap::zero(Basis::M0bSym(k), Basis::Hurwitz(k));
    let t2 = hurwitz_class(
        k,
        [
            (Generator::E0, Rational::from(1)),
            (Generator::E2, Rational::from(2)),
            (Generator::E3, Rational::from(3)),
        ],
    );
    m.set_row(Generator::T2, t2).expect("T2 row");
    for j in 1..=k {
        let row = hurwitz_class(
            k,
            (0..=j / 2).map(|c| (Generator::E { j, c }, Rational::from(weight(j, c)))),
        );
        m.set_row(Generator::T3j(j), row).expect("T3j row");
    }
    m
}

/// Node multiplicity of the trace-curve family over `E(j,c)`.
pub fn d_coeff(k: u32, j: u32, c: u32) -> i64 {
    let (k, j, c) = (i64::from(k), i64::from(j), i64::from(c));
    (choose2(c) + choose2(k - j + c)) * (j + 1 - 2 * c) + 2 * (c + 1) * (k - j + c) + j
}

/// Push-forward of the singular locus of the trace-curve fibres.
pub fn delta_tau(k: u32) -> DivisorClass {
    let kk = i64::from(k);
    let head = [
        (Generator::E0, Rational::from(kk * kk + kk)),
        (Generator::E2, Rational::from(2 * kk * kk - 10 * kk + 18)),
        (Generator::E3, Rational::from(3 * kk * kk - 13 * kk + 16)),
    ];
    let tail = e_indices(k).map(|(j, c)| (Generator::E { j, c }, Rational::from(d_coeff(k, j, c))));
    hurwitz_class(k, head.into_iter().chain(tail))
}

fn apply_q(k: u32, d: &DivisorClass) -> DivisorClass {
    q_pullback(k).apply(d).expect("M0bSym class")
}

/// Push-forwards along the pulled-back universal curve `C~ -> B`, expressed on
/// the `6k`-pointed rational side before applying `q^*`. `S` is the sum of the
/// sections, `R` the ramification of `C~` over the universal rational curve.
struct CurvePushforwards {
    /// `pi_*(r^* S^2)`
    sections_sq: DivisorClass,
    /// `pi_*(R . r^* S)`
    ramification_dot_sections: DivisorClass,
    /// `pi_*(omega . r^* S)`
    omega_dot_sections: DivisorClass,
    /// `pi_*(omega . R)`
    omega_dot_ramification: DivisorClass,
    /// `pi_*(R^2)`
    ramification_sq: DivisorClass,
    /// `pi_*(omega^2)`
    omega_sq: DivisorClass,
}

impl CurvePushforwards {
    fn new(k: u32) -> Self {
        let psi = psi_restricted(k);
        let delta = delta_restricted(k);
        let kq = Rational::from(k);
        CurvePushforwards {
            sections_sq: psi.scale(&-(&kq + Rational::one())),
            ramification_dot_sections: psi.scale(&Rational::from(-1)),
            omega_dot_sections: psi.scale(&kq),
            omega_dot_ramification: psi.scale(&q(1, 2)),
            ramification_sq: psi.scale(&q(-1, 2)),
            omega_sq: &psi.scale(&q(3, 2)) - &delta.scale(&(&kq + Rational::one())),
        }
    }
}

/// The three summands of the push-forward of `omega_tau^2` for the trace-curve
/// family, where `omega_tau = eta^* omega_pi + R_eta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrrPieces {
    /// `tau_*(eta^* omega_pi^2)`
    pub omega_pullback_sq: DivisorClass,
    /// `tau_*(eta^* omega_pi . R_eta)`
    pub omega_dot_ramification: DivisorClass,
    /// `tau_*(R_eta^2)`
    pub ramification_sq: DivisorClass,
}

impl GrrPieces {
    /// `omega^2 + 2 omega.R + R^2`.
    pub fn assemble(&self) -> DivisorClass {
        &(&self.omega_pullback_sq + &self.omega_dot_ramification.scale(&Rational::from(2)))
            + &self.ramification_sq
    }
}

pub fn grr_pieces(k: u32) -> GrrPieces {
    let p = CurvePushforwards::new(k);
    let two = Rational::from(2);
    let four = Rational::from(4);
    // eta_* R_eta pulls back to r^* S - 2 R on the smooth model
    let branch_sq = &(&p.sections_sq - &p.ramification_dot_sections.scale(&four))
        + &p.ramification_sq.scale(&four);
    let omega_dot_branch = &p.omega_dot_sections - &p.omega_dot_ramification.scale(&two);
    GrrPieces {
        omega_pullback_sq: apply_q(k, &p.omega_sq.scale(&Rational::from(k))),
        omega_dot_ramification: apply_q(k, &omega_dot_branch),
        ramification_sq: apply_q(k, &branch_sq.scale(&q(1, 2))),
    }
}

/// `pi_*(omega^2)` for the family of covering genus-`2k` curves itself.
pub fn curve_omega_sq(k: u32) -> DivisorClass {
    apply_q(k, &CurvePushforwards::new(k).omega_sq)
}

/// `tau_*(omega_tau . R_sigma)` and `tau_*(R_sigma^2)`, where `R_sigma` is the
/// ramification of the quotient by the swap involution.
pub(crate) fn involution_ramification_terms(k: u32) -> (DivisorClass, DivisorClass) {
    let p = CurvePushforwards::new(k);
    (
        apply_q(k, &p.omega_dot_ramification),
        apply_q(k, &p.ramification_sq),
    )
}

/// `a(j,c)`, the `E(j,c)` coefficient of `tau_*(omega_tau^2)`.
pub fn a_coeff(k: u32, j: u32, c: u32) -> Rational {
    let (kk, jj) = (i64::from(k), i64::from(j));
    let inner =
        q(27, 2) * q(jj * (2 * kk - 1) * (2 * kk - jj), 6 * kk - 1) - Rational::from(kk * (kk + 1));
    Rational::from(weight(j, c)) * inner
}

/// `tau_*(omega_tau^2)` in closed form.
pub fn omega_tau_sq(k: u32) -> DivisorClass {
    let kk = i64::from(k);
    let lead = q(-6 * kk.pow(3) + 31 * kk * kk - 29 * kk + 6, 6 * kk - 1);
    let head = [
        (Generator::E0, lead.clone()),
        (Generator::E2, &lead * Rational::from(2)),
        (Generator::E3, &lead * Rational::from(3)),
    ];
    let tail = e_indices(k).map(|(j, c)| (Generator::E { j, c }, a_coeff(k, j, c)));
    hurwitz_class(k, head.into_iter().chain(tail))
}

/// `phi^* lambda_{g'} = (tau_*(omega_tau^2) + delta_tau) / 12`.
pub fn phi_pull_lambda(k: u32) -> DivisorClass {
    (&omega_tau_sq(k) + &delta_tau(k)).scale(&q(1, 12))
}

/// `12 phi^* lambda_{g'}` through the `t` coefficients:
/// `2/(6k-1) (t0 E0 + t2 E2 + t3 E3) + sum t(j,c) E(j,c)`.
pub fn twelve_phi_lambda_closed(k: u32) -> DivisorClass {
    let kk = i64::from(k);
    let scale = q(2, 6 * kk - 1);
    let t0 = Rational::from(18 * kk * kk - 15 * kk + 3);
    let t2 = Rational::from(30 * kk - 3);
    let t3 = Rational::from(6 * kk * kk + 11 * kk + 1);
    let head = [
        (Generator::E0, &scale * t0),
        (Generator::E2, &scale * t2),
        (Generator::E3, &scale * t3),
    ];
    let tail = e_indices(k).map(|(j, c)| {
        (
            Generator::E { j, c },
            a_coeff(k, j, c) + Rational::from(d_coeff(k, j, c)),
        )
    });
    hurwitz_class(k, head.into_iter().chain(tail))
}
