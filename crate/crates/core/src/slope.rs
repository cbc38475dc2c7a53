//! Slopes of classes on `M_g`, the slopes induced by the trace and reduced
//! trace constructions, and the moving-slope bounds derived from them.

use std::fmt;

use crate::affine::AffineExpr;
use crate::basis::{Basis, Generator};
use crate::boundary::{phi_pullback_map, phihat_pullback_map};
use crate::class::DivisorClass;
use crate::error::{Error, Result};
use crate::genus::genus_data;
use crate::map::ClassMap;
use crate::pushforward::{
    closed, genus_two_relation, p_push, p_q_kappa, ExternalCoeffs, LambdaDelta0, Normalization,
};
use crate::rational::{q, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Validity {
    Holds,
    Fails,
    Unknown,
}

impl Validity {
    pub fn as_str(self) -> &'static str {
        match self {
            Validity::Holds => "holds",
            Validity::Fails => "fails",
            Validity::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeReport {
    pub slope: Rational,
    pub validity: Validity,
    /// `(j, delta_j coefficient)` for every entry that violates the proviso
    /// or could not be decided.
    pub witnesses: Vec<(u32, AffineExpr)>,
}

/// Slope `a / b_0` of `a lambda - sum b_j delta_j`.
///
/// The slope is meaningful when `b_0 <= b_j` for every `j >= 1`. Only the
/// `delta_j` terms actually present in the class are checked; a failed entry
/// outranks an undecidable one.
pub fn slope_of(d: &DivisorClass) -> Result<SlopeReport> {
    let Basis::Mg(_) = d.basis() else {
        return Err(Error::BasisMismatch {
            expected: Basis::Mg(d.basis().parameter()),
            found: d.basis(),
        });
    };
    let ld = LambdaDelta0::of(d)?;
    if ld.delta0.is_zero() {
        return Err(Error::ZeroBoundaryCoefficient);
    }
    let slope = ld.lambda / -ld.delta0.clone();

    let mut failed = Vec::new();
    let mut undecided = Vec::new();
    for (gen, coeff) in d.terms() {
        let Generator::Delta(j) = *gen else { continue };
        if j == 0 {
            continue;
        }
        match coeff.as_constant() {
            Some(c) if *c <= ld.delta0 => {}
            Some(_) => failed.push((j, coeff.clone())),
            None => undecided.push((j, coeff.clone())),
        }
    }
    let (validity, witnesses) = if !failed.is_empty() {
        (Validity::Fails, failed)
    } else if !undecided.is_empty() {
        (Validity::Unknown, undecided)
    } else {
        (Validity::Holds, Vec::new())
    };
    Ok(SlopeReport {
        slope,
        validity,
        witnesses,
    })
}

/// `x L - y D` is ample iff `x > 11 y`.
pub fn ample_cone_test(x: &Rational, y: &Rational) -> bool {
    *x > Rational::from(11) * y
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Trace,
    Reduced,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Trace => "trace",
            Variant::Reduced => "reduced",
        }
    }
}

/// A polynomial in `s` of degree at most one, as `(s coefficient, constant)`.
type Linear = (Rational, Rational);

fn eval(p: &Linear, s: &Rational) -> Rational {
    &p.0 * s + &p.1
}

/// Coefficients in `s` of the numerator and denominator of the excess
/// `slope - 6`, as polynomials in `k`.
fn closed_parts(variant: Variant, k: u32) -> (Linear, Linear) {
    let k = Rational::from(k);
    let k2 = &k * &k;
    let k3 = &k2 * &k;
    let r = Rational::from;
    match variant {
        Variant::Trace => (
            (
                r(31) * &k2 - r(39) * &k + r(5),
                r(-132) * &k2 + r(186) * &k - r(24),
            ),
            (
                r(3) * &k3 - r(5) * &k + r(1),
                r(-12) * &k3 + r(6) * &k2 + r(20) * &k - r(4),
            ),
        ),
        Variant::Reduced => (
            (
                r(31) * &k2 - r(63) * &k + r(8),
                r(-132) * &k2 + r(264) * &k - r(36),
            ),
            (
                r(3) * &k3 - r(2) * &k2 - r(9) * &k + r(2),
                r(-12) * &k3 + r(12) * &k2 + r(30) * &k - r(6),
            ),
        ),
    }
}

fn check_k(k: u32) -> Result<()> {
    if k < 3 {
        return Err(Error::KTooSmall("induced slope", k));
    }
    Ok(())
}

fn pole(k: u32, s: &Rational) -> Error {
    Error::Pole {
        k,
        s: s.to_string(),
    }
}

/// The closed-form rational function of `s`.
pub fn induced_slope_closed(variant: Variant, k: u32, s: &Rational) -> Result<Rational> {
    check_k(k)?;
    let (num, den) = closed_parts(variant, k);
    let den = eval(&den, s);
    if den.is_zero() {
        return Err(pole(k, s));
    }
    Ok(Rational::from(6) + eval(&num, s) / den)
}

/// `p_* phi^*` (or `p_* phihat^*`) as a map into `M_g`.
pub fn induced_map(variant: Variant, k: u32, norm: Normalization) -> ClassMap {
    let pull = match variant {
        Variant::Trace => phi_pullback_map(k),
        Variant::Reduced => phihat_pullback_map(k),
    };
    ClassMap::compose(&p_push(k, norm), &pull).expect("matching bases")
}

/// `s lambda - sum_j delta_j` on the moduli space of trace (or reduced trace) curves.
pub fn test_divisor(variant: Variant, k: u32, s: &Rational) -> DivisorClass {
    let basis = match variant {
        Variant::Trace => Basis::MgPrime(k),
        Variant::Reduced => Basis::MgHat(k),
    };
    let terms = basis.generators().into_iter().map(|g| match g {
        Generator::LambdaP | Generator::LambdaH => (g, s.clone()),
        _ => (g, Rational::from(-1)),
    });
    DivisorClass::from_terms(basis, terms).expect("basis generators")
}

/// Push-forward of the test divisor, substituted if a table is given.
pub fn induced_class(
    variant: Variant,
    k: u32,
    s: &Rational,
    externals: Option<&ExternalCoeffs>,
) -> Result<DivisorClass> {
    InducedSlope::new(variant, k)?.class(s, externals)
}

/// Evaluates the closed form and the substitution route, failing if
/// they differ.
pub fn induced_slope(variant: Variant, k: u32, s: &Rational) -> Result<Rational> {
    induced_slope_report(variant, k, s, None).map(|r| r.slope)
}

pub fn induced_slope_trace(k: u32, s_prime: &Rational) -> Result<Rational> {
    induced_slope(Variant::Trace, k, s_prime)
}

pub fn induced_slope_reduced(k: u32, s: &Rational) -> Result<Rational> {
    induced_slope(Variant::Reduced, k, s)
}

pub fn induced_slope_report(
    variant: Variant,
    k: u32,
    s: &Rational,
    externals: Option<&ExternalCoeffs>,
) -> Result<SlopeReport> {
    InducedSlope::new(variant, k)?.report(s, externals)
}

/// Checks that the slope read off the pushed `lambda` and `delta_0` classes,
/// `(a_l s - b_l) / (a_0 s + b_0)`, is the closed-form Mobius function of `s`
/// up to a common factor.
pub fn mobius_check(variant: Variant, k: u32) -> Result<()> {
    InducedSlope::new(variant, k)?.mobius_check()
}

/// The composed map for one `(variant, k)`, reusable across values of `s`.
pub struct InducedSlope {
    variant: Variant,
    k: u32,
    map: ClassMap,
}

impl InducedSlope {
    pub fn new(variant: Variant, k: u32) -> Result<Self> {
        check_k(k)?;
        Ok(InducedSlope {
            variant,
            k,
            map: induced_map(variant, k, Normalization::PerFactorialB),
        })
    }

    pub fn class(&self, s: &Rational, externals: Option<&ExternalCoeffs>) -> Result<DivisorClass> {
        let pushed = self.map.apply(&test_divisor(self.variant, self.k, s))?;
        match externals {
            Some(ext) => ext.apply(&pushed),
            None => Ok(pushed),
        }
    }

    pub fn report(&self, s: &Rational, externals: Option<&ExternalCoeffs>) -> Result<SlopeReport> {
        let (variant, k) = (self.variant, self.k);
        let closed = induced_slope_closed(variant, k, s)?;
        let report = match slope_of(&self.class(s, externals)?) {
            Err(Error::ZeroBoundaryCoefficient) => return Err(pole(k, s)),
            other => other?,
        };
        if report.slope != closed {
            return Err(Error::RouteMismatch(format!(
                "{} slope at k = {k}, s = {s}: formula {closed}, substitution {}",
                variant.as_str(),
                report.slope
            )));
        }
        Ok(report)
    }

    pub fn mobius_check(&self) -> Result<()> {
        let (variant, k) = (self.variant, self.k);
        let (lambda, delta0) = match variant {
            Variant::Trace => (Generator::LambdaP, Generator::DeltaP(0)),
            Variant::Reduced => (Generator::LambdaH, Generator::DeltaH(0)),
        };
        let a = LambdaDelta0::of(&self.map.row(lambda)?)?;
        let b = LambdaDelta0::of(&self.map.row(delta0)?)?;
        // slope(s) = (a.lambda s - b.lambda) / (-a.delta0 s + b.delta0)
        let ours = [a.lambda, -b.lambda, -a.delta0, b.delta0];
        let (num, den) = closed_parts(variant, k);
        let six = Rational::from(6);
        let theirs = [&six * &den.0 + &num.0, &six * &den.1 + &num.1, den.0, den.1];
        for i in 0..4 {
            for j in (i + 1)..4 {
                if &ours[i] * &theirs[j] != &ours[j] * &theirs[i] {
                    return Err(Error::RouteMismatch(format!(
                        "{} slope at k = {k} is not the closed-form Mobius function",
                        variant.as_str()
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Excess `slope - 6` at the ample boundary `s = 11`, with the target bound `20/g`.
pub fn ample_boundary_excess(variant: Variant, k: u32) -> Result<(Rational, Rational)> {
    let slope = induced_slope(variant, k, &Rational::from(11))?;
    let g = genus_data(k).g;
    Ok((slope - Rational::from(6), q(20, g as i64)))
}

/// `(k * numerator, 10 * denominator)` of the excess at `s = 11`; the bound
/// holds iff the first is smaller.
pub fn ample_boundary_polys(variant: Variant, k: u32) -> (Rational, Rational) {
    let (num, den) = closed_parts(variant, k);
    let s = Rational::from(11);
    (
        Rational::from(k) * eval(&num, &s),
        Rational::from(10) * eval(&den, &s),
    )
}

/// `3(2k+5)/(k+1)`
pub fn kappa_ratio(k: u32) -> Rational {
    let k = i64::from(k);
    q(3 * (2 * k + 5), k + 1)
}

/// `6 + 18/(g+2)`
pub fn kappa_bound(k: u32) -> Rational {
    Rational::from(6) + q(18, genus_data(k).g as i64 + 2)
}

/// The class `p_* q^* kappa` in a form whose slope is meaningful.
///
/// At `k = 1` the assembled class has no `lambda` term: it equals the closed-form
/// representative modulo the genus-two relation, and that representative is
/// returned after checking the difference really is a multiple of it.
pub fn kappa_class_mg(k: u32) -> Result<DivisorClass> {
    let assembled = p_q_kappa(k, Normalization::PerFactorialB);
    if k != 1 {
        return Ok(assembled);
    }
    let expected = closed::p_q_kappa(1, Normalization::PerFactorialB);
    let got = LambdaDelta0::of(&assembled)?;
    let rel = LambdaDelta0::of(&genus_two_relation())?;
    let m = (&expected.lambda - &got.lambda) / rel.lambda;
    if &expected.delta0 - &got.delta0 != &m * &rel.delta0 {
        return Err(Error::RouteMismatch(
            "kappa class at k = 1 differs from the closed form by more than the genus-two relation"
                .into(),
        ));
    }
    Ok(&assembled + &genus_two_relation().scale(&m))
}

/// Slope of `p_* q^* kappa`, checked against `3(2k+5)/(k+1)` and `6 + 18/(g+2)`.
/// With a table the `delta_j` proviso is decided too.
pub fn kappa_slope_bound(k: u32, externals: Option<&ExternalCoeffs>) -> Result<SlopeReport> {
    let class = kappa_class_mg(k)?;
    let class = match externals {
        Some(ext) => ext.apply(&class)?,
        None => class,
    };
    let report = slope_of(&class)?;
    if report.slope != kappa_ratio(k) || report.slope != kappa_bound(k) {
        return Err(Error::RouteMismatch(format!(
            "kappa slope at k = {k} is {}, expected {}",
            report.slope,
            kappa_ratio(k)
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn two_term_class() {
        let d = DivisorClass::from_terms(
            Basis::Mg(1),
            [(Generator::Lambda, 13), (Generator::Delta(0), -2)],
        )
        .unwrap();
        let rep = slope_of(&d).unwrap();
        assert_eq!(rep.slope, q(13, 2));
        assert_eq!(rep.validity, Validity::Holds);
    }

    #[test]
    fn slope_errors() {
        let d = DivisorClass::from_terms(Basis::Mg(1), [(Generator::Lambda, 13)]).unwrap();
        assert_eq!(slope_of(&d), Err(Error::ZeroBoundaryCoefficient));
        let h = DivisorClass::from_terms(Basis::Hurwitz(1), [(Generator::E0, 1)]).unwrap();
        assert!(matches!(slope_of(&h), Err(Error::BasisMismatch { .. })));
    }

    #[test]
    fn fails_outranks_unknown() {
        let d = DivisorClass::from_terms(
            Basis::Mg(2),
            [
                (Generator::Lambda, AffineExpr::from(10)),
                (Generator::Delta(0), AffineExpr::from(-2)),
                (Generator::Delta(1), AffineExpr::from(-1)),
                (
                    Generator::Delta(2),
                    AffineExpr::symbol(crate::affine::ExtSymbol::c(2)),
                ),
            ],
        )
        .unwrap();
        let rep = slope_of(&d).unwrap();
        assert_eq!(rep.validity, Validity::Fails);
        assert_eq!(rep.witnesses, vec![(1, AffineExpr::from(-1))]);
    }

    #[test]
    fn theorem_lambda_slope_is_unknown() {
        let d = crate::pushforward::theorem_lambda(3, Normalization::PerFactorialB);
        let rep = slope_of(&d).unwrap();
        assert_eq!(rep.slope, q(569, 67));
        assert_eq!(rep.validity, Validity::Unknown);
    }

    #[test]
    fn trace_spot_value() {
        assert_eq!(induced_slope_trace(3, &r(12)).unwrap(), q(489, 59));
        assert_eq!(q(569 * 12 - 1938, 67 * 12 - 214), q(489, 59));
        let rep = induced_slope_report(Variant::Trace, 3, &r(12), None).unwrap();
        assert_eq!(rep.validity, Validity::Unknown);
    }

    #[test]
    fn reduced_spot_value() {
        let expected = q(163 * 12 - 612, 19 * 12 - 66);
        assert_eq!(induced_slope_reduced(3, &r(12)).unwrap(), expected);
    }

    #[test]
    fn small_k_rejected() {
        assert_eq!(
            induced_slope_trace(2, &r(12)),
            Err(Error::KTooSmall("induced slope", 2))
        );
    }

    #[test]
    fn pole_is_reported() {
        // 67 s - 214 = 0
        let s = q(214, 67);
        assert!(matches!(
            induced_slope_trace(3, &s),
            Err(Error::Pole { k: 3, .. })
        ));
        let s = q(66, 19);
        assert!(matches!(
            induced_slope_reduced(3, &s),
            Err(Error::Pole { k: 3, .. })
        ));
    }

    #[test]
    fn mobius_small_k() {
        for k in 3..=8 {
            mobius_check(Variant::Trace, k).unwrap();
            mobius_check(Variant::Reduced, k).unwrap();
        }
    }

    #[test]
    fn ample_boundary() {
        let (excess, bound) = ample_boundary_excess(Variant::Reduced, 4).unwrap();
        assert!(excess < bound);
        let (lhs, rhs) = ample_boundary_polys(Variant::Trace, 3);
        let k = r(3);
        assert_eq!(lhs, &k * (r(209) * &k * &k - r(243) * &k + r(31)));
        assert_eq!(
            rhs,
            r(10) * (r(21) * &k * &k * &k + r(6) * &k * &k - r(35) * &k + r(7))
        );
    }

    #[test]
    fn ample_cone() {
        assert!(ample_cone_test(&r(12), &r(1)));
        assert!(!ample_cone_test(&r(11), &r(1)));
        assert!(ample_cone_test(&q(23, 2), &r(1)));
    }

    #[test]
    fn kappa_bounds() {
        let one = kappa_slope_bound(1, None).unwrap();
        assert_eq!(one.slope, q(21, 2));
        assert_eq!(one.validity, Validity::Holds);
        assert_eq!(kappa_slope_bound(3, None).unwrap().slope, q(33, 4));
        for k in 1..=50 {
            assert_eq!(kappa_ratio(k) - r(6) - q(18, 2 * i64::from(k) + 2), r(0));
        }
    }
}
