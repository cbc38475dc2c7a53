//! Push-forward `p_*` from the Hurwitz space to the moduli space of genus-`2k`
//! curves, and the correspondence actions built from it.
//!
//! The push-forwards of `E2` and `E3` involve external coefficients `c_j` and
//! `b_j` that are kept symbolic. Their `lambda` and `delta_0` parts never
//! involve them.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::affine::{AffineExpr, ExtSymbol};
use crate::basis::{e_indices, Basis, Generator};
use crate::boundary::{phi_pull_boundary, phihat_pull_boundary};
use crate::class::DivisorClass;
use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::genus::n_of_k;
use crate::m0n::{canonical_class_m0b, kappa_class};
use crate::map::ClassMap;
use crate::rational::{q, Rational};
use crate::reduced::phihat_pull_lambda;
use crate::trace::{e_coeff, hurwitz_class, phi_pull_lambda, q_pullback, weight};

/// Values of `c_j` and `b_j` for every `1 <= j <= k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExternalCoeffs {
    k: u32,
    c: Vec<Rational>,
    b: Vec<Rational>,
}

impl ExternalCoeffs {
    /// Rejects tables that miss an index in `1..=k` or carry an extra one.
    pub fn new(k: u32, c: BTreeMap<u32, Rational>, b: BTreeMap<u32, Rational>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ExternalCoeffs("k must be positive".into()));
        }
        let expected: Vec<u32> = (1..=k).collect();
        for (name, table) in [("c", &c), ("b", &b)] {
            if table.keys().copied().collect::<Vec<_>>() != expected {
                return Err(Error::ExternalCoeffs(format!(
                    "{name} must have exactly the indices 1..={k}"
                )));
            }
        }
        Ok(ExternalCoeffs {
            k,
            c: c.into_values().collect(),
            b: b.into_values().collect(),
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn c(&self, j: u32) -> &Rational {
        &self.c[j as usize - 1]
    }

    pub fn b(&self, j: u32) -> &Rational {
        &self.b[j as usize - 1]
    }

    pub fn values(&self) -> BTreeMap<ExtSymbol, Rational> {
        (1..=self.k)
            .flat_map(|j| {
                [
                    (ExtSymbol::c(j), self.c(j).clone()),
                    (ExtSymbol::b(j), self.b(j).clone()),
                ]
            })
            .collect()
    }

    /// Substitutes into a class over a basis with the same `k`.
    pub fn apply(&self, d: &DivisorClass) -> Result<DivisorClass> {
        if d.basis().parameter() != self.k {
            return Err(Error::ExternalCoeffs(format!(
                "table is for k = {}, class lives over {}",
                self.k,
                d.basis()
            )));
        }
        Ok(d.substitute(&self.values()))
    }
}

/// Scale of push-forward results: `Raw` carries the `(6k)!` factors,
/// `PerFactorialB` divides them out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Normalization {
    Raw,
    PerFactorialB,
}

impl Normalization {
    /// Factor relative to `PerFactorialB`.
    pub fn factor(self, k: u32) -> Rational {
        match self {
            Normalization::Raw => Rational::from_integer(factorial(6 * u64::from(k))),
            Normalization::PerFactorialB => Rational::one(),
        }
    }

    pub fn convert(
        d: &DivisorClass,
        k: u32,
        from: Normalization,
        to: Normalization,
    ) -> DivisorClass {
        if from == to {
            return d.clone();
        }
        d.scale(&(to.factor(k) / from.factor(k)))
    }
}

/// `(6k)!`
pub fn b_factorial(k: u32) -> BigInt {
    factorial(6 * u64::from(k))
}

/// `lambda` and `delta_0` coefficients of a class on `M_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaDelta0 {
    pub lambda: Rational,
    pub delta0: Rational,
}

impl LambdaDelta0 {
    fn scaled(self, f: &Rational) -> Self {
        LambdaDelta0 {
            lambda: self.lambda * f,
            delta0: self.delta0 * f,
        }
    }

    /// Reads both coefficients; fails if either is symbolic.
    pub fn of(d: &DivisorClass) -> Result<Self> {
        Ok(LambdaDelta0 {
            lambda: d.constant_coefficient(Generator::Lambda)?,
            delta0: d.constant_coefficient(Generator::Delta(0))?,
        })
    }
}

fn mg_class<I, C>(k: u32, terms: I) -> DivisorClass
where
    I: IntoIterator<Item = (Generator, C)>,
    C: Into<AffineExpr>,
{
    DivisorClass::from_terms(Basis::Mg(k), terms).expect("Mg generator out of range")
}

fn kq(k: u32) -> i64 {
    i64::from(k)
}

/// `p_*` as a map from the Hurwitz basis to `lambda, delta_0..delta_k`.
pub fn p_push(k: u32, norm: Normalization) -> ClassMap {
    let n = n_of_k(k);
    let kk = kq(k);
    let scale = norm.factor(k);
    let basis = Basis::Hurwitz(k);
    let mut m = ClassMap::zero(basis, Basis::Mg(k));
    let mut set = |g: Generator, row: DivisorClass| {
        m.set_row(g, row.scale(&scale)).expect("p_* row");
    };

    set(
        Generator::E0,
        mg_class(k, [(Generator::Delta(0), &n * q(1, 2))]),
    );

    if basis.contains(&Generator::E2) {
        let f = &n * q(kk - 2, 2 * kk - 1);
        let mut terms = vec![
            (
                Generator::Lambda,
                AffineExpr::from(&f * Rational::from(18 * kk * kk + 51 * kk - 9)),
            ),
            (
                Generator::Delta(0),
                AffineExpr::from(-(&f * Rational::from(3 * kk * kk + 4 * kk - 1))),
            ),
        ];
        terms.extend((1..=k).map(|j| {
            (
                Generator::Delta(j),
                AffineExpr::term(q(1, 2), ExtSymbol::c(j)),
            )
        }));
        set(Generator::E2, mg_class(k, terms));
    }

    if basis.contains(&Generator::E3) {
        let f = &n * q(3, 2 * (2 * kk - 1));
        let mut terms = vec![
            (
                Generator::Lambda,
                AffineExpr::from(&f * Rational::from(12 * kk * kk + 46 * kk - 8)),
            ),
            (
                Generator::Delta(0),
                AffineExpr::from(-(&f * Rational::from(2 * kk * kk + 4 * kk - 1))),
            ),
        ];
        terms.extend((1..=k).map(|j| {
            (
                Generator::Delta(j),
                AffineExpr::term(-f.clone(), ExtSymbol::b(j)),
            )
        }));
        set(Generator::E3, mg_class(k, terms));
    }

    for (j, c) in e_indices(k) {
        let e = e_coeff(k, j, c).expect("valid index");
        set(
            Generator::E { j, c },
            mg_class(k, [(Generator::Delta(j), e)]),
        );
    }
    m
}

fn push(k: u32, d: &DivisorClass, norm: Normalization) -> DivisorClass {
    p_push(k, norm).apply(d).expect("Hurwitz class")
}

/// `p_* phi^* lambda_{g'}`.
pub fn theorem_lambda(k: u32, norm: Normalization) -> DivisorClass {
    push(k, &phi_pull_lambda(k), norm)
}

/// `p_* phihat^* lambda_{g^}`.
pub fn theorem_lambda_hat(k: u32, norm: Normalization) -> DivisorClass {
    push(k, &phihat_pull_lambda(k), norm)
}

/// `p_* phi^* deltaP_{j'}`.
pub fn pushed_boundary_prime(k: u32, j_prime: u32, norm: Normalization) -> Result<DivisorClass> {
    Ok(push(k, &phi_pull_boundary(k, j_prime)?, norm))
}

/// `p_* phihat^* deltaH_j`.
pub fn pushed_boundary_hat(k: u32, j_hat: u32, norm: Normalization) -> Result<DivisorClass> {
    Ok(push(k, &phihat_pull_boundary(k, j_hat)?, norm))
}

/// `p_* q^*`, from the symmetric boundary classes to `M_g`.
pub fn p_q_map(k: u32, norm: Normalization) -> ClassMap {
    ClassMap::compose(&p_push(k, norm), &q_pullback(k)).expect("matching bases")
}

/// `p_* q^* kappa`.
pub fn p_q_kappa(k: u32, norm: Normalization) -> DivisorClass {
    p_q_map(k, norm)
        .apply(&kappa_class(k))
        .expect("M0bSym class")
}

/// `K = 13 lambda - 2 delta_0 - 3 delta_1 - 2 sum_{j>=2} delta_j`, truncated at `delta_k`.
pub fn canonical_class_mg(k: u32) -> DivisorClass {
    let terms = [
        (Generator::Lambda, 13),
        (Generator::Delta(0), -2),
        (Generator::Delta(1), -3),
    ]
    .into_iter()
    .chain((2..=k).map(|j| (Generator::Delta(j), -2)));
    mg_class(k, terms.map(|(g, c)| (g, Rational::from(c))))
}

/// Ramification of `q`: `E2 + 2 E3 + sum (j - 2c) E(j,c)`.
pub fn ramification_q(k: u32) -> DivisorClass {
    let head = [
        (Generator::E2, Rational::from(1)),
        (Generator::E3, Rational::from(2)),
    ];
    let tail = e_indices(k).map(|(j, c)| {
        (
            Generator::E { j, c },
            Rational::from(i64::from(j) - 2 * i64::from(c)),
        )
    });
    hurwitz_class(k, head.into_iter().chain(tail))
}

/// Class of the branch divisor of `p` on `M_g`. `R_p = q^* K + R_q - p^* K_{M_g}`
/// and `R_p = E0 + E2 + E3 + G`; the result is `p_* G`.
pub fn eisenbud_harris(k: u32, norm: Normalization) -> DivisorClass {
    let q_canonical = q_pullback(k)
        .apply(&canonical_class_m0b(k))
        .expect("M0bSym class");
    let absorbed = hurwitz_class(
        k,
        [Generator::E0, Generator::E2, Generator::E3].map(|g| (g, Rational::one())),
    );
    let g_upstairs = &(&q_canonical + &ramification_q(k)) - &absorbed;
    let degree = n_of_k(k) * norm.factor(k);
    &push(k, &g_upstairs, norm) - &canonical_class_mg(k).scale(&degree)
}

/// The same class assembled term by term from the push-forwards of the
/// individual boundary divisors.
pub fn eisenbud_harris_termwise(k: u32, norm: Normalization) -> DivisorClass {
    let b = 6 * kq(k);
    let pmap = p_push(k, norm);
    let row = |g| pmap.row(g).expect("Hurwitz generator");
    let pq = p_q_map(k, norm).row(Generator::T2).expect("T2 row");
    let mut out = pq.scale(&q(-2, b - 1));
    if Basis::Hurwitz(k).contains(&Generator::E3) {
        out = &out + &row(Generator::E3);
    }
    out = &out - &row(Generator::E0);
    for (j, c) in e_indices(k) {
        let i = 3 * i64::from(j);
        let f = (q(i * (b - i), b - 1) - Rational::one()) * Rational::from(weight(j, c))
            - Rational::one();
        out = &out + &row(Generator::E { j, c }).scale(&f);
    }
    let degree = n_of_k(k) * norm.factor(k);
    &out - &canonical_class_mg(k).scale(&degree)
}

/// Hodge and boundary pullbacks along the Prym map, as
/// `(phi^* lambda - phihat^* lambda, phi^* delta'_0 - phihat^* delta^_0)`.
pub fn prym_pullbacks(k: u32) -> (DivisorClass, DivisorClass) {
    let hodge = &phi_pull_lambda(k) - &phihat_pull_lambda(k);
    let boundary =
        &phi_pull_boundary(k, 0).expect("index 0") - &phihat_pull_boundary(k, 0).expect("index 0");
    (hodge, boundary)
}

/// `lambda - delta_0/10 - delta_1/5`, which vanishes on `M_2`.
pub fn genus_two_relation() -> DivisorClass {
    mg_class(
        1,
        [
            (Generator::Lambda, Rational::one()),
            (Generator::Delta(0), q(-1, 10)),
            (Generator::Delta(1), q(-1, 5)),
        ],
    )
}

/// Closed forms for the `lambda` and `delta_0` coefficients of the pushed
/// classes, in the requested normalization.
pub mod closed {
    use super::*;

    fn n(k: u32) -> Rational {
        n_of_k(k)
    }

    fn r(x: i64) -> Rational {
        Rational::from(x)
    }

    /// `p_* phi^* lambda_{g'}` (valid for `k >= 2`; at `k = 1` the pushed
    /// class has no `lambda` term).
    pub fn theorem_lambda(k: u32, norm: Normalization) -> LambdaDelta0 {
        let kk = kq(k);
        let d = 2 * kk - 1;
        LambdaDelta0 {
            lambda: n(k) * q(18 * kk.pow(3) + 31 * kk * kk - 69 * kk + 11, d),
            delta0: -(n(k) * q(3 * kk.pow(3) - 5 * kk + 1, d)),
        }
        .scaled(&norm.factor(k))
    }

    /// `p_* phihat^* lambda_{g^}`, `k >= 3`.
    pub fn theorem_lambda_hat(k: u32, norm: Normalization) -> LambdaDelta0 {
        let kk = kq(k);
        let d = 2 * (2 * kk - 1);
        LambdaDelta0 {
            lambda: n(k) * q(18 * kk.pow(3) + 19 * kk * kk - 117 * kk + 20, d),
            delta0: -(n(k) * q((kk - 2) * (3 * kk * kk + 4 * kk - 1), d)),
        }
        .scaled(&norm.factor(k))
    }

    /// `w_lambda`, `w_0` of `p_* phi^* deltaP_0`.
    pub fn boundary_prime(k: u32, norm: Normalization) -> LambdaDelta0 {
        let kk = kq(k);
        let d = 2 * kk - 1;
        LambdaDelta0 {
            lambda: r(6) * n(k) * q((6 * kk - 1) * (2 * kk * kk + 3 * kk - 8), d),
            delta0: -(r(2) * n(k) * q(6 * kk.pow(3) - 3 * kk * kk - 10 * kk + 2, d)),
        }
        .scaled(&norm.factor(k))
    }

    /// `v_lambda`, `v_0` of `p_* phihat^* deltaH_0`.
    pub fn boundary_hat(k: u32, norm: Normalization) -> LambdaDelta0 {
        let kk = kq(k);
        let d = 2 * kk - 1;
        LambdaDelta0 {
            lambda: r(6) * n(k) * q((6 * kk - 1) * (kk + 3) * (kk - 2), d),
            delta0: -(n(k) * q(6 * kk.pow(3) - 6 * kk * kk - 15 * kk + 3, d)),
        }
        .scaled(&norm.factor(k))
    }

    /// `(b! b N / 2) [3(2k+5) lambda - (k+1) delta_0]`.
    pub fn p_q_kappa(k: u32, norm: Normalization) -> LambdaDelta0 {
        let kk = kq(k);
        let f = n(k) * q(6 * kk, 2);
        LambdaDelta0 {
            lambda: &f * r(3 * (2 * kk + 5)),
            delta0: -(&f * r(kk + 1)),
        }
        .scaled(&norm.factor(k))
    }

    /// `N_0/(2k-1) [(6k^2+13k+1) lambda - k(k+1) delta_0]`, `N_0 = (6k)! N`.
    pub fn eisenbud_harris(k: u32, norm: Normalization) -> LambdaDelta0 {
        let kk = kq(k);
        let d = 2 * kk - 1;
        LambdaDelta0 {
            lambda: n(k) * q(6 * kk * kk + 13 * kk + 1, d),
            delta0: -(n(k) * q(kk * (kk + 1), d)),
        }
        .scaled(&norm.factor(k))
    }

    /// Full class of `p_* q^* T2` for `k >= 3`:
    /// `b(b-1)N/(2(b-3)) [3(2k+5) lambda - (k+1) delta_0] - sum (-c_j + 9N/(4k-2) b_j) delta_j`.
    pub fn p_q_t2(k: u32, norm: Normalization) -> DivisorClass {
        let kk = kq(k);
        let b = 6 * kk;
        let f = n(k) * q(b * (b - 1), 2 * (b - 3));
        let bj = n(k) * q(9, 4 * kk - 2);
        let mut terms = vec![
            (
                Generator::Lambda,
                AffineExpr::from(&f * r(3 * (2 * kk + 5))),
            ),
            (Generator::Delta(0), AffineExpr::from(-(&f * r(kk + 1)))),
        ];
        terms.extend((1..=k).map(|j| {
            let e = &AffineExpr::symbol(ExtSymbol::c(j))
                - &AffineExpr::term(bj.clone(), ExtSymbol::b(j));
            (Generator::Delta(j), e)
        }));
        mg_class(k, terms).scale(&norm.factor(k))
    }

    /// Full class of `p_* q^* kappa` for `k >= 3`, including the `delta_j` tail
    /// `-(b!/(b-1)) [(b-3)(-c_j + 9N/(4k-2) b_j) - (3j-1)(b-3j-1) alpha(k,j)]`.
    pub fn p_q_kappa_full(k: u32, norm: Normalization) -> DivisorClass {
        let kk = kq(k);
        let b = 6 * kk;
        let head = p_q_kappa(k, Normalization::PerFactorialB);
        let bj = n(k) * q(9, 4 * kk - 2);
        let mut terms = vec![
            (Generator::Lambda, AffineExpr::from(head.lambda)),
            (Generator::Delta(0), AffineExpr::from(head.delta0)),
        ];
        terms.extend((1..=k).map(|j| {
            let jj = 3 * i64::from(j);
            let alpha = crate::trace::alpha_kj(k, j).expect("valid j");
            let symbolic = &AffineExpr::term(r(3 - b), ExtSymbol::c(j))
                + &AffineExpr::term(&bj * r(b - 3), ExtSymbol::b(j));
            let inner = &symbolic - &AffineExpr::from(r((jj - 1) * (b - jj - 1)) * alpha);
            (Generator::Delta(j), inner.scale(&q(-1, b - 1)))
        }));
        mg_class(k, terms).scale(&norm.factor(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn p_push_k1_rows() {
        let m = p_push(1, Normalization::PerFactorialB);
        assert_eq!(
            m.row(Generator::E0).unwrap(),
            mg_class(1, [(Generator::Delta(0), q(1, 2))])
        );
        assert_eq!(
            m.row(Generator::E { j: 1, c: 0 }).unwrap(),
            mg_class(1, [(Generator::Delta(1), r(1))])
        );
    }

    #[test]
    fn p_push_e_row_k3() {
        let m = p_push(3, Normalization::PerFactorialB);
        assert_eq!(
            m.row(Generator::E { j: 2, c: 1 }).unwrap(),
            mg_class(3, [(Generator::Delta(2), r(2))])
        );
    }

    #[test]
    fn p_q_t3j_is_alpha() {
        for k in 1..=8 {
            let m = p_q_map(k, Normalization::PerFactorialB);
            for j in 1..=k {
                let expected = mg_class(
                    k,
                    [(Generator::Delta(j), crate::trace::alpha_kj(k, j).unwrap())],
                );
                assert_eq!(m.row(Generator::T3j(j)).unwrap(), expected);
            }
        }
    }

    #[test]
    fn theorem_lambda_k3() {
        let ld = LambdaDelta0::of(&theorem_lambda(3, Normalization::PerFactorialB)).unwrap();
        assert_eq!(
            ld,
            LambdaDelta0 {
                lambda: r(569),
                delta0: r(-67)
            }
        );
        assert_eq!(closed::theorem_lambda(3, Normalization::PerFactorialB), ld);
    }

    #[test]
    fn theorem_lambda_k1_has_no_lambda_term() {
        let d = theorem_lambda(1, Normalization::PerFactorialB);
        assert_eq!(
            d.coefficient(Generator::Lambda).unwrap(),
            AffineExpr::zero()
        );
    }

    #[test]
    fn theorem_lambda_hat_k3() {
        let ld = LambdaDelta0::of(&theorem_lambda_hat(3, Normalization::PerFactorialB)).unwrap();
        assert_eq!(
            ld,
            LambdaDelta0 {
                lambda: r(163),
                delta0: r(-19)
            }
        );
    }

    #[test]
    fn boundary_pushes_k3() {
        let raw = pushed_boundary_prime(3, 0, Normalization::Raw).unwrap();
        let fact = Rational::from_integer(b_factorial(3));
        assert_eq!(
            raw.constant_coefficient(Generator::Lambda).unwrap(),
            &fact * r(6 * 17 * 19)
        );
        assert_eq!(
            raw.constant_coefficient(Generator::Delta(0)).unwrap(),
            &fact * r(-214)
        );
        assert!(pushed_boundary_hat(3, 3, Normalization::Raw)
            .unwrap()
            .is_zero());
        assert!(pushed_boundary_prime(3, 18, Normalization::Raw).is_err());
    }

    #[test]
    fn pushed_delta_j_prime_is_compositional() {
        for k in 3..=6u32 {
            let fact = Rational::from_integer(b_factorial(k));
            for j in 2..=k {
                let d = pushed_boundary_prime(k, j, Normalization::Raw).unwrap();
                let expected =
                    &fact * r(2 * i64::from(k) - 2 * i64::from(j)) * e_coeff(k, j, 0).unwrap();
                assert_eq!(
                    d.constant_coefficient(Generator::Delta(j)).unwrap(),
                    expected
                );
            }
        }
    }

    #[test]
    fn kappa_k1_and_k3() {
        let k1 = p_q_kappa(1, Normalization::PerFactorialB);
        assert_eq!(
            k1,
            mg_class(
                1,
                [
                    (Generator::Delta(0), q(3, 10)),
                    (Generator::Delta(1), q(8, 5))
                ]
            )
        );
        let ld = LambdaDelta0::of(&p_q_kappa(3, Normalization::PerFactorialB)).unwrap();
        assert_eq!(ld, closed::p_q_kappa(3, Normalization::PerFactorialB));
    }

    #[test]
    fn eisenbud_harris_k3() {
        let ld = LambdaDelta0::of(&eisenbud_harris(3, Normalization::PerFactorialB)).unwrap();
        assert_eq!(ld.lambda, r(94));
        assert_eq!(ld.delta0, r(-12));
        assert_eq!(
            eisenbud_harris(3, Normalization::Raw),
            eisenbud_harris_termwise(3, Normalization::Raw)
        );
    }

    #[test]
    fn prym_examples() {
        let (hodge, boundary) = prym_pullbacks(2);
        assert_eq!(hodge, &phi_pull_lambda(2) - &phihat_pull_lambda(2));
        assert_eq!(
            prym_pullbacks(3)
                .1
                .constant_coefficient(Generator::E0)
                .unwrap(),
            r(6)
        );
        assert_eq!(boundary.constant_coefficient(Generator::E0).unwrap(), r(4));
        assert_eq!(
            prym_pullbacks(1)
                .1
                .constant_coefficient(Generator::E0)
                .unwrap(),
            r(2)
        );
    }

    #[test]
    fn normalization_roundtrip() {
        let d = theorem_lambda(4, Normalization::PerFactorialB);
        let raw = Normalization::convert(&d, 4, Normalization::PerFactorialB, Normalization::Raw);
        assert_eq!(raw, theorem_lambda(4, Normalization::Raw));
        assert_eq!(
            Normalization::convert(&raw, 4, Normalization::Raw, Normalization::PerFactorialB),
            d
        );
    }

    #[test]
    fn externals_validation() {
        let full: BTreeMap<u32, Rational> = (1..=2).map(|j| (j, r(j as i64))).collect();
        assert!(ExternalCoeffs::new(2, full.clone(), full.clone()).is_ok());
        let partial: BTreeMap<u32, Rational> = [(1, r(1))].into();
        assert!(ExternalCoeffs::new(2, full.clone(), partial).is_err());
        let extra: BTreeMap<u32, Rational> = (0..=2).map(|j| (j, r(1))).collect();
        assert!(ExternalCoeffs::new(2, extra, full.clone()).is_err());
        let ext = ExternalCoeffs::new(2, full.clone(), full).unwrap();
        assert!(ext.apply(&theorem_lambda(3, Normalization::Raw)).is_err());
        assert!(ext
            .apply(&theorem_lambda(2, Normalization::Raw))
            .unwrap()
            .is_constant());
    }

    #[test]
    fn closed_forms_agree_with_composition() {
        let per = Normalization::PerFactorialB;
        for k in 3..=10 {
            assert_eq!(
                LambdaDelta0::of(&theorem_lambda(k, per)).unwrap(),
                closed::theorem_lambda(k, per)
            );
            assert_eq!(
                LambdaDelta0::of(&theorem_lambda_hat(k, per)).unwrap(),
                closed::theorem_lambda_hat(k, per)
            );
            let w = pushed_boundary_prime(k, 0, per).unwrap();
            assert_eq!(
                LambdaDelta0::of(&w).unwrap(),
                closed::boundary_prime(k, per)
            );
            let v = pushed_boundary_hat(k, 0, per).unwrap();
            assert_eq!(LambdaDelta0::of(&v).unwrap(), closed::boundary_hat(k, per));
            assert_eq!(
                LambdaDelta0::of(&eisenbud_harris(k, per)).unwrap(),
                closed::eisenbud_harris(k, per)
            );
            assert_eq!(
                p_q_map(k, per).row(Generator::T2).unwrap(),
                closed::p_q_t2(k, per)
            );
            assert_eq!(p_q_kappa(k, per), closed::p_q_kappa_full(k, per));
        }
    }

    #[test]
    fn theorem_lambda_closed_form_holds_at_k2() {
        let per = Normalization::PerFactorialB;
        assert_eq!(
            LambdaDelta0::of(&theorem_lambda(2, per)).unwrap(),
            closed::theorem_lambda(2, per)
        );
        assert_ne!(
            LambdaDelta0::of(&theorem_lambda(1, per)).unwrap(),
            closed::theorem_lambda(1, per)
        );
    }
}
