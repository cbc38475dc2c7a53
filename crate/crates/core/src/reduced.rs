//! The same calculus for the reduced trace curve, the quotient of the trace
//! curve by the involution swapping the two points of a pair.

use crate::basis::{e_indices, Generator};
use crate::class::DivisorClass;
use crate::combinatorics::choose2;
use crate::m0n::psi_restricted;
use crate::rational::{q, Rational};
use crate::trace::{
    hurwitz_class, involution_ramification_terms, omega_tau_sq, q_pullback, weight,
};

/// Node multiplicity of the reduced trace-curve family over `E(j,c)`.
pub fn s_coeff(k: u32, j: u32, c: u32) -> i64 {
    let (k, j, c) = (i64::from(k), i64::from(j), i64::from(c));
    let odd = if j % 2 == 1 { 1 } else { 0 };
    (k - j + c) * (c + 1) + (choose2(k - j + c) + choose2(c)) * (j + 1 - 2 * c) + (j + 1) / 2 + odd
}

/// Push-forward of the singular locus of the reduced trace-curve fibres.
///
/// For `k = 1` the reduced trace curve is the base line itself and the class
/// is `E0 + E(1,0)`; the general node count would put `2` on `E(1,0)`.
pub fn delta_s(k: u32) -> DivisorClass {
    if k == 1 {
        return hurwitz_class(
            1,
            [
                (Generator::E0, Rational::one()),
                (Generator::E { j: 1, c: 0 }, Rational::one()),
            ],
        );
    }
    delta_s_general(k)
}

/// The general-`k` node count, without the `k = 1` exception of [`delta_s`].
pub fn delta_s_general(k: u32) -> DivisorClass {
    let kk = i64::from(k);
    let head = [
        (Generator::E0, q(kk * kk + kk, 2)),
        (Generator::E2, Rational::from(kk * kk - 5 * kk + 12)),
        (Generator::E3, q(3 * kk * kk - 13 * kk + 16, 2)),
    ];
    let tail = e_indices(k).map(|(j, c)| (Generator::E { j, c }, Rational::from(s_coeff(k, j, c))));
    hurwitz_class(k, head.into_iter().chain(tail))
}

/// `s_*(omega_s^2) = 1/2 tau_*(omega_tau^2) - tau_*(omega_tau . R) + 1/2 tau_*(R^2)`
/// with `R` the ramification of the quotient map; this is
/// `1/2 tau_*(omega_tau^2) - 3/4 q^* psi`.
pub fn s_omega_sq(k: u32) -> DivisorClass {
    let (omega_dot_r, r_sq) = involution_ramification_terms(k);
    let half = q(1, 2);
    &(&omega_tau_sq(k).scale(&half) - &omega_dot_r) + &r_sq.scale(&half)
}

/// `phihat^* lambda_{g^} = (s_*(omega_s^2) + delta_s) / 12`.
pub fn phihat_pull_lambda(k: u32) -> DivisorClass {
    (&s_omega_sq(k) + &delta_s(k)).scale(&q(1, 12))
}

/// `12 phihat^* lambda_{g^}` through the `u` coefficients:
/// `2/(6k-1) (u0 E0 + u2 E2 + u3 E3) + sum u(j,c) E(j,c)`, with `s(j,c)` read
/// off [`delta_s`].
pub fn twelve_phihat_lambda_closed(k: u32) -> DivisorClass {
    let kk = i64::from(k);
    let scale = q(2, 6 * kk - 1);
    let u0 = Rational::from(9 * kk * kk - 12 * kk + 3);
    let u2 = Rational::from(15 * kk);
    let u3 = Rational::from(3 * kk * kk - 8 * kk + 5);
    let head = [
        (Generator::E0, &scale * u0),
        (Generator::E2, &scale * u2),
        (Generator::E3, &scale * u3),
    ];
    let nodes = delta_s(k);
    let tail = e_indices(k).map(|(j, c)| {
        let gen = Generator::E { j, c };
        let s = nodes
            .constant_coefficient(gen)
            .expect("constant node count");
        let jj = i64::from(j);
        let poly =
            (27 * kk - 27) * jj * jj - 54 * (kk * kk - kk) * jj + (kk * kk + kk) * (6 * kk - 1);
        (gen, s - q(weight(j, c) * poly, 2 * (6 * kk - 1)))
    });
    hurwitz_class(k, head.into_iter().chain(tail))
}

/// `q^* psi`, shared by several checks.
pub fn q_psi(k: u32) -> DivisorClass {
    q_pullback(k)
        .apply(&psi_restricted(k))
        .expect("M0bSym class")
}
