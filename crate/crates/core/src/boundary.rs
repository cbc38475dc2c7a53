//! Pullbacks of boundary divisors of the moduli spaces of trace curves and
//! reduced trace curves to the Hurwitz space, obtained by counting the
//! non-separating and separating nodes of the semistable fibres.

use crate::basis::{Basis, Generator};
use crate::class::DivisorClass;
use crate::error::{Error, Result};
use crate::genus::genus_data;
use crate::map::ClassMap;
use crate::rational::Rational;
use crate::reduced::phihat_pull_lambda;
use crate::trace::{hurwitz_class, phi_pull_lambda};

fn check_index(what: &'static str, index: u32, max: u64) -> Result<()> {
    if u64::from(index) > max {
        return Err(Error::IndexOutOfRange {
            what,
            index: index.into(),
            min: 0,
            max: max as i64,
        });
    }
    Ok(())
}

fn r(n: i64) -> Rational {
    Rational::from(n)
}

/// `phi^* deltaP_{j'}` for `0 <= j' <= g'/2`.
pub fn phi_pull_boundary(k: u32, j_prime: u32) -> Result<DivisorClass> {
    check_index("delta'", j_prime, genus_data(k).g_prime / 2)?;
    let kk = i64::from(k);
    let class = match j_prime {
        0 => {
            let head = [
                (Generator::E0, r(4 * kk - 2)),
                (Generator::E2, r(4)),
                (Generator::E3, r(2)),
            ];
            let mixed = (2..=k).flat_map(|j| {
                (1..=j / 2).map(move |c| {
                    let (jj, cc) = (i64::from(j), i64::from(c));
                    (Generator::E { j, c }, r(2 * (kk - jj + cc) * (cc + 1) + jj))
                })
            });
            let pure = (2..=k).map(|j| (Generator::E { j, c: 0 }, r(i64::from(j))));
            hurwitz_class(k, head.into_iter().chain(mixed).chain(pure))
        }
        1 => hurwitz_class(k, [(Generator::E { j: 1, c: 0 }, r(2 * kk - 1))]),
        j if j <= k => hurwitz_class(
            k,
            [(Generator::E { j, c: 0 }, r(2 * kk - 2 * i64::from(j)))],
        ),
        _ => DivisorClass::zero(Basis::Hurwitz(k)),
    };
    Ok(class)
}

/// Correction to the node count of the reduced trace curve over `E(j,c)`.
fn epsilon(j: u32, c: u32) -> i64 {
    match (j, c) {
        (2, 1) => -1,
        _ if j.is_multiple_of(2) => 0,
        _ => 1,
    }
}

/// `phihat^* deltaH_j` for `0 <= j <= g^/2`.
pub fn phihat_pull_boundary(k: u32, j_hat: u32) -> Result<DivisorClass> {
    check_index("delta^", j_hat, genus_data(k).g_hat / 2)?;
    let kk = i64::from(k);
    let class = match j_hat {
        0 => {
            let head = [(Generator::E0, r(2 * kk - 2)), (Generator::E2, r(2))];
            let mixed = (2..=k).flat_map(|j| {
                (1..=j / 2).map(move |c| {
                    let (jj, cc) = (i64::from(j), i64::from(c));
                    let n = (kk - jj + cc) * (cc + 1) + (jj + 1) / 2 + epsilon(j, c);
                    (Generator::E { j, c }, r(n))
                })
            });
            let pure = (3..=k).map(|j| {
                let n = (i64::from(j) + 1) / 2 + epsilon(j, 0);
                (Generator::E { j, c: 0 }, r(n))
            });
            hurwitz_class(k, head.into_iter().chain(mixed).chain(pure))
        }
        j if j > k => DivisorClass::zero(Basis::Hurwitz(k)),
        j @ (1 | 2) => hurwitz_class(k, [(Generator::E { j, c: 0 }, r(kk - 1))]),
        j => hurwitz_class(k, [(Generator::E { j, c: 0 }, r(kk - i64::from(j)))]),
    };
    Ok(class)
}

/// `phi^*` from the trace-curve moduli space, on `lambdaP` and `deltaP_j`.
pub fn phi_pullback_map(k: u32) -> ClassMap {
    let mut m = ClassMap::zero(Basis::MgPrime(k), Basis::Hurwitz(k));
    m.set_row(Generator::LambdaP, phi_pull_lambda(k))
        .expect("lambda row");
    for j in 0..=k {
        if Basis::MgPrime(k).contains(&Generator::DeltaP(j)) {
            let row = phi_pull_boundary(k, j).expect("index checked");
            m.set_row(Generator::DeltaP(j), row).expect("delta row");
        }
    }
    m
}

/// `phihat^*` from the reduced-trace-curve moduli space.
pub fn phihat_pullback_map(k: u32) -> ClassMap {
    let mut m = ClassMap::zero(Basis::MgHat(k), Basis::Hurwitz(k));
    m.set_row(Generator::LambdaH, phihat_pull_lambda(k))
        .expect("lambda row");
    for j in 0..=k {
        if Basis::MgHat(k).contains(&Generator::DeltaH(j)) {
            let row = phihat_pull_boundary(k, j).expect("index checked");
            m.set_row(Generator::DeltaH(j), row).expect("delta row");
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(j: u32, c: u32) -> Generator {
        Generator::E { j, c }
    }

    #[test]
    fn phi_boundary_examples() {
        assert_eq!(
            phi_pull_boundary(3, 1).unwrap(),
            DivisorClass::from_terms(Basis::Hurwitz(3), [(e(1, 0), 5)]).unwrap()
        );
        let d0 = phi_pull_boundary(3, 0).unwrap();
        assert_eq!(d0.constant_coefficient(e(2, 1)).unwrap(), r(10));
        assert_eq!(d0.constant_coefficient(e(2, 0)).unwrap(), r(2));
        assert_eq!(d0.constant_coefficient(e(1, 0)).unwrap(), r(0));
        assert!(phi_pull_boundary(3, 7).unwrap().is_zero());
        assert!(phi_pull_boundary(3, 3).unwrap().is_zero());
        assert!(matches!(
            phi_pull_boundary(3, 18),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn phihat_boundary_examples() {
        assert_eq!(
            phihat_pull_boundary(3, 2).unwrap(),
            DivisorClass::from_terms(Basis::Hurwitz(3), [(e(2, 0), 2)]).unwrap()
        );
        let d0 = phihat_pull_boundary(3, 0).unwrap();
        assert_eq!(d0.constant_coefficient(e(2, 1)).unwrap(), r(4));
        assert_eq!(d0.constant_coefficient(e(3, 0)).unwrap(), r(3));
        assert_eq!(d0.constant_coefficient(e(3, 1)).unwrap(), r(2 + 2 + 1));
        assert_eq!(d0.constant_coefficient(Generator::E3).unwrap(), r(0));
        assert!(phihat_pull_boundary(3, 5).unwrap().is_zero());
        assert!(phihat_pull_boundary(3, 3).unwrap().is_zero());
        assert!(phihat_pull_boundary(3, 7).is_err());
        // g^ = 0 at k = 1
        assert!(phihat_pull_boundary(1, 1).is_err());
    }

    #[test]
    fn maps_have_expected_rows() {
        let m = phi_pullback_map(2);
        assert_eq!(
            m.row(Generator::DeltaP(1)).unwrap(),
            phi_pull_boundary(2, 1).unwrap()
        );
        assert!(m.row(Generator::DeltaP(6)).unwrap().is_zero());
        let mh = phihat_pullback_map(1);
        assert_eq!(mh.row(Generator::LambdaH).unwrap(), phihat_pull_lambda(1));
    }
}
