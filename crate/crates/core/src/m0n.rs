//! Boundary combinatorics of the moduli space of `b`-pointed stable rational
//! curves, and the symmetric classes `psi`, `delta`, `kappa` and `K`.
//!
//! A boundary divisor is labelled by a subset `L` of `{1..b}` with
//! `2 <= #L <= b - 2`, up to complement. The normalized label is the
//! representative meeting `{1, 2, 3}` in at most one point.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::basis::{Basis, Generator};
use crate::class::DivisorClass;
use crate::error::{Error, Result};
use crate::map::ClassMap;
use crate::rational::{q, Rational};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedSet {
    b: u32,
    members: BTreeSet<u32>,
}

impl MarkedSet {
    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn members(&self) -> &BTreeSet<u32> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn complement_members(&self) -> BTreeSet<u32> {
        (1..=self.b).filter(|i| !self.members.contains(i)).collect()
    }

    pub fn complement(&self) -> MarkedSet {
        MarkedSet {
            b: self.b,
            members: self.complement_members(),
        }
    }
}

impl fmt::Display for MarkedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// Normalized label of the boundary divisor cut out by `set`.
pub fn normalize(b: u32, set: impl IntoIterator<Item = u32>) -> Result<MarkedSet> {
    if b < 4 {
        return Err(Error::TooFewPoints(b));
    }
    let mut members = BTreeSet::new();
    for element in set {
        if !(1..=b).contains(&element) {
            return Err(Error::MarkedSetElement { element, b });
        }
        members.insert(element);
    }
    let size = members.len();
    if size < 2 || size > b as usize - 2 {
        return Err(Error::MarkedSetSize { size, b });
    }
    let raw = MarkedSet { b, members };
    if raw.members.range(1..=3).count() <= 1 {
        Ok(raw)
    } else {
        Ok(raw.complement())
    }
}

/// Whether the boundary divisors labelled `a` and `b` meet: the union of the
/// labels has size `#a`, `#b`, `#a + #b` or `b`.
pub fn intersect_nonempty(a: &MarkedSet, b: &MarkedSet) -> Result<bool> {
    if a.b != b.b {
        return Err(Error::MismatchedMarkedSets(a.b, b.b));
    }
    let union = a.members.union(&b.members).count();
    Ok(union == a.len() || union == b.len() || union == a.len() + b.len() || union == a.b as usize)
}

/// Pullback along the map forgetting point `b + 1`: the two labels
/// `L` and `L ∪ {b+1}` over `b + 1` points.
pub fn forgetful_pullback(s: &MarkedSet) -> (MarkedSet, MarkedSet) {
    let b = s.b + 1;
    let lower = normalize(b, s.members.iter().copied()).expect("label stays admissible");
    let upper = normalize(b, s.members.iter().copied().chain([b])).expect("label stays admissible");
    (lower, upper)
}

/// Number of boundary divisors, `2^(b-1) - b - 1`.
pub fn count_boundary(b: u32) -> Result<BigUint> {
    if b < 4 {
        return Err(Error::TooFewPoints(b));
    }
    Ok((BigUint::from(1u32) << (b - 1)) - BigUint::from(b) - 1u32)
}

/// All normalized boundary labels, by exhaustive enumeration of subsets.
///
/// # Panics
/// If `b > 24`; the enumeration is exponential.
pub fn enumerate_boundary(b: u32) -> Result<Vec<MarkedSet>> {
    if b < 4 {
        return Err(Error::TooFewPoints(b));
    }
    assert!(b <= 24, "enumeration is exponential in b");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << b) {
        let size = mask.count_ones();
        if size < 2 || size > b - 2 {
            continue;
        }
        out.insert(normalize(
            b,
            (1..=b).filter(|i| mask & (1 << (i - 1)) != 0),
        )?);
    }
    Ok(out.into_iter().collect())
}

fn b_of(k: u32) -> i64 {
    assert!(k >= 1, "k must be positive");
    6 * i64::from(k)
}

/// `psi = sum_{j=2}^{b/2} (b-j) j / (b-1) T_j` over all symmetric boundary classes.
pub fn psi_full(b: u32) -> Result<DivisorClass> {
    if b < 4 {
        return Err(Error::TooFewPoints(b));
    }
    let bb = i64::from(b);
    DivisorClass::from_terms(
        Basis::M0bFull(b),
        (2..=b / 2).map(|j| {
            let j64 = i64::from(j);
            (Generator::T(j), q((bb - j64) * j64, bb - 1))
        }),
    )
}

/// Sum of all symmetric boundary classes.
pub fn delta_full(b: u32) -> Result<DivisorClass> {
    if b < 4 {
        return Err(Error::TooFewPoints(b));
    }
    DivisorClass::from_terms(Basis::M0bFull(b), (2..=b / 2).map(|j| (Generator::T(j), 1)))
}

/// Projection from all symmetric classes at `b = 6k` onto `T2, T3j(1..k)`;
/// the other classes pull back to zero on the Hurwitz space.
pub fn restrict_to_sym(k: u32) -> ClassMap {
    let b = 6 * k;
    let source = Basis::M0bFull(b);
    let target = Basis::M0bSym(k);
    let mut m = ClassMap::zero(source, target);
    let one = |g| DivisorClass::generator(target, g).expect("generator in basis");
    m.set_row(Generator::T(2), one(Generator::T2)).expect("row");
    for j in 1..=k {
        m.set_row(Generator::T(3 * j), one(Generator::T3j(j)))
            .expect("row");
    }
    m
}

pub fn psi_restricted(k: u32) -> DivisorClass {
    let b = b_of(k);
    let terms = std::iter::once((Generator::T2, q(2 * (b - 2), b - 1))).chain((1..=k).map(|j| {
        let j3 = 3 * i64::from(j);
        (Generator::T3j(j), q(j3 * (b - j3), b - 1))
    }));
    DivisorClass::from_terms(Basis::M0bSym(k), terms).expect("M0bSym generators")
}

/// `T2 + sum_j T3j(j)`.
pub fn delta_restricted(k: u32) -> DivisorClass {
    let terms = std::iter::once(Generator::T2)
        .chain((1..=k).map(Generator::T3j))
        .map(|g| (g, 1));
    DivisorClass::from_terms(Basis::M0bSym(k), terms).expect("M0bSym generators")
}

/// `kappa = psi - delta`, restricted to `T2, T3j`.
pub fn kappa_class(k: u32) -> DivisorClass {
    let b = b_of(k);
    let coeff = |i: i64| q((i - 1) * (b - i - 1), b - 1);
    let terms = std::iter::once((Generator::T2, coeff(2)))
        .chain((1..=k).map(|j| (Generator::T3j(j), coeff(3 * i64::from(j)))));
    DivisorClass::from_terms(Basis::M0bSym(k), terms).expect("M0bSym generators")
}

/// Canonical class restricted to `T2, T3j`.
pub fn canonical_class_m0b(k: u32) -> DivisorClass {
    let b = b_of(k);
    let terms = std::iter::once((Generator::T2, q(-2, b - 1))).chain((1..=k).map(|j| {
        let i = 3 * i64::from(j);
        (Generator::T3j(j), q(i * (b - i), b - 1) - Rational::from(2))
    }));
    DivisorClass::from_terms(Basis::M0bSym(k), terms).expect("M0bSym generators")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(b: u32, xs: &[u32]) -> MarkedSet {
        normalize(b, xs.iter().copied()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(set(6, &[1, 2]).to_string(), "{3,4,5,6}");
        assert_eq!(set(6, &[4, 5]).to_string(), "{4,5}");
        assert_eq!(set(6, &[1, 2, 3]).to_string(), "{4,5,6}");
    }

    #[test]
    fn normalize_errors() {
        assert!(matches!(
            normalize(6, [1]),
            Err(Error::MarkedSetSize { .. })
        ));
        assert!(matches!(
            normalize(6, [1, 2, 3, 4, 5]),
            Err(Error::MarkedSetSize { .. })
        ));
        assert!(matches!(
            normalize(6, [0, 2]),
            Err(Error::MarkedSetElement { .. })
        ));
        assert!(matches!(
            normalize(6, [7, 2]),
            Err(Error::MarkedSetElement { .. })
        ));
        assert!(matches!(normalize(3, [1, 2]), Err(Error::TooFewPoints(3))));
    }

    #[test]
    fn intersect_examples() {
        assert!(intersect_nonempty(&set(8, &[4, 5]), &set(8, &[4, 5, 6])).unwrap());
        assert!(intersect_nonempty(&set(8, &[4, 5]), &set(8, &[6, 7])).unwrap());
        assert!(!intersect_nonempty(&set(8, &[4, 5]), &set(8, &[5, 6])).unwrap());
        assert!(intersect_nonempty(&set(8, &[4, 5]), &set(9, &[5, 6])).is_err());
    }

    #[test]
    fn pullback_examples() {
        let (a, b) = forgetful_pullback(&set(6, &[4, 5]));
        assert_eq!(
            (a.b(), a.to_string(), b.to_string()),
            (7, "{4,5}".into(), "{4,5,7}".into())
        );
        let (a, b) = forgetful_pullback(&set(6, &[3, 4, 5, 6]));
        assert_eq!(a, set(7, &[3, 4, 5, 6]));
        assert_eq!(b, set(7, &[3, 4, 5, 6, 7]));
    }

    #[test]
    fn pullback_count() {
        for b in 4..=10 {
            let mut seen = BTreeSet::new();
            for s in enumerate_boundary(b).unwrap() {
                let (x, y) = forgetful_pullback(&s);
                seen.insert(x);
                seen.insert(y);
            }
            let before = count_boundary(b).unwrap();
            assert_eq!(BigUint::from(seen.len()), before * 2u32);
            // the remaining divisors are the images of the b sections
            for j in 1..=b {
                seen.insert(set(b + 1, &[j, b + 1]));
            }
            assert_eq!(BigUint::from(seen.len()), count_boundary(b + 1).unwrap());
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_boundary(4).unwrap(), BigUint::from(3u32));
        assert_eq!(count_boundary(5).unwrap(), BigUint::from(10u32));
        assert_eq!(count_boundary(6).unwrap(), BigUint::from(25u32));
        for b in 4..=12 {
            assert_eq!(
                BigUint::from(enumerate_boundary(b).unwrap().len()),
                count_boundary(b).unwrap()
            );
        }
    }

    #[test]
    fn psi_examples() {
        let p6 = psi_full(6).unwrap();
        assert_eq!(p6.constant_coefficient(Generator::T(2)).unwrap(), q(8, 5));
        assert_eq!(p6.constant_coefficient(Generator::T(3)).unwrap(), q(9, 5));
        assert_eq!(
            psi_full(12)
                .unwrap()
                .constant_coefficient(Generator::T(6))
                .unwrap(),
            q(36, 11)
        );

        let r1 = psi_restricted(1);
        assert_eq!(
            r1,
            DivisorClass::from_terms(
                Basis::M0bSym(1),
                [(Generator::T2, q(8, 5)), (Generator::T3j(1), q(9, 5))]
            )
            .unwrap()
        );
        assert_eq!(
            psi_restricted(2)
                .constant_coefficient(Generator::T3j(2))
                .unwrap(),
            q(36, 11)
        );
        for k in 1..=6 {
            assert_eq!(
                restrict_to_sym(k).apply(&psi_full(6 * k).unwrap()).unwrap(),
                psi_restricted(k)
            );
        }
    }

    #[test]
    fn kappa_examples() {
        let k1 = kappa_class(1);
        assert_eq!(k1.constant_coefficient(Generator::T2).unwrap(), q(3, 5));
        assert_eq!(k1.constant_coefficient(Generator::T3j(1)).unwrap(), q(4, 5));
        assert_eq!(
            kappa_class(3).constant_coefficient(Generator::T2).unwrap(),
            q(15, 17)
        );
        for k in 1..=20 {
            assert_eq!(&kappa_class(k) + &delta_restricted(k), psi_restricted(k));
        }
    }

    #[test]
    fn kappa_full_identity() {
        for b in 4..=40u32 {
            let kappa = &psi_full(b).unwrap() - &delta_full(b).unwrap();
            let bb = i64::from(b);
            for j in 2..=b / 2 {
                let jj = i64::from(j);
                assert_eq!(
                    kappa.constant_coefficient(Generator::T(j)).unwrap(),
                    q((jj - 1) * (bb - jj - 1), bb - 1)
                );
            }
        }
    }

    #[test]
    fn canonical_examples() {
        let c1 = canonical_class_m0b(1);
        assert_eq!(c1.constant_coefficient(Generator::T2).unwrap(), q(-2, 5));
        assert_eq!(
            c1.constant_coefficient(Generator::T3j(1)).unwrap(),
            q(-1, 5)
        );
        assert_eq!(
            canonical_class_m0b(2)
                .constant_coefficient(Generator::T3j(2))
                .unwrap(),
            q(14, 11)
        );
    }
}
