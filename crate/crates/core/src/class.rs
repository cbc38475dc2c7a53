use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::affine::{AffineExpr, ExtSymbol};
use crate::basis::{Basis, Generator};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A sparse divisor class over a fixed generator basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    basis: Basis,
    coeffs: BTreeMap<Generator, AffineExpr>,
}

impl DivisorClass {
    pub fn zero(basis: Basis) -> Self {
        DivisorClass {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn generator(basis: Basis, gen: Generator) -> Result<Self> {
        DivisorClass::from_terms(basis, [(gen, AffineExpr::from(1))])
    }

    /// Builds a class from `(generator, coefficient)` pairs; repeated
    /// generators accumulate. Fails on a generator outside the basis.
    pub fn from_terms<I, C>(basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Generator, C)>,
        C: Into<AffineExpr>,
    {
        let mut out = DivisorClass::zero(basis);
        for (gen, coeff) in terms {
            out.add_to(gen, &coeff.into())?;
        }
        Ok(out)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn add_to(&mut self, gen: Generator, coeff: &AffineExpr) -> Result<()> {
        if !self.basis.contains(&gen) {
            return Err(Error::UnknownGenerator {
                generator: gen,
                basis: self.basis,
            });
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.coeffs.entry(gen).or_default();
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.coeffs.remove(&gen);
        }
        Ok(())
    }

    /// Stored coefficient, or zero.
    pub fn coefficient(&self, gen: Generator) -> Result<AffineExpr> {
        if !self.basis.contains(&gen) {
            return Err(Error::UnknownGenerator {
                generator: gen,
                basis: self.basis,
            });
        }
        Ok(self.coeffs.get(&gen).cloned().unwrap_or_default())
    }

    /// Constant coefficient of `gen`, or an error if it is symbolic.
    pub fn constant_coefficient(&self, gen: Generator) -> Result<Rational> {
        self.coefficient(gen)?
            .as_constant()
            .cloned()
            .ok_or(Error::SymbolicCoefficient(gen))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, &AffineExpr)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.values().all(AffineExpr::is_constant)
    }

    pub fn scale(&self, factor: &Rational) -> DivisorClass {
        DivisorClass {
            basis: self.basis,
            coeffs: if factor.is_zero() {
                BTreeMap::new()
            } else {
                self.coeffs
                    .iter()
                    .map(|(g, c)| (*g, c.scale(factor)))
                    .collect()
            },
        }
    }

    pub fn try_add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis,
                found: other.basis,
            });
        }
        let mut out = self.clone();
        for (g, c) in &other.coeffs {
            out.add_to(*g, c)?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.try_add(&-other)
    }

    pub fn substitute(&self, values: &BTreeMap<ExtSymbol, Rational>) -> DivisorClass {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(g, c)| (*g, c.substitute(values)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        DivisorClass {
            basis: self.basis,
            coeffs,
        }
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        self.scale(&Rational::from(-1))
    }
}

/// # Panics
/// On a basis mismatch; use `try_add` for a checked sum.
impl Add<&DivisorClass> for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.try_add(rhs)
            .expect("adding classes over different bases")
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        &self + &rhs
    }
}

/// # Panics
/// On a basis mismatch; use `try_sub` for a checked difference.
impl Sub<&DivisorClass> for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.try_sub(rhs)
            .expect("subtracting classes over different bases")
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        &self - &rhs
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::Generator as G;

    #[test]
    fn coefficient_lookup() {
        let d = DivisorClass::from_terms(Basis::Hurwitz(2), [(G::E0, 2), (G::E { j: 1, c: 0 }, 1)])
            .unwrap();
        assert_eq!(d.coefficient(G::E0).unwrap(), AffineExpr::from(2));
        assert_eq!(d.coefficient(G::E3).unwrap(), AffineExpr::zero());
        assert!(matches!(
            d.coefficient(G::E2),
            Err(Error::UnknownGenerator { .. })
        ));
    }

    #[test]
    fn membership_enforced() {
        assert!(DivisorClass::from_terms(Basis::Hurwitz(2), [(G::E2, 1)]).is_err());
        assert!(DivisorClass::from_terms(Basis::Hurwitz(1), [(G::E3, 1)]).is_err());
        assert!(DivisorClass::from_terms(Basis::Hurwitz(3), [(G::E2, 1)]).is_ok());
    }

    #[test]
    fn cancellation_removes_terms() {
        let b = Basis::Mg(2);
        let d = DivisorClass::from_terms(b, [(G::Lambda, 1), (G::Delta(0), -2)]).unwrap();
        assert!((&d - &d).is_zero());
        let z = DivisorClass::from_terms(b, [(G::Lambda, 1), (G::Lambda, -1)]).unwrap();
        assert_eq!(z, DivisorClass::zero(b));
    }

    #[test]
    fn basis_mismatch() {
        let a = DivisorClass::zero(Basis::Mg(2));
        let b = DivisorClass::zero(Basis::Mg(3));
        assert!(matches!(a.try_add(&b), Err(Error::BasisMismatch { .. })));
    }
}
