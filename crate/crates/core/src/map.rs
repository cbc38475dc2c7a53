use std::collections::BTreeMap;

use crate::basis::{Basis, Generator};
use crate::class::DivisorClass;
use crate::error::{Error, Result};

/// A linear map between class groups, given by the images of source
/// generators. Generators without a row map to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMap {
    source: Basis,
    target: Basis,
    rows: BTreeMap<Generator, DivisorClass>,
}

impl ClassMap {
    pub fn zero(source: Basis, target: Basis) -> Self {
        ClassMap {
            source,
            target,
            rows: BTreeMap::new(),
        }
    }

    pub fn identity(basis: Basis) -> Self {
        let rows = basis
            .generators()
            .into_iter()
            .map(|g| {
                let row = DivisorClass::generator(basis, g).expect("basis generator");
                (g, row)
            })
            .collect();
        ClassMap {
            source: basis,
            target: basis,
            rows,
        }
    }

    pub fn source(&self) -> Basis {
        self.source
    }

    pub fn target(&self) -> Basis {
        self.target
    }

    pub fn set_row(&mut self, gen: Generator, image: DivisorClass) -> Result<()> {
        if !self.source.contains(&gen) {
            return Err(Error::UnknownGenerator {
                generator: gen,
                basis: self.source,
            });
        }
        if image.basis() != self.target {
            return Err(Error::BasisMismatch {
                expected: self.target,
                found: image.basis(),
            });
        }
        if image.is_zero() {
            self.rows.remove(&gen);
        } else {
            self.rows.insert(gen, image);
        }
        Ok(())
    }

    pub fn row(&self, gen: Generator) -> Result<DivisorClass> {
        if !self.source.contains(&gen) {
            return Err(Error::UnknownGenerator {
                generator: gen,
                basis: self.source,
            });
        }
        Ok(self
            .rows
            .get(&gen)
            .cloned()
            .unwrap_or_else(|| DivisorClass::zero(self.target)))
    }

    /// `sum_g d[g] * row(g)`. Fails if `d` lives over another basis or if a
    /// symbolic coefficient meets a symbolic row.
    pub fn apply(&self, d: &DivisorClass) -> Result<DivisorClass> {
        if d.basis() != self.source {
            return Err(Error::BasisMismatch {
                expected: self.source,
                found: d.basis(),
            });
        }
        let mut out = DivisorClass::zero(self.target);
        for (gen, coeff) in d.terms() {
            let Some(row) = self.rows.get(gen) else {
                continue;
            };
            for (tgen, tcoeff) in row.terms() {
                out.add_to(*tgen, &coeff.try_mul(tcoeff)?)?;
            }
        }
        Ok(out)
    }

    /// `second ∘ first`.
    pub fn compose(second: &ClassMap, first: &ClassMap) -> Result<ClassMap> {
        if first.target != second.source {
            return Err(Error::BasisMismatch {
                expected: second.source,
                found: first.target,
            });
        }
        let mut out = ClassMap::zero(first.source, second.target);
        for (gen, row) in &first.rows {
            out.set_row(*gen, second.apply(row)?)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{AffineExpr, ExtSymbol};
    use crate::basis::Generator as G;

    #[test]
    fn identity_and_zero() {
        let b = Basis::Mg(2);
        let d = DivisorClass::from_terms(b, [(G::Lambda, 1), (G::Delta(0), -2)]).unwrap();
        assert_eq!(ClassMap::identity(b).apply(&d).unwrap(), d);
        let m = ClassMap::identity(b);
        assert!(m.apply(&DivisorClass::zero(b)).unwrap().is_zero());
    }

    #[test]
    fn apply_checks_source() {
        let m = ClassMap::identity(Basis::Mg(2));
        assert!(matches!(
            m.apply(&DivisorClass::zero(Basis::Mg(3))),
            Err(Error::BasisMismatch { .. })
        ));
    }

    #[test]
    fn compose_checks_bases() {
        let a = ClassMap::identity(Basis::Mg(2));
        let b = ClassMap::identity(Basis::Hurwitz(2));
        assert!(ClassMap::compose(&a, &b).is_err());
        assert_eq!(ClassMap::compose(&a, &a).unwrap(), a);
    }

    #[test]
    fn symbolic_times_symbolic_rejected() {
        let src = Basis::M0bSym(1);
        let tgt = Basis::Mg(1);
        let mut m = ClassMap::zero(src, tgt);
        let sym_row =
            DivisorClass::from_terms(tgt, [(G::Delta(1), AffineExpr::symbol(ExtSymbol::c(1)))])
                .unwrap();
        m.set_row(G::T2, sym_row).unwrap();
        let sym_in =
            DivisorClass::from_terms(src, [(G::T2, AffineExpr::symbol(ExtSymbol::b(1)))]).unwrap();
        assert_eq!(m.apply(&sym_in), Err(Error::NonLinearProduct));
    }

    #[test]
    fn set_row_validates() {
        let mut m = ClassMap::zero(Basis::M0bSym(1), Basis::Hurwitz(1));
        assert!(m
            .set_row(G::T3j(2), DivisorClass::zero(Basis::Hurwitz(1)))
            .is_err());
        assert!(m
            .set_row(G::T2, DivisorClass::zero(Basis::Hurwitz(2)))
            .is_err());
    }
}
