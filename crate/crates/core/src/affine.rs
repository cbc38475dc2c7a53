//! Affine-linear expressions in the external coefficients `c_j`, `b_j`.
//!
//! These coefficients enter the push-forward of `E2` and `E3` to the moduli
//! space of genus-`2k` curves and are not computed here; they stay symbolic
//! unless a table of values is substituted.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    C,
    B,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::C => 'c',
            Family::B => 'b',
        }
    }
}

/// `c_j` or `b_j` with `j >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtSymbol {
    pub family: Family,
    pub index: u32,
}

impl ExtSymbol {
    pub fn c(index: u32) -> Self {
        ExtSymbol {
            family: Family::C,
            index,
        }
    }

    pub fn b(index: u32) -> Self {
        ExtSymbol {
            family: Family::B,
            index,
        }
    }
}

impl fmt::Display for ExtSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family.letter(), self.index)
    }
}

/// `constant + sum(coeff * symbol)`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AffineExpr {
    constant: Rational,
    terms: BTreeMap<ExtSymbol, Rational>,
}

impl AffineExpr {
    pub fn zero() -> Self {
        AffineExpr::default()
    }

    pub fn constant(value: Rational) -> Self {
        AffineExpr {
            constant: value,
            terms: BTreeMap::new(),
        }
    }

    pub fn symbol(sym: ExtSymbol) -> Self {
        AffineExpr::term(Rational::one(), sym)
    }

    pub fn term(coeff: Rational, sym: ExtSymbol) -> Self {
        let mut e = AffineExpr::zero();
        e.add_term(sym, coeff);
        e
    }

    pub fn constant_part(&self) -> &Rational {
        &self.constant
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtSymbol, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient_of(&self, sym: ExtSymbol) -> Rational {
        self.terms.get(&sym).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when no symbol is present.
    pub fn as_constant(&self) -> Option<&Rational> {
        self.is_constant().then_some(&self.constant)
    }

    fn add_term(&mut self, sym: ExtSymbol, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(sym).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&sym);
        }
    }

    pub fn scale(&self, factor: &Rational) -> AffineExpr {
        if factor.is_zero() {
            return AffineExpr::zero();
        }
        AffineExpr {
            constant: &self.constant * factor,
            terms: self.terms.iter().map(|(s, c)| (*s, c * factor)).collect(),
        }
    }

    /// Product, defined when at least one side is constant.
    pub fn try_mul(&self, other: &AffineExpr) -> Result<AffineExpr> {
        match (self.as_constant(), other.as_constant()) {
            (Some(a), _) => Ok(other.scale(a)),
            (_, Some(b)) => Ok(self.scale(b)),
            _ => Err(Error::NonLinearProduct),
        }
    }

    /// Replaces every symbol found in `values`; the rest stay symbolic.
    pub fn substitute(&self, values: &BTreeMap<ExtSymbol, Rational>) -> AffineExpr {
        let mut out = AffineExpr::constant(self.constant.clone());
        for (sym, coeff) in &self.terms {
            match values.get(sym) {
                Some(v) => out.constant += coeff * v,
                None => out.add_term(*sym, coeff.clone()),
            }
        }
        out
    }
}

impl From<Rational> for AffineExpr {
    fn from(r: Rational) -> Self {
        AffineExpr::constant(r)
    }
}

impl From<i64> for AffineExpr {
    fn from(n: i64) -> Self {
        AffineExpr::constant(n.into())
    }
}

impl Add<&AffineExpr> for &AffineExpr {
    type Output = AffineExpr;
    fn add(self, rhs: &AffineExpr) -> AffineExpr {
        let mut out = self.clone();
        out.constant += &rhs.constant;
        for (s, c) in &rhs.terms {
            out.add_term(*s, c.clone());
        }
        out
    }
}

impl Add for AffineExpr {
    type Output = AffineExpr;
    fn add(self, rhs: AffineExpr) -> AffineExpr {
        &self + &rhs
    }
}

impl Neg for &AffineExpr {
    type Output = AffineExpr;
    fn neg(self) -> AffineExpr {
        self.scale(&Rational::from(-1))
    }
}

impl Neg for AffineExpr {
    type Output = AffineExpr;
    fn neg(self) -> AffineExpr {
        -&self
    }
}

impl Sub<&AffineExpr> for &AffineExpr {
    type Output = AffineExpr;
    fn sub(self, rhs: &AffineExpr) -> AffineExpr {
        self + &(-rhs)
    }
}

impl Sub for AffineExpr {
    type Output = AffineExpr;
    fn sub(self, rhs: AffineExpr) -> AffineExpr {
        &self - &rhs
    }
}

impl Mul<&Rational> for &AffineExpr {
    type Output = AffineExpr;
    fn mul(self, rhs: &Rational) -> AffineExpr {
        self.scale(rhs)
    }
}

/// `3/1`, `1/2*c_1-3/4*b_2`, `5/1+1/1*c_3`.
impl fmt::Display for AffineExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.constant.is_zero() || self.terms.is_empty() {
            write!(f, "{}", self.constant)?;
            first = false;
        }
        for (sym, coeff) in &self.terms {
            if !first && !coeff.is_negative() {
                f.write_str("+")?;
            }
            write!(f, "{coeff}*{sym}")?;
            first = false;
        }
        Ok(())
    }
}
