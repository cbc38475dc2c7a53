//! The `divisor-class/1` and `external-coeffs/1` JSON documents.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use trace_divisors::affine::{AffineExpr, ExtSymbol, Family};
use trace_divisors::{Basis, DivisorClass, ExternalCoeffs, Generator, Normalization, Rational};

use crate::{CliError, CliResult};

pub const CLASS_SCHEMA: &str = "divisor-class/1";
pub const EXTERNALS_SCHEMA: &str = "external-coeffs/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientDoc {
    #[serde(rename = "const")]
    pub constant: String,
    pub c: BTreeMap<String, String>,
    pub b: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDoc {
    pub schema: String,
    pub k: u32,
    pub basis: String,
    pub normalization: String,
    pub coefficients: BTreeMap<String, CoefficientDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExternalsDoc {
    pub schema: String,
    pub k: u32,
    pub c: BTreeMap<String, String>,
    pub b: BTreeMap<String, String>,
}

pub fn normalization_name(n: Normalization) -> &'static str {
    match n {
        Normalization::Raw => "raw",
        Normalization::PerFactorialB => "per-factorial-b",
    }
}

pub fn parse_normalization(s: &str) -> CliResult<Normalization> {
    match s {
        "raw" => Ok(Normalization::Raw),
        "per-factorial-b" => Ok(Normalization::PerFactorialB),
        other => Err(CliError::usage(format!("unknown normalization `{other}`"))),
    }
}

/// Parses `Kind(n)`, e.g. `Hurwitz(3)`.
pub fn parse_basis(s: &str) -> CliResult<Basis> {
    let bad = || CliError::usage(format!("unknown basis `{s}`"));
    let (kind, rest) = s.split_once('(').ok_or_else(bad)?;
    let param = rest.strip_suffix(')').ok_or_else(bad)?;
    if param.is_empty()
        || !param.bytes().all(|b| b.is_ascii_digit())
        || (param.len() > 1 && param.starts_with('0'))
    {
        return Err(bad());
    }
    let param: u32 = param.parse().map_err(|_| bad())?;
    Basis::from_parts(kind, param).ok_or_else(bad)
}

fn parse_rational(s: &str) -> CliResult<Rational> {
    Ok(s.parse::<Rational>()?)
}

fn parse_index(s: &str) -> CliResult<u32> {
    let bad = || CliError::usage(format!("bad index `{s}`"));
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0'))
    {
        return Err(bad());
    }
    s.parse().map_err(|_| bad())
}

fn coefficient_doc(e: &AffineExpr) -> CoefficientDoc {
    let mut doc = CoefficientDoc {
        constant: e.constant_part().to_string(),
        c: BTreeMap::new(),
        b: BTreeMap::new(),
    };
    for (sym, coeff) in e.terms() {
        let target = match sym.family {
            Family::C => &mut doc.c,
            Family::B => &mut doc.b,
        };
        target.insert(sym.index.to_string(), coeff.to_string());
    }
    doc
}

fn coefficient_from_doc(doc: &CoefficientDoc) -> CliResult<AffineExpr> {
    let mut e = AffineExpr::constant(parse_rational(&doc.constant)?);
    for (family, table) in [(Family::C, &doc.c), (Family::B, &doc.b)] {
        for (index, value) in table {
            let sym = ExtSymbol {
                family,
                index: parse_index(index)?,
            };
            if sym.index == 0 {
                return Err(CliError::usage("symbol indices start at 1"));
            }
            e = &e + &AffineExpr::term(parse_rational(value)?, sym);
        }
    }
    Ok(e)
}

pub fn class_to_doc(d: &DivisorClass, norm: Normalization) -> ClassDoc {
    let basis = d.basis();
    ClassDoc {
        schema: CLASS_SCHEMA.into(),
        k: basis_k(basis),
        basis: basis.to_string(),
        normalization: normalization_name(norm).into(),
        coefficients: d
            .terms()
            .map(|(g, e)| (g.to_string(), coefficient_doc(e)))
            .collect(),
    }
}

/// `k` of a basis; for the full boundary basis over `b` points, `b / 6`
/// rounded down.
fn basis_k(basis: Basis) -> u32 {
    match basis {
        Basis::M0bFull(b) => b / 6,
        other => other.parameter(),
    }
}

pub fn doc_to_class(doc: &ClassDoc) -> CliResult<(DivisorClass, Normalization)> {
    if doc.schema != CLASS_SCHEMA {
        return Err(CliError::usage(format!(
            "expected schema `{CLASS_SCHEMA}`, got `{}`",
            doc.schema
        )));
    }
    let basis = parse_basis(&doc.basis)?;
    if basis_k(basis) != doc.k {
        return Err(CliError::usage(format!(
            "k = {} does not match basis {basis}",
            doc.k
        )));
    }
    let norm = parse_normalization(&doc.normalization)?;
    let mut d = DivisorClass::zero(basis);
    for (name, coeff) in &doc.coefficients {
        let gen: Generator = name.parse()?;
        let e = coefficient_from_doc(coeff)?;
        if e.is_zero() {
            return Err(CliError::usage(format!(
                "zero coefficient stored for {name}"
            )));
        }
        d.add_to(gen, &e)?;
    }
    Ok((d, norm))
}

pub fn class_to_json(d: &DivisorClass, norm: Normalization) -> String {
    let mut s = serde_json::to_string_pretty(&class_to_doc(d, norm)).expect("serializable");
    s.push('\n');
    s
}

pub fn class_from_json(text: &str) -> CliResult<(DivisorClass, Normalization)> {
    let doc: ClassDoc = serde_json::from_str(text)?;
    doc_to_class(&doc)
}

pub fn externals_from_json(text: &str) -> CliResult<ExternalCoeffs> {
    let doc: ExternalsDoc = serde_json::from_str(text)?;
    if doc.schema != EXTERNALS_SCHEMA {
        return Err(CliError::usage(format!(
            "expected schema `{EXTERNALS_SCHEMA}`, got `{}`",
            doc.schema
        )));
    }
    let table = |m: &BTreeMap<String, String>| -> CliResult<BTreeMap<u32, Rational>> {
        let mut out = BTreeMap::new();
        for (index, value) in m {
            if out
                .insert(parse_index(index)?, parse_rational(value)?)
                .is_some()
            {
                return Err(CliError::usage(format!("repeated index `{index}`")));
            }
        }
        Ok(out)
    };
    Ok(ExternalCoeffs::new(doc.k, table(&doc.c)?, table(&doc.b)?)?)
}

pub fn externals_to_json(ext: &ExternalCoeffs) -> String {
    let table = |f: &dyn Fn(u32) -> String| (1..=ext.k()).map(|j| (j.to_string(), f(j))).collect();
    let doc = ExternalsDoc {
        schema: EXTERNALS_SCHEMA.into(),
        k: ext.k(),
        c: table(&|j| ext.c(j).to_string()),
        b: table(&|j| ext.b(j).to_string()),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}
