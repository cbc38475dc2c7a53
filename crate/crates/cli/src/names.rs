//! Class identifiers accepted by `class` and `table coefficients:<name>`.

use std::fmt;
use std::str::FromStr;

use trace_divisors::boundary::{phi_pull_boundary, phihat_pull_boundary};
use trace_divisors::pushforward::{
    eisenbud_harris, p_q_kappa, prym_pullbacks, theorem_lambda, theorem_lambda_hat,
};
use trace_divisors::reduced::{delta_s, phihat_pull_lambda, s_omega_sq};
use trace_divisors::trace::{delta_tau, omega_tau_sq, phi_pull_lambda, q_pullback};
use trace_divisors::{DivisorClass, Generator, Normalization};

use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassName {
    DeltaTau,
    OmegaTauSq,
    DeltaS,
    SOmegaSq,
    PhiLambda,
    PhihatLambda,
    PhiDelta(u32),
    PhihatDelta(u32),
    QT2,
    QT3j(u32),
    PPhiLambda,
    PPhihatLambda,
    PQKappa,
    EhDivisor,
    PrymHodge,
    PrymBoundary,
}

const PLAIN: &[(&str, ClassName)] = &[
    ("delta-tau", ClassName::DeltaTau),
    ("omega-tau-sq", ClassName::OmegaTauSq),
    ("delta-s", ClassName::DeltaS),
    ("s-omega-sq", ClassName::SOmegaSq),
    ("phi-lambda", ClassName::PhiLambda),
    ("phihat-lambda", ClassName::PhihatLambda),
    ("q-T2", ClassName::QT2),
    ("p-phi-lambda", ClassName::PPhiLambda),
    ("p-phihat-lambda", ClassName::PPhihatLambda),
    ("p-q-kappa", ClassName::PQKappa),
    ("eh-divisor", ClassName::EhDivisor),
    ("prym-hodge", ClassName::PrymHodge),
    ("prym-boundary", ClassName::PrymBoundary),
];

type Indexed = fn(u32) -> ClassName;

const INDEXED: &[(&str, Indexed)] = &[
    ("phi-delta", ClassName::PhiDelta),
    ("phihat-delta", ClassName::PhihatDelta),
    ("q-T3j", ClassName::QT3j),
];

impl FromStr for ClassName {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        if let Some((_, name)) = PLAIN.iter().find(|(n, _)| *n == s) {
            return Ok(*name);
        }
        let unknown = || CliError::usage(format!("unknown class `{s}`"));
        let (head, index) = s.split_once(':').ok_or_else(unknown)?;
        let (_, ctor) = INDEXED
            .iter()
            .find(|(n, _)| *n == head)
            .ok_or_else(unknown)?;
        if index.is_empty()
            || !index.bytes().all(|b| b.is_ascii_digit())
            || (index.len() > 1 && index.starts_with('0'))
        {
            return Err(CliError::usage(format!("bad index in `{s}`")));
        }
        let j = index
            .parse()
            .map_err(|_| CliError::usage(format!("index out of range in `{s}`")))?;
        Ok(ctor(j))
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassName::PhiDelta(j) => write!(f, "phi-delta:{j}"),
            ClassName::PhihatDelta(j) => write!(f, "phihat-delta:{j}"),
            ClassName::QT3j(j) => write!(f, "q-T3j:{j}"),
            plain => {
                let (name, _) = PLAIN.iter().find(|(_, c)| c == plain).expect("listed");
                f.write_str(name)
            }
        }
    }
}

impl ClassName {
    /// Whether the class lives on `M_g` and so depends on the normalization.
    pub fn is_pushed(self) -> bool {
        matches!(
            self,
            ClassName::PPhiLambda
                | ClassName::PPhihatLambda
                | ClassName::PQKappa
                | ClassName::EhDivisor
        )
    }

    /// Evaluates the class. Pushed classes use `norm`; the others ignore it.
    pub fn evaluate(self, k: u32, norm: Normalization) -> CliResult<DivisorClass> {
        crate::check_k(k)?;
        let class = match self {
            ClassName::DeltaTau => delta_tau(k),
            ClassName::OmegaTauSq => omega_tau_sq(k),
            ClassName::DeltaS => delta_s(k),
            ClassName::SOmegaSq => s_omega_sq(k),
            ClassName::PhiLambda => phi_pull_lambda(k),
            ClassName::PhihatLambda => phihat_pull_lambda(k),
            ClassName::PhiDelta(j) => phi_pull_boundary(k, j)?,
            ClassName::PhihatDelta(j) => phihat_pull_boundary(k, j)?,
            ClassName::QT2 => q_pullback(k).row(Generator::T2)?,
            ClassName::QT3j(j) => q_pullback(k).row(Generator::T3j(j))?,
            ClassName::PPhiLambda => theorem_lambda(k, norm),
            ClassName::PPhihatLambda => theorem_lambda_hat(k, norm),
            ClassName::PQKappa => p_q_kappa(k, norm),
            ClassName::EhDivisor => eisenbud_harris(k, norm),
            ClassName::PrymHodge => prym_pullbacks(k).0,
            ClassName::PrymBoundary => prym_pullbacks(k).1,
        };
        Ok(class)
    }

    /// The normalization recorded alongside an evaluated class.
    pub fn effective_normalization(self, requested: Normalization) -> Normalization {
        if self.is_pushed() {
            requested
        } else {
            Normalization::Raw
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for name in [
            "delta-tau",
            "phi-delta:1",
            "q-T3j:12",
            "prym-boundary",
            "p-q-kappa",
        ] {
            assert_eq!(name.parse::<ClassName>().unwrap().to_string(), name);
        }
        for bad in [
            "",
            "delta",
            "phi-delta",
            "phi-delta:",
            "phi-delta:01",
            "phi-delta:x",
            "q-T2:1",
            "phi-delta:99999999999",
        ] {
            assert!(bad.parse::<ClassName>().is_err(), "{bad}");
        }
    }

    #[test]
    fn evaluation_errors() {
        assert!(ClassName::QT3j(4).evaluate(3, Normalization::Raw).is_err());
        assert!(ClassName::DeltaTau.evaluate(0, Normalization::Raw).is_err());
        assert!(ClassName::PhiDelta(1)
            .evaluate(3, Normalization::Raw)
            .is_ok());
    }
}
