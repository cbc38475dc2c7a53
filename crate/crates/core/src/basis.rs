//! Generator bases of the Picard groups the correspondences act on.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::genus::genus_data;

/// A generator basis. All but `M0bFull` are parametrized by `k`; `M0bFull` by
/// the number of marked points `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Boundary divisors `E0, E2, E3, E(j,c)` of the normalized Hurwitz space.
    Hurwitz(u32),
    /// `lambda, delta_0..delta_k` on the moduli space of genus `2k` curves.
    Mg(u32),
    /// `T2, T3j(1..k)` on the moduli space of `6k`-pointed rational curves.
    M0bSym(u32),
    /// `lambdaP, deltaP_0..deltaP_{g'/2}` for the trace curve genus.
    MgPrime(u32),
    /// `lambdaH, deltaH_0..deltaH_{g^/2}` for the reduced trace curve genus.
    MgHat(u32),
    /// All symmetric boundary classes `T_j`, `2 <= j <= b/2`.
    M0bFull(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E0,
    E2,
    E3,
    E { j: u32, c: u32 },
    Lambda,
    Delta(u32),
    T2,
    T3j(u32),
    LambdaP,
    DeltaP(u32),
    LambdaH,
    DeltaH(u32),
    T(u32),
}

impl Basis {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Basis::Hurwitz(_) => "Hurwitz",
            Basis::Mg(_) => "Mg",
            Basis::M0bSym(_) => "M0bSym",
            Basis::MgPrime(_) => "MgPrime",
            Basis::MgHat(_) => "MgHat",
            Basis::M0bFull(_) => "M0bFull",
        }
    }

    /// `k`, or `b` for `M0bFull`.
    pub fn parameter(&self) -> u32 {
        match *self {
            Basis::Hurwitz(k)
            | Basis::Mg(k)
            | Basis::M0bSym(k)
            | Basis::MgPrime(k)
            | Basis::MgHat(k)
            | Basis::M0bFull(k) => k,
        }
    }

    pub fn from_parts(kind: &str, parameter: u32) -> Option<Basis> {
        let ctor = match kind {
            "Hurwitz" => Basis::Hurwitz,
            "Mg" => Basis::Mg,
            "M0bSym" => Basis::M0bSym,
            "MgPrime" => Basis::MgPrime,
            "MgHat" => Basis::MgHat,
            "M0bFull" => {
                return (parameter >= 4).then_some(Basis::M0bFull(parameter));
            }
            _ => return None,
        };
        (parameter >= 1).then(|| ctor(parameter))
    }

    pub fn contains(&self, gen: &Generator) -> bool {
        use Generator as G;
        match (*self, *gen) {
            (Basis::Hurwitz(_), G::E0) => true,
            (Basis::Hurwitz(k), G::E3) => k >= 2,
            (Basis::Hurwitz(k), G::E2) => k >= 3,
            (Basis::Hurwitz(k), G::E { j, c }) => (1..=k).contains(&j) && c <= j / 2,
            (Basis::Mg(_), G::Lambda) => true,
            (Basis::Mg(k), G::Delta(j)) => j <= k,
            (Basis::M0bSym(_), G::T2) => true,
            (Basis::M0bSym(k), G::T3j(j)) => (1..=k).contains(&j),
            (Basis::MgPrime(_), G::LambdaP) => true,
            (Basis::MgPrime(k), G::DeltaP(j)) => u64::from(j) <= genus_data(k).g_prime / 2,
            (Basis::MgHat(_), G::LambdaH) => true,
            (Basis::MgHat(k), G::DeltaH(j)) => u64::from(j) <= genus_data(k).g_hat / 2,
            (Basis::M0bFull(b), G::T(j)) => (2..=b / 2).contains(&j),
            _ => false,
        }
    }

    /// Generators in canonical order.
    pub fn generators(&self) -> Vec<Generator> {
        use Generator as G;
        match *self {
            Basis::Hurwitz(k) => {
                let mut out = vec![G::E0];
                if k >= 3 {
                    out.push(G::E2);
                }
                if k >= 2 {
                    out.push(G::E3);
                }
                out.extend(e_indices(k).map(|(j, c)| G::E { j, c }));
                out
            }
            Basis::Mg(k) => std::iter::once(G::Lambda)
                .chain((0..=k).map(G::Delta))
                .collect(),
            Basis::M0bSym(k) => std::iter::once(G::T2).chain((1..=k).map(G::T3j)).collect(),
            Basis::MgPrime(k) => std::iter::once(G::LambdaP)
                .chain((0..=(genus_data(k).g_prime / 2) as u32).map(G::DeltaP))
                .collect(),
            Basis::MgHat(k) => std::iter::once(G::LambdaH)
                .chain((0..=(genus_data(k).g_hat / 2) as u32).map(G::DeltaH))
                .collect(),
            Basis::M0bFull(b) => (2..=b / 2).map(G::T).collect(),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind_name(), self.parameter())
    }
}

/// Index pairs `(j, c)` with `1 <= j <= k`, `0 <= c <= j/2`, in canonical order.
pub fn e_indices(k: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..=k).flat_map(|j| (0..=j / 2).map(move |c| (j, c)))
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Generator as G;
        match self {
            G::E0 => f.write_str("E0"),
            G::E2 => f.write_str("E2"),
            G::E3 => f.write_str("E3"),
            G::E { j, c } => write!(f, "E_{j}_{c}"),
            G::Lambda => f.write_str("lambda"),
            G::Delta(j) => write!(f, "delta_{j}"),
            G::T2 => f.write_str("T2"),
            G::T3j(j) => write!(f, "T3j_{j}"),
            G::LambdaP => f.write_str("lambdaP"),
            G::DeltaP(j) => write!(f, "deltaP_{j}"),
            G::LambdaH => f.write_str("lambdaH"),
            G::DeltaH(j) => write!(f, "deltaH_{j}"),
            G::T(j) => write!(f, "T_{j}"),
        }
    }
}

fn parse_index(s: &str) -> Option<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0'))
    {
        return None;
    }
    s.parse().ok()
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use Generator as G;
        let bad = || Error::ParseGenerator(s.to_owned());
        let gen = match s {
            "E0" => G::E0,
            "E2" => G::E2,
            "E3" => G::E3,
            "lambda" => G::Lambda,
            "T2" => G::T2,
            "lambdaP" => G::LambdaP,
            "lambdaH" => G::LambdaH,
            _ => {
                let (head, rest) = s.split_once('_').ok_or_else(bad)?;
                match head {
                    "E" => {
                        let (j, c) = rest.split_once('_').ok_or_else(bad)?;
                        G::E {
                            j: parse_index(j).ok_or_else(bad)?,
                            c: parse_index(c).ok_or_else(bad)?,
                        }
                    }
                    "delta" => G::Delta(parse_index(rest).ok_or_else(bad)?),
                    "T3j" => G::T3j(parse_index(rest).ok_or_else(bad)?),
                    "deltaP" => G::DeltaP(parse_index(rest).ok_or_else(bad)?),
                    "deltaH" => G::DeltaH(parse_index(rest).ok_or_else(bad)?),
                    "T" => G::T(parse_index(rest).ok_or_else(bad)?),
                    _ => return Err(bad()),
                }
            }
        };
        Ok(gen)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_k_hurwitz_bases() {
        assert_eq!(
            Basis::Hurwitz(1).generators(),
            vec![Generator::E0, Generator::E { j: 1, c: 0 }]
        );
        let b2 = Basis::Hurwitz(2);
        assert!(b2.contains(&Generator::E3));
        assert!(!b2.contains(&Generator::E2));
        assert_eq!(b2.generators().len(), 1 + 1 + 1 + 2);
        assert!(Basis::Hurwitz(3).contains(&Generator::E2));
        assert!(!Basis::Hurwitz(3).contains(&Generator::E { j: 3, c: 2 }));
        assert!(!Basis::Hurwitz(3).contains(&Generator::E { j: 0, c: 0 }));
    }

    #[test]
    fn lazy_bases() {
        // g' = 34 and g^ = 13 at k = 3
        assert!(Basis::MgPrime(3).contains(&Generator::DeltaP(17)));
        assert!(!Basis::MgPrime(3).contains(&Generator::DeltaP(18)));
        assert!(Basis::MgHat(3).contains(&Generator::DeltaH(6)));
        assert!(!Basis::MgHat(3).contains(&Generator::DeltaH(7)));
        assert_eq!(Basis::MgHat(1).generators().len(), 2);
        assert!(!Basis::Mg(3).contains(&Generator::DeltaP(0)));
    }

    #[test]
    fn names_roundtrip() {
        for basis in [
            Basis::Hurwitz(4),
            Basis::Mg(4),
            Basis::M0bSym(4),
            Basis::MgPrime(2),
            Basis::MgHat(3),
            Basis::M0bFull(12),
        ] {
            for g in basis.generators() {
                assert_eq!(g.to_string().parse::<Generator>().unwrap(), g);
            }
        }
        for bad in [
            "E_1", "E_01_0", "delta_", "delta_x", "lambdaX", "T3j_1_2", "", "E_1_0_",
        ] {
            assert!(bad.parse::<Generator>().is_err(), "{bad}");
        }
    }
}
