//! Genera of the curves attached to a pencil of degree `k + 1` on a curve of genus `2k`.

use crate::combinatorics::binomial;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenusData {
    pub k: u32,
    /// Genus of the covering curve, `2k`.
    pub g: u64,
    /// Degree of the pencil, `k + 1`.
    pub d: u64,
    /// Number of simple branch points, `6k`.
    pub b: u64,
    /// Genus of the trace curve.
    pub g_prime: u64,
    /// Genus of the reduced trace curve.
    pub g_hat: u64,
    /// Dimension of the Prym variety of the trace curve over the reduced one.
    pub prym_dim: u64,
    /// Dimension of the quotient of the reduced trace curve's Jacobian by
    /// the Jacobian of the covering curve. Negative (formal) at `k = 1`.
    pub quotient_dim: i64,
}

/// # Panics
/// If `k == 0`.
pub fn genus_data(k: u32) -> GenusData {
    assert!(k >= 1, "k must be positive");
    let kk = u64::from(k);
    let g = 2 * kk;
    let d = kk + 1;
    let g_prime = (g - 1) * (2 * d - 3) + (d - 1) * (d - 1);
    assert_eq!(g_prime, 5 * kk * kk - 4 * kk + 1);
    let g_hat = (5 * kk - 2) * (kk - 1) / 2;
    let prym_dim = g_prime - g_hat;
    assert_eq!(2 * prym_dim, 5 * kk * kk - kk);
    let quotient_dim = (5 * kk as i64 - 1) * (kk as i64 - 2) / 2;
    assert_eq!(quotient_dim, g_hat as i64 - g as i64);
    GenusData {
        k,
        g,
        d,
        b: 6 * kk,
        g_prime,
        g_hat,
        prym_dim,
        quotient_dim,
    }
}

/// Number of `g^1_{k+1}` on a general curve of genus `2k`: the Catalan number
/// `C(2k, k) / (k + 1)`, which also equals `C(2k, k + 1) / k`.
pub fn n_of_k(k: u32) -> Rational {
    assert!(k >= 1, "k must be positive");
    let kk = u64::from(k);
    let via_pencils = binomial(2 * kk, i64::from(k) + 1) / Rational::from(k);
    let catalan = binomial(2 * kk, i64::from(k)) / Rational::from(k + 1);
    assert_eq!(via_pencils, catalan);
    catalan
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let d2 = genus_data(2);
        assert_eq!((d2.g_prime, d2.g_hat), (13, 4));
        assert_eq!(d2.prym_dim, 9);
        assert_eq!(genus_data(3).g_hat, 13);
        let d1 = genus_data(1);
        assert_eq!((d1.g_prime, d1.g_hat, d1.prym_dim), (2, 0, 2));
        assert_eq!(d1.quotient_dim, -2);
        assert_eq!(genus_data(2).quotient_dim, 0);
    }

    #[test]
    fn catalan() {
        let expected = [1, 2, 5, 14, 42, 132];
        for (k, n) in (1..).zip(expected) {
            assert_eq!(n_of_k(k), Rational::from(n as i64));
        }
    }
}
