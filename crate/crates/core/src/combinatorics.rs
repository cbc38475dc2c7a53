use num_bigint::BigInt;
use num_traits::One;

use crate::rational::Rational;

/// C(n, m) as a big integer; zero outside `0 <= m <= n`.
pub fn binomial_int(n: u64, m: i64) -> BigInt {
    if m < 0 || m as u64 > n {
        return BigInt::from(0);
    }
    let m = (m as u64).min(n - m as u64);
    let mut acc = BigInt::one();
    for i in 0..m {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn binomial(n: u64, m: i64) -> Rational {
    Rational::from_integer(binomial_int(n, m))
}

/// C(n, 2) for a possibly negative `n`, as used in node-count formulas; zero for n < 2.
pub(crate) fn choose2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(4, 2), Rational::from(6));
        assert_eq!(binomial(6, 3), Rational::from(20));
        assert_eq!(binomial(5, 7), Rational::zero());
        assert_eq!(binomial(5, -1), Rational::zero());
        assert_eq!(binomial(0, 0), Rational::one());
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=60u64 {
            for m in 0..=n as i64 {
                assert_eq!(
                    binomial_int(n, m),
                    binomial_int(n - 1, m - 1) + binomial_int(n - 1, m),
                    "C({n},{m})"
                );
            }
        }
    }

    #[test]
    fn factorial_growth() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
        // 300! has 615 decimal digits
        assert_eq!(factorial(300).to_string().len(), 615);
    }

    #[test]
    fn choose2_convention() {
        assert_eq!(choose2(-3), 0);
        assert_eq!(choose2(1), 0);
        assert_eq!(choose2(5), 10);
    }
}
