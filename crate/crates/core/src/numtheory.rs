//! Small exact number theory: trial-division factorization, divisor lists,
//! binomial coefficients and the two-squares criterion.
//!
//! Inputs here are desk scale (at most a few million), so plain trial
//! division is all that is needed.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Prime factorization as `(prime, exponent)` pairs with strictly ascending primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p`, zero when `p` does not occur.
    pub fn exponent(&self, p: u64) -> u32 {
        self.0
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// The factored integer.
    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// Primes listed with multiplicity, ascending.
    pub fn prime_chain(&self) -> Vec<u64> {
        self.0
            .iter()
            .flat_map(|&(p, e)| std::iter::repeat_n(p, e as usize))
            .collect()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, &(p, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::NotPositive(0));
    }
    let mut pairs = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization(pairs))
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).is_ok_and(|f| f.pairs() == [(n, 1)])
}

/// Every divisor of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let fac = factorize(n)?;
    let mut out = vec![1u64];
    for &(p, e) in fac.pairs() {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for k in 0..len {
                out.push(out[k] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Number of divisors of `n`.
pub fn divisor_count(n: u64) -> Result<usize> {
    Ok(factorize(n)?
        .pairs()
        .iter()
        .map(|&(_, e)| e as usize + 1)
        .product())
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.primes().collect())
}

/// `C(n, k)` via the multiplicative formula.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(ell, i) / ell` for a prime `ell` and `1 <= i <= ell - 1`, always an integer.
pub fn binom_over_ell(ell: u64, i: u64) -> Result<BigInt> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if i == 0 || i >= ell {
        return Err(Error::OutOfRange { i, max: ell - 1 });
    }
    let c = binomial(ell, i);
    let ell = BigInt::from(ell);
    assert!(
        (&c % &ell) == BigInt::from(0),
        "C({ell}, {i}) not divisible by {ell}"
    );
    Ok(c / ell)
}

/// Fermat's criterion: every prime `≡ 3 (mod 4)` occurs to an even power.
pub fn is_sum_of_two_squares(n: u64) -> Result<bool> {
    let fac = factorize(n)?;
    Ok(fac.pairs().iter().all(|&(p, e)| p % 4 != 3 || e % 2 == 0))
}

pub fn is_perfect_square(n: u64) -> bool {
    let r = (n as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).any(|s| s.checked_mul(s) == Some(n))
}

/// Odd prime power test, used to validate finite field orders.
pub fn is_odd_prime_power(q: u64) -> bool {
    q >= 3 && q % 2 == 1 && factorize(q).is_ok_and(|f| f.pairs().len() == 1)
}

pub fn factorial(n: u64) -> Result<u64> {
    (1..=n).try_fold(1u64, |acc, k| acc.checked_mul(k).ok_or(Error::Overflow("factorial")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().pairs().is_empty());
        assert_eq!(factorize(12).unwrap().pairs(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(360).unwrap().pairs(), &[(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(0), Err(Error::NotPositive(0)));
        assert_eq!(factorize(97).unwrap().pairs(), &[(97, 1)]);
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(9).unwrap(), vec![1, 3, 9]);
        assert!(divisors(0).is_err());
        assert_eq!(divisor_count(60).unwrap(), 12);
    }

    #[test]
    fn binom_over_ell_examples() {
        assert_eq!(binom_over_ell(3, 1).unwrap(), BigInt::from(1));
        assert_eq!(binom_over_ell(5, 2).unwrap(), BigInt::from(2));
        assert_eq!(binom_over_ell(7, 3).unwrap(), BigInt::from(5));
        assert_eq!(binom_over_ell(7, 0), Err(Error::OutOfRange { i: 0, max: 6 }));
        assert_eq!(binom_over_ell(7, 7), Err(Error::OutOfRange { i: 7, max: 6 }));
        assert_eq!(binom_over_ell(6, 2), Err(Error::NotPrime(6)));
    }

    #[test]
    fn two_squares_examples() {
        assert!(is_sum_of_two_squares(2).unwrap());
        assert!(!is_sum_of_two_squares(7).unwrap());
        assert!(is_sum_of_two_squares(45).unwrap());
        assert!(is_sum_of_two_squares(0).is_err());
    }

    #[test]
    fn prime_powers() {
        assert!(is_odd_prime_power(3));
        assert!(is_odd_prime_power(81));
        assert!(!is_odd_prime_power(15));
        assert!(!is_odd_prime_power(16));
        assert!(!is_odd_prime_power(1));
    }

    #[test]
    fn squares() {
        assert!(is_perfect_square(0));
        assert!(is_perfect_square(36));
        assert!(!is_perfect_square(35));
    }
}
