//! Exact arithmetic helpers shared by the closed forms and the verifiers.
//!
//! Nothing in this crate decides a comparison with floating point. Gates of
//! the form `m >= log2(n)` are turned into integer comparisons, and the few
//! genuinely transcendental thresholds are bracketed by rational bounds on
//! `log2(n)`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduced arbitrary-precision fraction with positive denominator.
pub type Rational = BigRational;

pub fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

pub fn pow2u(k: u64) -> BigUint {
    BigUint::one() << k
}

pub fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_from(x: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(x.clone()))
}

/// `num / den` for unsigned operands.
pub fn quotient(num: &BigUint, den: &BigUint) -> Rational {
    Rational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// `k (k - 1) / 2` as a polynomial in `k`, which agrees with the binomial
/// coefficient for `k >= 0`.
pub fn choose2(k: &BigInt) -> BigInt {
    (k * (k - 1u32)) / 2u32
}

/// `k (k - 1) (k - 2) / 6`, see [`choose2`].
pub fn choose3(k: &BigInt) -> BigInt {
    (k * (k - 1u32) * (k - 2u32)) / 6u32
}

/// `2^m >= n`, the integer form of `m >= log2(n)`.
pub fn at_least_log2(m: u64, n: u64) -> bool {
    m >= 64 || (1u128 << m) >= n as u128
}

/// `ceil(2 log2 n)`: the least `s` with `2^s >= n^2`.
pub fn ceil_two_log2(n: u64) -> u64 {
    assert!(n >= 1);
    let sq = (n as u128) * (n as u128);
    let mut s = 0u64;
    while (1u128 << s) < sq {
        s += 1;
    }
    s
}

/// Rational bracket `lo <= log2(n) <= hi` of width `2^-bits`, computed from
/// the bit length of `n^(2^bits)`.
pub fn log2_bounds(n: u64, bits: u32) -> (Rational, Rational) {
    assert!(n >= 1);
    let mut p = BigUint::from(n);
    for _ in 0..bits {
        p = &p * &p;
    }
    let floor = p.bits() - 1;
    let exact = p.is_one() || p.trailing_zeros() == Some(floor);
    let den = pow2(bits as u64);
    let lo = Rational::new(BigInt::from(floor), den.clone());
    let hi = if exact {
        lo.clone()
    } else {
        Rational::new(BigInt::from(floor + 1), den)
    };
    (lo, hi)
}

/// Decides `f(log2 n) > 0` for a function `f` that is monotone increasing in
/// its argument, refining the bracket until the sign is settled. Returns
/// `None` if it stays undecided up to `max_bits`.
pub fn decide_increasing_in_log2(
    n: u64,
    max_bits: u32,
    f: impl Fn(&Rational) -> Rational,
) -> Option<bool> {
    let mut bits = 8;
    loop {
        let (lo, hi) = log2_bounds(n, bits);
        let at_lo = f(&lo);
        if at_lo.is_positive() {
            return Some(true);
        }
        let at_hi = f(&hi);
        if !at_hi.is_positive() {
            return Some(false);
        }
        if bits >= max_bits {
            return None;
        }
        bits = (bits * 2).min(max_bits);
    }
}

/// Whether an exact rational is an integer, and that integer.
pub fn as_integer(x: &Rational) -> Option<BigInt> {
    if x.denom().is_one() {
        Some(x.numer().clone())
    } else {
        None
    }
}

/// `floor(x)` for a rational `x`.
pub fn floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

pub fn is_zero(x: &Rational) -> bool {
    x.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_two_log2_values() {
        assert_eq!(ceil_two_log2(1), 0);
        assert_eq!(ceil_two_log2(2), 2);
        assert_eq!(ceil_two_log2(3), 4); // 9 <= 16
        assert_eq!(ceil_two_log2(4), 4);
        assert_eq!(ceil_two_log2(5), 5); // 25 <= 32
        assert_eq!(ceil_two_log2(1024), 20);
        assert_eq!(ceil_two_log2(1025), 21);
    }

    #[test]
    fn log2_gate() {
        assert!(at_least_log2(4, 16));
        assert!(!at_least_log2(4, 17));
        assert!(at_least_log2(0, 1));
    }

    #[test]
    fn log2_brackets() {
        let (lo, hi) = log2_bounds(8, 4);
        assert_eq!(lo, ratio(3, 1));
        assert_eq!(hi, ratio(3, 1));
        let (lo, hi) = log2_bounds(10, 10);
        // log2(10) = 3.321928...
        assert!(lo < ratio(3322, 1000) && lo > ratio(3320, 1000));
        assert!(hi > ratio(3321, 1000));
        assert_eq!(&hi - &lo, Rational::new(BigInt::one(), pow2(10)));
    }

    #[test]
    fn decide_log_comparisons() {
        // log2(10) > 3.3 and not > 3.33
        assert_eq!(decide_increasing_in_log2(10, 32, |x| x - ratio(33, 10)), Some(true));
        assert_eq!(decide_increasing_in_log2(10, 32, |x| x - ratio(333, 100)), Some(false));
        // exact boundary: log2(16) - 4 = 0 is not positive
        assert_eq!(decide_increasing_in_log2(16, 32, |x| x - ratio(4, 1)), Some(false));
    }

    #[test]
    fn polynomial_binomials() {
        assert_eq!(choose2(&int(5)), int(10));
        assert_eq!(choose2(&int(1)), int(0));
        assert_eq!(choose3(&int(6)), int(20));
        assert_eq!(choose3(&int(2)), int(0));
    }
}
