//! Display-only decimal rendering of exact rationals.

use mso_core::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `x` rounded half-to-even to `places` digits after the point.
pub fn to_decimal(x: &Rational, places: usize) -> String {
    let scale = BigInt::from(10u8).pow(places as u32);
    let num = x.numer().abs() * &scale;
    let den = x.denom().clone();
    let (mut q, r) = num.div_rem(&den);
    let twice: BigInt = r * 2;
    if twice > den || (twice == den && q.is_odd()) {
        q += 1;
    }
    let digits = q.to_string();
    let digits = if digits.len() <= places {
        format!("{}{digits}", "0".repeat(places + 1 - digits.len()))
    } else {
        digits
    };
    let (int, frac) = digits.split_at(digits.len() - places);
    let sign = if x.is_negative() && !q.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mso_core::exact::ratio;

    #[test]
    fn rounding() {
        assert_eq!(to_decimal(&ratio(7, 3), 12), "2.333333333333");
        assert_eq!(to_decimal(&ratio(23, 11), 12), "2.090909090909");
        assert_eq!(to_decimal(&ratio(2, 3), 3), "0.667");
        assert_eq!(to_decimal(&ratio(1, 8), 2), "0.12");
        assert_eq!(to_decimal(&ratio(3, 8), 2), "0.38");
        assert_eq!(to_decimal(&ratio(-1, 8), 2), "-0.12");
        assert_eq!(to_decimal(&ratio(-1, 1000), 2), "0.00");
        assert_eq!(to_decimal(&ratio(5, 2), 0), "2");
        assert_eq!(to_decimal(&ratio(3, 1), 4), "3.0000");
    }
}
