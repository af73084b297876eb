//! Integer helpers: mathematical floor/ceiling division and checked products.

use crate::error::{Error, Result};

/// Floor of `a / b` for `b > 0`; rounds toward negative infinity.
pub fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

/// Ceiling of `a / b` for `b > 0`.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    -((-a).div_euclid(b))
}

pub(crate) fn mul(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

pub(crate) fn add(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_and_ceil_on_negatives() {
        assert_eq!(floor_div(-3, 2), -2);
        assert_eq!(ceil_div(-3, 2), -1);
        assert_eq!(floor_div(7, 3), 2);
        assert_eq!(ceil_div(7, 3), 3);
        assert_eq!(ceil_div(6, 3), 2);
        assert_eq!(floor_div(-6, 3), -2);
    }

    #[test]
    fn checked_ops_report_overflow() {
        assert_eq!(mul(i64::MAX, 2, "t"), Err(Error::Overflow("t")));
        assert_eq!(add(i64::MAX, 1, "t"), Err(Error::Overflow("t")));
        assert_eq!(mul(3, 4, "t"), Ok(12));
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(gcd(7, 0), 7);
    }
}
