//! Fixed-point rendering of exact values with round-half-even.

use num_bigint::{BigInt, Sign};
use num_integer::{Integer, Roots};
use num_traits::{Signed, Zero};

use penney_core::Rational;

/// Renders `value` with exactly `digits` fractional digits, rounding half to even.
pub fn format_decimal(value: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = value.abs() * Rational::from_integer(scale);
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let twice: BigInt = &r * 2;
    let rounded = match twice.cmp(scaled.denom()) {
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal if q.is_odd() => q + 1,
        _ => q,
    };
    render(rounded, value.is_negative(), digits)
}

/// Renders `sqrt(value)` for `value >= 0`, rounding half to even, without floating point.
pub fn format_sqrt(value: &Rational, digits: usize) -> String {
    assert!(!value.is_negative(), "square root of a negative value");
    let scale = BigInt::from(10).pow(2 * digits as u32);
    let target = value * Rational::from_integer(scale);
    let (a, b) = (target.numer(), target.denom());
    let k: BigInt = Roots::sqrt(&(a / b));
    // compare a/b with (k + 1/2)^2, i.e. 4a with b (2k + 1)^2
    let lhs: BigInt = a * 4;
    let odd: BigInt = &k * 2 + 1;
    let mid: BigInt = &odd * &odd * b;
    let rounded = match lhs.cmp(&mid) {
        std::cmp::Ordering::Greater => k + 1,
        std::cmp::Ordering::Equal if k.is_odd() => k + 1,
        _ => k,
    };
    render(rounded, false, digits)
}

fn render(magnitude: BigInt, negative: bool, digits: usize) -> String {
    let mut s = magnitude.to_str_radix(10);
    if s.len() <= digits {
        s = format!("{}{s}", "0".repeat(digits + 1 - s.len()));
    }
    if digits > 0 {
        s.insert(s.len() - digits, '.');
    }
    if negative && magnitude.sign() != Sign::NoSign && !magnitude.is_zero() {
        s.insert(0, '-');
    }
    s
}
