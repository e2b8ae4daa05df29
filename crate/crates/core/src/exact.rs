//! Exact scalar arithmetic: arbitrary-precision integers and rationals,
//! factorials and binomial coefficients.
//!
//! Everything in this crate is computed exactly. There is no floating
//! point, no rounding and no modular shortcut anywhere; an identity either
//! holds bit-for-bit or its check fails.

use num_integer::Integer;
use num_traits::{One, Pow, Zero};

/// Arbitrary-precision signed integer.
///
/// Zero is canonical (sign 0, empty magnitude). The external form is the
/// base-10 string with an optional leading minus, via `Display`/`FromStr`.
pub type ExactInt = num_bigint::BigInt;

/// Arbitrary-precision rational, reduced eagerly on construction so that
/// structural equality coincides with semantic equality. The denominator
/// is always positive. The external form is `num/den`, with the
/// denominator omitted when it is 1.
pub type ExactRational = num_rational::BigRational;

/// Small-integer literal helper.
pub fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

/// Rational literal helper; panics when `den` is zero.
pub fn rat(num: i64, den: i64) -> ExactRational {
    ExactRational::new(ExactInt::from(num), ExactInt::from(den))
}

/// Embeds an integer into the rationals.
pub fn to_rational(v: ExactInt) -> ExactRational {
    ExactRational::from_integer(v)
}

/// `base^exp` with the empty-product convention `0^0 = 1`.
pub fn int_pow(base: &ExactInt, exp: u32) -> ExactInt {
    Pow::pow(base, exp)
}

/// `n!` by iterated multiplication; `0! = 1`.
pub fn factorial(n: u64) -> ExactInt {
    let mut acc = ExactInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient `C(n, k)`.
///
/// Out-of-range `k` (negative or above `n`) yields 0 rather than an error,
/// so summations can iterate without guards.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    if k < 0 {
        return ExactInt::zero();
    }
    let k = k as u64;
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc *= n - i;
        // exact at every step: the running value is C(n, i+1)
        acc = exact_div(&acc, &ExactInt::from(i + 1));
    }
    acc
}

/// Exact integer division; panics when `den` does not divide `num`.
pub fn exact_div(num: &ExactInt, den: &ExactInt) -> ExactInt {
    let (q, r) = num.div_rem(den);
    assert!(
        r.is_zero(),
        "inexact division: {num} is not a multiple of {den}"
    );
    q
}
