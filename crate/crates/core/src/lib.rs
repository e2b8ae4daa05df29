//! Exact-arithmetic computation and cross-verification of power sums,
//! Stirling cycle numbers, harmonic-number identities and Catalan numbers.
//!
//! The crate evaluates the power sum `S_p(n) = 1^p + ... + n^p` by three
//! independent routes (literal summation, the classical binomial recursion
//! and a recursion driven by unsigned Stirling numbers of the first kind),
//! evaluates both harmonic-number identities whose comparison yields the
//! Stirling recursion, and checks the weighted row-sum identity
//! `sum_t r^t * [p+1, t+1] = (p+r)!/r!` together with the Catalan-number
//! formula it produces at `r = p`. All arithmetic is arbitrary-precision
//! and exact; every identity check is an exact equality over a finite
//! parameter domain, reported with a deterministic first counterexample
//! when one exists.
//!
//! ```
//! use stirsum_core::{catalan, powersum, stirling};
//!
//! let s = powersum::powersum(2, 3, powersum::Method::StirlingRecursion);
//! assert_eq!(s.to_string(), "14");
//! assert_eq!(stirling::stirling(7, 2).to_string(), "1764");
//! assert_eq!(catalan::catalan_stirling(6), catalan::catalan_closed(6));
//! ```

#![forbid(unsafe_code)]

pub mod catalan;
pub mod exact;
pub mod harmonic;
pub mod poly;
pub mod powersum;
pub mod report;
pub mod stirling;

pub use exact::{binomial, exact_div, factorial, int_pow, to_rational, ExactInt, ExactRational};
pub use poly::{
    falling_factorial_poly, poly_shift, rising_factorial_poly, IntPolynomial, Polynomial,
    RatPolynomial,
};
pub use report::{Failure, VerificationReport};
pub use stirling::{stirling, stirling_row, StirlingTriangle};
