//! Power sums `S_p(n) = 1^p + 2^p + ... + n^p` computed by three
//! independent methods, plus the closed-form polynomial in `n`.
//!
//! The three methods exist to cross-check one another:
//!
//! * literal summation (the ground-truth oracle),
//! * the classical binomial recursion
//!   `1 + sum_{t=0}^{p} C(p+1,t) * S_t(n) = (n+1)^(p+1)`,
//! * the Stirling cycle-number recursion
//!   `p! + sum_{t=0}^{p} [p+1, t+1] * S_t(n) = p! * C(n+p+1, p+1)`.
//!
//! Method selection is always explicit; nothing switches silently.

use crate::exact::{binomial, exact_div, factorial, int_pow, to_rational, ExactInt, ExactRational};
use crate::poly::RatPolynomial;
use crate::report::VerificationReport;
use crate::stirling::stirling_row;
use num_traits::{One, Zero};

/// Evaluation strategy for a power sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Direct,
    BinomialRecursion,
    StirlingRecursion,
}

/// Dispatches to the chosen method.
pub fn powersum(p: u32, n: u64, method: Method) -> ExactInt {
    match method {
        Method::Direct => powersum_direct(p, n),
        Method::BinomialRecursion => powersum_binomial(p, n),
        Method::StirlingRecursion => powersum_stirling(p, n),
    }
}

/// `S_p(n)` by literal summation; the oracle for both recursions.
/// `S_p(0) = 0` by the empty-sum convention.
pub fn powersum_direct(p: u32, n: u64) -> ExactInt {
    let mut acc = ExactInt::zero();
    for k in 1..=n {
        acc += int_pow(&ExactInt::from(k), p);
    }
    acc
}

/// `S_t(n)` for every `t` in `0..=p`, all by literal summation with the
/// powers of each `k` accumulated incrementally.
pub fn powersum_direct_all(p: u32, n: u64) -> Vec<ExactInt> {
    let mut sums = vec![ExactInt::zero(); p as usize + 1];
    for k in 1..=n {
        let kb = ExactInt::from(k);
        let mut pw = ExactInt::one();
        for sum in sums.iter_mut() {
            *sum += &pw;
            pw *= &kb;
        }
    }
    sums
}

/// `S_p(n)` via the binomial recursion, solved for the top term:
/// `(p+1) * S_p(n) = (n+1)^(p+1) - 1 - sum_{t<p} C(p+1,t) * S_t(n)`.
/// The lower-order sums are computed once each, bottom-up.
pub fn powersum_binomial(p: u32, n: u64) -> ExactInt {
    if n == 0 {
        return ExactInt::zero();
    }
    let np1 = ExactInt::from(n + 1);
    let mut sums: Vec<ExactInt> = Vec::with_capacity(p as usize + 1);
    for q in 0..=p {
        let mut acc = int_pow(&np1, q + 1) - 1;
        for (t, s) in sums.iter().enumerate() {
            acc -= binomial(u64::from(q) + 1, t as i64) * s;
        }
        sums.push(exact_div(&acc, &ExactInt::from(q + 1)));
    }
    sums.pop().unwrap()
}

/// `S_p(n)` via the Stirling recursion, using `[p+1, p+1] = 1`:
/// `S_p(n) = p! * C(n+p+1, p+1) - p! - sum_{t<p} [p+1, t+1] * S_t(n)`.
/// The lower-order sums are computed once each by the same method.
pub fn powersum_stirling(p: u32, n: u64) -> ExactInt {
    if n == 0 {
        return ExactInt::zero();
    }
    let mut sums: Vec<ExactInt> = Vec::with_capacity(p as usize + 1);
    for q in 0..=p {
        let row = stirling_row(q + 1);
        let qf = factorial(u64::from(q));
        let mut acc = &qf * binomial(n + u64::from(q) + 1, i64::from(q) + 1) - &qf;
        for (t, s) in sums.iter().enumerate() {
            acc -= &row[t + 1] * s;
        }
        sums.push(acc);
    }
    sums.pop().unwrap()
}

/// The degree-`(p+1)` polynomial `Q` with `Q(n) = S_p(n)` for every
/// non-negative integer `n`, derived symbolically from the Stirling
/// recursion with `C(n+p+1, p+1)` expanded as
/// `(n+1)(n+2)...(n+p+1) / (p+1)!`.
///
/// The result has zero constant term and leading coefficient `1/(p+1)`.
pub fn faulhaber_polynomial(p: u32) -> RatPolynomial {
    let mut polys: Vec<RatPolynomial> = Vec::with_capacity(p as usize + 1);
    for q in 0..=p {
        let row = stirling_row(q + 1);
        let mut product = RatPolynomial::one();
        for j in 1..=u64::from(q) + 1 {
            product = product.mul_linear(&to_rational(ExactInt::from(j)));
        }
        // q! * product / (q+1)! = product / (q+1)
        let lead = ExactRational::new(ExactInt::one(), ExactInt::from(q + 1));
        let mut acc = product.scale(&lead);
        acc = &acc - &RatPolynomial::constant(to_rational(factorial(u64::from(q))));
        for (t, poly) in polys.iter().enumerate() {
            acc = &acc - &poly.scale(&to_rational(row[t + 1].clone()));
        }
        polys.push(acc);
    }
    polys.pop().unwrap()
}

/// Residual check of the binomial recursion at one point:
/// `1 + sum_{t=0}^{p} C(p+1,t) * S_t(n) == (n+1)^(p+1)`,
/// with every `S_t` taken from literal summation.
pub fn check_eq1(p: u32, n: u64) -> VerificationReport {
    let mut report = VerificationReport::new("eq1", format!("p = {p}, n = {n}"));
    let sums = powersum_direct_all(p, n);
    let mut lhs = ExactInt::one();
    for (t, s) in sums.iter().enumerate() {
        lhs += binomial(u64::from(p) + 1, t as i64) * s;
    }
    let rhs = int_pow(&ExactInt::from(n + 1), p + 1);
    report.check_eq(&[("p", u64::from(p)), ("n", n)], &lhs, &rhs);
    report
}

/// Residual check of the Stirling recursion at one point:
/// `p! + sum_{t=0}^{p} [p+1, t+1] * S_t(n) == p! * C(n+p+1, p+1)`,
/// with every `S_t` taken from literal summation.
pub fn check_eq2(p: u32, n: u64) -> VerificationReport {
    let mut report = VerificationReport::new("eq2", format!("p = {p}, n = {n}"));
    let sums = powersum_direct_all(p, n);
    let row = stirling_row(p + 1);
    let pf = factorial(u64::from(p));
    let mut lhs = pf.clone();
    for (t, s) in sums.iter().enumerate() {
        lhs += &row[t + 1] * s;
    }
    let rhs = pf * binomial(n + u64::from(p) + 1, i64::from(p) + 1);
    report.check_eq(&[("p", u64::from(p)), ("n", n)], &lhs, &rhs);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn direct_examples() {
        assert_eq!(powersum_direct(0, 5), int(5));
        assert_eq!(powersum_direct(2, 3), int(14));
        assert_eq!(powersum_direct(1, 100), int(5050));
        assert_eq!(powersum_direct(4, 0), int(0));
    }

    #[test]
    fn direct_all_matches_single_exponent_calls() {
        for p in 0..=6u32 {
            for n in [0u64, 1, 2, 3, 10, 37] {
                let all = powersum_direct_all(p, n);
                for t in 0..=p {
                    assert_eq!(all[t as usize], powersum_direct(t, n), "p={p} n={n} t={t}");
                }
            }
        }
    }

    #[test]
    fn binomial_recursion_examples() {
        assert_eq!(powersum_binomial(0, 7), int(7));
        assert_eq!(powersum_binomial(3, 4), int(100));
        assert_eq!(powersum_binomial(10, 10), powersum_direct(10, 10));
    }

    #[test]
    fn stirling_recursion_examples() {
        assert_eq!(powersum_stirling(0, 9), int(9));
        // 2!*C(6,3) - 2 - [3,1]*S_0(3) - [3,2]*S_1(3) = 40 - 2 - 6 - 18 = 14
        assert_eq!(powersum_stirling(2, 3), int(14));
        assert_eq!(powersum_stirling(5, 20), powersum_direct(5, 20));
    }

    #[test]
    fn all_methods_agree_on_small_grid() {
        for p in 0..=8u32 {
            for n in [0u64, 1, 2, 3, 7, 25, 60] {
                let direct = powersum_direct(p, n);
                assert_eq!(powersum_binomial(p, n), direct, "binomial p={p} n={n}");
                assert_eq!(powersum_stirling(p, n), direct, "stirling p={p} n={n}");
                assert_eq!(powersum(p, n, Method::Direct), direct);
            }
        }
    }

    #[test]
    fn faulhaber_known_coefficients() {
        assert_eq!(
            faulhaber_polynomial(0).coeffs(),
            vec![rat(0, 1), rat(1, 1)].as_slice()
        );
        assert_eq!(
            faulhaber_polynomial(1).coeffs(),
            vec![rat(0, 1), rat(1, 2), rat(1, 2)].as_slice()
        );
        assert_eq!(
            faulhaber_polynomial(2).coeffs(),
            vec![rat(0, 1), rat(1, 6), rat(1, 2), rat(1, 3)].as_slice()
        );
    }

    #[test]
    fn faulhaber_agrees_with_direct_sums() {
        for p in 0..=6u32 {
            let q = faulhaber_polynomial(p);
            assert_eq!(q.degree(), Some(p as usize + 1));
            assert_eq!(q.coeff(0), rat(0, 1));
            assert_eq!(q.coeff(p as usize + 1), rat(1, i64::from(p) + 1));
            for n in 0..=12u64 {
                let v = q.eval(&to_rational(ExactInt::from(n)));
                assert_eq!(v, to_rational(powersum_direct(p, n)), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn residual_checks_pass_on_examples() {
        assert!(check_eq1(0, 7).passed());
        assert!(check_eq1(5, 30).passed());
        assert!(check_eq2(0, 9).passed());
        assert!(check_eq2(6, 40).passed());
    }
}
