//! The weighted Stirling row-sum identity
//! `sum_{t=0}^{p} r^t * [p+1, t+1] = (p+r)!/r!` and the Catalan-number
//! formula it yields at `r = p`:
//!
//! ```text
//! C_p = ( sum_{t=1}^{p+1} p^(t-1) * [p+1, t] ) / ( sum_{t=1}^{p+1} [p+1, t] )
//! ```
//!
//! i.e. the average of `p^(t-1)` over all `(p+1)!` permutations of `p+1`
//! elements, `t` being the cycle count. Checks always compute the two
//! sides through independent pipelines: the left from Stirling rows, the
//! right from factorials and binomials.

use crate::exact::{binomial, exact_div, factorial, ExactInt};
use crate::report::VerificationReport;
use crate::stirling::stirling_row;
use num_traits::{One, Zero};

/// `sum_{t=0}^{p} r^t * [p+1, t+1]`, term by term from the Stirling row,
/// never through the closed form. Panics for `r = 0`.
pub fn weighted_row_sum(p: u32, r: u64) -> ExactInt {
    assert!(r >= 1, "weighted row sums are defined for r >= 1");
    let row = stirling_row(p + 1);
    let rb = ExactInt::from(r);
    let mut acc = ExactInt::zero();
    let mut power = ExactInt::one();
    for t in 0..=p as usize {
        acc += &power * &row[t + 1];
        power *= &rb;
    }
    acc
}

/// One case: the weighted row sum equals `(p+r)!/r!`, with the division
/// required to be exact.
pub fn check_identity3(p: u32, r: u64) -> VerificationReport {
    let mut report = VerificationReport::new("eq3", format!("p = {p}, r = {r}"));
    let lhs = weighted_row_sum(p, r);
    let rhs = exact_div(&factorial(u64::from(p) + r), &factorial(r));
    report.check_eq(&[("p", u64::from(p)), ("r", r)], &lhs, &rhs);
    report
}

/// One case per `(p, r)` covering the telescoped form of the row-sum
/// identity, for `r >= 2`:
///
/// * `sum_t r^t*[p+1, t+1] == p!*(C(r+p+1, p+1) - 1) - sum_{j<r} sum_t j^t*[p+1, t+1]`
/// * `p!*(C(r+p+1, p+1) - C(r+p, p+1)) == (p+r)!/r!`
///
/// The first failing form is the one recorded.
pub fn check_inductive_step(p: u32, r: u64) -> VerificationReport {
    assert!(r >= 2, "the telescoped form needs r >= 2");
    let mut report = VerificationReport::new("inductive_step", format!("p = {p}, r = {r}"));
    let params = [("p", u64::from(p)), ("r", r)];
    let pf = factorial(u64::from(p));
    let big = binomial(r + u64::from(p) + 1, i64::from(p) + 1);

    let lhs = weighted_row_sum(p, r);
    let mut rhs = &pf * (&big - 1);
    for j in 1..r {
        rhs -= weighted_row_sum(p, j);
    }
    if lhs != rhs {
        report.record_failure(&params, lhs.to_string(), rhs.to_string());
        return report;
    }

    let telescoped = &pf * (&big - binomial(r + u64::from(p), i64::from(p) + 1));
    let closed = exact_div(&factorial(u64::from(p) + r), &factorial(r));
    report.check_eq(&params, &telescoped, &closed);
    report
}

/// `C_p = C(2p, p) / (p+1)`; the division is exact.
pub fn catalan_closed(p: u32) -> ExactInt {
    exact_div(
        &binomial(2 * u64::from(p), i64::from(p)),
        &ExactInt::from(u64::from(p) + 1),
    )
}

/// `C_p` as the cycle-count average over row `p+1` of the triangle,
/// defined for `p >= 1`.
///
/// Panics if the denominator is not `(p+1)!` or the division is inexact;
/// either would falsify the identity and must be loud.
pub fn catalan_stirling(p: u32) -> ExactInt {
    assert!(
        p >= 1,
        "the cycle-average form is defined for p >= 1; use catalan_closed for C_0"
    );
    let row = stirling_row(p + 1);
    let pb = ExactInt::from(p);
    let mut numerator = ExactInt::zero();
    let mut denominator = ExactInt::zero();
    let mut power = ExactInt::one();
    for value in row.iter().skip(1) {
        numerator += &power * value;
        denominator += value;
        power *= &pb;
    }
    assert_eq!(
        denominator,
        factorial(u64::from(p) + 1),
        "cycle counts of {} elements must total ({})!",
        p + 1,
        p + 1
    );
    assert!(
        (&numerator % &denominator).is_zero(),
        "cycle average is not an integer: p = {p}, numerator = {numerator}, denominator = {denominator}"
    );
    numerator / denominator
}

/// One case: the cycle-average form agrees with the closed form at `p`.
pub fn check_catalan(p: u32) -> VerificationReport {
    let mut report = VerificationReport::new("catalan", format!("p = {p}"));
    report.check_eq(
        &[("p", u64::from(p))],
        &catalan_stirling(p),
        &catalan_closed(p),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn weighted_row_sum_examples() {
        assert_eq!(weighted_row_sum(0, 5), int(1));
        // [3,1] + 2*[3,2] + 4*[3,3] = 2 + 6 + 4 = 12 = 4!/2!
        assert_eq!(weighted_row_sum(2, 2), int(12));
        assert_eq!(weighted_row_sum(6, 6), int(665_280));
    }

    #[test]
    #[should_panic(expected = "r >= 1")]
    fn weighted_row_sum_rejects_zero_r() {
        weighted_row_sum(3, 0);
    }

    #[test]
    fn identity3_examples() {
        assert!(check_identity3(0, 1).passed());
        let rep = check_identity3(3, 2);
        assert!(rep.passed());
        assert_eq!(weighted_row_sum(3, 2), int(60));
        assert!(check_identity3(6, 6).passed());
    }

    #[test]
    fn inductive_step_examples() {
        for (p, r) in [(1u32, 2u64), (2, 3), (5, 4)] {
            assert!(check_inductive_step(p, r).passed(), "p={p} r={r}");
        }
    }

    #[test]
    fn catalan_closed_examples() {
        assert_eq!(catalan_closed(0), int(1));
        assert_eq!(catalan_closed(6), int(132));
        assert_eq!(catalan_closed(10), int(16_796));
    }

    #[test]
    fn catalan_closed_matches_lattice_path_oracle() {
        // independent oracle: count nonnegative +-1 paths of length 2p
        // ending at 0 (ballot-style dynamic program, additions only)
        let p_max = 12usize;
        for p in 0..=p_max {
            let mut heights = vec![ExactInt::zero(); p + 2];
            heights[0] = ExactInt::one();
            for _ in 0..2 * p {
                let mut next = vec![ExactInt::zero(); p + 2];
                for (h, ways) in heights.iter().enumerate() {
                    if ways.is_zero() {
                        continue;
                    }
                    if h + 1 < next.len() {
                        next[h + 1] += ways;
                    }
                    if h > 0 {
                        next[h - 1] += ways;
                    }
                }
                heights = next;
            }
            assert_eq!(heights[0], catalan_closed(p as u32), "p={p}");
        }
    }

    #[test]
    fn catalan_stirling_examples() {
        assert_eq!(catalan_stirling(1), int(1));
        // ([4,1] + 3[4,2] + 9[4,3] + 27[4,4]) / 24 = 120/24 = 5
        assert_eq!(catalan_stirling(3), int(5));
        assert_eq!(catalan_stirling(6), int(132));
    }

    #[test]
    #[should_panic(expected = "p >= 1")]
    fn catalan_stirling_rejects_zero() {
        catalan_stirling(0);
    }

    #[test]
    fn check_catalan_small_range() {
        for p in 1..=20u32 {
            assert!(check_catalan(p).passed(), "p={p}");
        }
    }
}
