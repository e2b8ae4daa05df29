//! Unsigned Stirling numbers of the first kind (Stirling cycle numbers):
//! the count of permutations of `n` elements with exactly `k` cycles.
//!
//! The triangle is generated row by row from the recurrence
//! `[n+1, k] = n*[n, k] + [n, k-1]` and cached behind a lock, so queries
//! behave as pure functions and are safe to call concurrently. An
//! exhaustive permutation-enumeration oracle is provided for desk-scale
//! ground truth, deliberately independent of the recurrence.

use crate::exact::{binomial, int_pow, ExactInt};
use crate::report::VerificationReport;
use num_traits::{One, Zero};
use std::sync::{OnceLock, RwLock};

/// Growable, internally synchronized table of Stirling cycle numbers.
///
/// Row `n` holds `[n, 0] ..= [n, n]`. Rows are computed on demand up to the
/// highest requested index and never mutated afterwards.
#[derive(Debug)]
pub struct StirlingTriangle {
    rows: RwLock<Vec<Vec<ExactInt>>>,
}

impl StirlingTriangle {
    pub fn new() -> Self {
        StirlingTriangle {
            rows: RwLock::new(vec![vec![ExactInt::one()]]),
        }
    }

    fn ensure(&self, n: usize) {
        {
            let rows = self.rows.read().unwrap();
            if rows.len() > n {
                return;
            }
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() <= n {
            let m = rows.len();
            let row = {
                let prev = rows.last().unwrap();
                let mut row = Vec::with_capacity(m + 1);
                row.push(ExactInt::zero());
                for k in 1..=m {
                    let mut v = prev[k - 1].clone();
                    if k < m {
                        v += &prev[k] * (m as u64 - 1);
                    }
                    row.push(v);
                }
                row
            };
            rows.push(row);
        }
    }

    /// `[n, k]`; zero when `k` is negative or exceeds `n`.
    pub fn value(&self, n: u32, k: i64) -> ExactInt {
        if k < 0 || k > i64::from(n) {
            return ExactInt::zero();
        }
        self.ensure(n as usize);
        self.rows.read().unwrap()[n as usize][k as usize].clone()
    }

    /// The whole row `[n, 0] ..= [n, n]`.
    pub fn row(&self, n: u32) -> Vec<ExactInt> {
        self.ensure(n as usize);
        self.rows.read().unwrap()[n as usize].clone()
    }
}

impl Default for StirlingTriangle {
    fn default() -> Self {
        Self::new()
    }
}

fn shared() -> &'static StirlingTriangle {
    static SHARED: OnceLock<StirlingTriangle> = OnceLock::new();
    SHARED.get_or_init(StirlingTriangle::new)
}

/// Unsigned Stirling number of the first kind `[n, k]`, from the shared
/// process-wide triangle. Out-of-range `k` yields 0.
pub fn stirling(n: u32, k: i64) -> ExactInt {
    shared().value(n, k)
}

/// Row `n` of the shared triangle.
pub fn stirling_row(n: u32) -> Vec<ExactInt> {
    shared().row(n)
}

fn heap_permute<F: FnMut(&[usize])>(perm: &mut [usize], size: usize, visit: &mut F) {
    if size <= 1 {
        visit(perm);
        return;
    }
    for i in 0..size {
        heap_permute(perm, size - 1, visit);
        if size.is_multiple_of(2) {
            perm.swap(i, size - 1);
        } else {
            perm.swap(0, size - 1);
        }
    }
}

/// Cycle-count histogram over all `n!` permutations of `n` elements,
/// by exhaustive enumeration; entry `k` counts permutations with exactly
/// `k` cycles. Cycles are found by index-following decomposition, making
/// this independent of the triangle recurrence.
///
/// Panics for `n > 9` (enumeration scale guard).
pub fn cycle_count_histogram(n: u32) -> Vec<ExactInt> {
    assert!(
        n <= 9,
        "exhaustive permutation enumeration is capped at n = 9, got n = {n}"
    );
    let n = n as usize;
    let mut counts = vec![0u64; n + 1];
    if n == 0 {
        // the empty permutation has zero cycles
        counts[0] = 1;
    } else {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        heap_permute(&mut perm, n, &mut |p: &[usize]| {
            seen.fill(false);
            let mut cycles = 0usize;
            for start in 0..p.len() {
                if !seen[start] {
                    cycles += 1;
                    let mut j = start;
                    while !seen[j] {
                        seen[j] = true;
                        j = p[j];
                    }
                }
            }
            counts[cycles] += 1;
        });
    }
    counts.into_iter().map(ExactInt::from).collect()
}

/// Counts permutations of `n` elements with exactly `k` cycles by brute
/// enumeration; the independent oracle for [`stirling`]. Panics for `n > 9`.
pub fn stirling_by_permutation_count(n: u32, k: i64) -> ExactInt {
    let hist = cycle_count_histogram(n);
    if k < 0 || k > i64::from(n) {
        return ExactInt::zero();
    }
    hist[k as usize].clone()
}

/// Checks, for every `t` in `0..=p+1`, the alternating coefficient-shift
/// identity
///
/// ```text
/// sum_{k=t}^{p+1} (-1)^(p+1-k) * p^(k-t) * C(k,t) * [p+1, k]  ==  [p+1, t]
/// ```
///
/// One case is recorded per `t`; failures are data, not errors.
pub fn check_lemma1(p: u32) -> VerificationReport {
    let mut report = VerificationReport::new("lemma1", format!("p = {p}, t in 0..={}", p + 1));
    let row = stirling_row(p + 1);
    let base = ExactInt::from(p);
    for t in 0..=p + 1 {
        let mut lhs = ExactInt::zero();
        for k in t..=p + 1 {
            let mut term =
                int_pow(&base, k - t) * binomial(u64::from(k), i64::from(t)) * &row[k as usize];
            if (p + 1 - k) % 2 == 1 {
                term = -term;
            }
            lhs += term;
        }
        report.check_eq(
            &[("p", u64::from(p)), ("t", u64::from(t))],
            &lhs,
            &row[t as usize],
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{factorial, int};

    #[test]
    fn paper_row_seven() {
        let row: Vec<ExactInt> = [0, 720, 1764, 1624, 735, 175, 21, 1]
            .iter()
            .map(|&v| int(v))
            .collect();
        assert_eq!(stirling_row(7), row);
        assert_eq!(stirling(7, 2), int(1764));
        assert_eq!(stirling(7, 5), int(175));
    }

    #[test]
    fn small_rows() {
        assert_eq!(stirling_row(0), vec![int(1)]);
        assert_eq!(stirling_row(1), vec![int(0), int(1)]);
        for n in 0..=20u32 {
            assert_eq!(stirling(n, i64::from(n)), int(1), "diagonal at n={n}");
        }
        assert_eq!(stirling(3, 2), int(3));
    }

    #[test]
    fn out_of_range_is_zero() {
        assert_eq!(stirling(5, -1), int(0));
        assert_eq!(stirling(5, 6), int(0));
        assert_eq!(stirling_by_permutation_count(5, 6), int(0));
    }

    #[test]
    fn permutation_oracle_examples() {
        assert_eq!(stirling_by_permutation_count(4, 1), int(6));
        assert_eq!(stirling_by_permutation_count(4, 4), int(1));
        assert_eq!(stirling_by_permutation_count(7, 3), int(1624));
        assert_eq!(stirling_by_permutation_count(0, 0), int(1));
    }

    #[test]
    fn oracle_matches_triangle_through_7() {
        for n in 0..=7u32 {
            let hist = cycle_count_histogram(n);
            for k in 0..=i64::from(n) {
                assert_eq!(hist[k as usize], stirling(n, k), "n={n}, k={k}");
            }
        }
    }

    #[test]
    #[should_panic(expected = "capped at n = 9")]
    fn oracle_rejects_large_n() {
        stirling_by_permutation_count(10, 3);
    }

    #[test]
    fn row_sums_are_factorials() {
        for n in 0..=25u32 {
            let sum = stirling_row(n)
                .into_iter()
                .fold(ExactInt::from(0u32), |a, b| a + b);
            assert_eq!(sum, factorial(u64::from(n)), "row {n}");
        }
    }

    #[test]
    fn lemma1_base_case() {
        let rep = check_lemma1(0);
        assert_eq!(rep.cases_checked, 2);
        assert!(rep.passed());
    }

    #[test]
    fn lemma1_hand_expansion_p1_t1() {
        // -[2,1] + 2*[2,2] = -1 + 2 = 1 = [2,1]
        let lhs = -stirling(2, 1) + int(2) * stirling(2, 2);
        assert_eq!(lhs, stirling(2, 1));
        assert!(check_lemma1(1).passed());
    }

    #[test]
    fn lemma1_p6() {
        let rep = check_lemma1(6);
        assert_eq!(rep.cases_checked, 8);
        assert!(rep.passed());
    }

    #[test]
    fn concurrent_queries_share_one_triangle() {
        let handles: Vec<_> = (0..4u32)
            .map(|t| std::thread::spawn(move || stirling_row(30 + t)))
            .collect();
        for h in handles {
            let row = h.join().unwrap();
            let n = row.len() as u64 - 1;
            let sum = row.into_iter().fold(ExactInt::from(0u32), |a, b| a + b);
            assert_eq!(sum, factorial(n));
        }
    }
}
