//! Exact-rational harmonic numbers, the two harmonic-number identities
//! whose equal right-hand sides yield the Stirling power-sum recursion,
//! and a generic summation-by-parts combinator.
//!
//! Both identities share the left-hand side `sum_{k=1}^{n} C(k+p,p) * H_k`:
//!
//! * identity 1 rewrites it as
//!   `C(n+p+1,p+1)*H_n - (1/(p+1)!) * sum_t [p+1, t+1] * S_t(n)`,
//! * identity 2 rewrites it as
//!   `C(n+p+1,p+1)*H_n - (1/(p+1)) * (C(n+p+1,p+1) - 1)`.
//!
//! Every `S_t` used here comes from literal summation, never from the
//! recursions under test, so the checks cannot be circular.

use crate::exact::{binomial, factorial, to_rational, ExactInt, ExactRational};
use crate::powersum::powersum_direct_all;
use crate::report::VerificationReport;
use crate::stirling::stirling_row;
use num_traits::{One, Zero};
use std::sync::{OnceLock, RwLock};

struct HarmonicCache {
    // values[i] = H_{i+1}
    values: RwLock<Vec<ExactRational>>,
}

impl HarmonicCache {
    fn new() -> Self {
        HarmonicCache {
            values: RwLock::new(Vec::new()),
        }
    }

    fn get(&self, k: u64) -> ExactRational {
        let idx = usize::try_from(k).expect("harmonic index fits in usize") - 1;
        {
            let values = self.values.read().unwrap();
            if let Some(v) = values.get(idx) {
                return v.clone();
            }
        }
        let mut values = self.values.write().unwrap();
        while values.len() <= idx {
            let next = values.len() as u64 + 1;
            let step = ExactRational::new(ExactInt::one(), ExactInt::from(next));
            let h = match values.last() {
                Some(prev) => prev.clone() + step,
                None => step,
            };
            values.push(h);
        }
        values[idx].clone()
    }
}

fn cache() -> &'static HarmonicCache {
    static CACHE: OnceLock<HarmonicCache> = OnceLock::new();
    CACHE.get_or_init(HarmonicCache::new)
}

/// The `k`-th harmonic number `H_k = 1 + 1/2 + ... + 1/k` in lowest terms.
/// Cached as a growable prefix. Panics for `k = 0`.
pub fn harmonic(k: u64) -> ExactRational {
    assert!(k >= 1, "harmonic numbers are defined for k >= 1");
    cache().get(k)
}

/// Two equal-length rational sequences with their partial sums, the raw
/// material of a summation-by-parts check.
#[derive(Clone, Debug)]
pub struct SequencePair {
    u: Vec<ExactRational>,
    v: Vec<ExactRational>,
}

impl SequencePair {
    /// Panics when the sequences differ in length or are empty.
    pub fn new(u: Vec<ExactRational>, v: Vec<ExactRational>) -> Self {
        assert_eq!(u.len(), v.len(), "sequence pair requires equal lengths");
        assert!(!u.is_empty(), "sequence pair requires length >= 1");
        SequencePair { u, v }
    }

    /// The pairing `u_k = C(k+p, p)`, `v_k = 1/k` for `k = 1..=n`.
    pub fn binomial_harmonic(p: u32, n: u64) -> Self {
        assert!(n >= 1, "sequence pair requires n >= 1");
        let u = (1..=n)
            .map(|k| to_rational(binomial(k + u64::from(p), i64::from(p))))
            .collect();
        let v = (1..=n)
            .map(|k| ExactRational::new(ExactInt::one(), ExactInt::from(k)))
            .collect();
        SequencePair::new(u, v)
    }

    /// Always at least 1.
    pub fn len(&self) -> usize {
        self.u.len()
    }

    /// Always false; pairs are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn u(&self) -> &[ExactRational] {
        &self.u
    }

    pub fn v(&self) -> &[ExactRational] {
        &self.v
    }

    /// `U_0, U_1, ..., U_n` with `U_0 = 0`.
    pub fn partial_sums_u(&self) -> Vec<ExactRational> {
        prefix_sums(&self.u)
    }

    /// `V_0, V_1, ..., V_n` with `V_0 = 0`.
    pub fn partial_sums_v(&self) -> Vec<ExactRational> {
        prefix_sums(&self.v)
    }
}

fn prefix_sums(seq: &[ExactRational]) -> Vec<ExactRational> {
    let mut out = Vec::with_capacity(seq.len() + 1);
    out.push(ExactRational::zero());
    for x in seq {
        let next = out.last().unwrap().clone() + x.clone();
        out.push(next);
    }
    out
}

fn abel_sides(pair: &SequencePair) -> (ExactRational, ExactRational) {
    let us = pair.partial_sums_u();
    let vs = pair.partial_sums_v();
    let n = pair.len();
    let mut lhs = ExactRational::zero();
    for k in 1..=n {
        lhs += pair.u[k - 1].clone() * vs[k].clone();
        lhs += pair.v[k - 1].clone() * us[k - 1].clone();
    }
    let rhs = us[n].clone() * vs[n].clone();
    (lhs, rhs)
}

/// Summation by parts: checks
/// `sum u_k*V_k + sum v_k*U_{k-1} == U_n * V_n` for the given pair.
pub fn abel_summation_check(pair: &SequencePair) -> VerificationReport {
    let n = pair.len() as u64;
    let mut report = VerificationReport::new("abel", format!("sequence pair of length {n}"));
    let (lhs, rhs) = abel_sides(pair);
    report.check_eq(&[("n", n)], &lhs, &rhs);
    report
}

/// The common left-hand side of both identities,
/// `sum_{k=1}^{n} C(k+p, p) * H_k`, evaluated literally.
pub fn identity1_lhs(p: u32, n: u64) -> ExactRational {
    assert!(n >= 1, "identity evaluation requires n >= 1");
    let mut acc = ExactRational::zero();
    for k in 1..=n {
        acc += to_rational(binomial(k + u64::from(p), i64::from(p))) * harmonic(k);
    }
    acc
}

/// `(1/(p+1)!) * sum_{t=0}^{p} [p+1, t+1] * S_t(n)`, with each `S_t`
/// from literal summation.
pub fn scaled_stirling_powersum(p: u32, n: u64) -> ExactRational {
    let row = stirling_row(p + 1);
    let sums = powersum_direct_all(p, n);
    let mut total = ExactInt::zero();
    for (t, s) in sums.iter().enumerate() {
        total += &row[t + 1] * s;
    }
    ExactRational::new(total, factorial(u64::from(p) + 1))
}

/// `sum_{j=1}^{n} C(j+p, p+1) / j`, the intermediate form both proofs
/// pass through.
pub fn binomial_ratio_sum(p: u32, n: u64) -> ExactRational {
    assert!(n >= 1, "identity evaluation requires n >= 1");
    let mut acc = ExactRational::zero();
    for j in 1..=n {
        let b = binomial(j + u64::from(p), i64::from(p) + 1);
        acc += ExactRational::new(b, ExactInt::from(j));
    }
    acc
}

/// Right-hand side of identity 1:
/// `C(n+p+1, p+1)*H_n - (1/(p+1)!) * sum_t [p+1, t+1] * S_t(n)`.
pub fn identity1_rhs(p: u32, n: u64) -> ExactRational {
    assert!(n >= 1, "identity evaluation requires n >= 1");
    let b = to_rational(binomial(n + u64::from(p) + 1, i64::from(p) + 1));
    b * harmonic(n) - scaled_stirling_powersum(p, n)
}

/// Right-hand side of identity 2:
/// `C(n+p+1, p+1)*H_n - (1/(p+1)) * (C(n+p+1, p+1) - 1)`.
pub fn identity2_rhs(p: u32, n: u64) -> ExactRational {
    assert!(n >= 1, "identity evaluation requires n >= 1");
    let b = to_rational(binomial(n + u64::from(p) + 1, i64::from(p) + 1));
    let correction =
        (b.clone() - ExactRational::one()) / to_rational(ExactInt::from(u64::from(p) + 1));
    b * harmonic(n) - correction
}

/// One case: identity 1's LHS equals its RHS at `(p, n)`.
pub fn check_identity1(p: u32, n: u64) -> VerificationReport {
    let mut report = VerificationReport::new("identity1", format!("p = {p}, n = {n}"));
    report.check_eq(
        &[("p", u64::from(p)), ("n", n)],
        &identity1_lhs(p, n),
        &identity1_rhs(p, n),
    );
    report
}

/// One case: the common LHS equals identity 2's RHS at `(p, n)`.
pub fn check_identity2(p: u32, n: u64) -> VerificationReport {
    let mut report = VerificationReport::new("identity2", format!("p = {p}, n = {n}"));
    report.check_eq(
        &[("p", u64::from(p)), ("n", n)],
        &identity1_lhs(p, n),
        &identity2_rhs(p, n),
    );
    report
}

/// Equates the right-hand sides of identities 1 and 2 and checks that the
/// cleared form reproduces the Stirling power-sum recursion exactly:
/// `p! + sum_t [p+1, t+1] * S_t(n) == p! * C(n+p+1, p+1)`.
/// Two cases per call: the rational equality and the cleared integer form.
pub fn check_eq2_derivation(p: u32, n: u64) -> VerificationReport {
    let mut report = VerificationReport::new("eq2_derivation", format!("p = {p}, n = {n}"));
    let params = [("p", u64::from(p)), ("n", n)];
    report.check_eq(&params, &identity1_rhs(p, n), &identity2_rhs(p, n));

    let row = stirling_row(p + 1);
    let sums = powersum_direct_all(p, n);
    let pf = factorial(u64::from(p));
    let mut lhs = pf.clone();
    for (t, s) in sums.iter().enumerate() {
        lhs += &row[t + 1] * s;
    }
    let rhs = pf * binomial(n + u64::from(p) + 1, i64::from(p) + 1);
    report.check_eq(&params, &lhs, &rhs);
    report
}

/// One case per `(p, n)`: summation by parts holds for the pairing
/// `u_k = C(k+p, p)`, `v_k = 1/k`, and every partial sum `U_k` matches
/// its closed form `C(k+p+1, p+1) - 1`.
pub fn check_abel_binomial_harmonic(p: u32, n: u64) -> VerificationReport {
    let mut report = VerificationReport::new("abel", format!("p = {p}, n = {n}"));
    let params = [("p", u64::from(p)), ("n", n)];
    let pair = SequencePair::binomial_harmonic(p, n);
    let (lhs, rhs) = abel_sides(&pair);
    if lhs != rhs {
        report.record_failure(&params, lhs.to_string(), rhs.to_string());
        return report;
    }
    let us = pair.partial_sums_u();
    for (k, u_k) in us.iter().enumerate().skip(1) {
        let closed = to_rational(binomial(k as u64 + u64::from(p) + 1, i64::from(p) + 1))
            - ExactRational::one();
        if *u_k != closed {
            report.record_failure(
                &[("p", u64::from(p)), ("n", n), ("k", k as u64)],
                u_k.to_string(),
                closed.to_string(),
            );
            return report;
        }
    }
    report.record_pass();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(1), rat(1, 1));
        assert_eq!(harmonic(3), rat(11, 6));
        assert_eq!(harmonic(6), rat(49, 20));
    }

    #[test]
    fn harmonic_steps_by_reciprocals() {
        for k in 2..=40u64 {
            assert_eq!(
                harmonic(k) - harmonic(k - 1),
                ExactRational::new(ExactInt::one(), ExactInt::from(k))
            );
        }
    }

    #[test]
    #[should_panic(expected = "k >= 1")]
    fn harmonic_rejects_zero() {
        harmonic(0);
    }

    #[test]
    fn abel_constant_sequences() {
        let ones = vec![rat(1, 1); 3];
        let pair = SequencePair::new(ones.clone(), ones);
        let (lhs, rhs) = abel_sides(&pair);
        assert_eq!(lhs, rat(9, 1));
        assert_eq!(rhs, rat(9, 1));
        assert!(abel_summation_check(&pair).passed());
    }

    #[test]
    fn abel_binomial_harmonic_p1_n3() {
        // both sides equal 33/2
        let pair = SequencePair::binomial_harmonic(1, 3);
        let (lhs, rhs) = abel_sides(&pair);
        assert_eq!(lhs, rat(33, 2));
        assert_eq!(rhs, rat(33, 2));
        assert!(check_abel_binomial_harmonic(1, 3).passed());
    }

    #[test]
    #[should_panic(expected = "equal lengths")]
    fn sequence_pair_rejects_length_mismatch() {
        SequencePair::new(vec![rat(1, 1)], vec![rat(1, 1), rat(1, 2)]);
    }

    #[test]
    fn identity_lhs_examples() {
        assert_eq!(identity1_lhs(0, 1), rat(1, 1));
        assert_eq!(identity1_lhs(0, 3), rat(13, 3));
    }

    #[test]
    fn identity_rhs_examples() {
        assert_eq!(identity1_rhs(0, 1), rat(1, 1));
        assert_eq!(identity2_rhs(0, 1), rat(1, 1));
        assert_eq!(identity2_rhs(0, 3), rat(13, 3));
    }

    #[test]
    fn identities_agree_on_spot_checks() {
        for (p, n) in [(1u32, 2u64), (2, 4), (3, 5), (2, 6), (5, 12)] {
            let lhs = identity1_lhs(p, n);
            assert_eq!(lhs, identity1_rhs(p, n), "identity1 at p={p} n={n}");
            assert_eq!(lhs, identity2_rhs(p, n), "identity2 at p={p} n={n}");
        }
    }

    #[test]
    fn intermediate_sum_equality() {
        for (p, n) in [(0u32, 1u64), (1, 4), (3, 9), (4, 15)] {
            assert_eq!(
                binomial_ratio_sum(p, n),
                scaled_stirling_powersum(p, n),
                "p={p} n={n}"
            );
        }
    }

    #[test]
    fn eq2_derivation_examples() {
        for (p, n) in [(0u32, 1u64), (4, 10), (8, 25)] {
            let rep = check_eq2_derivation(p, n);
            assert_eq!(rep.cases_checked, 2);
            assert!(rep.passed(), "p={p} n={n}");
        }
    }
}
