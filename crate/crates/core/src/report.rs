//! Outcome reporting for identity sweeps. A failing case is data, not an
//! error: a sweep always completes its report.

use std::collections::BTreeMap;
use std::fmt::Display;

/// First failing case of a sweep, with both sides rendered exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub params: BTreeMap<String, u64>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of an exhaustive identity check over a finite parameter domain.
///
/// Invariants: `failures == 0` implies `first_failure` is `None`, and the
/// recorded failure is the first one in the order cases were checked.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub identity: String,
    pub domain: String,
    pub cases_checked: u64,
    pub failures: u64,
    pub first_failure: Option<Failure>,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>, domain: impl Into<String>) -> Self {
        VerificationReport {
            identity: identity.into(),
            domain: domain.into(),
            cases_checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn record_pass(&mut self) {
        self.cases_checked += 1;
    }

    pub fn record_failure(&mut self, params: &[(&str, u64)], lhs: String, rhs: String) {
        self.cases_checked += 1;
        self.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(Failure {
                params: params.iter().map(|(k, v)| ((*k).to_string(), *v)).collect(),
                lhs,
                rhs,
            });
        }
    }

    /// Records one case: pass when the two sides agree exactly.
    pub fn check_eq<T: PartialEq + Display>(&mut self, params: &[(&str, u64)], lhs: &T, rhs: &T) {
        if lhs == rhs {
            self.record_pass();
        } else {
            self.record_failure(params, lhs.to_string(), rhs.to_string());
        }
    }

    /// Appends the counts of `other`, keeping the earliest failure.
    pub fn merge(&mut self, other: VerificationReport) {
        self.cases_checked += other.cases_checked;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }
}
