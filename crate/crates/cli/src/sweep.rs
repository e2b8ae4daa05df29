//! Sweep planning and execution for the `verify` subcommand.
//!
//! A sweep walks an identity's parameter rectangle in lexicographic order
//! (p outer, n or r inner) and merges per-cell reports into one. With
//! `--jobs N` the p-groups are computed on worker threads; groups are
//! claimed in increasing p and merged in order, so the report is identical
//! to the sequential one. `--fail-fast` truncates the merge at the first
//! failing cell.

use clap::ValueEnum;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use stirsum_core::{catalan, harmonic, powersum, stirling};
use stirsum_core::{factorial, stirling_row, ExactInt, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    /// Alternating coefficient-shift identity for Stirling rows
    Lemma1,
    /// Harmonic identity with the Stirling-weighted power-sum correction
    Identity1,
    /// Harmonic identity with the binomial correction
    Identity2,
    /// Classical binomial power-sum recursion residual
    Eq1,
    /// Stirling power-sum recursion residual
    Eq2,
    /// Weighted Stirling row sum equals (p+r)!/r!
    Eq3,
    /// Telescoped form of the weighted row-sum identity
    #[value(name = "inductive_step", alias = "inductive-step")]
    InductiveStep,
    /// Cycle-average Catalan form equals the closed form
    Catalan,
    /// Summation by parts for the binomial/harmonic pairing
    Abel,
    /// Deliberately failing row-sum check, for exercising the failure path
    #[value(name = "selftest-fail", hide = true)]
    SelftestFail,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Lemma1 => "lemma1",
            Identity::Identity1 => "identity1",
            Identity::Identity2 => "identity2",
            Identity::Eq1 => "eq1",
            Identity::Eq2 => "eq2",
            Identity::Eq3 => "eq3",
            Identity::InductiveStep => "inductive_step",
            Identity::Catalan => "catalan",
            Identity::Abel => "abel",
            Identity::SelftestFail => "selftest-fail",
        }
    }
}

#[derive(Clone, Copy)]
enum InnerAxis {
    None,
    N { start: u64 },
    R { start: u64 },
}

pub struct SweepSpec {
    pub identity: Identity,
    pub p_max: u32,
    pub n_max: Option<u64>,
    pub r_max: Option<u64>,
    pub fail_fast: bool,
    pub jobs: usize,
}

struct Plan {
    p_start: u32,
    inner: InnerAxis,
    inner_max: u64,
}

fn plan(spec: &SweepSpec) -> Result<Plan, String> {
    let name = spec.identity.name();
    let need_n = |start: u64| -> Result<Plan, String> {
        match spec.n_max {
            Some(m) if m >= start => Ok(Plan {
                p_start: 0,
                inner: InnerAxis::N { start },
                inner_max: m,
            }),
            Some(m) => Err(format!("identity '{name}' requires --n-max >= {start}, got {m}")),
            None => Err(format!("identity '{name}' requires --n-max")),
        }
    };
    let need_r = |start: u64| -> Result<Plan, String> {
        match spec.r_max {
            Some(m) if m >= start => Ok(Plan {
                p_start: 0,
                inner: InnerAxis::R { start },
                inner_max: m,
            }),
            Some(m) => Err(format!("identity '{name}' requires --r-max >= {start}, got {m}")),
            None => Err(format!("identity '{name}' requires --r-max")),
        }
    };
    match spec.identity {
        Identity::Lemma1 | Identity::SelftestFail => Ok(Plan {
            p_start: 0,
            inner: InnerAxis::None,
            inner_max: 0,
        }),
        Identity::Catalan => {
            if spec.p_max >= 1 {
                Ok(Plan {
                    p_start: 1,
                    inner: InnerAxis::None,
                    inner_max: 0,
                })
            } else {
                Err("identity 'catalan' requires --p-max >= 1".into())
            }
        }
        Identity::Identity1 | Identity::Identity2 | Identity::Abel => need_n(1),
        Identity::Eq1 | Identity::Eq2 => need_n(0),
        Identity::Eq3 => need_r(1),
        Identity::InductiveStep => need_r(2),
    }
}

fn domain_string(spec: &SweepSpec, plan: &Plan) -> String {
    let p_part = format!("p in {}..={}", plan.p_start, spec.p_max);
    match plan.inner {
        InnerAxis::None => match spec.identity {
            Identity::Lemma1 => format!("{p_part}, t in 0..=p+1"),
            _ => p_part,
        },
        InnerAxis::N { start } => format!("{p_part}, n in {start}..={}", plan.inner_max),
        InnerAxis::R { start } => format!("{p_part}, r in {start}..={}", plan.inner_max),
    }
}

fn selftest_cell(p: u32) -> VerificationReport {
    let mut rep = VerificationReport::new("selftest-fail", format!("p = {p}"));
    let row_sum = stirling_row(p + 1)
        .into_iter()
        .fold(ExactInt::from(0u32), |a, b| a + b);
    let corrupted = factorial(u64::from(p) + 1) + 1u32;
    rep.check_eq(&[("p", u64::from(p))], &row_sum, &corrupted);
    rep
}

fn cells_for(identity: Identity, p: u32, plan: &Plan) -> Vec<VerificationReport> {
    let inner = |start: u64, max: u64| start..=max;
    match identity {
        Identity::Lemma1 => vec![stirling::check_lemma1(p)],
        Identity::Catalan => vec![catalan::check_catalan(p)],
        Identity::SelftestFail => vec![selftest_cell(p)],
        Identity::Identity1 => match plan.inner {
            InnerAxis::N { start } => inner(start, plan.inner_max)
                .map(|n| harmonic::check_identity1(p, n))
                .collect(),
            _ => unreachable!(),
        },
        Identity::Identity2 => match plan.inner {
            InnerAxis::N { start } => inner(start, plan.inner_max)
                .map(|n| harmonic::check_identity2(p, n))
                .collect(),
            _ => unreachable!(),
        },
        Identity::Abel => match plan.inner {
            InnerAxis::N { start } => inner(start, plan.inner_max)
                .map(|n| harmonic::check_abel_binomial_harmonic(p, n))
                .collect(),
            _ => unreachable!(),
        },
        Identity::Eq1 => match plan.inner {
            InnerAxis::N { start } => inner(start, plan.inner_max)
                .map(|n| powersum::check_eq1(p, n))
                .collect(),
            _ => unreachable!(),
        },
        Identity::Eq2 => match plan.inner {
            InnerAxis::N { start } => inner(start, plan.inner_max)
                .map(|n| powersum::check_eq2(p, n))
                .collect(),
            _ => unreachable!(),
        },
        Identity::Eq3 => match plan.inner {
            InnerAxis::R { start } => inner(start, plan.inner_max)
                .map(|r| catalan::check_identity3(p, r))
                .collect(),
            _ => unreachable!(),
        },
        Identity::InductiveStep => match plan.inner {
            InnerAxis::R { start } => inner(start, plan.inner_max)
                .map(|r| catalan::check_inductive_step(p, r))
                .collect(),
            _ => unreachable!(),
        },
    }
}

fn run_parallel<F>(ps: &[u32], jobs: usize, fail_fast: bool, run_group: F) -> Vec<Vec<VerificationReport>>
where
    F: Fn(u32) -> Vec<VerificationReport> + Sync,
{
    let slots: Vec<Mutex<Option<Vec<VerificationReport>>>> =
        ps.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let abort = AtomicBool::new(false);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(ps.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= ps.len() {
                    break;
                }
                // groups are claimed in index order, so anything skipped
                // here lies after an already-recorded failure
                let group = if fail_fast && abort.load(Ordering::Relaxed) {
                    Vec::new()
                } else {
                    run_group(ps[i])
                };
                if fail_fast && group.iter().any(|r| r.failures > 0) {
                    abort.store(true, Ordering::Relaxed);
                }
                *slots[i].lock().unwrap() = Some(group);
            });
        }
    });
    slots
        .into_iter()
        .map(|m| m.into_inner().unwrap().unwrap_or_default())
        .collect()
}

/// Runs the sweep and returns the merged report. Invalid combinations of
/// identity and range flags are usage errors.
pub fn run(spec: &SweepSpec) -> Result<VerificationReport, String> {
    if spec.jobs == 0 {
        return Err("--jobs must be at least 1".into());
    }
    let plan = plan(spec)?;
    if spec.p_max < plan.p_start {
        return Err(format!(
            "identity '{}' requires --p-max >= {}",
            spec.identity.name(),
            plan.p_start
        ));
    }
    let ps: Vec<u32> = (plan.p_start..=spec.p_max).collect();
    let run_group = |p: u32| cells_for(spec.identity, p, &plan);

    let groups: Vec<Vec<VerificationReport>> = if spec.jobs == 1 || ps.len() == 1 {
        let mut groups = Vec::with_capacity(ps.len());
        for &p in &ps {
            let group = run_group(p);
            let failed = group.iter().any(|r| r.failures > 0);
            groups.push(group);
            if spec.fail_fast && failed {
                break;
            }
        }
        groups
    } else {
        run_parallel(&ps, spec.jobs, spec.fail_fast, run_group)
    };

    let mut aggregate =
        VerificationReport::new(spec.identity.name(), domain_string(spec, &plan));
    'merge: for group in groups {
        for cell in group {
            let failed = cell.failures > 0;
            aggregate.merge(cell);
            if spec.fail_fast && failed {
                break 'merge;
            }
        }
    }
    Ok(aggregate)
}
