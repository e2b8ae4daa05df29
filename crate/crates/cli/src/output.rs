//! Output formats and rendering. Every payload is deterministic: the same
//! invocation produces byte-identical bytes, so timing never appears in
//! json or csv (text mode reports elapsed time on stderr instead).
//!
//! Numbers serialize as decimal strings in JSON; values outgrow native
//! 64-bit numerics almost immediately.

use clap::ValueEnum;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use stirsum_core::{ExactInt, ExactRational, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Writes the payload to the chosen sink (stdout by default).
pub fn emit(output: &Option<PathBuf>, payload: &str) -> Result<(), String> {
    match output {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

/// Indexed sequence of integers: text as `index<TAB>value` lines, csv with
/// a header row, json as a positional array of decimal strings.
pub fn indexed_values(format: Format, index_label: &str, start: u64, values: &[ExactInt]) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for (i, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{}\t{v}", start + i as u64);
            }
            out
        }
        Format::Csv => {
            let mut out = format!("{index_label},value\n");
            for (i, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{},{v}", start + i as u64);
            }
            out
        }
        Format::Json => {
            let strings: Vec<String> = values.iter().map(ExactInt::to_string).collect();
            let mut out = serde_json::to_string(&strings).expect("string array serializes");
            out.push('\n');
            out
        }
    }
}

#[derive(Serialize)]
struct PowersumJson<'a> {
    p: u32,
    n: u64,
    method: &'a str,
    value: String,
}

pub fn powersum_single(format: Format, p: u32, n: u64, method: &str, value: &ExactInt) -> String {
    match format {
        Format::Text => format!("{value}\n"),
        Format::Csv => format!("p,n,method,value\n{p},{n},{method},{value}\n"),
        Format::Json => {
            let mut out = serde_json::to_string(&PowersumJson {
                p,
                n,
                method,
                value: value.to_string(),
            })
            .expect("serializes");
            out.push('\n');
            out
        }
    }
}

#[derive(Serialize)]
struct CatalanJson<'a> {
    p: u32,
    method: &'a str,
    value: String,
}

pub fn catalan_single(format: Format, p: u32, method: &str, value: &ExactInt) -> String {
    match format {
        Format::Text => format!("{value}\n"),
        Format::Csv => format!("p,method,value\n{p},{method},{value}\n"),
        Format::Json => {
            let mut out = serde_json::to_string(&CatalanJson {
                p,
                method,
                value: value.to_string(),
            })
            .expect("serializes");
            out.push('\n');
            out
        }
    }
}

/// Faulhaber coefficients ascending: text as a comma-separated line, csv
/// with degrees, json as an array of rational strings.
pub fn faulhaber(format: Format, coeffs: &[ExactRational]) -> String {
    match format {
        Format::Text => {
            let joined: Vec<String> = coeffs.iter().map(ExactRational::to_string).collect();
            format!("{}\n", joined.join(", "))
        }
        Format::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (d, c) in coeffs.iter().enumerate() {
                let _ = writeln!(out, "{d},{c}");
            }
            out
        }
        Format::Json => {
            let strings: Vec<String> = coeffs.iter().map(ExactRational::to_string).collect();
            let mut out = serde_json::to_string(&strings).expect("serializes");
            out.push('\n');
            out
        }
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    identity: &'a str,
    cases: u64,
    failures: u64,
    first_failure: Option<FailureJson<'a>>,
}

#[derive(Serialize)]
struct FailureJson<'a> {
    params: &'a BTreeMap<String, u64>,
    lhs: &'a str,
    rhs: &'a str,
}

fn params_inline(params: &BTreeMap<String, u64>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn report(format: Format, rep: &VerificationReport) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "identity: {}", rep.identity);
            let _ = writeln!(out, "domain: {}", rep.domain);
            let _ = writeln!(out, "cases: {}", rep.cases_checked);
            let _ = writeln!(out, "failures: {}", rep.failures);
            if let Some(f) = &rep.first_failure {
                let _ = writeln!(out, "first_failure: {}", params_inline(&f.params));
                let _ = writeln!(out, "  lhs: {}", f.lhs);
                let _ = writeln!(out, "  rhs: {}", f.rhs);
            }
            let _ = writeln!(out, "result: {}", if rep.passed() { "PASS" } else { "FAIL" });
            out
        }
        Format::Csv => {
            let mut out = String::from("identity,cases,failures,params,lhs,rhs\n");
            match &rep.first_failure {
                Some(f) => {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        rep.identity,
                        rep.cases_checked,
                        rep.failures,
                        params_inline(&f.params),
                        f.lhs,
                        f.rhs
                    );
                }
                None => {
                    let _ = writeln!(out, "{},{},{},,,", rep.identity, rep.cases_checked, rep.failures);
                }
            }
            out
        }
        Format::Json => {
            let json = ReportJson {
                identity: &rep.identity,
                cases: rep.cases_checked,
                failures: rep.failures,
                first_failure: rep.first_failure.as_ref().map(|f| FailureJson {
                    params: &f.params,
                    lhs: &f.lhs,
                    rhs: &f.rhs,
                }),
            };
            let mut out = serde_json::to_string(&json).expect("serializes");
            out.push('\n');
            out
        }
    }
}
