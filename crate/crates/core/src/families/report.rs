//! Structured outcomes of identity and conjecture checks.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::series::{format_rational, PowerSeries, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked claim. `status` is `Pass` exactly when both sides were
/// evaluated and `computed_prefix == expected_prefix` elementwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub parameters: BTreeMap<String, i64>,
    #[serde(serialize_with = "rationals_as_text")]
    pub computed_prefix: Vec<Rational>,
    #[serde(serialize_with = "rationals_as_text")]
    pub expected_prefix: Vec<Rational>,
    pub status: Status,
    pub prefix_length: usize,
    pub note: String,
}

fn rationals_as_text<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rational))
}

impl VerificationReport {
    pub fn new(
        claim_id: impl Into<String>,
        parameters: BTreeMap<String, i64>,
        computed: Result<Vec<Rational>>,
        expected: Result<Vec<Rational>>,
        note: impl Into<String>,
    ) -> Self {
        let mut note = note.into();
        let mut add_error = |side: &str, e: &crate::Error| {
            if !note.is_empty() {
                note.push_str("; ");
            }
            let _ = write!(note, "{side} side failed: {e}");
        };
        let evaluated = computed.is_ok() && expected.is_ok();
        let computed = computed.unwrap_or_else(|e| {
            add_error("computed", &e);
            Vec::new()
        });
        let expected = expected.unwrap_or_else(|e| {
            add_error("expected", &e);
            Vec::new()
        });
        let status = if evaluated && computed == expected {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            claim_id: claim_id.into(),
            parameters,
            prefix_length: expected.len(),
            computed_prefix: computed,
            expected_prefix: expected,
            status,
            note,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// `a=1,b=-2` style rendering of the bindings.
    pub fn parameter_text(&self) -> String {
        let parts: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        parts.join(",")
    }
}

/// Aligned table, one row per report; failing rows are followed by both prefixes.
pub fn format_table(reports: &[VerificationReport]) -> String {
    let claim_w = reports
        .iter()
        .map(|r| r.claim_id.len())
        .max()
        .unwrap_or(5)
        .max(5);
    let param_w = reports
        .iter()
        .map(|r| r.parameter_text().len())
        .max()
        .unwrap_or(6)
        .max(6);
    let mut out = format!(
        "{:<6} {:<claim_w$} {:<param_w$} {:>3}  NOTE\n",
        "STATUS", "CLAIM", "PARAMS", "N"
    );
    for r in reports {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        let _ = writeln!(
            out,
            "{:<6} {:<claim_w$} {:<param_w$} {:>3}  {}",
            status,
            r.claim_id,
            r.parameter_text(),
            r.prefix_length,
            r.note
        );
        if !r.passed() {
            let join =
                |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>().join(", ");
            let _ = writeln!(out, "       computed: {}", join(&r.computed_prefix));
            let _ = writeln!(out, "       expected: {}", join(&r.expected_prefix));
        }
    }
    out
}

/// Accumulates reports sharing a family label and parameter binding.
pub(crate) struct Claims {
    family: &'static str,
    parameters: BTreeMap<String, i64>,
    reports: Vec<VerificationReport>,
}

impl Claims {
    pub(crate) fn new(family: &'static str, parameters: &[(&str, i64)]) -> Self {
        Claims {
            family,
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
            reports: Vec::new(),
        }
    }

    pub(crate) fn values(
        &mut self,
        claim: &str,
        computed: Result<Vec<Rational>>,
        expected: Result<Vec<Rational>>,
        note: impl Into<String>,
    ) {
        self.reports.push(VerificationReport::new(
            format!("{}/{}", self.family, claim),
            self.parameters.clone(),
            computed,
            expected,
            note,
        ));
    }

    /// Compares the first `terms` coefficients of two series.
    pub(crate) fn series(
        &mut self,
        claim: &str,
        computed: &Result<PowerSeries>,
        expected: Result<PowerSeries>,
        terms: usize,
        note: impl Into<String>,
    ) {
        let take = |s: &PowerSeries| crate::families::support::prefix(s, terms);
        let computed = computed.as_ref().map_err(Clone::clone).and_then(take);
        let expected = expected.and_then(|s| take(&s));
        self.values(claim, computed, expected, note);
    }

    pub(crate) fn finish(self) -> Vec<VerificationReport> {
        self.reports
    }
}
