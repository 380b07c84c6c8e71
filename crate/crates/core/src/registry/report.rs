//! Report types. Exact values serialize as `"num/den"` strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "formal")]
    Formal,
    #[serde(rename = "exact")]
    Exact,
    #[serde(rename = "formal+exact")]
    FormalExact,
    #[serde(rename = "diagnostic")]
    Diagnostic,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Formal => "formal",
            Mode::Exact => "exact",
            Mode::FormalExact => "formal+exact",
            Mode::Diagnostic => "diagnostic",
        }
    }

    pub fn has_formal_part(self) -> bool {
        matches!(self, Mode::Formal | Mode::FormalExact | Mode::Diagnostic)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Diagnostic,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Diagnostic => "diagnostic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub lhs: String,
    pub rhs: String,
}

/// One measured comparison of a diagnostic entry under a named convention.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub convention: String,
    pub label: String,
    pub agrees: bool,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

/// Partial sums of the entry's main series at `x = 1/p`. Reporting only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericReading {
    pub prime: u64,
    pub truncation: usize,
    pub lhs_value: String,
    pub rhs_value: String,
    pub tail: String,
    /// `Some` only when every coefficient is nonnegative.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monotone: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub mode: Mode,
    pub status: Status,
    /// Truncation degree of the formal comparisons, absent for purely exact
    /// entries.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub checks: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<Finding>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric: Option<NumericReading>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl IdentityReport {
    /// Whether this report makes a suite run fail.
    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail
    }
}
