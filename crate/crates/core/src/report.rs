//! Pass/fail records produced by the verification routines.

use serde::Serialize;

use crate::{Error, Result};

/// One evaluated identity at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub identity: String,
    pub params: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(identity: impl Into<String>, params: impl Into<String>) -> Self {
        Check { identity: identity.into(), params: params.into(), passed: true, detail: None }
    }

    pub fn fail(identity: impl Into<String>, params: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { identity: identity.into(), params: params.into(), passed: false, detail: Some(detail.into()) }
    }

    pub fn from_bool(identity: impl Into<String>, params: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Check::pass(identity, params)
        } else {
            Check::fail(identity, params, detail())
        }
    }

    /// Records an error raised while evaluating the identity as a failure.
    pub fn from_result(identity: impl Into<String>, params: impl Into<String>, result: Result<()>) -> Self {
        match result {
            Ok(()) => Check::pass(identity, params),
            Err(e) => Check::fail(identity, params, e.to_string()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    /// Turns the first failed check into [`Error::IdentityFailed`].
    pub fn into_result(self) -> Result<Report> {
        let first = self.failures().next().cloned();
        match first {
            None => Ok(self),
            Some(c) => Err(Error::IdentityFailed { identity: c.identity, params: c.params, detail: c.detail.unwrap_or_default() }),
        }
    }
}

impl FromIterator<Check> for Report {
    fn from_iter<I: IntoIterator<Item = Check>>(iter: I) -> Self {
        Report { checks: iter.into_iter().collect() }
    }
}
