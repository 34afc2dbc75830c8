//! Structured pass/fail records shared by every check in the crate.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Status {
    Pass,
    Fail,
    /// The inequality fails and was expected to fail.
    ExpectedFail,
    Skipped,
    AwaitingGenerators,
    Undecided,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExpectedFail => "expected-fail",
            Status::Skipped => "skipped",
            Status::AwaitingGenerators => "awaiting-generators",
            Status::Undecided => "undecided",
        }
    }

    /// Statuses that make a batch run exit non-zero.
    pub fn is_unexpected(self) -> bool {
        matches!(self, Status::Fail | Status::Undecided)
    }
}

impl core::fmt::Display for Status {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One verified (or skipped) claim.
///
/// Numeric values are exact decimal strings. A `Fail` always carries values
/// and a `Skipped`/`AwaitingGenerators` always carries a reason; the
/// constructors enforce this.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CheckReport {
    pub id: String,
    pub claim: String,
    pub status: Status,
    pub values: Vec<(String, String)>,
    pub witness: Option<String>,
    pub reason: Option<String>,
    pub runtime_micros: Option<u64>,
}

impl CheckReport {
    /// A decided check: `Pass` when `holds`, else `Fail`.
    pub fn decided(
        id: impl Into<String>,
        claim: impl Into<String>,
        holds: bool,
        values: Vec<(String, String)>,
    ) -> Self {
        assert!(!values.is_empty(), "decided checks must carry their values");
        CheckReport {
            id: id.into(),
            claim: claim.into(),
            status: if holds { Status::Pass } else { Status::Fail },
            values,
            witness: None,
            reason: None,
            runtime_micros: None,
        }
    }

    /// A decided check whose claim is known to fail on this instance.
    ///
    /// A failure becomes `ExpectedFail`; an unexpected success becomes `Fail`.
    pub fn expecting_failure(
        id: impl Into<String>,
        claim: impl Into<String>,
        holds: bool,
        values: Vec<(String, String)>,
    ) -> Self {
        let mut r = Self::decided(id, claim, holds, values);
        if holds {
            r.status = Status::Fail;
            r.reason = Some("expected to fail on this instance but holds".to_string());
        } else {
            r.status = Status::ExpectedFail;
        }
        r
    }

    pub fn skipped(id: impl Into<String>, claim: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckReport {
            id: id.into(),
            claim: claim.into(),
            status: Status::Skipped,
            values: Vec::new(),
            witness: None,
            reason: Some(reason.into()),
            runtime_micros: None,
        }
    }

    pub fn awaiting_generators(id: impl Into<String>, claim: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckReport {
            status: Status::AwaitingGenerators,
            ..Self::skipped(id, claim, reason)
        }
    }

    pub fn undecided(id: impl Into<String>, claim: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckReport {
            status: Status::Undecided,
            ..Self::skipped(id, claim, reason)
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }

    pub fn value(&self, key: &str) -> Option<&str> {
        self.values.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

/// Shorthand for building `values` lists.
pub fn kv(key: &str, value: impl ToString) -> (String, String) {
    (key.to_string(), value.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn expectation_inverts_status() {
        let r = CheckReport::expecting_failure("k-le-fitting", "k <= |F|", false, vec![kv("k", 11)]);
        assert_eq!(r.status, Status::ExpectedFail);
        assert!(!r.status.is_unexpected());
        let r = CheckReport::expecting_failure("k-le-fitting", "k <= |F|", true, vec![kv("k", 3)]);
        assert_eq!(r.status, Status::Fail);
        assert!(r.reason.is_some());
    }

    #[test]
    fn skipped_carries_reason() {
        let r = CheckReport::awaiting_generators("slot", "claim", "no generators");
        assert_eq!(r.status, Status::AwaitingGenerators);
        assert_eq!(r.reason.as_deref(), Some("no generators"));
        assert!(!r.status.is_unexpected());
    }

    #[test]
    #[should_panic]
    fn fail_without_values_is_rejected() {
        let _ = CheckReport::decided("x", "y", false, Vec::new());
    }
}
