//! Pass/fail records produced by the verification routines.

use std::fmt::Display;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Advisory result that does not count as a failure.
    Warn,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// Short tag naming the identity family the check belongs to.
    #[serde(rename = "paper_ref")]
    pub tag: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, tag: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            tag: tag.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, tag: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            tag: tag.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
        }
    }

    pub fn from_bool(
        name: impl Into<String>,
        tag: impl Into<String>,
        ok: bool,
        witness: impl FnOnce() -> String,
    ) -> Self {
        if ok {
            Self::pass(name, tag)
        } else {
            Self::fail(name, tag, witness())
        }
    }

    /// Passes when `result` is an element that is zero; the witness is the
    /// nonzero remainder or the error.
    pub fn zero<T, E>(name: impl Into<String>, tag: impl Into<String>, result: Result<T, E>) -> Self
    where
        T: IsZero + Display,
        E: Display,
    {
        match result {
            Ok(x) if x.is_zero_value() => Self::pass(name, tag),
            Ok(x) => Self::fail(name, tag, x.to_string()),
            Err(e) => Self::fail(name, tag, format!("error: {e}")),
        }
    }

    /// Downgrades a failure to an advisory warning.
    pub fn advisory(mut self) -> Self {
        if self.status == Status::Fail {
            self.status = Status::Warn;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

pub trait IsZero {
    fn is_zero_value(&self) -> bool;
}

impl<L: crate::Letter, S: crate::Coefficient> IsZero for crate::FreeElement<L, S> {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl<L: crate::Letter, S: crate::Coefficient> IsZero for crate::TensorElement<L, S> {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

/// Ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn pass_count(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Pass).count()
    }

    pub fn fail_count(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl FromIterator<Check> for Report {
    fn from_iter<I: IntoIterator<Item = Check>>(iter: I) -> Self {
        Report {
            checks: iter.into_iter().collect(),
        }
    }
}
