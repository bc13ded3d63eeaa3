//! Outcome type shared by every law checker.
//!
//! A failing verdict always names the law, the exact edge or path pair where
//! equality broke, and carries the evaluated witnesses so reports can show
//! the differing composites.

use crate::exactmat::RatMatrix;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Matrix(RatMatrix),
    /// The two components of an arrow-category morphism.
    Square { top: RatMatrix, bottom: RatMatrix },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Matrix(m) => write!(f, "{m}"),
            Witness::Square { top, bottom } => write!(f, "(top {top}, bottom {bottom})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawFailure {
    /// Which law broke, e.g. `pentagon` or `hopf antipode (left)`.
    pub law: String,
    /// The edge or path pair at which the two composites differ.
    pub edge: String,
    pub left: Option<Witness>,
    pub right: Option<Witness>,
}

impl fmt::Display for LawFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} broke at {}", self.law, self.edge)?;
        if let (Some(l), Some(r)) = (&self.left, &self.right) {
            write!(f, ": {l} != {r}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Box<LawFailure>),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn fail(law: impl Into<String>, edge: impl Into<String>) -> Verdict {
        Verdict::Fail(Box::new(LawFailure {
            law: law.into(),
            edge: edge.into(),
            left: None,
            right: None,
        }))
    }

    pub fn fail_with(
        law: impl Into<String>,
        edge: impl Into<String>,
        left: Witness,
        right: Witness,
    ) -> Verdict {
        Verdict::Fail(Box::new(LawFailure {
            law: law.into(),
            edge: edge.into(),
            left: Some(left),
            right: Some(right),
        }))
    }

    pub fn failure(&self) -> Option<&LawFailure> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(f) => Some(f),
        }
    }

    /// First failure wins; passes are absorbed.
    pub fn and(self, other: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Pass => other(),
            fail => fail,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(failure) => write!(f, "fail: {failure}"),
        }
    }
}

/// Runs a fallible checker body where any `Err` is already a failing verdict.
pub fn run_check(body: impl FnOnce() -> Result<Verdict, Verdict>) -> Verdict {
    match body() {
        Ok(v) | Err(v) => v,
    }
}

/// Maps a construction error onto a failing verdict naming the edge.
pub fn edge<T, E: fmt::Display>(
    law: &str,
    name: &str,
    result: Result<T, E>,
) -> Result<T, Verdict> {
    result.map_err(|e| Verdict::fail(law, format!("{name}: {e}")))
}
