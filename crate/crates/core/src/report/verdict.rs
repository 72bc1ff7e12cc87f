use std::fmt;

use num_traits::Signed;

use crate::rational::{format_rational, Rational};

/// Which side of the bound the measured value must land on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSense {
    AtMost,
    AtLeast,
    Equal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerdictReport {
    pub claim_id: String,
    pub instance: String,
    pub bound: Rational,
    pub measured: Rational,
    pub sense: BoundSense,
    pub passed: bool,
    /// |bound - measured|.
    pub slack: Rational,
    /// Reported only; a miss does not count as a failure.
    pub soft: bool,
}

impl VerdictReport {
    pub fn new(
        claim_id: impl Into<String>,
        instance: impl Into<String>,
        bound: Rational,
        measured: Rational,
        sense: BoundSense,
    ) -> Self {
        let passed = match sense {
            BoundSense::AtMost => measured <= bound,
            BoundSense::AtLeast => measured >= bound,
            BoundSense::Equal => measured == bound,
        };
        let slack = (&bound - &measured).abs();
        VerdictReport {
            claim_id: claim_id.into(),
            instance: instance.into(),
            bound,
            measured,
            sense,
            passed,
            slack,
            soft: false,
        }
    }

    pub fn soft(mut self) -> Self {
        self.soft = true;
        self
    }

    /// A hard failure.
    pub fn failed(&self) -> bool {
        !self.passed && !self.soft
    }

    pub fn verdict_label(&self) -> &'static str {
        match (self.passed, self.soft) {
            (true, _) => "pass",
            (false, false) => "fail",
            (false, true) => "soft-fail",
        }
    }
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.sense {
            BoundSense::AtMost => "<=",
            BoundSense::AtLeast => ">=",
            BoundSense::Equal => "==",
        };
        write!(
            f,
            "{} [{}] {} {op} {}: {} (slack {})",
            self.claim_id,
            self.instance,
            format_rational(&self.measured),
            format_rational(&self.bound),
            self.verdict_label(),
            format_rational(&self.slack)
        )
    }
}
