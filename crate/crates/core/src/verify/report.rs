use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::algebra::json::{element_to_doc, ElementDoc};
use crate::algebra::Element;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first sample on which the two sides differed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub label: String,
    pub inputs: Vec<ElementDoc>,
    pub lhs: ElementDoc,
    pub rhs: ElementDoc,
}

impl Counterexample {
    pub fn new(label: impl Into<String>, inputs: &[Element], lhs: &Element, rhs: &Element) -> Self {
        Counterexample {
            label: label.into(),
            inputs: inputs.iter().map(element_to_doc).collect(),
            lhs: element_to_doc(lhs),
            rhs: element_to_doc(rhs),
        }
    }
}

/// Outcome of one check. `elapsed` is wall-clock time and is left out of
/// the JSON form so that reports stay reproducible.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub check_id: String,
    pub status: Status,
    pub samples_run: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub(crate) fn from_outcome(check_id: &str, outcome: Outcome, elapsed: Duration) -> Self {
        VerificationReport {
            check_id: check_id.to_string(),
            status: if outcome.counterexample.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            samples_run: outcome.samples,
            counterexample: outcome.counterexample,
            error: None,
            elapsed,
        }
    }

    pub(crate) fn from_error(check_id: &str, err: &crate::Error, elapsed: Duration) -> Self {
        VerificationReport {
            check_id: check_id.to_string(),
            status: Status::Fail,
            samples_run: 0,
            counterexample: None,
            error: Some(err.to_string()),
            elapsed,
        }
    }
}

/// Running tally of a check: samples evaluated so far and the first
/// counterexample.
#[derive(Clone, Debug, Default)]
pub(crate) struct Outcome {
    pub samples: usize,
    pub counterexample: Option<Counterexample>,
}

impl Outcome {
    pub fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    pub fn record(&mut self, cx: Counterexample) {
        if self.counterexample.is_none() {
            self.counterexample = Some(cx);
        }
    }
}
