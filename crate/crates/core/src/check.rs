use serde::Serialize;

use crate::abgroup::GroupElement;

/// Where a coherence condition fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub condition: String,
    pub args: Vec<GroupElement>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<usize>,
    /// Exponent by which the two sides differ.
    pub residual: u32,
}

/// Outcome of a verifier; a failure always carries a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass() -> Self {
        Check { pass: true, witness: None }
    }

    pub fn fail(condition: &str, args: Vec<GroupElement>, residual: u32) -> Self {
        Check {
            pass: false,
            witness: Some(Witness {
                condition: condition.to_string(),
                args,
                point: None,
                residual,
            }),
        }
    }

    pub fn and(self, other: impl FnOnce() -> Check) -> Check {
        if self.pass {
            other()
        } else {
            self
        }
    }
}
