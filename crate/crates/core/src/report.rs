//! Result records shared by the presentation verifiers and the oracle.

use serde::Serialize;

/// One named equation evaluated in a concrete model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

impl RelationCheck {
    pub fn new(name: impl Into<String>, holds: bool) -> RelationCheck {
        RelationCheck { name: name.into(), holds }
    }
}

/// Whether every relation in a report holds.
pub fn all_hold(checks: &[RelationCheck]) -> bool {
    checks.iter().all(|c| c.holds)
}

/// Outcome vocabulary of the oracle layer.
///
/// `Verified` marks a claim backed by an explicit certificate that was
/// checked; `Consistent` marks agreement of a bounded search with a claim it
/// cannot prove; `Counterexample` marks a concrete refutation and is the
/// only outcome that makes an oracle run fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckStatus {
    Verified,
    Consistent,
    Counterexample,
}

impl CheckStatus {
    pub fn label(self) -> &'static str {
        match self {
            CheckStatus::Verified => "VERIFIED",
            CheckStatus::Consistent => "CONSISTENT",
            CheckStatus::Counterexample => "COUNTEREXAMPLE",
        }
    }
}
