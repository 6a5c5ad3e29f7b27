use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One named claim with the value it should have and the value observed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub claim: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

impl Check {
    pub fn equal<T: Serialize + PartialEq>(
        claim: impl Into<String>,
        expected: T,
        computed: T,
    ) -> Check {
        let pass = expected == computed;
        Check {
            claim: claim.into(),
            expected: serde_json::to_value(expected).unwrap_or(Value::Null),
            computed: serde_json::to_value(computed).unwrap_or(Value::Null),
            pass,
        }
    }

    pub fn holds(claim: impl Into<String>, computed: bool) -> Check {
        Check::equal(claim, true, computed)
    }

    /// An observation with no expected value; always passes.
    pub fn info<T: Serialize>(claim: impl Into<String>, computed: T) -> Check {
        Check {
            claim: claim.into(),
            expected: Value::Null,
            computed: serde_json::to_value(computed).unwrap_or(Value::Null),
            pass: true,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Report {
        Report {
            name: name.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) -> &mut Report {
        self.checks.push(check);
        self
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn get(&self, claim: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.claim == claim)
    }
}
