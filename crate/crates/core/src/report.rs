//! Pass/fail records for symbolic identity checks.

use serde::{Deserialize, Serialize};

use crate::exact::{PolyRing, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    /// Numerator coefficients of the non-zero residual, ascending.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<Vec<String>>,
}

impl IdentityCheck {
    /// Passes iff `residual` is the zero rational function.
    pub fn from_residual<P: PolyRing>(name: impl Into<String>, residual: &RationalFunction<P>) -> Self {
        let passed = residual.is_zero();
        IdentityCheck {
            name: name.into(),
            passed,
            residual: (!passed).then(|| residual.num().coefficient_strings()),
        }
    }

    pub fn from_bool(name: impl Into<String>, passed: bool, residual: Option<String>) -> Self {
        IdentityCheck { name: name.into(), passed, residual: residual.map(|r| vec![r]) }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<IdentityCheck>,
}

impl Report {
    pub fn push(&mut self, check: IdentityCheck) {
        self.checks.push(check);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}
