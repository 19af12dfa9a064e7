use indpoly_core::IntPolynomial;
use serde::{Deserialize, Serialize};

/// Aggregated outcome of one verification sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub instances_checked: usize,
    pub passes: usize,
    /// Seed of the randomized suites; absent for exhaustive sweeps.
    pub seed: Option<u64>,
    pub first_failure: Option<Failure>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.passes == self.instances_checked && self.first_failure.is_none()
    }
}

/// A concrete counterexample: the instance, what was computed and why it
/// violates the claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub g: String,
    pub h: Option<String>,
    pub polynomial: IntPolynomial,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureCandidate {
    /// Canonical key of `H`.
    pub h_descriptor: String,
    /// DSL literal of `H`.
    pub h_expr: String,
    pub h_order: usize,
    pub h_size: usize,
    pub is_complete_minus_edge: bool,
    pub survived_pool: bool,
    pub witness_g: Option<String>,
    /// Corona expression to feed back into `indpoly analyze`.
    pub witness_expr: Option<String>,
    pub witness_polynomial: Option<IntPolynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub max_h_order: usize,
    pub pool_size: usize,
    pub verdict_scope: String,
    pub survivors: usize,
    pub eliminated: usize,
    pub candidates: Vec<ConjectureCandidate>,
    pub wall_time_ms: u64,
}

impl SearchReport {
    /// Complete-minus-edge classes that were eliminated; nonempty only if
    /// the engine or the search is broken.
    pub fn unsound(&self) -> impl Iterator<Item = &ConjectureCandidate> {
        self.candidates
            .iter()
            .filter(|c| c.is_complete_minus_edge && !c.survived_pool)
    }
}
