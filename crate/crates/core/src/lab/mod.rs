//! Optimal-tree searches and verification suites.
//!
//! Every suite produces a [`VerificationReport`]; reports from disjoint
//! parts of a grid merge associatively, keeping the first counterexample in
//! merge order.

mod bounds;
mod search;
mod suites;

use alloc::string::String;
use alloc::vec::Vec;

pub use bounds::{
    bound_suite, path_minimality, standard_one_associates, verify_associate, verify_aster_corollary,
    verify_locally_balanced, verify_theorem8,
};
pub use search::{
    baton_argmax_unpruned, bridge_argmax_unpruned, caterpillar_leaf_sequence, optimal, optimal_baton_s,
    optimal_bridge_s, optimal_in, ParamArgmax, SearchAccumulator, SearchReport, Winner,
};
pub use suites::{
    check_gluing_instance, check_oracle_tree, check_search_caps, theorem18_r, verify_appendix_a,
    verify_appendix_b, verify_baton_bridge_gap, verify_baton_positivity, verify_corollary15, verify_corollary6, verify_gluing,
    verify_leaf_twig_caps, verify_oracle, verify_theorem13, verify_theorem14, verify_theorem18,
    AppendixGrid, Theorem18Report,
};

/// Outcome of one verification suite over a parameter grid.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub suite: String,
    pub grid: String,
    pub passed: u64,
    pub failed: u64,
    /// Checks whose hypotheses did not apply.
    pub skipped: u64,
    /// The first failing check, with its parameters and exact values.
    pub counterexample: Option<String>,
    /// Informational lines that are reported but not asserted.
    pub info: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, grid: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            grid: grid.into(),
            ..Default::default()
        }
    }

    /// Records one check. `detail` is only evaluated on failure.
    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(detail());
            }
        }
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.info.push(line.into());
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self.info.extend(other.info);
    }

    pub fn is_pass(&self) -> bool {
        self.failed == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn merge_keeps_first_counterexample() {
        let mut a = VerificationReport::new("x", "g");
        a.check(true, || "never".to_string());
        let mut b = VerificationReport::new("x", "g");
        b.check(false, || "first".to_string());
        b.check(false, || "second".to_string());
        b.skip();
        a.merge(b);
        assert_eq!((a.passed, a.failed, a.skipped), (1, 2, 1));
        assert_eq!(a.counterexample.as_deref(), Some("first"));
        assert!(!a.is_pass());
    }
}
