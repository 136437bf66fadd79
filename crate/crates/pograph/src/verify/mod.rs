//! Executable checks for the classification theorems satisfied by
//! prime-order element graphs, aggregated into a machine-readable report.
//!
//! Each check encodes one theorem as a computation over constructible
//! groups: build the instances, run the recognizers, compare against the
//! stated characterization. A failing check always carries a
//! machine-validated counterexample; a check whose instances cannot be
//! constructed (or certified) under the current bounds is reported as
//! skipped with the reason, never silently dropped.

pub mod corpus;
mod support;

mod basics;
mod chordal;
mod clawfree;
mod cograph;
mod perfect;
mod table;

pub use basics::verify_proposition_basics;
pub use chordal::verify_chordal_family;
pub use clawfree::verify_clawfree_theorems;
pub use cograph::verify_cograph_theorems;
pub use perfect::{
    verify_abelian_characterization, verify_matrix_group_witness,
    verify_nilpotent_and_product_theorems, verify_odd_order_reduction,
    verify_order_classifications, verify_perfect_families,
    verify_sufficient_condition_pgroups,
};
pub use table::verify_table1;

use serde::{Deserialize, Serialize};

use crate::classes::{Budget, WitnessJson};
use crate::group::DEFAULT_ORDER_CAP;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "reason")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub detail: String,
    pub group: String,
    pub witness: Option<WitnessJson>,
}

/// One theorem check outcome; serializes with alphabetical keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub elapsed: String,
    pub id: String,
    pub statement: String,
    pub status: CheckStatus,
}

impl TheoremCheck {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }

    pub fn skipped(&self) -> bool {
        matches!(self.status, CheckStatus::Skipped(_))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Largest group order enumerated or instantiated by the checks.
    pub max_order: usize,
    /// Wall-clock budget per odd-hole search.
    pub budget: Budget,
    /// Multiplication-table cap passed to the constructors.
    pub cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            max_order: 256,
            budget: Budget::default(),
            cap: DEFAULT_ORDER_CAP,
        }
    }
}

/// Aggregated suite result; serializes as a JSON array of checks.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SuiteReport {
    pub checks: Vec<TheoremCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(TheoremCheck::failed)
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let pass = self.checks.iter().filter(|c| c.passed()).count();
        let fail = self.checks.iter().filter(|c| c.failed()).count();
        let skip = self.checks.iter().filter(|c| c.skipped()).count();
        (pass, fail, skip)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Basics,
    Perfect,
    Matrix,
    Cograph,
    Chordal,
    Clawfree,
    Table1,
}

impl Suite {
    pub const NAMES: [(&'static str, Suite); 8] = [
        ("all", Suite::All),
        ("basics", Suite::Basics),
        ("perfect", Suite::Perfect),
        ("matrix", Suite::Matrix),
        ("cograph", Suite::Cograph),
        ("chordal", Suite::Chordal),
        ("clawfree", Suite::Clawfree),
        ("table1", Suite::Table1),
    ];

    pub fn parse(s: &str) -> Option<Suite> {
        Self::NAMES
            .iter()
            .find(|(name, _)| *name == s)
            .map(|&(_, suite)| suite)
    }
}

/// Checks for claims whose witnesses fall outside the constructor grammar.
/// They are enumerated here so the report shows exactly what was excluded.
fn out_of_scope_checks() -> Vec<TheoremCheck> {
    let skip = |id: &str, statement: &str, reason: &str| TheoremCheck {
        counterexample: None,
        elapsed: "PT0.000S".to_string(),
        id: id.to_string(),
        statement: statement.to_string(),
        status: CheckStatus::Skipped(reason.to_string()),
    };
    vec![
        skip(
            "perfect-pgroup-p4-exception",
            "among p-groups of order at most p^4, exactly one group of order 81 fails to be perfect",
            "the exceptional group is identified only by GAP id (81,7), which the constructor grammar cannot build",
        ),
        skip(
            "perfect-sufficient-converse",
            "the prime-order product condition is not necessary for perfectness",
            "the counterexample is identified only by GAP id (81,9), which the constructor grammar cannot build",
        ),
        skip(
            "perfect-even-order-reduction",
            "the odd-order reduction can fail for groups of even order",
            "the counterexample is identified only by GAP id (32,44), which the constructor grammar cannot build",
        ),
        skip(
            "clawfree-simple-classification",
            "the alternating group on 5 points is the only non-abelian simple group with a claw-free graph",
            "ruling out PSL(2,8), PSL(2,9), PSL(2,17), PSL(3,4), Sz(8) and Sz(32) needs non-prime fields or Suzuki groups, outside the constructor grammar; the constructible side is covered by clawfree-a5",
        ),
    ]
}

/// Run a suite of theorem checks.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> SuiteReport {
    let mut checks = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Basics {
        checks.push(verify_proposition_basics(opts));
    }
    if all || suite == Suite::Perfect {
        checks.extend(verify_perfect_families(opts));
        checks.push(verify_sufficient_condition_pgroups(opts));
        checks.push(verify_odd_order_reduction(opts));
        checks.push(verify_abelian_characterization(opts));
        checks.extend(verify_order_classifications(opts));
        checks.extend(verify_nilpotent_and_product_theorems(opts));
    }
    if all || suite == Suite::Matrix {
        for p in [3, 5, 7] {
            checks.push(verify_matrix_group_witness(p, opts));
        }
    }
    if all || suite == Suite::Cograph {
        checks.extend(verify_cograph_theorems(opts));
    }
    if all || suite == Suite::Chordal {
        checks.extend(verify_chordal_family(opts));
    }
    if all || suite == Suite::Clawfree {
        checks.extend(verify_clawfree_theorems(opts));
    }
    if all || suite == Suite::Table1 {
        checks.push(verify_table1(opts));
    }
    if all {
        checks.extend(out_of_scope_checks());
    }
    SuiteReport { checks }
}
