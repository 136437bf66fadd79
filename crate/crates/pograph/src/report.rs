//! Whole-group classification: build the graph once, run the requested
//! class checks, and assemble a serializable report.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::classes::{self, iso8601_duration, Budget, CheckOutcome, OutcomeJson, Verdict};
use crate::error::Result;
use crate::graph::{build_gamma_with, UGraph};
use crate::group::{self, ElementTable, Group, GroupSpec, DEFAULT_ORDER_CAP};

/// The seven recognized graph classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClassKind {
    Chordal,
    Clawfree,
    Cograph,
    Interval,
    Perfect,
    Split,
    Threshold,
}

impl ClassKind {
    pub const ALL: [ClassKind; 7] = [
        ClassKind::Chordal,
        ClassKind::Clawfree,
        ClassKind::Cograph,
        ClassKind::Interval,
        ClassKind::Perfect,
        ClassKind::Split,
        ClassKind::Threshold,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ClassKind::Chordal => "chordal",
            ClassKind::Clawfree => "clawfree",
            ClassKind::Cograph => "cograph",
            ClassKind::Interval => "interval",
            ClassKind::Perfect => "perfect",
            ClassKind::Split => "split",
            ClassKind::Threshold => "threshold",
        }
    }

    pub fn parse(s: &str) -> Option<ClassKind> {
        Self::ALL.iter().copied().find(|c| c.name() == s)
    }

    pub fn run(&self, g: &UGraph, budget: Budget) -> CheckOutcome {
        match self {
            ClassKind::Chordal => classes::is_chordal(g),
            ClassKind::Clawfree => classes::is_clawfree(g),
            ClassKind::Cograph => classes::is_cograph(g),
            ClassKind::Interval => classes::is_interval(g),
            ClassKind::Perfect => classes::is_perfect(g, budget),
            ClassKind::Split => classes::is_split(g),
            ClassKind::Threshold => classes::is_threshold(g),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClassifyOptions {
    pub budget: Budget,
    pub cap: usize,
    pub checks: Vec<ClassKind>,
}

impl Default for ClassifyOptions {
    fn default() -> ClassifyOptions {
        ClassifyOptions {
            budget: Budget::default(),
            cap: DEFAULT_ORDER_CAP,
            checks: ClassKind::ALL.to_vec(),
        }
    }
}

/// Serializable classification of one group; keys appear alphabetically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub checks: BTreeMap<String, OutcomeJson>,
    pub elapsed: String,
    pub eppo: bool,
    pub exponent: u64,
    pub order: usize,
    pub s_size: usize,
    pub spec: String,
}

impl ClassificationReport {
    pub fn verdict(&self, class: ClassKind) -> Option<Verdict> {
        self.checks.get(class.name()).map(|o| o.verdict)
    }

    pub fn has_unknown(&self) -> bool {
        self.checks.values().any(|o| o.verdict == Verdict::Unknown)
    }

    /// Class implications that must hold whenever both sides are known:
    /// threshold => split and cograph; interval => chordal;
    /// chordal/cograph => perfect.
    pub fn implications_hold(&self) -> bool {
        let get = |c: ClassKind| self.verdict(c);
        let implies = |a: Option<Verdict>, b: Option<Verdict>| {
            !matches!((a, b), (Some(Verdict::InClass), Some(Verdict::NotInClass)))
        };
        implies(get(ClassKind::Threshold), get(ClassKind::Split))
            && implies(get(ClassKind::Threshold), get(ClassKind::Cograph))
            && implies(get(ClassKind::Interval), get(ClassKind::Chordal))
            && implies(get(ClassKind::Chordal), get(ClassKind::Perfect))
            && implies(get(ClassKind::Cograph), get(ClassKind::Perfect))
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Classify one group end to end.
pub fn classify(spec: &GroupSpec, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    let start = Instant::now();
    let g = Group::build_with_cap(spec, opts.cap)?;
    let table = ElementTable::new(&g);
    let graph = build_gamma_with(&g, &table);
    let mut checks = BTreeMap::new();
    for class in &opts.checks {
        let outcome = class.run(&graph, opts.budget);
        checks.insert(class.name().to_string(), outcome.to_json(&graph));
    }
    Ok(ClassificationReport {
        checks,
        elapsed: iso8601_duration(start.elapsed()),
        eppo: group::is_eppo(&g, &table),
        exponent: table.exponent(),
        order: g.order(),
        s_size: table.prime_order_set().len(),
        spec: spec.canonical(),
    })
}

/// One row of a family search.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchHit {
    pub member: bool,
    pub order: usize,
    pub spec: String,
    pub verdict: Verdict,
    pub witness: Option<classes::WitnessJson>,
}

/// Run one class check across a list of group specs.
pub fn search_class(
    class: ClassKind,
    specs: &[GroupSpec],
    budget: Budget,
    cap: usize,
) -> Result<Vec<SearchHit>> {
    let mut hits = Vec::new();
    for spec in specs {
        let g = Group::build_with_cap(spec, cap)?;
        let table = ElementTable::new(&g);
        let graph = build_gamma_with(&g, &table);
        let outcome = class.run(&graph, budget);
        hits.push(SearchHit {
            member: outcome.verdict == Verdict::InClass,
            order: g.order(),
            spec: spec.canonical(),
            verdict: outcome.verdict,
            witness: if outcome.witness.is_none() {
                None
            } else {
                Some(outcome.witness.to_json(&graph))
            },
        });
    }
    Ok(hits)
}
