//! Shared plumbing for theorem checks: instance construction, the check
//! result builder, and isomorphism-type predicates decided by
//! characteristic properties instead of general isomorphism testing.

use std::time::Instant;

use crate::classes::{iso8601_duration, Witness, WitnessJson};
use crate::graph::{build_gamma_with, UGraph};
use crate::group::{ElementTable, Group, GroupSpec};
use crate::numutil::factorize;

use super::{CheckStatus, Counterexample, TheoremCheck, VerifyOptions};

/// A constructed instance: group, order data and its graph.
pub(crate) struct Built {
    pub spec: String,
    pub group: Group,
    pub table: ElementTable,
    pub graph: UGraph,
}

impl Built {
    pub fn order(&self) -> usize {
        self.group.order()
    }
}

/// Build a spec if it fits under both the instance bound and the table cap.
pub(crate) fn try_build(spec: &GroupSpec, opts: &VerifyOptions) -> Option<Built> {
    let order = spec.order().ok()?;
    if order > opts.max_order as u64 {
        return None;
    }
    let group = Group::build_with_cap(spec, opts.cap).ok()?;
    let table = ElementTable::new(&group);
    let graph = build_gamma_with(&group, &table);
    Some(Built {
        spec: spec.canonical(),
        group,
        table,
        graph,
    })
}

pub(crate) fn try_build_text(text: &str, opts: &VerifyOptions) -> Option<Built> {
    let spec: GroupSpec = text.parse().expect("instance spec is well-formed");
    try_build(&spec, opts)
}

/// Incremental construction of one TheoremCheck.
pub(crate) struct CheckBuilder {
    id: String,
    statement: String,
    start: Instant,
}

pub(crate) fn check(id: &str, statement: &str) -> CheckBuilder {
    CheckBuilder {
        id: id.to_string(),
        statement: statement.to_string(),
        start: Instant::now(),
    }
}

impl CheckBuilder {
    fn finish(self, status: CheckStatus, counterexample: Option<Counterexample>) -> TheoremCheck {
        TheoremCheck {
            counterexample,
            elapsed: iso8601_duration(self.start.elapsed()),
            id: self.id,
            statement: self.statement,
            status,
        }
    }

    pub fn pass(self) -> TheoremCheck {
        self.finish(CheckStatus::Pass, None)
    }

    pub fn fail(self, group: &str, detail: String, witness: Option<WitnessJson>) -> TheoremCheck {
        self.finish(
            CheckStatus::Fail,
            Some(Counterexample {
                detail,
                group: group.to_string(),
                witness,
            }),
        )
    }

    pub fn fail_with(self, b: &Built, detail: String, witness: Option<&Witness>) -> TheoremCheck {
        let witness = witness.map(|w| w.to_json(&b.graph));
        let spec = b.spec.clone();
        self.fail(&spec, detail, witness)
    }

    pub fn skipped(self, reason: &str) -> TheoremCheck {
        self.finish(CheckStatus::Skipped(reason.to_string()), None)
    }
}

// ---- isomorphism-type predicates --------------------------------------

pub(crate) fn is_two_group(n: usize) -> bool {
    n.is_power_of_two()
}

pub(crate) fn p_group_prime(n: usize) -> Option<u64> {
    crate::numutil::prime_power_base(n as u64)
}

pub(crate) fn is_cyclic(b: &Built) -> bool {
    b.table.orders().iter().any(|&o| o as usize == b.order())
}

pub(crate) fn involution_count(b: &Built) -> usize {
    b.table.orders().iter().filter(|&&o| o == 2).count()
}

/// Generalized quaternion: a non-cyclic 2-group of order >= 8 with a
/// unique involution.
pub(crate) fn is_quaternion_type(b: &Built) -> bool {
    b.order() >= 8 && is_two_group(b.order()) && !is_cyclic(b) && involution_count(b) == 1
}

/// Elementary abelian 2-group (trivial group included).
pub(crate) fn is_elementary_two(b: &Built) -> bool {
    b.table.exponent() <= 2
}

/// The symmetric group on 3 points, up to isomorphism: the unique
/// non-abelian group of order 6.
pub(crate) fn is_s3_type(b: &Built) -> bool {
    b.order() == 6 && !b.group.is_abelian()
}

pub(crate) fn odd_prime_divisors(n: usize) -> Vec<u64> {
    factorize(n as u64)
        .into_iter()
        .map(|(p, _)| p)
        .filter(|&p| p % 2 == 1)
        .collect()
}
