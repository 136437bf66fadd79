//! Graph-class recognizers with forbidden-subgraph witnesses.
//!
//! Everything here is a pure function of an immutable [`UGraph`]. The only
//! searches that can run long are the odd-hole searches behind
//! [`is_perfect`]; they take a wall-clock [`Budget`] and report an honest
//! [`Verdict::Unknown`] when it runs out, never a false in-class answer.

mod at;
mod chordal;
mod claw;
mod oddhole;
pub mod oracle;
mod p4;
mod split;
pub mod witness;

pub use witness::{validate_witness, Witness, WitnessJson, WitnessKind};

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::graph::UGraph;

/// Wall-clock limit for a single search. The default is 30 seconds.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    limit: Option<Duration>,
}

impl Budget {
    pub fn seconds(s: u64) -> Budget {
        Budget {
            limit: Some(Duration::from_secs(s)),
        }
    }

    pub fn from_duration(d: Duration) -> Budget {
        Budget { limit: Some(d) }
    }

    pub fn unlimited() -> Budget {
        Budget { limit: None }
    }

    pub(crate) fn clock(&self) -> BudgetClock {
        BudgetClock {
            deadline: self.limit.map(|d| Instant::now() + d),
            counter: 0,
        }
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget::seconds(30)
    }
}

/// Cheap expiry probe: consults the system clock once per 1024 calls.
pub(crate) struct BudgetClock {
    deadline: Option<Instant>,
    counter: u32,
}

impl BudgetClock {
    #[inline]
    pub(crate) fn expired(&mut self) -> bool {
        let Some(deadline) = self.deadline else {
            return false;
        };
        self.counter = self.counter.wrapping_add(1);
        // probe on the first call (so a zero budget is always honored)
        // and then once per 1024 calls
        (self.counter == 1 || self.counter.is_multiple_of(1024)) && Instant::now() >= deadline
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    InClass,
    NotInClass,
    Unknown,
}

/// Result of one class check. `certified` is true exactly when the answer
/// is definitive: a completed exhaustive search, or a validated witness.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub verdict: Verdict,
    pub witness: Witness,
    pub certified: bool,
    pub elapsed: Duration,
}

impl CheckOutcome {
    fn in_class(start: Instant) -> CheckOutcome {
        CheckOutcome {
            verdict: Verdict::InClass,
            witness: Witness::none(),
            certified: true,
            elapsed: start.elapsed(),
        }
    }

    fn not_in_class(witness: Witness, start: Instant) -> CheckOutcome {
        CheckOutcome {
            verdict: Verdict::NotInClass,
            witness,
            certified: true,
            elapsed: start.elapsed(),
        }
    }

    fn unknown(start: Instant) -> CheckOutcome {
        CheckOutcome {
            verdict: Verdict::Unknown,
            witness: Witness::none(),
            certified: false,
            elapsed: start.elapsed(),
        }
    }

    fn restarted(mut self, start: Instant) -> CheckOutcome {
        self.elapsed = start.elapsed();
        self
    }

    pub fn is_in_class(&self) -> bool {
        self.verdict == Verdict::InClass
    }

    pub fn to_json(&self, g: &UGraph) -> OutcomeJson {
        OutcomeJson {
            certified: self.certified,
            elapsed: iso8601_duration(self.elapsed),
            verdict: self.verdict,
            witness: if self.witness.is_none() {
                None
            } else {
                Some(self.witness.to_json(g))
            },
        }
    }
}

/// Wire form of an outcome; keys serialize in alphabetical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeJson {
    pub certified: bool,
    pub elapsed: String,
    pub verdict: Verdict,
    pub witness: Option<WitnessJson>,
}

/// ISO-8601 duration with millisecond precision, e.g. "PT0.004S".
pub fn iso8601_duration(d: Duration) -> String {
    format!("PT{}.{:03}S", d.as_secs(), d.subsec_millis())
}

/// Search for an induced odd cycle of length >= 5.
pub fn find_odd_hole(g: &UGraph, budget: Budget) -> CheckOutcome {
    let start = Instant::now();
    let r = oddhole::search_odd_hole(g, budget.clock(), None);
    match r.cycle {
        Some(c) => CheckOutcome::not_in_class(Witness::new(WitnessKind::OddHole, c), start),
        None if r.completed => CheckOutcome::in_class(start),
        None => CheckOutcome::unknown(start),
    }
}

/// Perfect iff neither the graph nor its complement has an odd hole.
/// Each side gets the full budget.
pub fn is_perfect(g: &UGraph, budget: Budget) -> CheckOutcome {
    let start = Instant::now();
    let side = oddhole::search_odd_hole(g, budget.clock(), None);
    if let Some(c) = side.cycle {
        return CheckOutcome::not_in_class(Witness::new(WitnessKind::OddHole, c), start);
    }
    let complement = g.complement();
    let co_side = oddhole::search_odd_hole(&complement, budget.clock(), None);
    if let Some(c) = co_side.cycle {
        return CheckOutcome::not_in_class(Witness::new(WitnessKind::OddAntihole, c), start);
    }
    if side.completed && co_side.completed {
        CheckOutcome::in_class(start)
    } else {
        CheckOutcome::unknown(start)
    }
}

/// Exhaustive induced-P4 scan; always certified.
pub fn find_p4(g: &UGraph) -> CheckOutcome {
    let start = Instant::now();
    match p4::scan_p4(g) {
        Some(p) => {
            CheckOutcome::not_in_class(Witness::new(WitnessKind::P4, p.to_vec()), start)
        }
        None => CheckOutcome::in_class(start),
    }
}

/// Cograph = P4-free.
pub fn is_cograph(g: &UGraph) -> CheckOutcome {
    find_p4(g)
}

/// Chordal via LexBFS + perfect elimination; a chordless cycle of length
/// >= 4 is extracted on failure. Always certified.
pub fn is_chordal(g: &UGraph) -> CheckOutcome {
    let start = Instant::now();
    match chordal::chordal_check(g) {
        Some(cycle) => {
            CheckOutcome::not_in_class(Witness::new(WitnessKind::ChordlessCycle, cycle), start)
        }
        None => CheckOutcome::in_class(start),
    }
}

/// Exhaustive asteroidal-triple scan; always certified.
pub fn find_asteroidal_triple(g: &UGraph) -> CheckOutcome {
    let start = Instant::now();
    match at::scan_asteroidal_triple(g) {
        Some(t) => CheckOutcome::not_in_class(
            Witness::new(WitnessKind::AsteroidalTriple, t.to_vec()),
            start,
        ),
        None => CheckOutcome::in_class(start),
    }
}

/// Interval = chordal and asteroidal-triple-free; the witness is whichever
/// forbidden structure turned up.
pub fn is_interval(g: &UGraph) -> CheckOutcome {
    let start = Instant::now();
    let chordal = is_chordal(g);
    if chordal.verdict == Verdict::NotInClass {
        return chordal.restarted(start);
    }
    let at = find_asteroidal_triple(g);
    if at.verdict == Verdict::NotInClass {
        return at.restarted(start);
    }
    CheckOutcome::in_class(start)
}

/// Split via the degree-sequence splittance identity; on failure one of
/// the forbidden {2K2, C4, C5} is located. Always certified.
pub fn is_split(g: &UGraph) -> CheckOutcome {
    let start = Instant::now();
    if split::splittance_is_zero(g) {
        return CheckOutcome::in_class(start);
    }
    match split::split_witness(g) {
        Some(w) => CheckOutcome::not_in_class(w, start),
        None => {
            debug_assert!(false, "non-split graph without a 2K2/C4/C5");
            CheckOutcome::unknown(start)
        }
    }
}

/// Threshold = cograph and split.
pub fn is_threshold(g: &UGraph) -> CheckOutcome {
    let start = Instant::now();
    let cograph = is_cograph(g);
    if cograph.verdict == Verdict::NotInClass {
        return cograph.restarted(start);
    }
    let split = is_split(g);
    if split.verdict == Verdict::NotInClass {
        return split.restarted(start);
    }
    CheckOutcome::in_class(start)
}

/// Exhaustive claw scan (center listed first); always certified.
pub fn find_claw(g: &UGraph) -> CheckOutcome {
    let start = Instant::now();
    match claw::scan_claw(g) {
        Some(c) => {
            CheckOutcome::not_in_class(Witness::new(WitnessKind::Claw, c.to_vec()), start)
        }
        None => CheckOutcome::in_class(start),
    }
}

/// Claw-free = no induced K_{1,3}.
pub fn is_clawfree(g: &UGraph) -> CheckOutcome {
    find_claw(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_gamma;
    use crate::group::Group;

    fn gamma(s: &str) -> UGraph {
        build_gamma(&Group::parse(s).unwrap())
    }

    #[test]
    fn perfect_examples() {
        let out = is_perfect(&gamma("C:15"), Budget::default());
        assert_eq!(out.verdict, Verdict::NotInClass);
        assert_eq!(out.witness.kind, WitnessKind::OddHole);
        assert!(out.certified);
        assert!(validate_witness(&gamma("C:15"), &out.witness));

        let out = is_perfect(&gamma("A:5"), Budget::default());
        assert_eq!(out.verdict, Verdict::InClass);
        assert!(out.certified);

        let g = gamma("C:2 x C:2 x C:5");
        let out = is_perfect(&g, Budget::default());
        assert_eq!(out.verdict, Verdict::NotInClass);
        assert!(validate_witness(&g, &out.witness));
    }

    #[test]
    fn s4_five_cycle_is_found_and_matches_known_labels() {
        let grp = Group::parse("S:4").unwrap();
        let g = build_gamma(&grp);
        let out = is_perfect(&g, Budget::default());
        assert_eq!(out.verdict, Verdict::NotInClass);
        assert!(validate_witness(&g, &out.witness));
        // the known hole e ~ (1 2 3) ~ (1 3 4 2) ~ (1 4 2 3) ~ (1 3 2) ~ e
        let want = ["e", "(1 2 3)", "(1 3 4 2)", "(1 4 2 3)", "(1 3 2)"];
        let verts: Vec<usize> = want
            .iter()
            .map(|l| (0..24).find(|&i| grp.label(i) == *l).unwrap())
            .collect();
        assert!(validate_witness(&g, &Witness::new(WitnessKind::OddHole, verts)));
    }

    #[test]
    fn budget_exhaustion_reports_unknown() {
        // a zero budget is honored before any expansion happens
        let g = gamma("S:4");
        let out = find_odd_hole(&g, Budget::from_duration(Duration::ZERO));
        assert_eq!(out.verdict, Verdict::Unknown);
        assert!(!out.certified);

        let out = is_perfect(&g, Budget::from_duration(Duration::ZERO));
        assert_eq!(out.verdict, Verdict::Unknown);
        assert!(!out.certified);
    }

    #[test]
    fn cograph_examples() {
        assert_eq!(is_cograph(&gamma("C:9")).verdict, Verdict::NotInClass);
        assert_eq!(is_cograph(&gamma("C:6")).verdict, Verdict::NotInClass);
        assert_eq!(
            is_cograph(&gamma("C:2 x C:2 x C:2")).verdict,
            Verdict::InClass
        );
        assert_eq!(is_cograph(&gamma("C:4 x C:4")).verdict, Verdict::InClass);
        assert_eq!(is_cograph(&gamma("C:8 x C:2")).verdict, Verdict::NotInClass);
    }

    #[test]
    fn chordal_examples() {
        let out = is_chordal(&gamma("C:5"));
        assert_eq!(out.verdict, Verdict::NotInClass);
        assert_eq!(out.witness.vertices.len(), 4);

        let out = is_chordal(&gamma("C:9"));
        assert_eq!(out.verdict, Verdict::NotInClass);
        assert_eq!(out.witness.vertices.len(), 6);

        assert_eq!(is_chordal(&gamma("C:2 x C:2 x C:2 x C:2")).verdict, Verdict::InClass);
        assert_eq!(is_chordal(&gamma("C:16")).verdict, Verdict::InClass);
        assert_eq!(is_chordal(&gamma("Q:16")).verdict, Verdict::InClass);
        assert_eq!(is_chordal(&gamma("S:3")).verdict, Verdict::InClass);
        assert_eq!(is_chordal(&gamma("C:3")).verdict, Verdict::InClass);
        assert_eq!(is_chordal(&gamma("C:4 x C:2")).verdict, Verdict::NotInClass);
    }

    #[test]
    fn interval_examples() {
        assert_eq!(is_interval(&gamma("C:16")).verdict, Verdict::InClass);
        assert_eq!(is_interval(&gamma("S:3")).verdict, Verdict::InClass);
        let out = is_interval(&gamma("C:5"));
        assert_eq!(out.verdict, Verdict::NotInClass);
        assert_eq!(out.witness.kind, WitnessKind::ChordlessCycle);
    }

    #[test]
    fn split_examples() {
        assert_eq!(is_split(&gamma("Q:8")).verdict, Verdict::InClass);
        let out = is_split(&gamma("C:8"));
        assert_eq!(out.verdict, Verdict::NotInClass);
        assert_eq!(out.witness.kind, WitnessKind::TwoK2);
        assert_eq!(is_split(&UGraph::empty(5)).verdict, Verdict::InClass);
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(is_threshold(&gamma("Q:8")).verdict, Verdict::InClass);
        let out = is_threshold(&gamma("C:8"));
        assert_eq!(out.verdict, Verdict::NotInClass);
        assert_eq!(out.witness.kind, WitnessKind::TwoK2);
        assert_eq!(is_threshold(&gamma("C:1")).verdict, Verdict::InClass);
    }

    #[test]
    fn clawfree_examples() {
        let out = find_claw(&gamma("D:4"));
        assert_eq!(out.verdict, Verdict::NotInClass);
        assert_eq!(out.witness.vertices, vec![4, 0, 1, 3]);
        assert_eq!(find_claw(&gamma("C:35")).verdict, Verdict::NotInClass);
        assert_eq!(find_claw(&gamma("C:16")).verdict, Verdict::InClass);
    }

    #[test]
    fn outcome_serialization_has_iso_durations() {
        let g = gamma("C:8");
        let out = is_split(&g);
        let json = serde_json::to_string(&out.to_json(&g)).unwrap();
        assert!(json.contains("\"verdict\":\"NotInClass\""));
        assert!(json.contains("\"elapsed\":\"PT"));
        assert!(json.contains("\"valid\":true"));
        let parsed: OutcomeJson = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, out.to_json(&g));
    }

    #[test]
    fn duration_formatting() {
        assert_eq!(iso8601_duration(Duration::from_millis(4)), "PT0.004S");
        assert_eq!(iso8601_duration(Duration::from_secs(61)), "PT61.000S");
        assert_eq!(iso8601_duration(Duration::from_millis(1500)), "PT1.500S");
    }
}
