//! Chordal, interval, split and threshold classifications over the corpus:
//! membership is decided by characteristic properties of the five (resp.
//! five) groups in each list and compared against the recognizers.

use crate::classes::{is_chordal, is_interval, is_split, is_threshold, validate_witness, Verdict};

use super::corpus::corpus_specs;
use super::support::{
    check, is_cyclic, is_elementary_two, is_quaternion_type, is_s3_type, is_two_group, try_build,
    Built,
};
use super::{TheoremCheck, VerifyOptions};

/// G is S_3, Z_3, a cyclic 2-group, a generalized quaternion group, or an
/// elementary abelian 2-group.
fn in_chordal_list(b: &Built) -> bool {
    b.order() == 1
        || is_s3_type(b)
        || b.order() == 3
        || (is_two_group(b.order()) && is_cyclic(b))
        || is_quaternion_type(b)
        || is_elementary_two(b)
}

/// G is Z_3, Z_4, S_3, Q_8, or an elementary abelian 2-group.
fn in_split_list(b: &Built) -> bool {
    b.order() == 3
        || (b.order() == 4 && is_cyclic(b))
        || is_s3_type(b)
        || (b.order() == 8 && is_quaternion_type(b))
        || is_elementary_two(b)
}

fn flag(
    b: &Built,
    run: impl Fn(&crate::graph::UGraph) -> crate::classes::CheckOutcome,
) -> Result<bool, String> {
    let out = run(&b.graph);
    match out.verdict {
        Verdict::InClass => Ok(true),
        Verdict::NotInClass => {
            if validate_witness(&b.graph, &out.witness) {
                Ok(false)
            } else {
                Err("emitted witness failed validation".into())
            }
        }
        Verdict::Unknown => Err("certified recognizer returned unknown".into()),
    }
}

pub fn verify_chordal_family(opts: &VerifyOptions) -> Vec<TheoremCheck> {
    let mut checks = Vec::new();

    let c = check(
        "chordal-classification",
        "the graph is chordal iff the group is S_3, Z_3, a cyclic 2-group, a generalized quaternion group, or an elementary abelian 2-group",
    );
    checks.push(run_biconditional(c, opts, in_chordal_list, |b| flag(b, is_chordal)));

    let c = check(
        "chordal-interval-corollary",
        "the graph is chordal iff it is an interval graph",
    );
    checks.push(run_agreement(c, opts, |b| flag(b, is_chordal), |b| flag(b, is_interval)));

    let c = check(
        "chordal-split-corollary",
        "the graph is split iff the group is Z_3, Z_4, S_3, Q_8, or an elementary abelian 2-group",
    );
    checks.push(run_biconditional(c, opts, in_split_list, |b| flag(b, is_split)));

    let c = check(
        "chordal-threshold-corollary",
        "the graph is threshold iff it is split",
    );
    checks.push(run_agreement(c, opts, |b| flag(b, is_split), |b| flag(b, is_threshold)));

    checks
}

fn run_biconditional(
    c: super::support::CheckBuilder,
    opts: &VerifyOptions,
    predicate: impl Fn(&Built) -> bool,
    recognize: impl Fn(&Built) -> Result<bool, String>,
) -> TheoremCheck {
    let mut ran = 0;
    for spec in corpus_specs(opts.max_order) {
        let Some(b) = try_build(&spec, opts) else { continue };
        ran += 1;
        let expect = predicate(&b);
        match recognize(&b) {
            Ok(got) if got == expect => {}
            Ok(got) => {
                return c.fail_with(
                    &b,
                    format!("recognizer said {got} but the classification says {expect}"),
                    None,
                )
            }
            Err(msg) => return c.fail_with(&b, msg, None),
        }
    }
    if ran == 0 {
        return c.skipped("no corpus groups within the order bound");
    }
    c.pass()
}

fn run_agreement(
    c: super::support::CheckBuilder,
    opts: &VerifyOptions,
    left: impl Fn(&Built) -> Result<bool, String>,
    right: impl Fn(&Built) -> Result<bool, String>,
) -> TheoremCheck {
    let mut ran = 0;
    for spec in corpus_specs(opts.max_order) {
        let Some(b) = try_build(&spec, opts) else { continue };
        ran += 1;
        match (left(&b), right(&b)) {
            (Ok(l), Ok(r)) if l == r => {}
            (Ok(l), Ok(r)) => {
                return c.fail_with(&b, format!("verdicts disagree: {l} vs {r}"), None)
            }
            (Err(msg), _) | (_, Err(msg)) => return c.fail_with(&b, msg, None),
        }
    }
    if ran == 0 {
        return c.skipped("no corpus groups within the order bound");
    }
    c.pass()
}
