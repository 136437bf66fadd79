//! Reproduction of the comparison table: six groups against their four
//! class flags (perfect, claw-free, cograph, chordal).

use crate::classes::{is_chordal, is_clawfree, is_cograph, is_perfect, Verdict};

use super::support::{check, try_build_text};
use super::{TheoremCheck, VerifyOptions};

/// (spec, perfect, clawfree, cograph, chordal)
pub const TABLE1_ROWS: [(&str, bool, bool, bool, bool); 6] = [
    ("S:3", true, true, true, true),
    ("C:2^3", true, true, true, true),
    ("D:5", true, true, true, false),
    ("D:8", true, false, true, false),
    ("C:27", true, true, false, false),
    ("D:25", true, false, false, false),
];

pub fn verify_table1(opts: &VerifyOptions) -> TheoremCheck {
    let c = check(
        "table1",
        "six named groups match their known perfect / claw-free / cograph / chordal flags",
    );
    let mut ran = 0;
    for &(text, perfect, clawfree, cograph, chordal) in &TABLE1_ROWS {
        let Some(b) = try_build_text(text, opts) else {
            continue;
        };
        ran += 1;
        let flags = [
            ("perfect", is_perfect(&b.graph, opts.budget).verdict, perfect),
            ("clawfree", is_clawfree(&b.graph).verdict, clawfree),
            ("cograph", is_cograph(&b.graph).verdict, cograph),
            ("chordal", is_chordal(&b.graph).verdict, chordal),
        ];
        for (name, verdict, expect) in flags {
            let got = match verdict {
                Verdict::InClass => true,
                Verdict::NotInClass => false,
                Verdict::Unknown => return c.skipped(&format!("budget exhausted on {text}")),
            };
            if got != expect {
                return c.fail_with(
                    &b,
                    format!("{name} flag is {got}, table says {expect}"),
                    None,
                );
            }
        }
    }
    if ran == 0 {
        return c.skipped("no table rows within the order bound");
    }
    c.pass()
}
