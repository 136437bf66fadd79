//! Claw-freeness checks: element-order obstructions, the 3-group and
//! 2-group characterizations, the necessary-condition battery, and the
//! distinguished role of the alternating group on 5 points.

use crate::classes::{is_clawfree, validate_witness, Verdict, Witness, WitnessKind};
use crate::group::{
    center, has_d4_subgroup, has_z8_subgroup, is_nilpotent, subgroup, sylow_subgroup, ElementTable,
};
use crate::numutil::{factorize, gcd};

use super::corpus::corpus_specs;
use super::support::{check, is_cyclic, is_quaternion_type, p_group_prime, try_build, try_build_text, Built};
use super::{TheoremCheck, VerifyOptions};

fn clawfree_flag(b: &Built) -> Result<bool, String> {
    let out = is_clawfree(&b.graph);
    match out.verdict {
        Verdict::InClass => Ok(true),
        Verdict::NotInClass => {
            if validate_witness(&b.graph, &out.witness) {
                Ok(false)
            } else {
                Err("emitted claw witness failed validation".into())
            }
        }
        Verdict::Unknown => Err("claw scan cannot be unknown".into()),
    }
}

pub fn verify_clawfree_theorems(opts: &VerifyOptions) -> Vec<TheoremCheck> {
    vec![
        order_lemma(opts),
        three_group(opts),
        two_group(opts),
        necessary_conditions(opts),
        a5_distinguished(opts),
    ]
}

fn order_lemma(opts: &VerifyOptions) -> TheoremCheck {
    let c = check(
        "clawfree-order-lemma",
        "an element of order p^2 with p >= 5, or of order pq with p, q distinct primes, forces a claw",
    );
    let mut ran = 0;
    for spec in corpus_specs(opts.max_order) {
        let Some(b) = try_build(&spec, opts) else { continue };
        let obstructed = (0..b.order()).any(|x| {
            let f = factorize(b.table.order_of(x) as u64);
            f.len() >= 2 || f.iter().any(|&(p, e)| p >= 5 && e >= 2)
        });
        if !obstructed {
            continue;
        }
        ran += 1;
        match clawfree_flag(&b) {
            Ok(false) => {}
            Ok(true) => return c.fail_with(&b, "obstructing element order but claw-free".into(), None),
            Err(msg) => return c.fail_with(&b, msg, None),
        }
    }
    if ran == 0 {
        return c.skipped("no obstructed corpus groups within the order bound");
    }
    c.pass()
}

fn three_group(opts: &VerifyOptions) -> TheoremCheck {
    let c = check(
        "clawfree-3group",
        "a 3-group has a claw-free graph iff it is cyclic or has exponent 3",
    );
    let mut specs = corpus_specs(opts.max_order);
    for extra in ["SDM:(C:3 x C:3):3:[[1,1],[0,1]]", "SD:9:3:4", "SD:27:3:10"] {
        specs.push(extra.parse().unwrap());
    }
    let mut ran = 0;
    for spec in specs {
        let Some(b) = try_build(&spec, opts) else { continue };
        if p_group_prime(b.order()) != Some(3) {
            continue;
        }
        ran += 1;
        let expect = is_cyclic(&b) || b.table.exponent() == 3;
        match clawfree_flag(&b) {
            Ok(got) if got == expect => {}
            Ok(got) => {
                return c.fail_with(
                    &b,
                    format!(
                        "claw-free = {got}, cyclic = {}, exponent = {}",
                        is_cyclic(&b),
                        b.table.exponent()
                    ),
                    None,
                )
            }
            Err(msg) => return c.fail_with(&b, msg, None),
        }
    }
    if ran == 0 {
        return c.skipped("no 3-groups within the order bound");
    }
    c.pass()
}

fn two_group(opts: &VerifyOptions) -> TheoremCheck {
    let c = check(
        "clawfree-2group",
        "a 2-group has a claw-free graph iff it is cyclic or quaternion, or has no subgroup isomorphic to Z_8 or to the dihedral group of order 8",
    );
    let mut ran = 0;
    for spec in corpus_specs(opts.max_order) {
        let Some(b) = try_build(&spec, opts) else { continue };
        if b.order() < 2 || p_group_prime(b.order()) != Some(2) {
            continue;
        }
        ran += 1;
        let expect = is_cyclic(&b)
            || is_quaternion_type(&b)
            || (!has_z8_subgroup(&b.table) && !has_d4_subgroup(&b.group, &b.table));
        match clawfree_flag(&b) {
            Ok(got) if got == expect => {}
            Ok(got) => {
                return c.fail_with(
                    &b,
                    format!(
                        "claw-free = {got}, cyclic = {}, quaternion = {}, Z8 = {}, D4 = {}",
                        is_cyclic(&b),
                        is_quaternion_type(&b),
                        has_z8_subgroup(&b.table),
                        has_d4_subgroup(&b.group, &b.table)
                    ),
                    None,
                )
            }
            Err(msg) => return c.fail_with(&b, msg, None),
        }
    }
    if ran == 0 {
        return c.skipped("no 2-groups within the order bound");
    }
    c.pass()
}

fn necessary_conditions(opts: &VerifyOptions) -> TheoremCheck {
    let c = check(
        "clawfree-necessary-conditions",
        "when the graph is claw-free: Sylow p-subgroups for p >= 5 have exponent p; the Sylow 3-subgroup is cyclic or of exponent 3; the Sylow 2-subgroup is cyclic, quaternion, or free of Z_8 and dihedral-8 subgroups; elements of coprime orders never commute; a group with two prime divisors has trivial center and is not nilpotent",
    );
    let mut ran = 0;
    for spec in corpus_specs(opts.max_order) {
        let Some(b) = try_build(&spec, opts) else { continue };
        match clawfree_flag(&b) {
            Ok(true) => {}
            Ok(false) => continue,
            Err(msg) => return c.fail_with(&b, msg, None),
        }
        ran += 1;
        let factors = factorize(b.order() as u64);
        for &(p, _) in &factors {
            let syl = sylow_subgroup(&b.group, p);
            let h = subgroup(&b.group, &syl).expect("Sylow subgroup is closed");
            let ht = ElementTable::new(&h);
            let cyclic = ht.orders().iter().any(|&o| o as usize == h.order());
            match p {
                2 => {
                    let quaternion = h.order() >= 8 && !cyclic && ht.orders().iter().filter(|&&o| o == 2).count() == 1;
                    let clean = !has_z8_subgroup(&ht) && !has_d4_subgroup(&h, &ht);
                    if !(cyclic || quaternion || clean) {
                        return c.fail_with(&b, "claw-free with a bad Sylow 2-subgroup".into(), None);
                    }
                }
                3 => {
                    if !(cyclic || ht.exponent() == 3) {
                        return c.fail_with(&b, "claw-free with a bad Sylow 3-subgroup".into(), None);
                    }
                }
                _ => {
                    if ht.exponent() != p {
                        return c.fail_with(
                            &b,
                            format!("claw-free with Sylow {p}-subgroup of exponent {}", ht.exponent()),
                            None,
                        );
                    }
                }
            }
        }
        // coprime non-identity orders never commute
        for x in 0..b.order() {
            let ox = b.table.order_of(x);
            if ox == 1 {
                continue;
            }
            for y in 0..b.order() {
                let oy = b.table.order_of(y);
                if oy == 1 || gcd(ox as u64, oy as u64) != 1 {
                    continue;
                }
                if b.group.mul(x, y) == b.group.mul(y, x) {
                    return c.fail_with(&b, "commuting elements of coprime orders".into(), None);
                }
            }
        }
        if factors.len() > 1 {
            if center(&b.group).len() > 1 {
                return c.fail_with(&b, "non-p-group with non-trivial center".into(), None);
            }
            if is_nilpotent(&b.group) {
                return c.fail_with(&b, "claw-free nilpotent group with two prime divisors".into(), None);
            }
        }
    }
    if ran == 0 {
        return c.skipped("no claw-free corpus groups within the order bound");
    }
    c.pass()
}

fn a5_distinguished(opts: &VerifyOptions) -> TheoremCheck {
    let c = check(
        "clawfree-a5",
        "the alternating group on 5 points has a claw-free graph, uniquely among constructible groups of order 60; the projective group over F_7 has a claw",
    );
    let Some(a5) = try_build_text("A:5", opts) else {
        return c.skipped("A:5 of order 60 exceeds the order bound");
    };
    match clawfree_flag(&a5) {
        Ok(true) => {}
        Ok(false) => return c.fail_with(&a5, "expected a claw-free graph".into(), None),
        Err(msg) => return c.fail_with(&a5, msg, None),
    }
    // uniqueness among constructible groups of order 60
    for spec in corpus_specs(opts.max_order) {
        if spec.order() != Ok(60) || spec.canonical() == "A:5" {
            continue;
        }
        let Some(b) = try_build(&spec, opts) else { continue };
        match clawfree_flag(&b) {
            Ok(false) => {}
            Ok(true) => return c.fail_with(&b, "unexpected claw-free group of order 60".into(), None),
            Err(msg) => return c.fail_with(&b, msg, None),
        }
    }
    if let Some(psl) = try_build_text("PSL:2:7", opts) {
        let out = is_clawfree(&psl.graph);
        if out.verdict != Verdict::NotInClass {
            return c.fail_with(&psl, "expected a claw".into(), None);
        }
        if !validate_witness(&psl.graph, &out.witness) {
            return c.fail_with(&psl, "claw witness failed validation".into(), Some(&out.witness));
        }
    }
    // the well-known claw in the dihedral group of order 8: (b; e, a, a^3)
    if let Some(d4) = try_build_text("D:4", opts) {
        let w = Witness::new(WitnessKind::Claw, vec![4, 0, 1, 3]);
        if !validate_witness(&d4.graph, &w) {
            return c.fail_with(&d4, "expected claw (b; e, a, a^3) to validate".into(), Some(&w));
        }
    }
    c.pass()
}
