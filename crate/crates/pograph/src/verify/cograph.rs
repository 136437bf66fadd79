//! Cograph checks: the element-order obstructions, the EPPO consequence,
//! exponent characterizations for p-groups and abelian 2-groups, and the
//! necessary-condition battery.

use crate::classes::{is_cograph, validate_witness, Verdict};
use crate::group::{center, is_eppo, subgroup, sylow_subgroup, ElementTable};
use crate::numutil::{factorize, is_prime};

use super::corpus::{abelian_two_group_specs, corpus_specs};
use super::support::{check, is_cyclic, odd_prime_divisors, p_group_prime, try_build, Built};
use super::{TheoremCheck, VerifyOptions};

fn cograph_flag(b: &Built) -> Result<bool, String> {
    let out = is_cograph(&b.graph);
    match out.verdict {
        Verdict::InClass => Ok(true),
        Verdict::NotInClass => {
            if validate_witness(&b.graph, &out.witness) {
                Ok(false)
            } else {
                Err("emitted P4 witness failed validation".into())
            }
        }
        Verdict::Unknown => Err("P4 scan cannot be unknown".into()),
    }
}

/// An element of order p^2 (odd p) or of order pq forces an induced P4.
fn has_order_obstruction(b: &Built) -> bool {
    (0..b.order()).any(|x| {
        let f = factorize(b.table.order_of(x) as u64);
        f.len() >= 2 || f.iter().any(|&(p, e)| p % 2 == 1 && e >= 2)
    })
}

pub fn verify_cograph_theorems(opts: &VerifyOptions) -> Vec<TheoremCheck> {
    vec![
        order_lemma(opts),
        eppo_consequence(opts),
        odd_p_group_exponent(opts),
        abelian_two_group_exponent(opts),
        necessary_conditions(opts),
        prime_order_corollary(opts),
    ]
}

fn order_lemma(opts: &VerifyOptions) -> TheoremCheck {
    let c = check(
        "cograph-order-lemma",
        "a group with an element of order p^2 (p odd) or of order pq (p, q distinct primes) does not have a cograph",
    );
    let mut ran = 0;
    for spec in corpus_specs(opts.max_order) {
        let Some(b) = try_build(&spec, opts) else { continue };
        if !has_order_obstruction(&b) {
            continue;
        }
        ran += 1;
        match cograph_flag(&b) {
            Ok(false) => {}
            Ok(true) => return c.fail_with(&b, "obstructing element order but P4-free".into(), None),
            Err(msg) => return c.fail_with(&b, msg, None),
        }
    }
    if ran == 0 {
        return c.skipped("no corpus groups within the order bound");
    }
    c.pass()
}

fn eppo_consequence(opts: &VerifyOptions) -> TheoremCheck {
    let c = check(
        "cograph-eppo",
        "a group whose graph is a cograph has only prime-power element orders",
    );
    let mut ran = 0;
    for spec in corpus_specs(opts.max_order) {
        let Some(b) = try_build(&spec, opts) else { continue };
        ran += 1;
        match cograph_flag(&b) {
            Ok(true) => {
                if !is_eppo(&b.group, &b.table) {
                    return c.fail_with(&b, "cograph but not every element has prime power order".into(), None);
                }
            }
            Ok(false) => {}
            Err(msg) => return c.fail_with(&b, msg, None),
        }
    }
    if ran == 0 {
        return c.skipped("no corpus groups within the order bound");
    }
    c.pass()
}

fn odd_p_group_exponent(opts: &VerifyOptions) -> TheoremCheck {
    let c = check(
        "cograph-odd-pgroup-exponent",
        "for a p-group with p odd, the graph is a cograph iff the group has exponent p",
    );
    let mut specs = corpus_specs(opts.max_order);
    for extra in [
        "SDM:(C:3 x C:3):3:[[1,1],[0,1]]",
        "SDM:(C:5 x C:5):5:[[1,1],[0,1]]",
        "SD:9:3:4",
        "SD:27:3:10",
    ] {
        specs.push(extra.parse().unwrap());
    }
    let mut ran = 0;
    for spec in specs {
        let Some(b) = try_build(&spec, opts) else { continue };
        let Some(p) = p_group_prime(b.order()) else { continue };
        if p == 2 || b.order() == 1 {
            continue;
        }
        ran += 1;
        let expect = b.table.exponent() == p;
        match cograph_flag(&b) {
            Ok(got) if got == expect => {}
            Ok(got) => {
                return c.fail_with(
                    &b,
                    format!("cograph = {got} but exponent = {}", b.table.exponent()),
                    None,
                )
            }
            Err(msg) => return c.fail_with(&b, msg, None),
        }
    }
    if ran == 0 {
        return c.skipped("no odd p-groups within the order bound");
    }
    c.pass()
}

fn abelian_two_group_exponent(opts: &VerifyOptions) -> TheoremCheck {
    let c = check(
        "cograph-abelian-2group-exponent",
        "for a non-cyclic abelian 2-group, the graph is a cograph iff the exponent is at most 4",
    );
    let bound = opts.max_order.min(128);
    let mut ran = 0;
    for spec in abelian_two_group_specs(bound) {
        let Some(b) = try_build(&spec, opts) else { continue };
        if is_cyclic(&b) {
            continue;
        }
        ran += 1;
        let expect = b.table.exponent() <= 4;
        match cograph_flag(&b) {
            Ok(got) if got == expect => {}
            Ok(got) => {
                return c.fail_with(
                    &b,
                    format!("cograph = {got} but exponent = {}", b.table.exponent()),
                    None,
                )
            }
            Err(msg) => return c.fail_with(&b, msg, None),
        }
    }
    if ran == 0 {
        return c.skipped("no non-cyclic abelian 2-groups within the order bound");
    }
    c.pass()
}

fn necessary_conditions(opts: &VerifyOptions) -> TheoremCheck {
    let c = check(
        "cograph-necessary-conditions",
        "when the graph is a cograph: element orders are prime or a power of 2; no element of order p^2 for odd p; a non-cyclic abelian Sylow 2-subgroup has exponent at most 4; elements of distinct prime orders never commute; a group with two prime divisors has trivial center",
    );
    let mut ran = 0;
    for spec in corpus_specs(opts.max_order) {
        let Some(b) = try_build(&spec, opts) else { continue };
        match cograph_flag(&b) {
            Ok(true) => {}
            Ok(false) => continue,
            Err(msg) => return c.fail_with(&b, msg, None),
        }
        ran += 1;
        // (1) orders are prime or a power of 2
        for x in 0..b.order() {
            let o = b.table.order_of(x) as u64;
            if o > 1 && !is_prime(o) && !o.is_power_of_two() {
                return c.fail_with(&b, format!("element order {o} is neither prime nor a 2-power"), None);
            }
        }
        // (2) no element of order p^2 for odd p
        for x in 0..b.order() {
            if odd_prime_divisors(b.table.order_of(x))
                .iter()
                .any(|&p| (b.table.order_of(x) as u64).is_multiple_of(p * p))
            {
                return c.fail_with(&b, "order divisible by p^2 for odd p".into(), None);
            }
        }
        // (3) non-cyclic abelian Sylow 2-subgroup has exponent <= 4
        if b.order() % 2 == 0 {
            let syl = sylow_subgroup(&b.group, 2);
            let h = subgroup(&b.group, &syl).expect("Sylow subgroup is closed");
            let ht = ElementTable::new(&h);
            let cyclic = ht.orders().iter().any(|&o| o as usize == h.order());
            if h.is_abelian() && !cyclic && ht.exponent() > 4 {
                return c.fail_with(&b, "non-cyclic abelian Sylow 2-subgroup of exponent > 4".into(), None);
            }
        }
        // (4) elements of distinct prime orders never commute
        let s = b.table.prime_order_set();
        for &x in s {
            for &y in s {
                if b.table.order_of(x) != b.table.order_of(y)
                    && b.group.mul(x, y) == b.group.mul(y, x)
                {
                    return c.fail_with(&b, "commuting elements of distinct prime orders".into(), None);
                }
            }
        }
        // (5) not a prime power order => trivial center
        if factorize(b.order() as u64).len() > 1 && center(&b.group).len() > 1 {
            return c.fail_with(&b, "non-p-group with non-trivial center".into(), None);
        }
    }
    if ran == 0 {
        return c.skipped("no cograph corpus groups within the order bound");
    }
    c.pass()
}

fn prime_order_corollary(opts: &VerifyOptions) -> TheoremCheck {
    let c = check(
        "cograph-prime-order-corollary",
        "a group of order m or 2m with m odd whose graph is a cograph has all non-identity elements of prime order",
    );
    let mut ran = 0;
    for spec in corpus_specs(opts.max_order) {
        let Some(b) = try_build(&spec, opts) else { continue };
        let n = b.order();
        let applicable = n % 2 == 1 || (n / 2) % 2 == 1;
        if !applicable {
            continue;
        }
        match cograph_flag(&b) {
            Ok(true) => {}
            Ok(false) => continue,
            Err(msg) => return c.fail_with(&b, msg, None),
        }
        ran += 1;
        if b.table.prime_order_set().len() + 1 != n {
            return c.fail_with(&b, "cograph of odd/2-odd order with a non-prime element order".into(), None);
        }
    }
    if ran == 0 {
        return c.skipped("no applicable corpus groups within the order bound");
    }
    c.pass()
}

#[cfg(test)]
mod tests {
    use super::super::support::try_build_text;
    use super::*;

    #[test]
    fn cograph_suite_passes_at_48() {
        let opts = VerifyOptions {
            max_order: 48,
            ..Default::default()
        };
        for ch in verify_cograph_theorems(&opts) {
            assert!(ch.passed(), "{}: {:?}", ch.id, ch.status);
        }
    }

    #[test]
    fn targeted_cograph_instances() {
        let opts = VerifyOptions::default();
        let b = try_build_text("C:3 x C:3", &opts).unwrap();
        assert_eq!(cograph_flag(&b), Ok(true));
        let b = try_build_text("C:8 x C:2", &opts).unwrap();
        assert_eq!(cograph_flag(&b), Ok(false));
        let b = try_build_text("C:4 x C:4", &opts).unwrap();
        assert_eq!(cograph_flag(&b), Ok(true));
    }
}
