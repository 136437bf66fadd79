//! Exhaustive enumeration of constructible groups within an order bound:
//! all products of cyclic groups, all dihedral and generalized quaternion
//! groups, small symmetric and alternating groups, and all valid cyclic
//! semidirect products.

use crate::group::GroupSpec;
use crate::numutil::{gcd, pow_mod};

/// All multisets of integers >= 2 with product <= bound, as non-decreasing
/// factor lists.
fn cyclic_factorizations(bound: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(bound: u64, min_factor: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        let mut f = min_factor;
        while f <= bound {
            current.push(f);
            rec(bound / f, f, current, out);
            current.pop();
            f += 1;
        }
    }
    rec(bound, 2, &mut current, &mut out);
    out
}

fn spec(text: String) -> GroupSpec {
    text.parse().expect("corpus spec is well-formed")
}

/// Products of cyclic groups with order in 1..=max_order, the trivial
/// group included.
pub fn cyclic_product_specs(max_order: usize) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    if max_order >= 1 {
        out.push(spec("C:1".into()));
    }
    for factors in cyclic_factorizations(max_order as u64) {
        let text = factors
            .iter()
            .map(|f| format!("C:{f}"))
            .collect::<Vec<_>>()
            .join(" x ");
        out.push(spec(text));
    }
    out
}

/// Cyclic-product 2-groups (all abelian 2-groups up to isomorphism).
pub fn abelian_two_group_specs(max_order: usize) -> Vec<GroupSpec> {
    cyclic_product_specs(max_order)
        .into_iter()
        .filter(|s| {
            let text = s.canonical();
            text == "C:1"
                || text
                    .split(" x ")
                    .all(|atom| atom[2..].parse::<u64>().is_ok_and(|n| n.is_power_of_two()))
        })
        .collect()
}

pub fn dihedral_specs(max_order: usize) -> Vec<GroupSpec> {
    (2..=max_order / 2).map(|n| spec(format!("D:{n}"))).collect()
}

pub fn quaternion_specs(max_order: usize) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    let mut q = 8usize;
    while q <= max_order {
        out.push(spec(format!("Q:{q}")));
        q *= 2;
    }
    out
}

pub fn symmetric_specs(max_order: usize) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    let mut fact = 1usize;
    for n in 2..=5usize {
        fact *= n;
        if fact <= max_order {
            out.push(spec(format!("S:{n}")));
        }
    }
    out
}

pub fn alternating_specs(max_order: usize) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for (n, order) in [(3usize, 3usize), (4, 12), (5, 60), (6, 360)] {
        if order <= max_order {
            out.push(spec(format!("A:{n}")));
        }
    }
    out
}

/// All valid SD:n:m:k with n*m <= max_order and a non-trivial action.
pub fn semidirect_specs(max_order: usize) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for n in 3..=(max_order / 2) as u64 {
        for m in 2..=(max_order as u64 / n) {
            for k in 2..n {
                if gcd(k, n) == 1 && pow_mod(k, m, n) == 1 {
                    out.push(spec(format!("SD:{n}:{m}:{k}")));
                }
            }
        }
    }
    out
}

/// The full corpus for theorem checks: exhaustive within the declared
/// families.
pub fn corpus_specs(max_order: usize) -> Vec<GroupSpec> {
    let mut out = cyclic_product_specs(max_order);
    out.extend(dihedral_specs(max_order));
    out.extend(quaternion_specs(max_order));
    out.extend(symmetric_specs(max_order));
    out.extend(alternating_specs(max_order));
    out.extend(semidirect_specs(max_order));
    out
}

/// Named families for the search command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    All,
    Cyclic,
    Abelian,
    Abelian2,
    Dihedral,
    Quaternion,
    Symmetric,
    Alternating,
    Semidirect,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        Some(match s {
            "all" => Family::All,
            "cyclic" => Family::Cyclic,
            "abelian" => Family::Abelian,
            "abelian-2" | "abelian2" => Family::Abelian2,
            "dihedral" => Family::Dihedral,
            "quaternion" => Family::Quaternion,
            "symmetric" => Family::Symmetric,
            "alternating" => Family::Alternating,
            "semidirect" => Family::Semidirect,
            _ => return None,
        })
    }

    pub fn specs(&self, max_order: usize) -> Vec<GroupSpec> {
        match self {
            Family::All => corpus_specs(max_order),
            Family::Cyclic => (1..=max_order)
                .map(|n| spec(format!("C:{n}")))
                .collect(),
            Family::Abelian => cyclic_product_specs(max_order),
            Family::Abelian2 => abelian_two_group_specs(max_order),
            Family::Dihedral => dihedral_specs(max_order),
            Family::Quaternion => quaternion_specs(max_order),
            Family::Symmetric => symmetric_specs(max_order),
            Family::Alternating => alternating_specs(max_order),
            Family::Semidirect => semidirect_specs(max_order),
        }
    }
}
