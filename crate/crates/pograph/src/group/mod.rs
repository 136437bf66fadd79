//! Finite groups as dense multiplication tables with labelled elements.

mod build;
pub(crate) mod matrix;
pub(crate) mod perm;
mod spec;

pub use spec::{GroupExpr, GroupSpec};

impl GroupSpec {
    /// Order of the group this expression constructs, validating the
    /// parameters without building the table.
    pub fn order(&self) -> crate::error::Result<u64> {
        build::validated_order(self.expr())
    }
}

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::numutil::{is_prime, lcm, prime_power_base};

/// Default upper bound on constructible group orders. Every query is a
/// table lookup, so the cap mostly bounds memory (cap^2 u32 entries).
pub const DEFAULT_ORDER_CAP: usize = 4096;

/// A finite group realized as an n x n index table.
#[derive(Debug, Clone)]
pub struct Group {
    n: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
    labels: Vec<String>,
    family: String,
}

impl Group {
    pub(crate) fn from_table(
        table: Vec<u32>,
        labels: Vec<String>,
        family: String,
    ) -> Result<Group> {
        let n = labels.len();
        assert_eq!(table.len(), n * n, "table must be n*n");
        // locate the identity
        let mut identity = None;
        'outer: for e in 0..n {
            for x in 0..n {
                if table[e * n + x] != x as u32 || table[x * n + e] != x as u32 {
                    continue 'outer;
                }
            }
            identity = Some(e);
            break;
        }
        let identity = identity.ok_or_else(|| {
            Error::InvalidParameter(format!("constructed table for {family} has no identity"))
        })?;
        let mut inverse = vec![u32::MAX; n];
        for x in 0..n {
            let row = &table[x * n..(x + 1) * n];
            let inv = row
                .iter()
                .position(|&z| z as usize == identity)
                .ok_or_else(|| {
                    Error::InvalidParameter(format!(
                        "constructed table for {family} has no inverse for element {x}"
                    ))
                })?;
            inverse[x] = inv as u32;
        }
        Ok(Group {
            n,
            table,
            identity,
            inverse,
            labels,
            family,
        })
    }

    /// Build a group from a parsed constructor expression with the default cap.
    pub fn build(spec: &GroupSpec) -> Result<Group> {
        Self::build_with_cap(spec, DEFAULT_ORDER_CAP)
    }

    pub fn build_with_cap(spec: &GroupSpec, cap: usize) -> Result<Group> {
        build::build_expr(spec.expr(), cap)
    }

    /// Parse and build in one step.
    pub fn parse(text: &str) -> Result<Group> {
        Self::build(&text.parse::<GroupSpec>()?)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn inverse_of(&self, x: usize) -> usize {
        self.inverse[x] as usize
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Canonical constructor expression this group was built from.
    pub fn family(&self) -> &str {
        &self.family
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let mut acc = self.identity;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Least k >= 1 with x^k = e.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != self.identity {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    /// Least subgroup containing the generators: BFS over right
    /// multiplication (inverses come for free in a finite group).
    /// Returns sorted element indices; always contains the identity.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = Bitset::new(self.n);
        seen.set(self.identity);
        let mut queue = vec![self.identity];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen.get(y) {
                    seen.set(y);
                    queue.push(y);
                }
            }
        }
        seen.to_vec()
    }

    pub fn is_abelian(&self) -> bool {
        for x in 0..self.n {
            for y in (x + 1)..self.n {
                if self.mul(x, y) != self.mul(y, x) {
                    return false;
                }
            }
        }
        true
    }

    /// Multiset of element orders as (order, count) pairs, sorted by order.
    pub fn order_histogram(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for x in 0..self.n {
            *counts.entry(self.element_order(x)).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }

    /// Check mul is a total group operation on sampled triples: exhaustive
    /// for n <= 64, at least 10n deterministic pseudo-random triples above.
    pub fn verify_axioms(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            if self.mul(self.identity, x) != x || self.mul(x, self.identity) != x {
                return false;
            }
            if self.mul(x, self.inverse_of(x)) != self.identity {
                return false;
            }
        }
        // Latin square: rows and columns are permutations
        for x in 0..n {
            let mut row = Bitset::new(n);
            let mut col = Bitset::new(n);
            for y in 0..n {
                row.set(self.mul(x, y));
                col.set(self.mul(y, x));
            }
            if row.count() != n || col.count() != n {
                return false;
            }
        }
        let assoc = |x: usize, y: usize, z: usize| {
            self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z))
        };
        if n <= 64 {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if !assoc(x, y, z) {
                            return false;
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64 ^ (n as u64);
            let mut next = move || {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 16) as usize
            };
            for _ in 0..10 * n {
                if !assoc(next() % n, next() % n, next() % n) {
                    return false;
                }
            }
        }
        true
    }
}

/// Per-element order data and derived sets for a group.
#[derive(Debug, Clone)]
pub struct ElementTable {
    orders: Vec<u32>,
    prime_order: Vec<usize>,
    exponent: u64,
    s_closure: Vec<usize>,
}

impl ElementTable {
    pub fn new(g: &Group) -> ElementTable {
        let orders: Vec<u32> = (0..g.order()).map(|x| g.element_order(x) as u32).collect();
        let prime_order: Vec<usize> = (0..g.order())
            .filter(|&x| is_prime(orders[x] as u64))
            .collect();
        let exponent = orders.iter().fold(1u64, |acc, &o| lcm(acc, o as u64));
        let s_closure = g.closure(&prime_order);
        ElementTable {
            orders,
            prime_order,
            exponent,
            s_closure,
        }
    }

    #[inline]
    pub fn order_of(&self, x: usize) -> usize {
        self.orders[x] as usize
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Indices of the elements of prime order, sorted.
    pub fn prime_order_set(&self) -> &[usize] {
        &self.prime_order
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Elements of the subgroup generated by the prime-order set, sorted.
    pub fn s_closure(&self) -> &[usize] {
        &self.s_closure
    }
}

/// True iff every non-identity element has prime power order.
pub fn is_eppo(g: &Group, table: &ElementTable) -> bool {
    (0..g.order())
        .filter(|&x| x != g.identity())
        .all(|x| prime_power_base(table.order_of(x) as u64).is_some())
}

/// True iff some element has order 8.
pub fn has_z8_subgroup(table: &ElementTable) -> bool {
    table.orders().contains(&8)
}

/// True iff there are a of order 4 and b of order 2 outside `<a>` with
/// b a b^-1 = a^-1, i.e. a dihedral subgroup of order 8.
pub fn has_d4_subgroup(g: &Group, table: &ElementTable) -> bool {
    let n = g.order();
    for a in 0..n {
        if table.order_of(a) != 4 {
            continue;
        }
        let gen = [a];
        let cyclic = g.closure(&gen);
        let a_inv = g.inverse_of(a);
        for b in 0..n {
            if table.order_of(b) != 2 || cyclic.binary_search(&b).is_ok() {
                continue;
            }
            if g.mul(g.mul(b, a), g.inverse_of(b)) == a_inv {
                return true;
            }
        }
    }
    false
}

/// For a p-group: true iff the product of any two prime-order elements has
/// order p or 1 (equivalently, S together with the identity is a subgroup).
pub fn s_product_condition(g: &Group, table: &ElementTable) -> Result<bool> {
    let n = g.order() as u64;
    let p = match prime_power_base(n) {
        Some(p) => p,
        None => {
            return Err(Error::NotPGroup { order: g.order() });
        }
    };
    let s = table.prime_order_set();
    for &x in s {
        for &y in s {
            let o = table.order_of(g.mul(x, y)) as u64;
            if o != 1 && o != p {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A Sylow p-subgroup, as sorted element indices. Grows a p-subgroup by
/// adjoining normalizing elements of p-power order until the full p-part
/// of |G| is reached.
pub fn sylow_subgroup(g: &Group, p: u64) -> Vec<usize> {
    let n = g.order() as u64;
    let mut target = 1u64;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        target *= p;
    }
    let mut h = vec![g.identity()];
    let orders: Vec<u64> = (0..g.order()).map(|x| g.element_order(x) as u64).collect();
    while (h.len() as u64) < target {
        let in_h = Bitset::from_indices(g.order(), &h);
        let mut grown = false;
        'candidates: for (x, &order_x) in orders.iter().enumerate() {
            if in_h.get(x) || prime_power_base(order_x) != Some(p) {
                continue;
            }
            // x must normalize H
            let x_inv = g.inverse_of(x);
            for &y in &h {
                if !in_h.get(g.mul(g.mul(x, y), x_inv)) {
                    continue 'candidates;
                }
            }
            let mut gens = h.clone();
            gens.push(x);
            let j = g.closure(&gens);
            if prime_power_base(j.len() as u64) == Some(p) || j.len() == 1 {
                h = j;
                grown = true;
                break;
            }
        }
        assert!(grown, "Sylow subgroup construction stalled");
    }
    h
}

/// True iff every Sylow subgroup is normal (the group is the direct
/// product of its Sylow subgroups).
pub fn is_nilpotent(g: &Group) -> bool {
    let n = g.order() as u64;
    for (p, _) in crate::numutil::factorize(n) {
        let syl = sylow_subgroup(g, p);
        let in_syl = Bitset::from_indices(g.order(), &syl);
        for x in 0..g.order() {
            let x_inv = g.inverse_of(x);
            for &y in &syl {
                if !in_syl.get(g.mul(g.mul(x, y), x_inv)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Labels (entries reduced mod p) of the five determinant-1 matrices that
/// form an explicit induced 5-cycle in SL(2,p), in cycle order. All five
/// edge products are unipotent-like with trace 2, hence of order p.
pub fn matrix_witness_labels(p: u64) -> Vec<String> {
    use matrix::{mat_from_signed, mat_label};
    let pi = p as i64;
    let mats: [[i64; 4]; 5] = [
        [1, 1, 0, 1],
        [0, (pi - 1) / 2, 2, 0],
        [(pi + 1) / 2, (pi + 3) * (1 - pi) / 4, -1, (pi + 1) / 2],
        [1, -1, 0, 1],
        [1, 0, 0, 1],
    ];
    mats.iter()
        .map(|m| mat_label(&mat_from_signed(*m, p)))
        .collect()
}

/// Reindex a closed subset of g as a group in its own right. Labels carry
/// over; fails if the subset is not closed under multiplication.
pub fn subgroup(g: &Group, elements: &[usize]) -> Result<Group> {
    let k = elements.len();
    let mut local = vec![usize::MAX; g.order()];
    for (i, &x) in elements.iter().enumerate() {
        local[x] = i;
    }
    let mut table = vec![0u32; k * k];
    for (i, &x) in elements.iter().enumerate() {
        for (j, &y) in elements.iter().enumerate() {
            let z = local[g.mul(x, y)];
            if z == usize::MAX {
                return Err(Error::InvalidParameter(
                    "subgroup elements are not closed under multiplication".into(),
                ));
            }
            table[i * k + j] = z as u32;
        }
    }
    let labels = elements.iter().map(|&x| g.label(x).to_string()).collect();
    Group::from_table(table, labels, format!("subgroup[{k}] of {}", g.family()))
}

/// Elements commuting with everything, sorted.
pub fn center(g: &Group) -> Vec<usize> {
    (0..g.order())
        .filter(|&x| (0..g.order()).all(|y| g.mul(x, y) == g.mul(y, x)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> Group {
        Group::parse(s).unwrap()
    }

    #[test]
    fn element_order_in_z12() {
        let g = build("C:12");
        assert_eq!(g.element_order(4), 3);
        assert_eq!(g.element_order(g.identity()), 1);
        assert_eq!(g.element_order(1), 12);
        for x in 0..12 {
            assert_eq!(12 % g.element_order(x), 0);
        }
    }

    #[test]
    fn q8_has_unique_involution() {
        let g = build("Q:8");
        let t = ElementTable::new(&g);
        let involutions: Vec<usize> = (0..8).filter(|&x| t.order_of(x) == 2).collect();
        assert_eq!(involutions.len(), 1);
        assert_eq!(g.label(involutions[0]), "a^2");
    }

    #[test]
    fn prime_order_sets() {
        let g = build("C:4");
        let t = ElementTable::new(&g);
        assert_eq!(t.prime_order_set(), &[2]);

        let g = build("C:1");
        let t = ElementTable::new(&g);
        assert!(t.prime_order_set().is_empty());

        let g = build("C:2 x C:2 x C:2");
        let t = ElementTable::new(&g);
        assert_eq!(t.prime_order_set().len(), 7);
    }

    #[test]
    fn closure_examples() {
        let g = build("C:6");
        assert_eq!(g.closure(&[2]), vec![0, 2, 4]);
        assert_eq!(g.closure(&[]), vec![0]);

        let g = build("C:9");
        let t = ElementTable::new(&g);
        assert_eq!(t.prime_order_set(), &[3, 6]);
        assert_eq!(t.s_closure(), &[0, 3, 6]);
    }

    #[test]
    fn eppo_examples() {
        let g = build("S:4");
        let t = ElementTable::new(&g);
        assert!(is_eppo(&g, &t));

        let g = build("C:6");
        let t = ElementTable::new(&g);
        assert!(!is_eppo(&g, &t));

        let g = build("A:5");
        let t = ElementTable::new(&g);
        assert!(is_eppo(&g, &t));
    }

    #[test]
    fn exponents() {
        assert_eq!(ElementTable::new(&build("C:2 x C:2 x C:2 x C:2")).exponent(), 2);
        assert_eq!(ElementTable::new(&build("C:4 x C:2")).exponent(), 4);
        assert_eq!(ElementTable::new(&build("C:9")).exponent(), 9);
    }

    #[test]
    fn z8_and_d4_subgroup_tests() {
        let g = build("D:8");
        let t = ElementTable::new(&g);
        assert!(has_d4_subgroup(&g, &t));

        let g = build("Q:8");
        let t = ElementTable::new(&g);
        assert!(!has_d4_subgroup(&g, &t));
        assert!(!has_z8_subgroup(&t));

        let g = build("C:8");
        let t = ElementTable::new(&g);
        assert!(has_z8_subgroup(&t));

        let g = build("D:4");
        let t = ElementTable::new(&g);
        assert!(has_d4_subgroup(&g, &t));
    }

    #[test]
    fn s_product_condition_examples() {
        let g = build("C:9 x C:3");
        let t = ElementTable::new(&g);
        assert_eq!(s_product_condition(&g, &t), Ok(true));

        let g = build("C:5");
        let t = ElementTable::new(&g);
        assert_eq!(s_product_condition(&g, &t), Ok(true));

        // brute force cross-check on the dihedral 2-group of order 8
        let g = build("D:4");
        let t = ElementTable::new(&g);
        let s = t.prime_order_set();
        let mut expected = true;
        for &x in s {
            for &y in s {
                let o = t.order_of(g.mul(x, y));
                if o != 1 && o != 2 {
                    expected = false;
                }
            }
        }
        assert_eq!(s_product_condition(&g, &t), Ok(expected));

        let g = build("C:6");
        let t = ElementTable::new(&g);
        assert!(s_product_condition(&g, &t).is_err());
    }

    #[test]
    fn inverse_preserves_order() {
        for spec in ["D:6", "Q:16", "S:4", "SD:7:3:2"] {
            let g = build(spec);
            for x in 0..g.order() {
                assert_eq!(g.element_order(x), g.element_order(g.inverse_of(x)));
            }
        }
    }

    #[test]
    fn closure_is_idempotent() {
        let g = build("S:4");
        let t = ElementTable::new(&g);
        let c = t.s_closure().to_vec();
        assert_eq!(g.closure(&c), c);
    }

    #[test]
    fn sylow_subgroups() {
        let g = build("S:4");
        let syl2 = sylow_subgroup(&g, 2);
        assert_eq!(syl2.len(), 8);
        let syl3 = sylow_subgroup(&g, 3);
        assert_eq!(syl3.len(), 3);

        let g = build("C:12");
        assert_eq!(sylow_subgroup(&g, 2).len(), 4);
        assert_eq!(sylow_subgroup(&g, 3).len(), 3);
    }

    #[test]
    fn subgroup_restriction() {
        let g = build("S:4");
        let syl2 = sylow_subgroup(&g, 2);
        let h = subgroup(&g, &syl2).unwrap();
        assert_eq!(h.order(), 8);
        assert!(h.verify_axioms());
        // a Sylow 2-subgroup of S4 is dihedral of order 8
        let d4 = build("D:4");
        assert_eq!(h.order_histogram(), d4.order_histogram());

        // a non-closed subset is rejected
        assert!(subgroup(&g, &[0, 1, 2]).is_err());
    }

    #[test]
    fn orders_divide_exponent_and_group_order() {
        for spec in ["S:4", "Q:16", "D:12", "SD:9:3:4", "GD:(C:3 x C:3)", "PSL:2:5"] {
            let g = build(spec);
            let t = ElementTable::new(&g);
            assert_eq!(t.order_of(g.identity()), 1);
            for x in 0..g.order() {
                if x != g.identity() {
                    assert!(t.order_of(x) > 1);
                }
                assert_eq!(t.exponent() % t.order_of(x) as u64, 0, "{spec}");
                assert_eq!(g.order() % t.order_of(x), 0, "{spec}");
            }
            // the closure of S contains S and the identity and is closed
            // under multiplication and inverses
            let sc = t.s_closure();
            assert!(sc.binary_search(&g.identity()).is_ok());
            for &s in t.prime_order_set() {
                assert!(sc.binary_search(&s).is_ok());
            }
            for &x in sc {
                assert!(sc.binary_search(&g.inverse_of(x)).is_ok());
                for &y in sc {
                    assert!(sc.binary_search(&g.mul(x, y)).is_ok());
                }
            }
        }
    }

    #[test]
    fn nilpotency_and_center() {
        assert!(is_nilpotent(&build("C:12")));
        assert!(is_nilpotent(&build("Q:8 x C:9")));
        assert!(!is_nilpotent(&build("S:3")));
        assert!(!is_nilpotent(&build("SD:7:3:2")));

        assert_eq!(center(&build("S:3")).len(), 1);
        assert_eq!(center(&build("Q:8")).len(), 2);
        assert_eq!(center(&build("C:6")).len(), 6);
    }
}
