//! Constructors for the supported group families. Each family produces a
//! full multiplication table plus human-readable element labels; identity
//! and inverses are recovered generically from the table.

use std::collections::{BTreeSet, HashMap};

use super::matrix::{det, mat_label, mat_mul, psl_canonical, Mat2};
use super::perm;
use super::spec::GroupExpr;
use super::Group;
use crate::error::{Error, Result};
use crate::numutil::{gcd, is_prime, pow_mod};

type Raw = (Vec<u32>, Vec<String>);

pub(crate) fn build_expr(expr: &GroupExpr, cap: usize) -> Result<Group> {
    let order = validated_order(expr)?;
    if order > cap as u64 {
        return Err(Error::OrderCap { order, cap });
    }
    let (table, labels) = construct(expr, cap)?;
    Group::from_table(table, labels, expr.to_string())
}

fn overflow() -> Error {
    Error::InvalidParameter("group order overflows".into())
}

fn factorial(n: u32) -> Result<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k).ok_or_else(overflow))
}

/// Validate constructor parameters and return the group order.
pub(crate) fn validated_order(expr: &GroupExpr) -> Result<u64> {
    match expr {
        GroupExpr::Cyclic(n) => {
            if *n == 0 {
                return Err(Error::InvalidParameter("C requires n >= 1".into()));
            }
            Ok(*n)
        }
        GroupExpr::Dihedral(n) => {
            if *n == 0 {
                return Err(Error::InvalidParameter("D requires n >= 1".into()));
            }
            n.checked_mul(2).ok_or_else(overflow)
        }
        GroupExpr::Quaternion(q) => {
            if *q < 8 || !q.is_power_of_two() {
                return Err(Error::InvalidParameter(format!(
                    "Q requires order 2^k with k >= 3, got {q}"
                )));
            }
            Ok(*q)
        }
        GroupExpr::Symmetric(n) => factorial(*n),
        GroupExpr::Alternating(n) => Ok(std::cmp::max(1, factorial(*n)? / 2)),
        GroupExpr::GeneralLinear(p) => {
            require_prime(*p, "GL")?;
            let p2 = p * p;
            (p2 - 1).checked_mul(p2 - p).ok_or_else(overflow)
        }
        GroupExpr::SpecialLinear(p) => {
            require_prime(*p, "SL")?;
            p.checked_mul(p * p - 1).ok_or_else(overflow)
        }
        GroupExpr::ProjectiveSpecialLinear(p) => {
            require_prime(*p, "PSL")?;
            if *p == 2 {
                Ok(6)
            } else {
                Ok(p.checked_mul(p * p - 1).ok_or_else(overflow)? / 2)
            }
        }
        GroupExpr::Semidirect { n, m, k } => {
            if *n == 0 || *m == 0 {
                return Err(Error::InvalidParameter("SD requires n, m >= 1".into()));
            }
            if *n > 1 {
                let k = k % n;
                if gcd(k, *n) != 1 {
                    return Err(Error::InvalidParameter(format!(
                        "SD:{n}:{m}:{k}: k must be a unit mod n"
                    )));
                }
                if pow_mod(k, *m, *n) != 1 {
                    return Err(Error::InvalidParameter(format!(
                        "SD:{n}:{m}:{k}: k^m must be 1 mod n"
                    )));
                }
            }
            n.checked_mul(*m).ok_or_else(overflow)
        }
        GroupExpr::GeneralizedDihedral(inner) => {
            validated_order(inner)?.checked_mul(2).ok_or_else(overflow)
        }
        GroupExpr::SemidirectMatrix { inner, m, matrix } => {
            if *m == 0 {
                return Err(Error::InvalidParameter("SDM requires m >= 1".into()));
            }
            let moduli = cyclic_moduli(inner)?;
            if matrix.len() != moduli.len() || matrix.iter().any(|r| r.len() != moduli.len()) {
                return Err(Error::InvalidParameter(format!(
                    "SDM matrix must be {r} x {r} to act on {r} cyclic generators",
                    r = moduli.len()
                )));
            }
            let inner_order = validated_order(inner)?;
            inner_order.checked_mul(*m).ok_or_else(overflow)
        }
        GroupExpr::Product(parts) => parts.iter().try_fold(1u64, |acc, p| {
            acc.checked_mul(validated_order(p)?).ok_or_else(overflow)
        }),
    }
}

fn require_prime(p: u64, who: &str) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!(
            "{who} requires a prime field order, got {p}"
        )));
    }
    Ok(())
}

fn cyclic_moduli(expr: &GroupExpr) -> Result<Vec<u64>> {
    let parts: Vec<&GroupExpr> = match expr {
        GroupExpr::Product(ps) => ps.iter().collect(),
        single => vec![single],
    };
    parts
        .into_iter()
        .map(|p| match p {
            GroupExpr::Cyclic(n) if *n >= 1 => Ok(*n),
            _ => Err(Error::InvalidParameter(
                "SDM inner group must be a product of cyclic groups".into(),
            )),
        })
        .collect()
}

fn construct(expr: &GroupExpr, cap: usize) -> Result<Raw> {
    match expr {
        GroupExpr::Cyclic(n) => Ok(cyclic(*n as usize)),
        GroupExpr::Dihedral(n) => Ok(dihedral(*n as usize)),
        GroupExpr::Quaternion(q) => Ok(quaternion(*q as usize)),
        GroupExpr::Symmetric(n) => Ok(permutations(*n as usize, false)),
        GroupExpr::Alternating(n) => Ok(permutations(*n as usize, true)),
        GroupExpr::GeneralLinear(p) => Ok(matrix_group(*p, MatKind::General)),
        GroupExpr::SpecialLinear(p) => Ok(matrix_group(*p, MatKind::Special)),
        GroupExpr::ProjectiveSpecialLinear(p) => {
            if *p == 2 {
                Ok(matrix_group(2, MatKind::Special))
            } else {
                Ok(matrix_group(*p, MatKind::Projective))
            }
        }
        GroupExpr::Semidirect { n, m, k } => Ok(semidirect(*n, *m, *k)),
        GroupExpr::GeneralizedDihedral(inner) => {
            let h = build_expr(inner, cap)?;
            if !h.is_abelian() {
                return Err(Error::InvalidParameter(format!(
                    "GD inner group {} is not abelian",
                    h.family()
                )));
            }
            Ok(generalized_dihedral(&h))
        }
        GroupExpr::SemidirectMatrix { inner, m, matrix } => {
            sdm(&cyclic_moduli(inner)?, *m, matrix)
        }
        GroupExpr::Product(parts) => {
            let gs: Vec<Group> = parts
                .iter()
                .map(|p| build_expr(p, cap))
                .collect::<Result<_>>()?;
            Ok(direct_product(&gs))
        }
    }
}

fn cyclic(n: usize) -> Raw {
    let mut table = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = ((i + j) % n) as u32;
        }
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    (table, labels)
}

fn pow_label(sym: &str, e: usize) -> String {
    match e {
        1 => sym.to_string(),
        _ => format!("{sym}^{e}"),
    }
}

fn rotation_label(i: usize) -> String {
    if i == 0 {
        "e".to_string()
    } else {
        pow_label("a", i)
    }
}

fn reflection_label(i: usize) -> String {
    if i == 0 {
        "b".to_string()
    } else {
        format!("{}·b", pow_label("a", i))
    }
}

/// a^i for i < n, a^i·b for indices n..2n. b a = a^-1 b.
fn dihedral(n: usize) -> Raw {
    let order = 2 * n;
    let mut table = vec![0u32; order * order];
    for x in 0..order {
        let (i1, t1) = (x % n, x / n);
        for y in 0..order {
            let (i2, t2) = (y % n, y / n);
            let i = if t1 == 0 { (i1 + i2) % n } else { (i1 + n - i2) % n };
            let t = t1 ^ t2;
            table[x * order + y] = (t * n + i) as u32;
        }
    }
    let labels = (0..n)
        .map(rotation_label)
        .chain((0..n).map(reflection_label))
        .collect();
    (table, labels)
}

/// Generalized quaternion of order q = 2m: a of order m, b^2 = a^(m/2),
/// b a = a^-1 b. Same index layout as the dihedral constructor.
fn quaternion(q: usize) -> Raw {
    let m = q / 2;
    let mut table = vec![0u32; q * q];
    for x in 0..q {
        let (i1, t1) = (x % m, x / m);
        for y in 0..q {
            let (i2, t2) = (y % m, y / m);
            let mut i = if t1 == 0 { (i1 + i2) % m } else { (i1 + m - i2) % m };
            if t1 == 1 && t2 == 1 {
                i = (i + m / 2) % m;
            }
            let t = t1 ^ t2;
            table[x * q + y] = (t * m + i) as u32;
        }
    }
    let labels = (0..m)
        .map(rotation_label)
        .chain((0..m).map(reflection_label))
        .collect();
    (table, labels)
}

fn permutations(n: usize, even_only: bool) -> Raw {
    let elems: Vec<perm::Perm> = perm::enumerate(n)
        .into_iter()
        .filter(|p| !even_only || perm::is_even(p))
        .collect();
    let index: HashMap<&perm::Perm, u32> = elems
        .iter()
        .enumerate()
        .map(|(i, p)| (p, i as u32))
        .collect();
    let order = elems.len();
    let mut table = vec![0u32; order * order];
    for (x, px) in elems.iter().enumerate() {
        for (y, py) in elems.iter().enumerate() {
            table[x * order + y] = index[&perm::compose(px, py)];
        }
    }
    let labels = elems.iter().map(perm::cycle_notation).collect();
    (table, labels)
}

enum MatKind {
    General,
    Special,
    Projective,
}

fn matrix_group(p: u64, kind: MatKind) -> Raw {
    let mut elems: Vec<Mat2> = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = [a, b, c, d];
                    let keep = match kind {
                        MatKind::General => det(&m, p) != 0,
                        MatKind::Special => det(&m, p) == 1,
                        MatKind::Projective => det(&m, p) == 1,
                    };
                    if keep {
                        elems.push(m);
                    }
                }
            }
        }
    }
    let projective = matches!(kind, MatKind::Projective);
    if projective {
        let reps: BTreeSet<Mat2> = elems.iter().map(|m| psl_canonical(m, p)).collect();
        elems = reps.into_iter().collect();
    }
    let index: HashMap<Mat2, u32> = elems
        .iter()
        .enumerate()
        .map(|(i, m)| (*m, i as u32))
        .collect();
    let order = elems.len();
    let mut table = vec![0u32; order * order];
    for (x, mx) in elems.iter().enumerate() {
        for (y, my) in elems.iter().enumerate() {
            let mut prod = mat_mul(mx, my, p);
            if projective {
                prod = psl_canonical(&prod, p);
            }
            table[x * order + y] = index[&prod];
        }
    }
    let labels = elems.iter().map(mat_label).collect();
    (table, labels)
}

/// Z_n rtimes Z_m, generator y acting by x -> x^k. Element x^i y^j has
/// index i*m + j; (x^i1 y^j1)(x^i2 y^j2) = x^(i1 + i2 k^j1) y^(j1+j2).
fn semidirect(n: u64, m: u64, k: u64) -> Raw {
    let k = if n > 1 { k % n } else { 0 };
    let kpow: Vec<u64> = (0..m)
        .scan(1u64, |acc, _| {
            let cur = *acc;
            *acc = if n > 1 { *acc * k % n } else { 0 };
            Some(cur)
        })
        .collect();
    let (n_us, m_us) = (n as usize, m as usize);
    let order = n_us * m_us;
    let mut table = vec![0u32; order * order];
    for x in 0..order {
        let (i1, j1) = ((x / m_us) as u64, (x % m_us) as u64);
        for y in 0..order {
            let (i2, j2) = ((y / m_us) as u64, (y % m_us) as u64);
            let i = (i1 + i2 * kpow[j1 as usize]) % n;
            let j = (j1 + j2) % m;
            table[x * order + y] = (i as usize * m_us + j as usize) as u32;
        }
    }
    let labels = (0..order)
        .map(|x| {
            let (i, j) = (x / m_us, x % m_us);
            let mut parts = Vec::new();
            if i > 0 {
                parts.push(pow_label("x", i));
            }
            if j > 0 {
                parts.push(pow_label("y", j));
            }
            if parts.is_empty() {
                "e".to_string()
            } else {
                parts.join("·")
            }
        })
        .collect();
    (table, labels)
}

/// H rtimes Z_2 with the involution acting by inversion; H abelian.
fn generalized_dihedral(h: &Group) -> Raw {
    let hn = h.order();
    let order = 2 * hn;
    let mut table = vec![0u32; order * order];
    for x in 0..order {
        let (h1, t1) = (x % hn, x / hn);
        for y in 0..order {
            let (h2, t2) = (y % hn, y / hn);
            let h2 = if t1 == 1 { h.inverse_of(h2) } else { h2 };
            let t = t1 ^ t2;
            table[x * order + y] = (t * hn + h.mul(h1, h2)) as u32;
        }
    }
    let labels = (0..hn)
        .map(|i| h.label(i).to_string())
        .chain((0..hn).map(|i| format!("{}·b", h.label(i))))
        .collect();
    (table, labels)
}

/// Product of cyclic groups extended by Z_m = <t>, with t acting through
/// the integer matrix: (M v)_i = sum_j M[i][j] v_j mod n_i.
fn sdm(moduli: &[u64], m: u64, matrix: &[Vec<i64>]) -> Result<Raw> {
    let r = moduli.len();
    let mut reduced = vec![vec![0u64; r]; r];
    for i in 0..r {
        for j in 0..r {
            reduced[i][j] = matrix[i][j].rem_euclid(moduli[i] as i64) as u64;
            // the action must not depend on the chosen representative of v_j
            if !(reduced[i][j] * moduli[j]).is_multiple_of(moduli[i]) {
                return Err(Error::InvalidParameter(format!(
                    "SDM matrix entry ({i},{j}) does not define a map on Z_{} -> Z_{}",
                    moduli[j], moduli[i]
                )));
            }
        }
    }
    let a_order: usize = moduli.iter().map(|&n| n as usize).product();
    let mut stride = vec![1usize; r];
    for i in (0..r.saturating_sub(1)).rev() {
        stride[i] = stride[i + 1] * moduli[i + 1] as usize;
    }
    let decode = |idx: usize| -> Vec<u64> {
        (0..r).map(|i| (idx / stride[i] % moduli[i] as usize) as u64).collect()
    };
    let encode = |v: &[u64]| -> usize {
        v.iter()
            .zip(&stride)
            .map(|(&c, &s)| c as usize * s)
            .sum()
    };
    // the action as a permutation of A
    let mut pi = vec![0u32; a_order];
    for (idx, slot) in pi.iter_mut().enumerate() {
        let v = decode(idx);
        let mut w = vec![0u64; r];
        for i in 0..r {
            let mut acc = 0u64;
            for j in 0..r {
                acc = (acc + reduced[i][j] * v[j]) % moduli[i];
            }
            w[i] = acc;
        }
        *slot = encode(&w) as u32;
    }
    let mut seen = vec![false; a_order];
    for &img in &pi {
        if std::mem::replace(&mut seen[img as usize], true) {
            return Err(Error::InvalidParameter(
                "SDM matrix is not invertible on the inner group".into(),
            ));
        }
    }
    // powers of the action; the m-th power must be the identity
    let mut pi_pow: Vec<Vec<u32>> = vec![(0..a_order as u32).collect()];
    for j in 1..m as usize {
        let prev = &pi_pow[j - 1];
        pi_pow.push((0..a_order).map(|i| prev[pi[i] as usize]).collect());
    }
    let last: Vec<u32> = (0..a_order).map(|i| pi_pow[m as usize - 1][pi[i] as usize]).collect();
    if last.iter().enumerate().any(|(i, &img)| img as usize != i) {
        return Err(Error::InvalidParameter(
            "SDM matrix order does not divide m".into(),
        ));
    }

    let m_us = m as usize;
    let order = a_order * m_us;
    let mut table = vec![0u32; order * order];
    for x in 0..order {
        let (v1, j1) = (x / m_us, x % m_us);
        let d1 = decode(v1);
        for y in 0..order {
            let (v2, j2) = (y / m_us, y % m_us);
            let moved = pi_pow[j1][v2] as usize;
            let d2 = decode(moved);
            let sum: Vec<u64> = d1
                .iter()
                .zip(&d2)
                .zip(moduli)
                .map(|((&a, &b), &n)| (a + b) % n)
                .collect();
            table[x * order + y] = (encode(&sum) * m_us + (j1 + j2) % m_us) as u32;
        }
    }
    let labels = (0..order)
        .map(|x| {
            let (v, j) = (x / m_us, x % m_us);
            let d = decode(v);
            let vec_label = if r == 1 {
                d[0].to_string()
            } else {
                format!(
                    "({})",
                    d.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
                )
            };
            let zero = d.iter().all(|&c| c == 0);
            match (zero, j) {
                (true, 0) => "e".to_string(),
                (true, _) => pow_label("t", j),
                (false, 0) => vec_label,
                (false, _) => format!("{vec_label}·{}", pow_label("t", j)),
            }
        })
        .collect();
    Ok((table, labels))
}

fn direct_product(parts: &[Group]) -> Raw {
    let r = parts.len();
    let n: usize = parts.iter().map(Group::order).product();
    let mut stride = vec![1usize; r];
    for i in (0..r - 1).rev() {
        stride[i] = stride[i + 1] * parts[i + 1].order();
    }
    let decode = |idx: usize| -> Vec<usize> {
        (0..r).map(|i| idx / stride[i] % parts[i].order()).collect()
    };
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let dx = decode(x);
        for y in 0..n {
            let dy = decode(y);
            let idx: usize = (0..r)
                .map(|i| parts[i].mul(dx[i], dy[i]) * stride[i])
                .sum();
            table[x * n + y] = idx as u32;
        }
    }
    let labels = (0..n)
        .map(|x| {
            let d = decode(x);
            format!(
                "({})",
                d.iter()
                    .enumerate()
                    .map(|(i, &c)| parts[i].label(c))
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    (table, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{ElementTable, GroupSpec};

    fn build(s: &str) -> Group {
        Group::parse(s).unwrap()
    }

    #[test]
    fn orders_of_named_families() {
        assert_eq!(build("C:1").order(), 1);
        assert_eq!(build("S:4").order(), 24);
        assert_eq!(build("A:5").order(), 60);
        assert_eq!(build("D:4").order(), 8);
        assert_eq!(build("Q:16").order(), 16);
        assert_eq!(build("GL:2:3").order(), 48);
        assert_eq!(build("SL:2:5").order(), 120);
        assert_eq!(build("PSL:2:5").order(), 60);
        assert_eq!(build("PSL:2:7").order(), 168);
        assert_eq!(build("SD:7:3:2").order(), 21);
        assert_eq!(build("GD:(C:3 x C:3)").order(), 18);
        assert_eq!(build("C:2 x SD:7:3:2").order(), 42);
    }

    #[test]
    fn axioms_hold_for_every_family() {
        for s in [
            "C:1",
            "C:24",
            "D:7",
            "Q:32",
            "S:4",
            "A:4",
            "GL:2:3",
            "SL:2:3",
            "PSL:2:5",
            "SD:9:3:4",
            "GD:(C:5 x C:5)",
            "SDM:(C:3 x C:3):3:[[1,1],[0,1]]",
            "C:2 x C:3 x C:4",
        ] {
            let g = build(s);
            assert!(g.verify_axioms(), "axioms fail for {s}");
            let mut labels: Vec<&str> = (0..g.order()).map(|i| g.label(i)).collect();
            labels.sort();
            labels.dedup();
            assert_eq!(labels.len(), g.order(), "duplicate labels in {s}");
        }
    }

    #[test]
    fn d4_matches_its_presentation() {
        let g = build("D:4");
        let a = 1;
        let b = 4;
        assert_eq!(g.element_order(a), 4);
        assert_eq!(g.element_order(b), 2);
        // ba = a^-1 b = a^3 b
        assert_eq!(g.mul(b, a), 7);
        assert_eq!(g.label(7), "a^3·b");
    }

    #[test]
    fn dihedral_reflections_are_involutions() {
        for n in [1usize, 2, 3, 4, 9, 12] {
            let g = build(&format!("D:{n}"));
            let outside: Vec<usize> = (n..2 * n).collect();
            assert!(outside.iter().all(|&x| g.mul(x, x) == g.identity()));
            // rotation subgroup involution count: 1 extra if n even
            let rot_invol = (0..n).filter(|&x| x != 0 && g.mul(x, x) == 0).count();
            assert_eq!(rot_invol, usize::from(n % 2 == 0 && n > 1));
        }
    }

    #[test]
    fn quaternion_powers() {
        let g = build("Q:8");
        // b^2 = a^2, the unique involution
        let b = 4;
        assert_eq!(g.mul(b, b), 2);
        assert_eq!(g.element_order(b), 4);
        for q in [8usize, 16, 32] {
            let g = build(&format!("Q:{q}"));
            let inv: Vec<usize> = (0..q).filter(|&x| g.element_order(x) == 2).collect();
            assert_eq!(inv.len(), 1, "Q:{q} must have a unique involution");
        }
    }

    #[test]
    fn psl_2_5_has_the_a5_order_histogram() {
        let psl = build("PSL:2:5");
        let a5 = build("A:5");
        assert_eq!(psl.order_histogram(), a5.order_histogram());
    }

    #[test]
    fn psl_matches_explicit_coset_quotient() {
        // independent route: build SL(2,p), form {M,-M} cosets explicitly
        // and compute coset orders by repeated coset multiplication.
        for p in [3u64, 5] {
            let sl = build(&format!("SL:2:{p}"));
            let half = sl.order() / 2;
            let minus_of = |x: usize| -> usize {
                // -M has label entries p - e; recover via multiplying by -I
                let neg_i = (0..sl.order())
                    .find(|&z| {
                        sl.mul(z, z) == sl.identity()
                            && z != sl.identity()
                            && (0..sl.order()).all(|w| sl.mul(z, w) == sl.mul(w, z))
                    })
                    .unwrap();
                sl.mul(neg_i, x)
            };
            let mut seen = vec![false; sl.order()];
            let mut coset_orders = Vec::with_capacity(half);
            for x in 0..sl.order() {
                if seen[x] {
                    continue;
                }
                seen[x] = true;
                seen[minus_of(x)] = true;
                // order of the coset {x,-x} in the quotient
                let mut k = 1;
                let mut acc = x;
                while acc != sl.identity() && acc != minus_of(sl.identity()) {
                    acc = sl.mul(acc, x);
                    k += 1;
                }
                coset_orders.push(k);
            }
            coset_orders.sort_unstable();
            let psl = build(&format!("PSL:2:{p}"));
            let mut psl_orders: Vec<usize> =
                (0..psl.order()).map(|x| psl.element_order(x)).collect();
            psl_orders.sort_unstable();
            assert_eq!(coset_orders, psl_orders, "coset quotient mismatch at p={p}");
        }
    }

    #[test]
    fn semidirect_action() {
        // y x y^-1 = x^2 in SD:7:3:2
        let g = build("SD:7:3:2");
        let x = 3; // x^1 y^0
        let y = 1; // x^0 y^1
        let conj = g.mul(g.mul(y, x), g.inverse_of(y));
        assert_eq!(conj, 2 * 3); // x^2
        assert!(!g.is_abelian());
        // SD with k=1 degenerates to the direct product
        let h = build("SD:5:2:1");
        assert!(h.is_abelian());
    }

    #[test]
    fn generalized_dihedral_of_klein_group_is_abelian() {
        assert!(build("GD:(C:2 x C:2)").is_abelian());
        assert!(!build("GD:(C:3 x C:3)").is_abelian());
        // the GD of a cyclic group is plain dihedral
        let gd = build("GD:(C:5)");
        let d5 = build("D:5");
        assert_eq!(gd.order_histogram(), d5.order_histogram());
    }

    #[test]
    fn sdm_validations() {
        // order-3 automorphism of Z_3 x Z_3 (Heisenberg-like extension)
        let g = build("SDM:(C:3 x C:3):3:[[1,1],[0,1]]");
        assert_eq!(g.order(), 27);
        assert_eq!(ElementTable::new(&g).exponent(), 3);

        // the companion of x^2+x+1 has order 3 on Z_4 x Z_4
        let g = build("SDM:(C:4 x C:4):3:[[0,-1],[1,-1]]");
        assert_eq!(g.order(), 48);
        assert!(g.verify_axioms());

        // not an automorphism: doubling kills Z_4
        assert!(Group::parse("SDM:(C:4):2:[[2]]").is_err());
        // order does not divide m
        assert!(Group::parse("SDM:(C:4 x C:4):2:[[0,-1],[1,-1]]").is_err());
        // ill-typed action Z_2 -> Z_4
        assert!(Group::parse("SDM:(C:4 x C:2):2:[[1,1],[0,1]]").is_err());
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(Group::parse("Q:12").is_err());
        assert!(Group::parse("Q:4").is_err());
        assert!(Group::parse("GL:2:4").is_err());
        assert!(Group::parse("PSL:2:9").is_err());
        assert!(Group::parse("SD:8:2:3").is_ok()); // 3^2 = 9 = 1 mod 8
        assert!(Group::parse("SD:8:2:2").is_err()); // not a unit
        assert!(Group::parse("SD:7:3:3").is_err()); // 3^3 = 6 != 1 mod 7
        assert!(Group::parse("GD:(D:3)").is_err()); // inner not abelian
        assert!(Group::parse("C:0").is_err());
    }

    #[test]
    fn order_cap_is_enforced() {
        let spec: GroupSpec = "C:70 x C:70".parse().unwrap();
        match Group::build_with_cap(&spec, 4096) {
            Err(Error::OrderCap { order: 4900, cap: 4096 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(Group::parse("S:7").is_err()); // 5040 > 4096
    }

    #[test]
    fn product_labels_are_tuples() {
        let g = build("C:2 x C:3");
        assert_eq!(g.label(0), "(0,0)");
        assert_eq!(g.label(5), "(1,2)");
        let g = build("C:3 x D:3");
        assert_eq!(g.label(g.identity()), "(0,e)");
    }
}
