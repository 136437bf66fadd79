//! 2x2 matrices over F_p for the linear group constructors.

/// Row-major entries (a, b; c, d), always reduced mod p.
pub type Mat2 = [u64; 4];

pub fn mat_mul(x: &Mat2, y: &Mat2, p: u64) -> Mat2 {
    [
        (x[0] * y[0] + x[1] * y[2]) % p,
        (x[0] * y[1] + x[1] * y[3]) % p,
        (x[2] * y[0] + x[3] * y[2]) % p,
        (x[2] * y[1] + x[3] * y[3]) % p,
    ]
}

pub fn det(m: &Mat2, p: u64) -> u64 {
    // entries are reduced, so b*c < p^2; add p^2 to keep the difference non-negative
    (m[0] * m[3] + p * p - m[1] * m[2]) % p
}

pub fn mat_neg(m: &Mat2, p: u64) -> Mat2 {
    [(p - m[0]) % p, (p - m[1]) % p, (p - m[2]) % p, (p - m[3]) % p]
}

/// Reduce signed entries mod p into a `Mat2`.
pub fn mat_from_signed(entries: [i64; 4], p: u64) -> Mat2 {
    let p_i = p as i64;
    let mut out = [0u64; 4];
    for (o, &e) in out.iter_mut().zip(entries.iter()) {
        *o = e.rem_euclid(p_i) as u64;
    }
    out
}

/// Canonical representative of {M, -M}: the one whose first nonzero entry
/// (row-major) lies in 1..=(p-1)/2. Requires odd p.
pub fn psl_canonical(m: &Mat2, p: u64) -> Mat2 {
    let half = (p - 1) / 2;
    for &e in m.iter() {
        if e != 0 {
            return if e <= half { *m } else { mat_neg(m, p) };
        }
    }
    *m
}

pub fn mat_label(m: &Mat2) -> String {
    format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3])
}
