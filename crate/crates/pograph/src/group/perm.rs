//! Permutation words on n points, used by the symmetric and alternating
//! group constructors. A permutation is stored one-line as `word[i] = image
//! of point i` with 0-based points internally and 1-based cycle labels.

pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

/// Function composition: apply `b` first, then `a`.
pub fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&i| a[i as usize]).collect()
}

pub fn is_even(a: &Perm) -> bool {
    let mut seen = vec![false; a.len()];
    let mut transpositions = 0;
    for start in 0..a.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = a[v] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

/// Cycle notation with 1-based points, fixed points omitted, e.g.
/// "(1 2 3)" or "(1 2)(3 4)". The identity renders as "e".
pub fn cycle_notation(a: &Perm) -> String {
    let mut seen = vec![false; a.len()];
    let mut out = String::new();
    for start in 0..a.len() {
        if seen[start] || a[start] as usize == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut v = start;
        let mut first = true;
        while !seen[v] {
            seen[v] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(v + 1).to_string());
            first = false;
            v = a[v] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// All permutations of n points in lexicographic order of their words.
pub fn enumerate(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = identity(n);
    loop {
        out.push(cur.clone());
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

fn next_permutation(a: &mut Perm) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
