//! Reference implementations used as test oracles. They share no code with
//! the library: GF(3) is integers mod 3, GF(4) is polynomials over GF(2)
//! reduced mod x^2 + x + 1, and subspaces are explicit sets of vectors.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Vector = Vec<u8>;

pub fn add(q: u8, a: u8, b: u8) -> u8 {
    match q {
        2 | 4 => a ^ b,
        3 => (a + b) % 3,
        _ => unreachable!(),
    }
}

pub fn mul(q: u8, a: u8, b: u8) -> u8 {
    match q {
        2 => a & b,
        3 => (a * b) % 3,
        4 => {
            // carry-less product, then reduce x^2 -> x + 1
            let mut p = 0u8;
            for i in 0..2 {
                if b >> i & 1 == 1 {
                    p ^= a << i;
                }
            }
            if p & 4 != 0 {
                p ^= 0b111;
            }
            p
        }
        _ => unreachable!(),
    }
}

pub fn neg(q: u8, a: u8) -> u8 {
    (0..q).find(|&b| add(q, a, b) == 0).unwrap()
}

pub fn inv(q: u8, a: u8) -> Option<u8> {
    (0..q).find(|&b| mul(q, a, b) == 1)
}

/// Frobenius x -> x^2 on GF(4); identity elsewhere.
pub fn conj(q: u8, a: u8) -> u8 {
    if q == 4 {
        mul(q, a, a)
    } else {
        a
    }
}

pub fn dot(q: u8, hermitian: bool, x: &[u8], y: &[u8]) -> u8 {
    x.iter().zip(y).fold(0, |acc, (&a, &b)| {
        let b = if hermitian { conj(q, b) } else { b };
        add(q, acc, mul(q, a, b))
    })
}

pub fn weight(x: &[u8]) -> usize {
    x.iter().filter(|&&v| v != 0).count()
}

/// All q^n vectors in lexicographic order.
pub fn all_vectors(q: u8, n: usize) -> Vec<Vector> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..q).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

/// The set of all linear combinations of `rows`.
pub fn span(q: u8, n: usize, rows: &[Vector]) -> BTreeSet<Vector> {
    let mut set = BTreeSet::new();
    set.insert(vec![0; n]);
    for r in rows {
        let mut next = BTreeSet::new();
        for v in &set {
            for a in 0..q {
                let w: Vector = v
                    .iter()
                    .zip(r)
                    .map(|(&x, &y)| add(q, x, mul(q, a, y)))
                    .collect();
                next.insert(w);
            }
        }
        set = next;
    }
    set
}

/// Every k-dimensional subspace of GF(q)^n as an explicit vector set, grown
/// one dimension at a time by adjoining vectors outside the current space.
pub fn all_subspaces(q: u8, n: usize, k: usize) -> BTreeSet<BTreeSet<Vector>> {
    let vectors = all_vectors(q, n);
    let mut level: BTreeSet<BTreeSet<Vector>> = BTreeSet::new();
    level.insert(span(q, n, &[]));
    for _ in 0..k {
        let mut next = BTreeSet::new();
        for space in &level {
            let basis = basis_of(q, n, space);
            for v in vectors.iter().filter(|v| !space.contains(*v)) {
                let mut rows = basis.clone();
                rows.push(v.clone());
                next.insert(span(q, n, &rows));
            }
        }
        level = next;
    }
    level
}

/// Some basis of an explicit subspace, chosen greedily.
pub fn basis_of(q: u8, n: usize, space: &BTreeSet<Vector>) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    let mut covered = span(q, n, &basis);
    for v in space {
        if !covered.contains(v) {
            basis.push(v.clone());
            covered = span(q, n, &basis);
        }
    }
    basis
}

/// Dual of an explicit subspace.
pub fn dual_set(q: u8, n: usize, hermitian: bool, code: &BTreeSet<Vector>) -> BTreeSet<Vector> {
    all_vectors(q, n)
        .into_iter()
        .filter(|y| code.iter().all(|x| dot(q, hermitian, x, y) == 0))
        .collect()
}

/// Definitional LCD test: the code meets its dual only in zero.
pub fn is_lcd(q: u8, n: usize, hermitian: bool, code: &BTreeSet<Vector>) -> bool {
    dual_set(q, n, hermitian, code).intersection(code).count() == 1
}

pub fn min_weight(code: &BTreeSet<Vector>) -> Option<usize> {
    code.iter().map(|v| weight(v)).filter(|&w| w > 0).min()
}

/// Largest minimum weight over all LCD [n,k] codes, by the definitions alone.
pub fn brute_d(q: u8, n: usize, k: usize, hermitian: bool) -> Option<usize> {
    all_subspaces(q, n, k)
        .iter()
        .filter(|c| is_lcd(q, n, hermitian, c))
        .filter_map(min_weight)
        .max()
}

/// Largest weight of a vector x with <x,x> != 0: the best 1-dimensional LCD code.
pub fn one_dim_d(q: u8, n: usize, hermitian: bool) -> Option<usize> {
    all_vectors(q, n)
        .iter()
        .filter(|x| dot(q, hermitian, x, x) != 0)
        .map(|x| weight(x))
        .max()
}

/// Number of k-dim subspaces of GF(q)^n by the product formula, in u128.
pub fn gaussian_binomial(q: u128, n: u32, k: u32) -> u128 {
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(k - i) - 1;
    }
    num / den
}
