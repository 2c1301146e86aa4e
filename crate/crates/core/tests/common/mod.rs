#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use num_traits::{One, Zero};
use qflag::poly::{Monomial, Poly};
use qflag::ring::RawClass;
use qflag::schur::monomial_expansion;
use qflag::{Partition, QuantumClass, Quiver, Rational};

pub const CORPUS: &[&str] = &[
    "gr42", "gr52", "fl421", "fl531", "sinks", "p3", "ex3", "ex2", "gr63", "fl4321", "toric",
];

pub fn quiver_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("quivers")
        .join(format!("{name}.quiver"))
}

pub fn load(name: &str) -> Quiver {
    qflag::cli::read_quiver(&quiver_path(name)).unwrap()
}

pub fn corpus() -> Vec<(&'static str, Quiver)> {
    CORPUS.iter().map(|&n| (n, load(n))).collect()
}

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses an expression and reduces it in the quantum ring.
pub fn class(ring: &qflag::QuantumRing, src: &str) -> QuantumClass {
    let raw = qflag::expr::parse(src).unwrap().to_raw(ring.quiver()).unwrap();
    ring.reduce(&raw).unwrap()
}

/// Expression without any reduction.
pub fn raw(quiver: &Quiver, src: &str) -> RawClass {
    qflag::expr::parse(src).unwrap().to_raw(quiver).unwrap()
}

/// Schur expansion of a symmetric polynomial in `r` variables, found by
/// peeling off the lexicographically largest monomial.
pub fn schur_decompose(poly: &Poly, r: usize) -> BTreeMap<Partition, Rational> {
    let mut rest = poly.clone();
    let mut out = BTreeMap::new();
    while let Some((m, c)) = rest.terms().last().map(|(m, c)| (m.clone(), c.clone())) {
        let parts: Vec<u32> = m.exponents().iter().map(|&e| e as u32).collect();
        let lambda = Partition::new(parts).expect("leading exponent of a symmetric polynomial");
        rest = &rest - &monomial_expansion(&lambda, r).scale(&c);
        out.insert(lambda, c);
    }
    out
}

/// `det(x_i^{e_j})` over `r` variables.
pub fn alternant(exps: &[u16]) -> Poly {
    let r = exps.len();
    let mut out = Poly::zero(r);
    let mut perm: Vec<usize> = (0..r).collect();
    permutations(&mut perm, 0, &mut |perm, sign| {
        let mut e = vec![0u16; r];
        for (i, &j) in perm.iter().enumerate() {
            e[i] = exps[j];
        }
        out.add_term(Monomial::from_exponents(e), int(sign));
    });
    out
}

fn permutations(perm: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize], i64)) {
    if k == perm.len() {
        let mut sign = 1;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    sign = -sign;
                }
            }
        }
        f(perm, sign);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permutations(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Coordinates of a class against an index of `(q, tuple)` keys.
pub fn coordinates(
    raw: &RawClass,
    index: &BTreeMap<(qflag::QMonomial, qflag::SchurTuple), usize>,
    width: usize,
) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); width];
    for (k, c) in raw {
        row[index[k]] = c.clone();
    }
    row
}

pub fn is_one(c: &Rational) -> bool {
    c.is_one()
}
