//! Schur polynomials in a fixed number of variables.
//!
//! A [`SchurCombination`] is an integer combination of Schur polynomials
//! `s_λ(x_1..x_r)`. Partitions longer than `r` give the zero polynomial and are
//! dropped on insertion, so every stored combination is canonical.
//!
//! Products use the Jacobi-Trudi expansion `s_μ = det(h_{μ_i - i + j})`
//! applied through horizontal Pieri steps; the memo table is shared
//! behind a mutex.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{Monomial, Poly};
use crate::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct SchurCombination {
    nvars: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurCombination {
    pub fn zero(nvars: usize) -> Self {
        SchurCombination {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// `s_λ`, or zero if `λ` has more than `nvars` rows.
    pub fn single(nvars: usize, lambda: Partition) -> Self {
        let mut c = Self::zero(nvars);
        c.add_term(lambda, BigInt::one());
        c
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if lambda.len() > self.nvars || c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SchurCombination, scale: &BigInt) {
        for (lambda, c) in &other.terms {
            self.add_term(lambda.clone(), c * scale);
        }
    }

    /// Expands into monomials in `x_1..x_r`.
    pub fn to_poly(&self) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (lambda, c) in &self.terms {
            out.add_assign_scaled(&monomial_expansion(lambda, self.nvars), &Rational::from(c.clone()));
        }
        out
    }
}

impl fmt::Debug for SchurCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (lambda, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*s{lambda}")?;
        }
        Ok(())
    }
}

fn check_length(lambda: &Partition, r: usize) -> Result<()> {
    if lambda.len() > r {
        Err(Error::TooLong {
            partition: lambda.to_string(),
            rows: r,
        })
    } else {
        Ok(())
    }
}

/// `e_k * s_λ` in `r` variables: add a vertical strip of `k` boxes.
pub fn pieri_vertical(lambda: &Partition, k: usize, r: usize) -> Result<SchurCombination> {
    if k > r {
        return Err(Error::InvalidArgument(format!(
            "e_{k} is not defined in {r} variables"
        )));
    }
    check_length(lambda, r)?;
    let mut out = SchurCombination::zero(r);
    let rows = r.min(lambda.len() + k);
    let base: Vec<u32> = (0..rows).map(|i| lambda.part(i)).collect();
    for_each_subset(rows, k, &mut |chosen| {
        let mut parts = base.clone();
        for &i in chosen {
            parts[i] += 1;
        }
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            out.add_term(Partition::from_unsorted(parts), BigInt::one());
        }
    });
    Ok(out)
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// `h_k * s_λ` in `r` variables: add a horizontal strip of `k` boxes.
fn pieri_horizontal(lambda: &Partition, k: u32, r: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let rows = r.min(lambda.len() + 1);
    let mut parts = vec![0u32; rows];
    fn rec(i: usize, left: u32, lambda: &Partition, parts: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == parts.len() {
            if left == 0 {
                out.push(Partition::from_unsorted(parts.clone()));
            }
            return;
        }
        let base = lambda.part(i);
        let cap = if i == 0 { left } else { (lambda.part(i - 1) - base).min(left) };
        for add in 0..=cap {
            parts[i] = base + add;
            rec(i + 1, left - add, lambda, parts, out);
        }
    }
    rec(0, k, lambda, &mut parts, &mut out);
    out
}

type LrKey = (Partition, Partition, usize);

fn lr_cache() -> &'static Mutex<HashMap<LrKey, SchurCombination>> {
    static CACHE: OnceLock<Mutex<HashMap<LrKey, SchurCombination>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `s_λ * s_μ` in `r` variables (Littlewood-Richardson), truncated to length `<= r`.
pub fn lr_multiply(lambda: &Partition, mu: &Partition, r: usize) -> Result<SchurCombination> {
    check_length(lambda, r)?;
    check_length(mu, r)?;
    // the larger factor stays as the seed, the smaller one is expanded
    let (seed, expanded) = if lambda.len() >= mu.len() { (lambda, mu) } else { (mu, lambda) };
    let key = (seed.clone(), expanded.clone(), r);
    if let Some(hit) = lr_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }

    let n = expanded.len();
    let mut out = SchurCombination::zero(r);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign_cache = Vec::new();
    permutations(&mut perm, 0, &mut sign_cache);
    for (perm, sign) in sign_cache {
        // h_{μ_i - i + σ(i)}
        let mut degrees = Vec::with_capacity(n);
        let mut valid = true;
        for (i, &j) in perm.iter().enumerate() {
            let d = expanded.part(i) as i64 - i as i64 + j as i64;
            if d < 0 {
                valid = false;
                break;
            }
            degrees.push(d as u32);
        }
        if !valid {
            continue;
        }
        let mut current: BTreeMap<Partition, BigInt> = BTreeMap::new();
        current.insert(seed.clone(), BigInt::one());
        for d in degrees {
            let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
            for (p, c) in &current {
                for q in pieri_horizontal(p, d, r) {
                    *next.entry(q).or_insert_with(BigInt::zero) += c;
                }
            }
            current = next;
        }
        let sign = BigInt::from(sign);
        for (p, c) in current {
            out.add_term(p, c * &sign);
        }
    }
    lr_cache().lock().unwrap().insert(key, out.clone());
    Ok(out)
}

fn permutations(perm: &mut Vec<usize>, k: usize, out: &mut Vec<(Vec<usize>, i32)>) {
    fn rec(perm: &mut Vec<usize>, k: usize, sign: i32, out: &mut Vec<(Vec<usize>, i32)>) {
        if k == perm.len() {
            out.push((perm.clone(), sign));
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(perm, k + 1, if i == k { sign } else { -sign }, out);
            perm.swap(k, i);
        }
    }
    rec(perm, k, 1, out);
}

/// `s_λ(x_1..x_r)` as a sum over semistandard tableaux with entries in `1..=r`.
/// Returns zero when `λ` has more than `r` rows.
pub fn monomial_expansion(lambda: &Partition, r: usize) -> Poly {
    let mut out = Poly::zero(r);
    if lambda.len() > r {
        return out;
    }
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
        .collect();
    let mut filling: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let mut content = vec![0u16; r];

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        r: usize,
        filling: &mut Vec<Vec<usize>>,
        content: &mut Vec<u16>,
        out: &mut Poly,
    ) {
        if idx == cells.len() {
            out.add_term(Monomial::from_exponents(content.clone()), Rational::one());
            return;
        }
        let (i, j) = cells[idx];
        let mut lo = if j > 0 { filling[i][j - 1] } else { 0 };
        if i > 0 {
            lo = lo.max(filling[i - 1][j] + 1);
        }
        for v in lo..r {
            filling[i][j] = v;
            content[v] += 1;
            rec(idx + 1, cells, r, filling, content, out);
            content[v] -= 1;
        }
    }
    rec(0, &cells, r, &mut filling, &mut content, &mut out);
    out
}

/// `e_k(x_1..x_r)`.
pub fn elementary(k: usize, r: usize) -> Poly {
    monomial_expansion(&Partition::column(k), r)
}
