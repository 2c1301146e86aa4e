//! Tuples of partitions, quantum monomials and the rim-hook reduction engine
//! shared by the classical and quantum rings.
//!
//! A tuple `(λ_1, ..., λ_rho)` stands for the product `s^1_{λ_1} ... s^rho_{λ_rho}`
//! of Schur polynomials in the Chern roots of the tautological bundles.
//! Reduction rewrites a too-wide `s^i_λ` (first row longer than `s_i - r_i`)
//! through the rim-hook rule at vertex `i`, always at the highest such vertex,
//! until every slot fits its box.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{Partition, SignedPartition};
use crate::quiver::Quiver;
use crate::schur::{lr_multiply, pieri_vertical};
use crate::Rational;

/// A tuple of partitions, one per non-source vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchurTuple(Vec<Partition>);

impl SchurTuple {
    pub fn new(parts: Vec<Partition>) -> Self {
        SchurTuple(parts)
    }

    /// The identity tuple `(∅, ..., ∅)`.
    pub fn identity(rho: usize) -> Self {
        SchurTuple(vec![Partition::empty(); rho])
    }

    /// `s^vertex_λ` alone.
    pub fn single(rho: usize, vertex: usize, lambda: Partition) -> Self {
        let mut t = Self::identity(rho);
        t.0[vertex - 1] = lambda;
        t
    }

    pub fn rho(&self) -> usize {
        self.0.len()
    }

    /// Partition at vertex `i` (1-based).
    pub fn at(&self, i: usize) -> &Partition {
        &self.0[i - 1]
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.0
    }

    pub fn set(&mut self, i: usize, lambda: Partition) {
        self.0[i - 1] = lambda;
    }

    /// Total number of boxes, the cohomological (complex) degree.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(Partition::is_empty)
    }

    /// Whether every slot fits its basis box.
    pub fn is_basis(&self, quiver: &Quiver) -> bool {
        self.rho() == quiver.rho()
            && (1..=self.rho()).all(|i| self.at(i).fits_box(quiver.rank(i), quiver.box_width(i)))
    }

    /// Fails unless the tuple is a basis element of `quiver`.
    pub fn check_basis(&self, quiver: &Quiver) -> Result<()> {
        if self.rho() != quiver.rho() {
            return Err(Error::QuiverMismatch);
        }
        for i in 1..=self.rho() {
            let (rows, cols) = (quiver.rank(i), quiver.box_width(i));
            if !self.at(i).fits_box(rows, cols) {
                return Err(Error::OutsideBox {
                    partition: self.at(i).to_string(),
                    vertex: i,
                    rows,
                    cols: cols as usize,
                });
            }
        }
        Ok(())
    }

    /// Whether some slot is longer than the rank, making the product zero.
    fn vanishes(&self, quiver: &Quiver) -> bool {
        (1..=self.rho()).any(|i| self.at(i).len() > quiver.rank(i))
    }

    /// Highest vertex whose partition is too wide for its box.
    fn highest_wide_vertex(&self, quiver: &Quiver) -> Option<usize> {
        (1..=self.rho())
            .rev()
            .find(|&i| self.at(i).width() > quiver.box_width(i))
    }
}

impl fmt::Debug for SchurTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Exponents `(d_1, ..., d_rho)` of `q_1^{d_1} ... q_rho^{d_rho}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QMonomial(Vec<u32>);

impl QMonomial {
    pub fn one(rho: usize) -> Self {
        QMonomial(vec![0; rho])
    }

    pub fn new(exps: Vec<u32>) -> Self {
        QMonomial(exps)
    }

    /// `q_i`.
    pub fn q(rho: usize, i: usize) -> Self {
        let mut m = Self::one(rho);
        m.0[i - 1] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `q_i` (1-based).
    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn mul(&self, other: &QMonomial) -> QMonomial {
        QMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Anticanonical degree `sum_i d_i (s_i - s'_i)`.
    pub fn degree(&self, quiver: &Quiver) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &d)| d as i64 * quiver.q_degree(k + 1))
            .sum()
    }
}

impl fmt::Debug for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q{:?}", self.0)
    }
}

/// A linear combination of `q^d * tuple` terms with unrestricted widths.
pub type RawClass = BTreeMap<(QMonomial, SchurTuple), Rational>;

pub(crate) fn add_raw(out: &mut RawClass, key: (QMonomial, SchurTuple), c: Rational) {
    if c.is_zero() {
        return;
    }
    match out.entry(key) {
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

type Reduced = Arc<Vec<(QMonomial, SchurTuple, BigInt)>>;

/// Rewrites tuples into the basis, classically or with quantum corrections.
///
/// Results for individual tuples are memoized; the table is behind a mutex
/// so one reducer can be shared between threads.
pub(crate) struct Reducer {
    quiver: Quiver,
    quantum: bool,
    memo: Mutex<HashMap<SchurTuple, Reduced>>,
}

impl Reducer {
    pub(crate) fn new(quiver: Quiver, quantum: bool) -> Self {
        Reducer {
            quiver,
            quantum,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub(crate) fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Reduces a raw combination to basis tuples.
    pub(crate) fn reduce(&self, raw: &RawClass) -> Result<RawClass> {
        let mut out = RawClass::new();
        for ((q, tuple), c) in raw {
            if tuple.rho() != self.quiver.rho() || q.exponents().len() != self.quiver.rho() {
                return Err(Error::QuiverMismatch);
            }
            for (dq, basis, k) in self.reduce_tuple(tuple).iter() {
                add_raw(&mut out, (q.mul(dq), basis.clone()), c * Rational::from(k.clone()));
            }
        }
        Ok(out)
    }

    fn reduce_tuple(&self, tuple: &SchurTuple) -> Reduced {
        if let Some(hit) = self.memo.lock().unwrap().get(tuple) {
            return hit.clone();
        }
        let rho = self.quiver.rho();
        let result: Vec<(QMonomial, SchurTuple, BigInt)> = if tuple.vanishes(&self.quiver) {
            Vec::new()
        } else {
            match tuple.highest_wide_vertex(&self.quiver) {
                None => vec![(QMonomial::one(rho), tuple.clone(), BigInt::one())],
                Some(i) => {
                    let mut acc: BTreeMap<(QMonomial, SchurTuple), BigInt> = BTreeMap::new();
                    for (dq, child, c) in self.rim_hook_step(tuple, i) {
                        for (dq2, basis, c2) in self.reduce_tuple(&child).iter() {
                            *acc.entry((dq.mul(dq2), basis.clone()))
                                .or_insert_with(BigInt::zero) += &c * c2;
                        }
                    }
                    acc.into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|((q, t), c)| (q, t, c))
                        .collect()
                }
            }
        };
        let result = Arc::new(result);
        self.memo
            .lock()
            .unwrap()
            .insert(tuple.clone(), result.clone());
        result
    }

    /// One application of the rim-hook rule to slot `i` of `tuple`.
    ///
    /// Classical part, over arrows `a` into `i`:
    ///   sum_{k=1}^{s_i} sum_{Σk_a=k} (-1)^{k+1} HR^{s_i}(λ + {s_i - k}) prod_a e_{k_a}(slot s(a)).
    /// Quantum part, over arrows `a` out of `i`:
    ///   (-1)^{r_i-1} q_i sum_{k=0}^{s'_i} sum_{Σk_a=k} (-1)^{s'_i-k} HR^{s_i}(λ + {s'_i - k}) prod_a e_{k_a}(slot t(a)).
    pub(crate) fn rim_hook_step(
        &self,
        tuple: &SchurTuple,
        i: usize,
    ) -> Vec<(QMonomial, SchurTuple, BigInt)> {
        let quiver = &self.quiver;
        let rho = quiver.rho();
        let lambda = tuple.at(i);
        let s = quiver.incoming(i);
        let mut out = Vec::new();

        let sources = quiver.arrows_into(i);
        for k in 1..=s {
            let SignedPartition::Term { sign, partition } = hook(lambda, s - k, s) else {
                continue;
            };
            let sign = if k % 2 == 1 { sign } else { -sign };
            let mut base = tuple.clone();
            base.set(i, partition);
            // s^0_μ = 0 for μ ≠ ∅: arrows from the source cannot absorb boxes
            let bounds: Vec<usize> = sources
                .iter()
                .map(|&v| if v == 0 { 0 } else { quiver.rank(v) })
                .collect();
            for ks in compositions(&bounds, k) {
                self.attach_elementary(&base, &sources, &ks, sign, &QMonomial::one(rho), &mut out);
            }
        }

        if self.quantum {
            let targets = quiver.arrows_out_of(i);
            let s_out = quiver.outgoing(i);
            let bounds: Vec<usize> = targets.iter().map(|&v| quiver.rank(v)).collect();
            let q = QMonomial::q(rho, i);
            for k in 0..=s_out {
                let SignedPartition::Term { sign, partition } = hook(lambda, s_out - k, s) else {
                    continue;
                };
                let mut sign = sign;
                if (quiver.rank(i) - 1) % 2 == 1 {
                    sign = -sign;
                }
                if (s_out - k) % 2 == 1 {
                    sign = -sign;
                }
                let mut base = tuple.clone();
                base.set(i, partition);
                for ks in compositions(&bounds, k) {
                    self.attach_elementary(&base, &targets, &ks, sign, &q, &mut out);
                }
            }
        }
        out
    }

    /// Multiplies `e_{ks[a]}` into slot `slots[a]` for every arrow, expanding by Pieri.
    fn attach_elementary(
        &self,
        base: &SchurTuple,
        slots: &[usize],
        ks: &[usize],
        sign: i32,
        q: &QMonomial,
        out: &mut Vec<(QMonomial, SchurTuple, BigInt)>,
    ) {
        let mut current: Vec<(SchurTuple, BigInt)> = vec![(base.clone(), BigInt::from(sign))];
        for (&slot, &k) in slots.iter().zip(ks) {
            if k == 0 {
                continue;
            }
            let rank = self.quiver.rank(slot);
            let mut next = Vec::new();
            for (tuple, c) in &current {
                let Ok(product) = pieri_vertical(tuple.at(slot), k, rank) else {
                    continue;
                };
                for (mu, m) in product.terms() {
                    let mut t = tuple.clone();
                    t.set(slot, mu.clone());
                    next.push((t, c * m));
                }
            }
            current = next;
        }
        out.extend(current.into_iter().map(|(t, c)| (q.clone(), t, c)));
    }

    /// Product of two combinations of basis tuples, then reduced.
    pub(crate) fn multiply(&self, a: &RawClass, b: &RawClass) -> Result<RawClass> {
        let mut raw = RawClass::new();
        for ((qa, ta), ca) in a {
            for ((qb, tb), cb) in b {
                let c = ca * cb;
                for (tuple, k) in self.tuple_product(ta, tb)? {
                    add_raw(&mut raw, (qa.mul(qb), tuple), &c * Rational::from(k));
                }
            }
        }
        self.reduce(&raw)
    }

    /// Vertex-wise Littlewood-Richardson product of two tuples.
    pub(crate) fn tuple_product(
        &self,
        a: &SchurTuple,
        b: &SchurTuple,
    ) -> Result<Vec<(SchurTuple, BigInt)>> {
        if a.rho() != self.quiver.rho() || b.rho() != self.quiver.rho() {
            return Err(Error::QuiverMismatch);
        }
        let mut current = vec![(Vec::with_capacity(a.rho()), BigInt::one())];
        for i in 1..=a.rho() {
            let product = lr_multiply(a.at(i), b.at(i), self.quiver.rank(i))?;
            let mut next = Vec::with_capacity(current.len() * product.len());
            for (parts, c) in &current {
                for (nu, m) in product.terms() {
                    let mut p: Vec<Partition> = parts.clone();
                    p.push(nu.clone());
                    next.push((p, c * m));
                }
            }
            current = next;
        }
        Ok(current
            .into_iter()
            .map(|(p, c)| (SchurTuple::new(p), c))
            .collect())
    }
}

/// `HR^n(s_{λ + {m}})`.
fn hook(lambda: &Partition, m: usize, n: usize) -> SignedPartition {
    lambda
        .add_first_row(m as u32)
        .remove_rim_hook(n)
        .unwrap_or(SignedPartition::Zero)
}

/// All vectors `k` with `0 <= k[a] <= bounds[a]` and `sum k = total`.
pub(crate) fn compositions(bounds: &[usize], total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; bounds.len()];
    let suffix: Vec<usize> = {
        let mut s = vec![0; bounds.len() + 1];
        for a in (0..bounds.len()).rev() {
            s[a] = s[a + 1] + bounds[a];
        }
        s
    };
    fn rec(a: usize, left: usize, bounds: &[usize], suffix: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if a == bounds.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if suffix[a] < left {
            return;
        }
        for k in 0..=bounds[a].min(left) {
            cur[a] = k;
            rec(a + 1, left - k, bounds, suffix, cur, out);
        }
        cur[a] = 0;
    }
    rec(0, total, bounds, &suffix, &mut cur, &mut out);
    out
}

/// Basis tuples of `quiver`: products of the per-vertex box partitions,
/// lexicographic over vertices, each vertex in graded order.
pub(crate) fn enumerate_basis(quiver: &Quiver) -> Vec<SchurTuple> {
    let mut out = vec![Vec::new()];
    for i in 1..=quiver.rho() {
        let slot = Partition::in_box(quiver.rank(i), quiver.box_width(i));
        let mut next = Vec::with_capacity(out.len() * slot.len());
        for prefix in &out {
            for lambda in &slot {
                let mut t: Vec<Partition> = prefix.clone();
                t.push(lambda.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out.into_iter().map(SchurTuple::new).collect()
}
