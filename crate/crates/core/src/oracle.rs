//! The toric ring of the abelianized quiver, used to check products.
//!
//! Variables are `x_ij` (one per abelianized vertex, `x_01 = 0`) followed by
//! `q_1..q_ρ`. Each generator
//!
//! ```text
//! g_ij = prod_{a into i} prod_k (x_ij - x_{s(a)k}) - (-1)^{r_i-1} q_i prod_{a out of i} prod_k (x_{t(a)k} - x_ij)
//! ```
//!
//! has leading term `x_ij^{s_i}`, and these leading terms are pairwise
//! coprime, so rewriting `x_ij^{s_i}` to the rest of `g_ij` is confluent.
//! A class `α` of the quiver flag variety is checked through `lift(α) * ω`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::class::{CohClass, QuantumClass};
use crate::classical::ClassicalRing;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};
use crate::quiver::Quiver;
use crate::ring::{QMonomial, SchurTuple};
use crate::schur::monomial_expansion;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Classical,
    Quantum,
}

struct Rule {
    var: usize,
    power: u16,
    /// `x^power` rewrites to this polynomial.
    tail: Poly,
}

pub struct RewriteSystem {
    quiver: Quiver,
    mode: Mode,
    offsets: Vec<usize>,
    nx: usize,
    rules: Vec<Rule>,
    memo: Mutex<HashMap<Monomial, Arc<Poly>>>,
}

impl RewriteSystem {
    /// The quantum system needs a Fano quiver.
    pub fn new(quiver: &Quiver, mode: Mode) -> Result<Self> {
        if mode == Mode::Quantum {
            quiver.require_fano()?;
        }
        let mut sys = Self::skeleton(quiver, mode);
        let mut generators = Vec::new();
        for i in 1..=quiver.rho() {
            for j in 1..=quiver.rank(i) {
                generators.push(sys.build_generator(i, j));
            }
        }
        sys.install(generators)?;
        Ok(sys)
    }

    /// A system whose rule for `x_ij` comes from `generators[k]`, listed in
    /// the order of [`RewriteSystem::variables`]. Each generator must be
    /// monic in `x_ij^{s_i}` with every other term below that power.
    pub fn from_generators(quiver: &Quiver, mode: Mode, generators: Vec<Poly>) -> Result<Self> {
        let mut sys = Self::skeleton(quiver, mode);
        sys.install(generators)?;
        Ok(sys)
    }

    fn skeleton(quiver: &Quiver, mode: Mode) -> Self {
        let mut offsets = Vec::with_capacity(quiver.rho() + 1);
        let mut nx = 0;
        offsets.push(0);
        for i in 1..=quiver.rho() {
            offsets.push(nx);
            nx += quiver.rank(i);
        }
        RewriteSystem {
            quiver: quiver.clone(),
            mode,
            offsets,
            nx,
            rules: Vec::new(),
            memo: Mutex::new(HashMap::new()),
        }
    }

    fn install(&mut self, generators: Vec<Poly>) -> Result<()> {
        if generators.len() != self.nx {
            return Err(Error::InvalidArgument(format!(
                "expected {} generators, found {}",
                self.nx,
                generators.len()
            )));
        }
        let mut rules = Vec::with_capacity(self.nx);
        for ((i, j), g) in self.variables().into_iter().zip(generators) {
            let var = self.x(i, j);
            let power = self.quiver.incoming(i) as u16;
            let lead = Monomial::var(self.nvars(), var, power);
            if g.coefficient(&lead) != Rational::one() {
                return Err(Error::InvalidArgument(format!(
                    "generator for x{i}{j} is not monic in x{i}{j}^{power}"
                )));
            }
            let mut tail = Poly::zero(self.nvars());
            for (m, c) in g.terms() {
                if *m == lead {
                    continue;
                }
                if m.exponent(var) >= power || (self.mode == Mode::Classical && !self.is_x_only(m)) {
                    return Err(Error::InvalidArgument(format!(
                        "generator for x{i}{j} has a term {m:?} not below its leading term"
                    )));
                }
                tail.add_term(m.clone(), -c.clone());
            }
            rules.push(Rule { var, power, tail });
        }
        self.rules = rules;
        Ok(())
    }

    fn is_x_only(&self, m: &Monomial) -> bool {
        m.exponents()[self.nx..].iter().all(|&e| e == 0)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Number of polynomial variables: every `x_ij`, then every `q_i`.
    pub fn nvars(&self) -> usize {
        self.nx + self.quiver.rho()
    }

    /// Number of `x` variables.
    pub fn x_count(&self) -> usize {
        self.nx
    }

    /// Abelianized vertices `(i, j)`, in variable order.
    pub fn variables(&self) -> Vec<(usize, usize)> {
        (1..=self.quiver.rho())
            .flat_map(|i| (1..=self.quiver.rank(i)).map(move |j| (i, j)))
            .collect()
    }

    /// Variable index of `x_ij`, for `i >= 1`.
    pub fn x(&self, i: usize, j: usize) -> usize {
        self.offsets[i] + j - 1
    }

    /// Variable index of `q_i`.
    pub fn q(&self, i: usize) -> usize {
        self.nx + i - 1
    }

    /// `x_ij` as a polynomial; `x_01` is zero.
    pub fn x_poly(&self, i: usize, j: usize) -> Poly {
        if i == 0 {
            Poly::zero(self.nvars())
        } else {
            Poly::var(self.nvars(), self.x(i, j))
        }
    }

    fn build_generator(&self, i: usize, j: usize) -> Poly {
        let n = self.nvars();
        let xij = self.x_poly(i, j);
        let mut classical = Poly::one(n);
        for v in self.quiver.arrows_into(i) {
            for k in 1..=self.quiver.rank(v) {
                classical = &classical * &(&xij - &self.x_poly(v, k));
            }
        }
        if self.mode == Mode::Classical {
            return classical;
        }
        let mut quantum = Poly::var(n, self.q(i));
        if self.quiver.rank(i) % 2 == 0 {
            quantum = -&quantum;
        }
        for v in self.quiver.arrows_out_of(i) {
            for k in 1..=self.quiver.rank(v) {
                quantum = &quantum * &(&self.x_poly(v, k) - &xij);
            }
        }
        &classical - &quantum
    }

    /// The generator `g_ij` of the ideal.
    pub fn generator(&self, i: usize, j: usize) -> Poly {
        let rule = &self.rules[self.x(i, j)];
        let mut g = -&rule.tail;
        g.add_term(Monomial::var(self.nvars(), rule.var, rule.power), Rational::one());
        g
    }

    /// Terms of `p` that some rule applies to, with the variable it rewrites.
    pub fn reducible_terms(&self, p: &Poly) -> Vec<(Monomial, usize)> {
        let mut out = Vec::new();
        for (m, _) in p.terms() {
            for rule in &self.rules {
                if m.exponent(rule.var) >= rule.power {
                    out.push((m.clone(), rule.var));
                }
            }
        }
        out
    }

    /// Rewrites the term of `p` at `m` once using the rule for variable `var`.
    pub fn rewrite_once(&self, p: &Poly, m: &Monomial, var: usize) -> Result<Poly> {
        let rule = self
            .rules
            .iter()
            .find(|r| r.var == var)
            .ok_or_else(|| Error::InvalidArgument(format!("no rule for variable {var}")))?;
        let c = p.coefficient(m);
        let rest = m
            .div(&Monomial::var(self.nvars(), var, rule.power))
            .filter(|_| !c.is_zero())
            .ok_or_else(|| Error::InvalidArgument(format!("rule does not apply to {m:?}")))?;
        let mut out = p.clone();
        out.add_term(m.clone(), -c.clone());
        out.add_assign_mul_term(&rule.tail, &rest, &c);
        Ok(out)
    }

    pub fn is_normal(&self, p: &Poly) -> bool {
        p.terms().all(|(m, _)| self.reducible_rule(m).is_none())
    }

    fn reducible_rule(&self, m: &Monomial) -> Option<&Rule> {
        self.rules.iter().rev().find(|r| m.exponent(r.var) >= r.power)
    }

    /// The unique normal form: every `x_ij` exponent below `s_i`.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars());
        for (m, c) in p.terms() {
            out.add_assign_scaled(&self.normal_monomial(m), c);
        }
        out
    }

    fn normal_monomial(&self, m: &Monomial) -> Arc<Poly> {
        if let Some(hit) = self.memo.lock().unwrap().get(m) {
            return hit.clone();
        }
        let result = match self.reducible_rule(m) {
            None => Poly::monomial(m.clone(), Rational::one()),
            Some(rule) => {
                let rest = m.div(&Monomial::var(self.nvars(), rule.var, rule.power)).unwrap();
                let mut acc = Poly::zero(self.nvars());
                for (t, c) in rule.tail.terms() {
                    acc.add_assign_scaled(&self.normal_monomial(&t.mul(&rest)), c);
                }
                acc
            }
        };
        let result = Arc::new(result);
        self.memo.lock().unwrap().insert(m.clone(), result.clone());
        result
    }

    /// `nf(a * b)` for `a`, `b` already in normal form.
    pub fn multiply(&self, a: &Poly, b: &Poly) -> Poly {
        self.normal_form(&(a * b))
    }

    /// `prod_i s_{λ_i}(x_{i1}, ..., x_{i r_i})`.
    pub fn lift_tuple(&self, tuple: &SchurTuple) -> Poly {
        let n = self.nvars();
        let mut out = Poly::one(n);
        for i in 1..=self.quiver.rho() {
            let lambda = tuple.at(i);
            if lambda.is_empty() {
                continue;
            }
            let r = self.quiver.rank(i);
            let map: Vec<usize> = (1..=r).map(|j| self.x(i, j)).collect();
            out = &out * &monomial_expansion(lambda, r).embed(n, &map);
        }
        out
    }

    fn q_monomial(&self, q: &QMonomial) -> Monomial {
        let mut e = vec![0u16; self.nvars()];
        for (i, &d) in q.exponents().iter().enumerate() {
            e[self.nx + i] = d as u16;
        }
        Monomial::from_exponents(e)
    }

    /// Lifts a class term by term, carrying its `q` monomials along.
    pub fn lift(&self, class: &QuantumClass) -> Result<Poly> {
        let mut out = Poly::zero(self.nvars());
        for (q, t, c) in class.terms() {
            self.check(q, t)?;
            out.add_assign_mul_term(&self.lift_tuple(t), &self.q_monomial(q), c);
        }
        Ok(out)
    }

    fn check(&self, q: &QMonomial, t: &SchurTuple) -> Result<()> {
        if t.rho() != self.quiver.rho() || q.exponents().len() != self.quiver.rho() {
            return Err(Error::QuiverMismatch);
        }
        if self.mode == Mode::Classical && !q.is_one() {
            return Err(Error::QuantumTerms);
        }
        Ok(())
    }

    /// `ω = prod_i prod_{j<k} (x_ij - x_ik)`, without normalizing constant.
    pub fn omega(&self) -> Poly {
        let mut out = Poly::one(self.nvars());
        for i in 1..=self.quiver.rho() {
            let r = self.quiver.rank(i);
            for j in 1..=r {
                for k in j + 1..=r {
                    out = &out * &(&self.x_poly(i, j) - &self.x_poly(i, k));
                }
            }
        }
        out
    }

    /// `nf(lift(α) * ω)`.
    pub fn image(&self, class: &QuantumClass) -> Result<Poly> {
        Ok(self.normal_form(&(&self.lift(class)? * &self.omega())))
    }

    /// Whether `nf(lift(claimed) ω) = nf(lift(α) lift(β) ω)`.
    pub fn verify_product(
        &self,
        a: &QuantumClass,
        b: &QuantumClass,
        claimed: &QuantumClass,
    ) -> Result<bool> {
        let lhs = self.image(claimed)?;
        let rhs = self.normal_form(&(&self.image(a)? * &self.lift(b)?));
        Ok(lhs == rhs)
    }

    /// Monomial `prod x_ij^{s_i - 1}`, the point class of the toric variety.
    pub fn top_monomial(&self) -> Monomial {
        let mut e = vec![0u16; self.nvars()];
        for (i, j) in self.variables() {
            e[self.x(i, j)] = (self.quiver.incoming(i) - 1) as u16;
        }
        Monomial::from_exponents(e)
    }

    /// `∫` over the toric variety: the top coefficient of the classical
    /// normal form. Terms carrying `q` are dropped.
    pub fn toric_integrate(&self, p: &Poly) -> Rational {
        let mut classical = Poly::zero(self.nvars());
        for (m, c) in p.terms() {
            if self.is_x_only(m) {
                classical.add_term(m.clone(), c.clone());
            }
        }
        self.normal_form(&classical).coefficient(&self.top_monomial())
    }

    /// `∫` over the quiver flag variety:
    /// `(-1)^{|R+|} / |W| * ∫_T lift(α) ω^2`.
    pub fn martin_integrate(&self, class: &CohClass) -> Result<Rational> {
        let omega = self.omega();
        let lifted = self.lift(&class.to_quantum())?;
        let top = self.toric_integrate(&(&(&lifted * &omega) * &omega));
        Ok(top * self.martin_constant())
    }

    fn martin_constant(&self) -> Rational {
        let mut positive_roots = 0u64;
        let mut weyl = num_bigint::BigInt::one();
        for i in 1..=self.quiver.rho() {
            let r = self.quiver.rank(i) as u64;
            positive_roots += r * (r - 1) / 2;
            for k in 2..=r {
                weyl *= k;
            }
        }
        let sign = if positive_roots % 2 == 0 { 1 } else { -1 };
        Rational::new(sign.into(), weyl)
    }
}

/// `M[a][b] = ∫ a * b` over the classical basis.
pub fn pairing_matrix(ring: &ClassicalRing, system: &RewriteSystem) -> Result<Vec<Vec<Rational>>> {
    let basis = ring.basis();
    let mut m = vec![vec![Rational::zero(); basis.len()]; basis.len()];
    for (a, ta) in basis.iter().enumerate() {
        for (b, tb) in basis.iter().enumerate().skip(a) {
            let v = system.martin_integrate(&ring.multiply_basis(ta, tb)?)?;
            m[a][b] = v.clone();
            m[b][a] = v;
        }
    }
    Ok(m)
}

/// Rank over the rationals by Gaussian elimination.
pub fn rank(matrix: &[Vec<Rational>]) -> usize {
    let mut rows: Vec<Vec<Rational>> = matrix.to_vec();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        let pivot_row: Vec<Rational> = rows[rank].iter().map(|x| x * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}
