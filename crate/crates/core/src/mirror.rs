//! The mirror Landau-Ginzburg model of a Fano quiver flag variety.
//!
//! Arrow variables `x_a` run over the arrows of the abelianized quiver,
//! root variables `y^i_jk` over ordered pairs `j != k` at each vertex. The
//! potential is `W = sum x_a + sum y^i_jk`, subject to one multiplicative
//! constraint per abelianized vertex `(i, j)`:
//!
//! ```text
//! prod_{t(a)=ij} x_a / prod_{s(a)=ij} x_a * prod_k y^i_kj / prod_k y^i_jk = q_i
//! ```
//!
//! On the critical locus `y^i_jk = -y^i_kj`, so the root factor is
//! `(-1)^{r_i - 1}` and the constraint turns into the toric relation with
//! the specialized parameter.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::oracle::RewriteSystem;
use crate::poly::Poly;
use crate::quiver::{AbArrow, AbVertex, AbelianizedQuiver, Quiver};
use crate::Rational;

/// A mirror variable. Arrows are numbered from 1 in the order of
/// [`AbelianizedQuiver::arrows`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MirrorVar {
    X(usize),
    Y { vertex: usize, j: usize, k: usize },
    Q(usize),
}

impl fmt::Display for MirrorVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MirrorVar::X(a) => write!(f, "x[{a}]"),
            MirrorVar::Y { vertex, j, k } => write!(f, "y[{vertex},{j},{k}]"),
            MirrorVar::Q(i) => write!(f, "q[{i}]"),
        }
    }
}

/// A Laurent monomial, zero exponents omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentMonomial(BTreeMap<MirrorVar, i32>);

impl LaurentMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: MirrorVar, e: i32) -> Self {
        let mut m = Self::one();
        m.multiply_var(v, e);
        m
    }

    pub fn exponent(&self, v: MirrorVar) -> i32 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (MirrorVar, i32)> + '_ {
        self.0.iter().map(|(&v, &e)| (v, e))
    }

    pub fn multiply_var(&mut self, v: MirrorVar, e: i32) {
        let entry = self.0.entry(v).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.0.remove(&v);
        }
    }

    pub fn mul(&self, other: &LaurentMonomial) -> LaurentMonomial {
        let mut out = self.clone();
        for (v, e) in other.factors() {
            out.multiply_var(v, e);
        }
        out
    }

    pub fn pow(&self, e: i32) -> LaurentMonomial {
        LaurentMonomial(self.0.iter().map(|(&v, &x)| (v, x * e)).filter(|(_, x)| *x != 0).collect())
    }

    /// Splits into numerator and denominator with nonnegative exponents.
    pub fn split(&self) -> (LaurentMonomial, LaurentMonomial) {
        let num = self.0.iter().filter(|(_, &e)| e > 0).map(|(&v, &e)| (v, e)).collect();
        let den = self.0.iter().filter(|(_, &e)| e < 0).map(|(&v, &e)| (v, -e)).collect();
        (LaurentMonomial(num), LaurentMonomial(den))
    }
}

/// A finite sum of rational multiples of Laurent monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent(BTreeMap<LaurentMonomial, Rational>);

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: LaurentMonomial, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LaurentMonomial, &Rational)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, m: LaurentMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(m.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&m);
        }
    }

    /// Replaces `v` by a monomial everywhere; `v` must appear with
    /// nonnegative exponent or `value` must be a unit monomial.
    pub fn substitute(&self, v: MirrorVar, value: &(Rational, LaurentMonomial)) -> Laurent {
        let mut out = Laurent::zero();
        for (m, c) in &self.0 {
            let e = m.exponent(v);
            let mut rest = m.clone();
            rest.multiply_var(v, -e);
            let coeff = c * pow_rational(&value.0, e);
            out.add_term(rest.mul(&value.1.pow(e)), coeff);
        }
        out
    }

    /// One line per term: `coeff * x[a]^e * y[i,j,k]^e * q[i]^e`.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        for (m, c) in &self.0 {
            out.push_str(&format_term(c, m));
            out.push('\n');
        }
        out
    }
}

fn pow_rational(c: &Rational, e: i32) -> Rational {
    let mut out = Rational::one();
    for _ in 0..e.unsigned_abs() {
        out *= c;
    }
    if e < 0 {
        out.recip()
    } else {
        out
    }
}

fn format_monomial(m: &LaurentMonomial) -> String {
    m.factors()
        .map(|(v, e)| format!("{v}^{e}"))
        .collect::<Vec<_>>()
        .join(" * ")
}

fn format_term(c: &Rational, m: &LaurentMonomial) -> String {
    if m.0.is_empty() {
        c.to_string()
    } else {
        format!("{c} * {}", format_monomial(m))
    }
}

/// The constraint attached to an abelianized vertex: `lhs = q_vertex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub at: AbVertex,
    pub lhs: LaurentMonomial,
}

/// `x[arrow] = coeff * monomial`, with the monomial free of basis arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub at: AbVertex,
    pub arrow: usize,
    pub coeff: Rational,
    pub rhs: LaurentMonomial,
}

pub struct Mirror {
    quiver: Quiver,
    abelian: AbelianizedQuiver,
    basis: BTreeMap<AbVertex, usize>,
    w: Laurent,
    constraints: Vec<Constraint>,
}

/// Builds `W` and its constraints, choosing as basis arrow at vertex `i` the
/// first arrow from the lowest-numbered source of `i`.
pub fn build_superpotential(quiver: &Quiver) -> Result<Mirror> {
    quiver.require_fano()?;
    let abelian = quiver.abelianize();
    let index = |a: &AbArrow| abelian.arrows().iter().position(|b| b == a).unwrap() + 1;

    let mut w = Laurent::zero();
    for k in 1..=abelian.arrows().len() {
        w.add_term(LaurentMonomial::var(MirrorVar::X(k), 1), Rational::one());
    }
    for i in 1..=quiver.rho() {
        let r = quiver.rank(i);
        for j in 1..=r {
            for k in (1..=r).filter(|&k| k != j) {
                w.add_term(LaurentMonomial::var(MirrorVar::Y { vertex: i, j, k }, 1), Rational::one());
            }
        }
    }

    let mut basis = BTreeMap::new();
    let mut constraints = Vec::new();
    for &v in abelian.vertices().iter().skip(1) {
        let i = v.vertex;
        let source = quiver.arrows_into(i)[0];
        let chosen = AbArrow {
            to: v,
            from: AbVertex { vertex: source, copy: 1 },
            label: 0,
        };
        basis.insert(v, index(&chosen));

        let mut lhs = LaurentMonomial::one();
        for a in abelian.arrows_into(v) {
            lhs.multiply_var(MirrorVar::X(index(a)), 1);
        }
        for a in abelian.arrows_out_of(v) {
            lhs.multiply_var(MirrorVar::X(index(a)), -1);
        }
        for k in (1..=quiver.rank(i)).filter(|&k| k != v.copy) {
            lhs.multiply_var(MirrorVar::Y { vertex: i, j: k, k: v.copy }, 1);
            lhs.multiply_var(MirrorVar::Y { vertex: i, j: v.copy, k }, -1);
        }
        constraints.push(Constraint { at: v, lhs });
    }

    Ok(Mirror {
        quiver: quiver.clone(),
        abelian,
        basis,
        w,
        constraints,
    })
}

impl Mirror {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn abelian(&self) -> &AbelianizedQuiver {
        &self.abelian
    }

    pub fn superpotential(&self) -> &Laurent {
        &self.w
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Index of the basis arrow into `at`.
    pub fn basis_arrow(&self, at: AbVertex) -> usize {
        self.basis[&at]
    }

    fn is_basis(&self, v: MirrorVar) -> bool {
        matches!(v, MirrorVar::X(a) if self.basis.values().any(|&b| b == a))
    }

    /// Each basis arrow solved from its constraint, with other basis arrows
    /// substituted away: `x[a_ij] = q_i A_ij * prod y^i_jk / prod y^i_kj`.
    pub fn solved(&self) -> Vec<(AbVertex, usize, LaurentMonomial)> {
        let mut solved: Vec<(AbVertex, usize, LaurentMonomial)> = self
            .constraints
            .iter()
            .map(|c| {
                let a = self.basis[&c.at];
                let mut rest = c.lhs.clone();
                rest.multiply_var(MirrorVar::X(a), -1);
                let value = LaurentMonomial::var(MirrorVar::Q(c.at.vertex), 1).mul(&rest.pow(-1));
                (c.at, a, value)
            })
            .collect();
        // basis arrows only depend on basis arrows into later vertices
        loop {
            let mut changed = false;
            for idx in 0..solved.len() {
                let pending: Vec<(MirrorVar, i32)> = solved[idx]
                    .2
                    .factors()
                    .filter(|(v, _)| self.is_basis(*v))
                    .collect();
                for (v, e) in pending {
                    let MirrorVar::X(b) = v else { unreachable!() };
                    let value = solved.iter().find(|s| s.1 == b).unwrap().2.clone();
                    let mut m = solved[idx].2.clone();
                    m.multiply_var(v, -e);
                    solved[idx].2 = m.mul(&value.pow(e));
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        solved
    }

    /// `W_q`: the potential with every basis arrow substituted.
    pub fn potential_q(&self) -> Laurent {
        let mut w = self.w.clone();
        for (_, a, value) in self.solved() {
            w = w.substitute(MirrorVar::X(a), &(Rational::one(), value));
        }
        w
    }

    /// Critical relations `x[a_ij] = (-1)^{r_i-1} q_i A_ij`, the root
    /// variables eliminated through `y^i_jk = -y^i_kj`.
    pub fn critical_relations(&self) -> Vec<Relation> {
        self.solved()
            .into_iter()
            .map(|(at, arrow, value)| {
                let (coeff, rhs) = eliminate_roots(&value);
                Relation { at, arrow, coeff, rhs }
            })
            .collect()
    }

    /// Per-vertex constraints with roots eliminated and denominators
    /// cleared: `prod_{t(a)=ij} x_a - (-1)^{r_i-1} q_i prod_{s(a)=ij} x_a`.
    pub fn cleared_constraints(&self) -> Vec<(AbVertex, Laurent)> {
        self.constraints
            .iter()
            .map(|c| {
                let mut lhs = c.lhs.clone();
                lhs.multiply_var(MirrorVar::Q(c.at.vertex), -1);
                let (sign, m) = eliminate_roots(&lhs);
                let (num, den) = m.split();
                let mut rel = Laurent::monomial(num, Rational::one());
                rel.add_term(den, -sign.recip());
                (c.at, rel)
            })
            .collect()
    }

    /// The relations `x[a_ij] = c q_i A_ij` with denominators cleared.
    pub fn cleared_relations(&self) -> Vec<(AbVertex, Laurent)> {
        self.critical_relations()
            .into_iter()
            .map(|r| {
                let (num, den) = r.rhs.split();
                let mut rel = Laurent::monomial(den.mul(&LaurentMonomial::var(MirrorVar::X(r.arrow), 1)), Rational::one());
                rel.add_term(num, -r.coeff);
                (r.at, rel)
            })
            .collect()
    }

    /// Rewrites a polynomial in the `x_a` and `q_i` into the variables of
    /// `system` through `x_a = x_{t(a)} - x_{s(a)}`.
    pub fn to_toric(&self, p: &Laurent, system: &RewriteSystem) -> Result<Poly> {
        let n = system.nvars();
        let mut out = Poly::zero(n);
        for (m, c) in p.terms() {
            let mut term = Poly::constant(n, c.clone());
            for (v, e) in m.factors() {
                if e < 0 {
                    return Err(Error::InvalidArgument(format!("negative exponent of {v}")));
                }
                let factor = match v {
                    MirrorVar::X(a) => {
                        let arrow = self.abelian.arrows()[a - 1];
                        &system.x_poly(arrow.to.vertex, arrow.to.copy)
                            - &system.x_poly(arrow.from.vertex, arrow.from.copy)
                    }
                    MirrorVar::Q(i) => Poly::var(n, system.q(i)),
                    MirrorVar::Y { .. } => {
                        return Err(Error::InvalidArgument(format!("root variable {v} left over")))
                    }
                };
                term = &term * &factor.pow(e as u32);
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// The full text emission: arrow legend, `W`, constraints, `W_q` and the
    /// critical relations.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        for (k, a) in self.abelian.arrows().iter().enumerate() {
            let _ = writeln!(out, "# x[{}]: {} -> {}", k + 1, a.from, a.to);
        }
        out.push_str("W =\n");
        out.push_str(&self.w.emit());
        for c in &self.constraints {
            let _ = writeln!(out, "subject to: {} = q[{}]^1", format_monomial(&c.lhs), c.at.vertex);
        }
        out.push_str("W_q =\n");
        out.push_str(&self.potential_q().emit());
        out.push_str("relations:\n");
        for r in self.critical_relations() {
            let _ = writeln!(out, "x[{}] = {}", r.arrow, format_term(&r.coeff, &r.rhs));
        }
        out
    }
}

/// Replaces each `y^i_jk` with `j > k` by `-y^i_kj`; the root factors of a
/// solved constraint always cancel, leaving a sign.
fn eliminate_roots(m: &LaurentMonomial) -> (Rational, LaurentMonomial) {
    let mut sign = Rational::one();
    let mut out = LaurentMonomial::one();
    for (v, e) in m.factors() {
        match v {
            MirrorVar::Y { vertex, j, k } if j > k => {
                if e % 2 != 0 {
                    sign = -sign;
                }
                out.multiply_var(MirrorVar::Y { vertex, j: k, k: j }, e);
            }
            _ => out.multiply_var(v, e),
        }
    }
    debug_assert!(out.factors().all(|(v, _)| !matches!(v, MirrorVar::Y { .. })));
    if sign.is_negative() {
        (-Rational::one(), out)
    } else {
        (Rational::one(), out)
    }
}
