//! Cohomology classes on the basis of Schur tuples.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::ring::{add_raw, QMonomial, RawClass, SchurTuple};
use crate::Rational;

/// A classical class: rational combination of basis tuples.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CohClass {
    terms: BTreeMap<SchurTuple, Rational>,
}

impl CohClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(rho: usize) -> Self {
        Self::basis(SchurTuple::identity(rho))
    }

    pub fn basis(tuple: SchurTuple) -> Self {
        let mut c = Self::zero();
        c.add_term(tuple, Rational::one());
        c
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

    pub fn terms(&self) -> impl Iterator<Item = (&SchurTuple, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, tuple: &SchurTuple) -> Rational {
        self.terms.get(tuple).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, tuple: SchurTuple, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(tuple.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&tuple);
        }
    }

    pub fn add(&self, other: &CohClass) -> CohClass {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CohClass) -> CohClass {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> CohClass {
        let mut out = CohClass::zero();
        for (t, c) in &self.terms {
            out.add_term(t.clone(), c * k);
        }
        out
    }

    /// Splits the class by degree `sum_i |λ_i|`.
    pub fn graded_pieces(&self) -> BTreeMap<u32, CohClass> {
        let mut out: BTreeMap<u32, CohClass> = BTreeMap::new();
        for (t, c) in &self.terms {
            out.entry(t.degree()).or_default().add_term(t.clone(), c.clone());
        }
        out
    }

    /// Every term is a basis element of `quiver`.
    pub fn check_basis(&self, quiver: &Quiver) -> Result<()> {
        self.terms.keys().try_for_each(|t| t.check_basis(quiver))
    }

    pub fn to_quantum(&self) -> QuantumClass {
        let mut out = QuantumClass::zero();
        for (t, c) in &self.terms {
            let rho = t.rho();
            out.add_term(QMonomial::one(rho), t.clone(), c.clone());
        }
        out
    }

    pub(crate) fn to_raw(&self) -> RawClass {
        self.to_quantum().terms
    }

    /// Fails if the raw combination carries quantum parameters.
    pub(crate) fn from_raw(raw: RawClass) -> Result<CohClass> {
        let mut out = CohClass::zero();
        for ((q, t), c) in raw {
            if !q.is_one() {
                return Err(Error::QuantumTerms);
            }
            out.add_term(t, c);
        }
        Ok(out)
    }
}

impl fmt::Debug for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_quantum(), f)
    }
}

/// A quantum class: combination of `q^d * tuple` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QuantumClass {
    pub(crate) terms: RawClass,
}

impl QuantumClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(rho: usize) -> Self {
        Self::basis(SchurTuple::identity(rho))
    }

    pub fn basis(tuple: SchurTuple) -> Self {
        let mut c = Self::zero();
        c.add_term(QMonomial::one(tuple.rho()), tuple, Rational::one());
        c
    }

    /// `q^d * 1`.
    pub fn q_power(q: QMonomial) -> Self {
        let mut c = Self::zero();
        let rho = q.exponents().len();
        c.add_term(q, SchurTuple::identity(rho), Rational::one());
        c
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

    pub fn terms(&self) -> impl Iterator<Item = (&QMonomial, &SchurTuple, &Rational)> {
        self.terms.iter().map(|((q, t), c)| (q, t, c))
    }

    pub fn coefficient(&self, q: &QMonomial, tuple: &SchurTuple) -> Rational {
        self.terms
            .get(&(q.clone(), tuple.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, q: QMonomial, tuple: SchurTuple, c: Rational) {
        add_raw(&mut self.terms, (q, tuple), c);
    }

    pub fn add(&self, other: &QuantumClass) -> QuantumClass {
        let mut out = self.clone();
        for ((q, t), c) in &other.terms {
            out.add_term(q.clone(), t.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &QuantumClass) -> QuantumClass {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> QuantumClass {
        let mut out = QuantumClass::zero();
        for ((q, t), c) in &self.terms {
            out.add_term(q.clone(), t.clone(), c * k);
        }
        out
    }

    /// Multiplies every term by `q^d`.
    pub fn mul_q(&self, d: &QMonomial) -> QuantumClass {
        let mut out = QuantumClass::zero();
        for ((q, t), c) in &self.terms {
            out.add_term(q.mul(d), t.clone(), c.clone());
        }
        out
    }

    /// Whether no term carries a quantum parameter.
    pub fn is_classical(&self) -> bool {
        self.terms.keys().all(|(q, _)| q.is_one())
    }

    /// Drops every term with a nontrivial power of `q`.
    pub fn classical_part(&self) -> CohClass {
        let mut out = CohClass::zero();
        for ((q, t), c) in &self.terms {
            if q.is_one() {
                out.add_term(t.clone(), c.clone());
            }
        }
        out
    }

    /// Splits the class by total degree `deg q^d + sum_i |λ_i|`.
    pub fn graded_pieces(&self, quiver: &Quiver) -> BTreeMap<i64, QuantumClass> {
        let mut out: BTreeMap<i64, QuantumClass> = BTreeMap::new();
        for ((q, t), c) in &self.terms {
            let d = q.degree(quiver) + t.degree() as i64;
            out.entry(d).or_default().add_term(q.clone(), t.clone(), c.clone());
        }
        out
    }

    pub fn check_basis(&self, quiver: &Quiver) -> Result<()> {
        for (q, t) in self.terms.keys() {
            if q.exponents().len() != quiver.rho() {
                return Err(Error::QuiverMismatch);
            }
            t.check_basis(quiver)?;
        }
        Ok(())
    }

    pub fn raw(&self) -> &RawClass {
        &self.terms
    }

    pub fn from_raw(terms: RawClass) -> Self {
        let mut out = QuantumClass::zero();
        for ((q, t), c) in terms {
            out.add_term(q, t, c);
        }
        out
    }
}

impl fmt::Debug for QuantumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuantumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::render(self, crate::expr::PrintOrder::Degree))
    }
}
