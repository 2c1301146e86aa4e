//! The classical cohomology ring on the Schur-tuple basis.

use std::collections::BTreeMap;

use crate::class::CohClass;
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::ring::{enumerate_basis, RawClass, Reducer, SchurTuple};
use crate::Rational;

/// `H^*` of a quiver flag variety, with products computed by
/// Littlewood-Richardson followed by classical rim-hook reduction.
pub struct ClassicalRing {
    reducer: Reducer,
}

impl ClassicalRing {
    pub fn new(quiver: Quiver) -> Self {
        ClassicalRing {
            reducer: Reducer::new(quiver, false),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        self.reducer.quiver()
    }

    /// The basis tuples, vertex by vertex, each vertex in graded order.
    pub fn basis(&self) -> Vec<SchurTuple> {
        enumerate_basis(self.quiver())
    }

    pub fn one(&self) -> CohClass {
        CohClass::one(self.quiver().rho())
    }

    /// `s^vertex_λ` reduced to the basis.
    pub fn schur(&self, vertex: usize, lambda: crate::Partition) -> Result<CohClass> {
        let rho = self.quiver().rho();
        if vertex == 0 || vertex > rho {
            return Err(Error::NoSuchVertex { vertex, rho });
        }
        self.reduce_tuples([(SchurTuple::single(rho, vertex, lambda), Rational::from_integer(1.into()))])
    }

    /// Reduces a combination of tuples of arbitrary width.
    pub fn reduce_tuples(
        &self,
        raw: impl IntoIterator<Item = (SchurTuple, Rational)>,
    ) -> Result<CohClass> {
        let rho = self.quiver().rho();
        let mut class = RawClass::new();
        for (t, c) in raw {
            crate::ring::add_raw(&mut class, (crate::ring::QMonomial::one(rho), t), c);
        }
        self.reduce(&class)
    }

    /// Reduces a raw combination; it must not carry quantum parameters.
    pub fn reduce(&self, raw: &RawClass) -> Result<CohClass> {
        if raw.keys().any(|(q, _)| !q.is_one()) {
            return Err(Error::QuantumTerms);
        }
        CohClass::from_raw(self.reducer.reduce(raw)?)
    }

    pub fn multiply(&self, a: &CohClass, b: &CohClass) -> Result<CohClass> {
        a.check_basis(self.quiver())?;
        b.check_basis(self.quiver())?;
        CohClass::from_raw(self.reducer.multiply(&a.to_raw(), &b.to_raw())?)
    }

    /// Product of two basis elements.
    pub fn multiply_basis(&self, a: &SchurTuple, b: &SchurTuple) -> Result<CohClass> {
        self.multiply(&CohClass::basis(a.clone()), &CohClass::basis(b.clone()))
    }

    /// Splits a class into homogeneous components.
    pub fn degree(&self, a: &CohClass) -> BTreeMap<u32, CohClass> {
        a.graded_pieces()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Partition;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn grassmannian_pieri() {
        let ring = ClassicalRing::new(Quiver::grassmannian(4, 2).unwrap());
        let s1 = ring.schur(1, p(&[1])).unwrap();
        let got = ring.multiply(&s1, &s1).unwrap();
        let want = ring.schur(1, p(&[2])).unwrap().add(&ring.schur(1, p(&[1, 1])).unwrap());
        assert_eq!(got, want);
        assert_eq!(ring.multiply(&ring.one(), &s1).unwrap(), s1);
    }

    #[test]
    fn flag_first_vertex_too_wide_vanishes() {
        let ring = ClassicalRing::new(Quiver::flag(4, &[2, 1]).unwrap());
        assert!(ring.schur(1, p(&[4])).unwrap().is_zero());
        assert!(ring.schur(1, p(&[3])).unwrap().is_zero());
        assert!(ring.schur(1, p(&[3, 1])).unwrap().is_zero());
    }

    #[test]
    fn flag_second_vertex_reduction() {
        let ring = ClassicalRing::new(Quiver::flag(4, &[2, 1]).unwrap());
        let got = ring.schur(2, p(&[2])).unwrap();
        let t = |a: &[u32], b: &[u32]| SchurTuple::new(vec![p(a), p(b)]);
        let mut want = CohClass::zero();
        want.add_term(t(&[1], &[1]), int(1));
        want.add_term(t(&[1, 1], &[]), int(-1));
        assert_eq!(got, want);
    }

    #[test]
    fn flag_square_of_s2() {
        let ring = ClassicalRing::new(Quiver::flag(4, &[2, 1]).unwrap());
        let s2 = ring.schur(1, p(&[2])).unwrap();
        assert_eq!(ring.multiply(&s2, &s2).unwrap(), ring.schur(1, p(&[2, 2])).unwrap());
    }

    #[test]
    fn degree_decomposition() {
        let ring = ClassicalRing::new(Quiver::flag(4, &[2, 1]).unwrap());
        let t = SchurTuple::new(vec![p(&[2, 1]), p(&[1])]);
        assert_eq!(ring.degree(&CohClass::basis(t.clone())).keys().copied().collect::<Vec<_>>(), vec![4]);
        assert!(ring.degree(&CohClass::zero()).is_empty());
        let mixed = ring.schur(1, p(&[1])).unwrap().add(&ring.schur(1, p(&[2])).unwrap());
        assert_eq!(ring.degree(&mixed).len(), 2);
    }

    #[test]
    fn rejects_foreign_classes() {
        let ring = ClassicalRing::new(Quiver::grassmannian(4, 2).unwrap());
        let alien = CohClass::basis(SchurTuple::new(vec![p(&[1]), p(&[1])]));
        assert_eq!(ring.multiply(&alien, &ring.one()), Err(Error::QuiverMismatch));
        let wide = CohClass::basis(SchurTuple::new(vec![p(&[3])]));
        assert!(ring.multiply(&wide, &ring.one()).is_err());
    }
}
