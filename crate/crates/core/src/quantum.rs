//! The small quantum cohomology ring of a Fano quiver flag variety.
//!
//! Products are Littlewood-Richardson products followed by the quantum
//! rim-hook rule, which adds a `q_i` correction through the arrows leaving
//! vertex `i`. The abelian parameters are already specialized: each `q_ij`
//! appears as `(-1)^{r_i - 1} q_i`, so a class only ever carries one `q`
//! per vertex.

use crate::class::{CohClass, QuantumClass};
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::ring::{enumerate_basis, QMonomial, RawClass, Reducer, SchurTuple};
use crate::{Partition, Rational};

pub struct QuantumRing {
    reducer: Reducer,
}

impl QuantumRing {
    /// Fails for non-Fano quivers, where the reduction need not terminate.
    pub fn new(quiver: Quiver) -> Result<Self> {
        quiver.require_fano()?;
        Ok(QuantumRing {
            reducer: Reducer::new(quiver, true),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        self.reducer.quiver()
    }

    pub fn basis(&self) -> Vec<SchurTuple> {
        enumerate_basis(self.quiver())
    }

    pub fn one(&self) -> QuantumClass {
        QuantumClass::one(self.quiver().rho())
    }

    /// `q_vertex`.
    pub fn q(&self, vertex: usize) -> Result<QuantumClass> {
        let rho = self.quiver().rho();
        if vertex == 0 || vertex > rho {
            return Err(Error::NoSuchVertex { vertex, rho });
        }
        Ok(QuantumClass::q_power(QMonomial::q(rho, vertex)))
    }

    /// `s^vertex_λ` reduced to the basis.
    pub fn schur(&self, vertex: usize, lambda: Partition) -> Result<QuantumClass> {
        let rho = self.quiver().rho();
        if vertex == 0 || vertex > rho {
            return Err(Error::NoSuchVertex { vertex, rho });
        }
        let mut raw = RawClass::new();
        raw.insert(
            (QMonomial::one(rho), SchurTuple::single(rho, vertex, lambda)),
            Rational::from_integer(1.into()),
        );
        self.reduce(&raw)
    }

    /// Reduces a combination of `q^d * tuple` terms of arbitrary width.
    pub fn reduce(&self, raw: &RawClass) -> Result<QuantumClass> {
        Ok(QuantumClass::from_raw(self.reducer.reduce(raw)?))
    }

    pub fn multiply(&self, a: &QuantumClass, b: &QuantumClass) -> Result<QuantumClass> {
        a.check_basis(self.quiver())?;
        b.check_basis(self.quiver())?;
        Ok(QuantumClass::from_raw(self.reducer.multiply(a.raw(), b.raw())?))
    }

    pub fn multiply_basis(&self, a: &SchurTuple, b: &SchurTuple) -> Result<QuantumClass> {
        self.multiply(&QuantumClass::basis(a.clone()), &QuantumClass::basis(b.clone()))
    }

    /// The `q -> 0` limit.
    pub fn classical_limit(&self, a: &QuantumClass) -> CohClass {
        a.classical_part()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn fl421() -> QuantumRing {
        QuantumRing::new(Quiver::flag(4, &[2, 1]).unwrap()).unwrap()
    }

    fn tuple(a: &[u32], b: &[u32]) -> SchurTuple {
        SchurTuple::new(vec![p(a), p(b)])
    }

    #[test]
    fn flag_421_identities() {
        let ring = fl421();
        let q1 = QMonomial::new(vec![1, 0]);
        let q2 = QMonomial::new(vec![0, 1]);
        let one = QMonomial::new(vec![0, 0]);

        assert_eq!(ring.schur(1, p(&[3])).unwrap(), ring.q(1).unwrap());

        let mut want = QuantumClass::zero();
        want.add_term(q1.clone(), tuple(&[], &[1]), int(1));
        assert_eq!(ring.schur(1, p(&[3, 1])).unwrap(), want);

        let mut want = QuantumClass::zero();
        want.add_term(q1.clone(), tuple(&[1], &[1]), int(1));
        want.add_term(q1.clone(), tuple(&[1, 1], &[]), int(-1));
        assert_eq!(ring.schur(1, p(&[3, 2])).unwrap(), want);

        let mut want = QuantumClass::zero();
        want.add_term(q2, tuple(&[], &[]), int(1));
        want.add_term(one.clone(), tuple(&[1], &[1]), int(1));
        want.add_term(one, tuple(&[1, 1], &[]), int(-1));
        assert_eq!(ring.schur(2, p(&[2])).unwrap(), want);
    }

    #[test]
    fn flag_421_square() {
        let ring = fl421();
        let s2 = ring.schur(1, p(&[2])).unwrap();
        let got = ring.multiply(&s2, &s2).unwrap();
        let mut want = QuantumClass::zero();
        want.add_term(QMonomial::new(vec![0, 0]), tuple(&[2, 2], &[]), int(1));
        want.add_term(QMonomial::new(vec![1, 0]), tuple(&[1], &[]), int(1));
        assert_eq!(got, want);

        // the intermediate s^1_(4) = q_1 (s^1_(1) - s^2_(1))
        let mut want = QuantumClass::zero();
        want.add_term(QMonomial::new(vec![1, 0]), tuple(&[1], &[]), int(1));
        want.add_term(QMonomial::new(vec![1, 0]), tuple(&[], &[1]), int(-1));
        assert_eq!(ring.schur(1, p(&[4])).unwrap(), want);
    }

    #[test]
    fn projective_space_hyperplane_power() {
        for n in 2..=6u32 {
            let ring = QuantumRing::new(Quiver::grassmannian(n, 1).unwrap()).unwrap();
            let x = ring.schur(1, p(&[1])).unwrap();
            let top = ring.schur(1, p(&[n - 1])).unwrap();
            assert_eq!(ring.multiply(&x, &top).unwrap(), ring.q(1).unwrap());
        }
    }

    #[test]
    fn classical_limit_drops_q() {
        let ring = fl421();
        let s = ring.schur(2, p(&[2])).unwrap();
        let limit = ring.classical_limit(&s);
        assert!(!limit.is_zero());
        assert_eq!(limit.to_quantum(), s.sub(&ring.q(2).unwrap()));
        assert!(ring.classical_limit(&ring.q(1).unwrap()).is_zero());
        let classical = ring.schur(1, p(&[1])).unwrap();
        assert_eq!(ring.classical_limit(&classical).to_quantum(), classical);
    }

    #[test]
    fn rejects_non_fano() {
        let q = Quiver::new(&[1, 4], &[(0, 1, 2), (1, 2, 5)]).unwrap();
        assert!(matches!(QuantumRing::new(q), Err(Error::NotFano { vertex: 1, .. })));
    }
}
