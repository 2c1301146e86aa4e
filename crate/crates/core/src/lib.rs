//! Classical and small quantum cohomology of Fano quiver flag varieties.
//!
//! Classes live on the basis of Schur tuples `(λ_1, ..., λ_ρ)` with `λ_i` in
//! the `r_i × (s_i - r_i)` box. Products are computed by Littlewood-Richardson
//! and then reduced with rim-hook rules; [`oracle`] checks them against a
//! rewrite system on the abelianized quiver.

pub mod class;
pub mod cli;
pub mod classical;
pub mod error;
pub mod expr;
pub mod mirror;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod quantum;
pub mod quiver;
pub mod ring;
pub mod schur;

pub type Rational = num_rational::BigRational;

pub use class::{CohClass, QuantumClass};
pub use classical::ClassicalRing;
pub use error::{Error, Result};
pub use expr::PrintOrder;
pub use oracle::{Mode, RewriteSystem};
pub use partition::{Partition, SignedPartition};
pub use quantum::QuantumRing;
pub use quiver::Quiver;
pub use ring::{QMonomial, SchurTuple};
