//! Exact invariant theory for sixteen-dimensional semisimple Hopf algebras
//! acting on quadratic AS regular algebras.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod hopf;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod reptheory;
pub mod rewrite;
pub mod scalar;
pub mod tables;
pub mod twist;

pub use error::{Error, Result};

/// Exact rationals.
pub type Rat = num_rational::BigRational;
/// The eighth cyclotomic field over exact rationals.
pub type Cyc = scalar::Cyc8<Rat>;
/// Free-algebra polynomials with cyclotomic coefficients.
pub type Poly = poly::Poly<Cyc>;
