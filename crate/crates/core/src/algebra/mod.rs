//! Exact arithmetic: rationals, sparse polynomials in up to three
//! variables, rational functions, gcds, resultants, discriminants and
//! rational roots. No floating point is used anywhere in this module.

pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod resultant;
pub mod univariate;

pub use poly::{Exponents, Polynomial};
pub use ratfunc::RationalFunction;
pub use rational::Rational;
pub use resultant::{discriminant, poly_gcd, resultant};
pub use univariate::{rational_roots, squarefree_part};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("polynomial arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("expected a univariate polynomial")]
    NotUnivariate,
    #[error("variable index {0} out of range")]
    BadVariable(usize),
    #[error("degree in the eliminated variable must be at least {needed}")]
    DegreeTooLow { needed: u32 },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not exact")]
    InexactDivision,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}
