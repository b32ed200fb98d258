//! Elliptic curves over Q in short Weierstrass form: group law, division
//! polynomials, reduction mod p, certified point orders and quartic models.

pub mod curve;
pub mod divpoly;
pub mod modp;
pub mod order;
pub mod quartic;
pub mod ring;

pub use curve::{CurvePoint, WeierstrassCurve};
pub use divpoly::{division_polynomial, DivisionPolynomial};
pub use order::{point_order, point_order_certified, verify_certificate, OrderCertificate, PointOrder};
pub use quartic::{jacobian_of_quartic, quartic_to_weierstrass, BinaryQuartic, QuarticMap, QuarticPoint};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EllipticError {
    #[error("curve is singular")]
    Singular,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("multiplier must be at least 1, got {0}")]
    BadMultiplier(i64),
    #[error("{0} is not an odd prime")]
    BadPrime(u64),
    #[error("curve has bad reduction at {0}")]
    BadReduction(u64),
    #[error("no good primes found")]
    NoGoodPrimes,
    #[error("quartic has a repeated root")]
    DegenerateQuartic,
    #[error("quartic is identically zero")]
    ZeroQuartic,
}
