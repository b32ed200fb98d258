//! Exclusion sets: the order of the class of `(alpha(P)) - (P)` on the
//! fiber through `P`, membership in the torsion loci `T_i(x)` and `Z_i(x)`,
//! symbolic equations for `T_{i,r}`, and certificates that a fiber
//! component is not contained in the torsion locus of the other fibration.

pub mod component;
mod equations;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{AlgebraError, Rational};
use crate::bounds::global_bound;
use crate::elliptic::order::DEFAULT_REDUCTION_PRIMES;
use crate::elliptic::{
    point_order_certified, quartic_to_weierstrass, verify_certificate, BinaryQuartic, CurvePoint, EllipticError,
    OrderCertificate, PointOrder, QuarticPoint, WeierstrassCurve,
};
use crate::surface::{Axis, FiberStatus, Surface222, SurfaceError, SurfacePoint};

pub use component::{component_certificate, ComponentCertificate, ComponentOutcome, SearchConfig};
pub use equations::{emit_t_equations, EquationConfig, ExclusionEquations};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExclusionError {
    #[error("fiber through the point is singular")]
    SingularFiber,
    #[error("r = {0} is out of range 1..={1}")]
    BadR(u32, u32),
    #[error("symbolic computation exceeds the budget: {0}")]
    Budget(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Elliptic(#[from] EllipticError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Order of the class of `(alpha(P)) - (P)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassOrder {
    Finite(u64),
    Infinite,
    /// The fiber is singular.
    Undefined,
}

impl ClassOrder {
    pub fn finite(&self) -> Option<u64> {
        match self {
            ClassOrder::Finite(n) => Some(*n),
            _ => None,
        }
    }
}

impl fmt::Display for ClassOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassOrder::Finite(n) => write!(f, "{}", n),
            ClassOrder::Infinite => write!(f, "INFINITE"),
            ClassOrder::Undefined => write!(f, "UNDEFINED"),
        }
    }
}

/// A positive integer, `"INFINITE"` or `"UNDEFINED"`.
impl Serialize for ClassOrder {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ClassOrder::Finite(n) => s.serialize_u64(*n),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for ClassOrder {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) if n > 0 => Ok(ClassOrder::Finite(n)),
            Raw::S(s) if s == "INFINITE" => Ok(ClassOrder::Infinite),
            Raw::S(s) if s == "UNDEFINED" => Ok(ClassOrder::Undefined),
            _ => Err(serde::de::Error::custom("expected a positive integer, INFINITE or UNDEFINED")),
        }
    }
}

/// The outcome of [`class_order`], with the data needed to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderResult {
    pub axis: Axis,
    pub point: SurfacePoint,
    pub fiber: FiberStatus,
    pub order: ClassOrder,
    /// Weierstrass model of the fiber with `P` as identity.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub curve: Option<WeierstrassCurve>,
    /// Image of the conjugate of `P`; minus the class of `(alpha(P)) - (P)`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub image: Option<CurvePoint>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<OrderCertificate>,
}

/// The fiber quartic and the lift `(x, z)` of the point, computed in an
/// affine chart of the axis view containing the point.
pub(crate) fn lift_to_quartic(
    s: &Surface222,
    axis: Axis,
    p: &SurfacePoint,
) -> Result<Option<(BinaryQuartic, Rational, Rational)>, ExclusionError> {
    let vp = match axis {
        Axis::One => p.clone(),
        Axis::Two => p.swapped(),
    };
    let (chart, [x, y, t], _) = s.view(axis).affine_chart(&vp);
    let slice = chart.fiber_slice(Axis::One, &crate::surface::P1::Finite(t));
    let slice = match slice {
        Ok(sl) => sl,
        Err(SurfaceError::FiberVanishes(_)) => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    if !slice.is_smooth() {
        return Ok(None);
    }
    let q = slice.quartic.clone().expect("smooth fiber has a quartic");
    let xs = std::slice::from_ref(&x);
    let z = slice.a.eval(xs) * &y * Rational::from_integer(2.into()) + slice.b.eval(xs);
    Ok(Some((q, x, z)))
}

pub fn class_order(s: &Surface222, axis: Axis, p: &SurfacePoint) -> Result<OrderResult, ExclusionError> {
    class_order_with(s, axis, p, DEFAULT_REDUCTION_PRIMES)
}

pub fn class_order_with(
    s: &Surface222,
    axis: Axis,
    p: &SurfacePoint,
    nprimes: usize,
) -> Result<OrderResult, ExclusionError> {
    if !s.contains(p) {
        return Err(SurfaceError::NotOnSurface.into());
    }
    let undefined = OrderResult {
        axis,
        point: p.clone(),
        fiber: FiberStatus::Singular,
        order: ClassOrder::Undefined,
        curve: None,
        image: None,
        certificate: None,
    };
    let (q, x, z) = match lift_to_quartic(s, axis, p)? {
        Some(v) => v,
        None => return Ok(undefined),
    };
    let smooth = |order, curve, image, certificate| OrderResult {
        axis,
        point: p.clone(),
        fiber: FiberStatus::Smooth,
        order,
        curve,
        image,
        certificate,
    };
    if z.is_zero() {
        return Ok(smooth(ClassOrder::Finite(1), None, None, None));
    }
    let map = quartic_to_weierstrass(&q, &QuarticPoint::affine(x, z))?;
    let image = map.conjugate_base_image();
    let cert = point_order_certified(&map.curve, &image, nprimes)?;
    let order = match cert.order {
        PointOrder::Infinite => ClassOrder::Infinite,
        PointOrder::Finite(n) => {
            let b1 = global_bound(1).expect("degree 1").bound;
            if num_bigint::BigUint::from(n) > b1 {
                return Err(ExclusionError::Internal(format!("order {} exceeds B(1)", n)));
            }
            ClassOrder::Finite(n)
        }
    };
    Ok(smooth(order, Some(map.curve.clone()), Some(image), Some(cert)))
}

impl OrderResult {
    /// Recomputes the result and checks the stored certificate.
    pub fn recheck(&self, s: &Surface222) -> bool {
        let fresh = match class_order(s, self.axis, &self.point) {
            Ok(r) => r,
            Err(_) => return false,
        };
        if fresh.order != self.order || fresh.fiber != self.fiber || fresh.curve != self.curve || fresh.image != self.image {
            return false;
        }
        match (&self.curve, &self.image, &self.certificate) {
            (Some(c), Some(i), Some(cert)) => {
                let stated = match self.order {
                    ClassOrder::Finite(n) => PointOrder::Finite(n),
                    ClassOrder::Infinite => PointOrder::Infinite,
                    ClassOrder::Undefined => return false,
                };
                cert.order == stated && verify_certificate(c, i, cert)
            }
            (None, None, None) => matches!(self.order, ClassOrder::Finite(1) | ClassOrder::Undefined),
            _ => false,
        }
    }
}

/// Three-valued membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tri {
    Yes,
    No,
    Undefined,
}

impl From<bool> for Tri {
    fn from(b: bool) -> Tri {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }
}

/// Condition `Xi_i(x)`: no order `r > x`. Requires a smooth fiber.
pub fn satisfies_xi(s: &Surface222, axis: Axis, p: &SurfacePoint, x: u64) -> Result<bool, ExclusionError> {
    match class_order(s, axis, p)?.order {
        ClassOrder::Undefined => Err(ExclusionError::SingularFiber),
        ClassOrder::Infinite => Ok(true),
        ClassOrder::Finite(n) => Ok(n <= x),
    }
}

/// Membership in `T_i(x)`; undefined on singular fibers.
pub fn in_t_up_to(s: &Surface222, axis: Axis, p: &SurfacePoint, x: u64) -> Result<Tri, ExclusionError> {
    Ok(match class_order(s, axis, p)?.order {
        ClassOrder::Undefined => Tri::Undefined,
        ClassOrder::Infinite => Tri::No,
        ClassOrder::Finite(n) => Tri::from(n <= x),
    })
}

/// Membership in `Z_i(x)` with a caveat when the answer rests on the
/// closure policy at a singular fiber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZMembership {
    pub member: Tri,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caveat: Option<String>,
}

pub const CLOSURE_CAVEAT: &str =
    "nonsingular point of a singular fiber: membership in the closure of the torsion locus is not decided";

pub fn in_z(s: &Surface222, axis: Axis, p: &SurfacePoint, x: u64, strict: bool) -> Result<ZMembership, ExclusionError> {
    let r = class_order(s, axis, p)?;
    if r.fiber == FiberStatus::Singular {
        if s.is_fiber_singular_point(axis, p)? {
            return Ok(ZMembership {
                member: Tri::Yes,
                caveat: None,
            });
        }
        return Ok(ZMembership {
            member: if strict { Tri::Undefined } else { Tri::No },
            caveat: Some(CLOSURE_CAVEAT.into()),
        });
    }
    let member = match r.order {
        ClassOrder::Finite(n) => Tri::from(n <= x),
        _ => Tri::No,
    };
    Ok(ZMembership { member, caveat: None })
}
