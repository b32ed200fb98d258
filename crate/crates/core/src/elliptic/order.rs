//! Exact orders of rational points.
//!
//! For an odd prime `p` of good reduction, reduction mod `p` is injective
//! on the torsion of E(Q) (the kernel of reduction has no torsion because
//! the ramification index 1 is below `p - 1`). Hence a torsion point of
//! order `m` reduces to a point of order exactly `m` modulo every good odd
//! prime, and `m` divides every `#E(F_p)`. The test below therefore:
//!
//! 1. reduces modulo a few good primes `p >= 5`; if the point meets the
//!    identity modulo some `p` (a `p` in its denominators), it has infinite
//!    order;
//! 2. if the orders of the reductions disagree, the point has infinite
//!    order;
//! 3. otherwise multiplies the point by the common order `m` over Q; the
//!    point is torsion iff the result is the identity.
//!
//! Each INFINITE answer is a proof, not a heuristic, and how many primes are
//! used only affects speed.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::curve::{CurvePoint, WeierstrassCurve};
use super::modp::{gcd_u64, CurveModP, PointModP};
use super::EllipticError;

pub const DEFAULT_REDUCTION_PRIMES: usize = 3;
/// Extra primes tried when the first ones agree on a large common order.
const EXTRA_PRIMES: usize = 6;
/// Common orders above this trigger the extra primes before the exact check.
const LARGE_COMMON_ORDER: u64 = 16;
const PRIME_SEARCH_LIMIT: u64 = 20_000;

/// Serialized as a positive integer or `"INFINITE"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointOrder {
    Finite(u64),
    Infinite,
}

impl Serialize for PointOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            PointOrder::Finite(n) => s.serialize_u64(*n),
            PointOrder::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

impl<'de> Deserialize<'de> for PointOrder {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) if n > 0 => Ok(PointOrder::Finite(n)),
            Raw::S(s) if s == "INFINITE" => Ok(PointOrder::Infinite),
            _ => Err(serde::de::Error::custom("expected a positive integer or INFINITE")),
        }
    }
}

impl PointOrder {
    pub fn finite(&self) -> Option<u64> {
        match self {
            PointOrder::Finite(n) => Some(*n),
            PointOrder::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, PointOrder::Infinite)
    }
}

/// One reduction used by the order computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub p: u64,
    pub group_order: u64,
    /// Order of the reduced point; 1 when it reduces to the identity.
    pub point_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCertificate {
    pub order: PointOrder,
    pub reductions: Vec<Reduction>,
    /// gcd of the group orders.
    pub gcd: u64,
    pub reason: String,
}

/// Good odd primes `p >= 5` for the curve (no denominators of `A`, `B`
/// divisible by `p`, nonzero discriminant mod `p`), in increasing order.
pub fn good_primes(curve: &WeierstrassCurve) -> impl Iterator<Item = u64> + '_ {
    (5..PRIME_SEARCH_LIMIT)
        .filter(|&p| crate::bounds::is_prime(p))
        .filter(move |&p| CurveModP::reduce(curve, p).is_ok())
}

pub fn point_order(curve: &WeierstrassCurve, pt: &CurvePoint) -> Result<PointOrder, EllipticError> {
    Ok(point_order_certified(curve, pt, DEFAULT_REDUCTION_PRIMES)?.order)
}

pub fn point_order_certified(
    curve: &WeierstrassCurve,
    pt: &CurvePoint,
    nprimes: usize,
) -> Result<OrderCertificate, EllipticError> {
    if curve.discriminant().is_zero() {
        return Err(EllipticError::Singular);
    }
    if !curve.contains(pt) {
        return Err(EllipticError::NotOnCurve);
    }
    match pt {
        CurvePoint::Infinity => {
            return Ok(OrderCertificate {
                order: PointOrder::Finite(1),
                reductions: Vec::new(),
                gcd: 0,
                reason: "identity".into(),
            })
        }
        CurvePoint::Affine(_, y) if y.is_zero() => {
            return Ok(OrderCertificate {
                order: PointOrder::Finite(2),
                reductions: Vec::new(),
                gcd: 0,
                reason: "y = 0".into(),
            })
        }
        CurvePoint::Affine(..) => {}
    }
    let mut reductions = Vec::new();
    let mut g = 0u64;
    let mut primes = good_primes(curve);
    let mut budget = nprimes.max(1);
    let mut extended = false;
    loop {
        while reductions.len() < budget {
            let p = primes.next().ok_or(EllipticError::NoGoodPrimes)?;
            let e = CurveModP::reduce(curve, p)?;
            let n = e.count_points();
            g = gcd_u64(g, n);
            let r = e.reduce_point(pt);
            let m = if r == PointModP::Infinity { 1 } else { e.point_order(&r, n) };
            reductions.push(Reduction {
                p,
                group_order: n,
                point_order: m,
            });
            if m == 1 {
                return Ok(OrderCertificate {
                    order: PointOrder::Infinite,
                    reductions,
                    gcd: g,
                    reason: format!("reduces to the identity modulo {p}"),
                });
            }
            let first = reductions[0].point_order;
            if m != first {
                return Ok(OrderCertificate {
                    order: PointOrder::Infinite,
                    reductions,
                    gcd: g,
                    reason: "reductions have different orders".into(),
                });
            }
        }
        let m = reductions[0].point_order;
        if m > LARGE_COMMON_ORDER && !extended {
            extended = true;
            budget += EXTRA_PRIMES;
            continue;
        }
        let order = if curve.scalar_mul(m as i64, pt).is_infinity() {
            PointOrder::Finite(m)
        } else {
            PointOrder::Infinite
        };
        let reason = match order {
            PointOrder::Finite(_) => format!("[{m}]P = O over Q and every reduction has order {m}"),
            PointOrder::Infinite => format!("[{m}]P != O over Q although every reduction has order {m}"),
        };
        return Ok(OrderCertificate {
            order,
            reductions,
            gcd: g,
            reason,
        });
    }
}

/// Replays a certificate: the stated primes are good, the counts and
/// reduced orders are right, and the conclusion follows.
pub fn verify_certificate(
    curve: &WeierstrassCurve,
    pt: &CurvePoint,
    cert: &OrderCertificate,
) -> bool {
    if !curve.contains(pt) || curve.discriminant().is_zero() {
        return false;
    }
    let fresh = match pt {
        CurvePoint::Affine(_, y) if !y.is_zero() => true,
        _ => false,
    };
    if !fresh {
        return matches!(
            (pt, cert.order),
            (CurvePoint::Infinity, PointOrder::Finite(1)) | (CurvePoint::Affine(..), PointOrder::Finite(2))
        );
    }
    let mut g = 0;
    for r in &cert.reductions {
        let e = match CurveModP::reduce(curve, r.p) {
            Ok(e) => e,
            Err(_) => return false,
        };
        let n = e.count_points();
        let red = e.reduce_point(pt);
        let m = if red == PointModP::Infinity { 1 } else { e.point_order(&red, n) };
        if n != r.group_order || m != r.point_order {
            return false;
        }
        g = gcd_u64(g, n);
    }
    if g != cert.gcd || cert.reductions.is_empty() {
        return false;
    }
    let orders: Vec<u64> = cert.reductions.iter().map(|r| r.point_order).collect();
    match cert.order {
        PointOrder::Infinite => {
            orders.contains(&1)
                || orders.windows(2).any(|w| w[0] != w[1])
                || !curve.scalar_mul(orders[0] as i64, pt).is_infinity()
        }
        PointOrder::Finite(m) => {
            orders.iter().all(|&o| o == m) && curve.scalar_mul(m as i64, pt).is_infinity()
        }
    }
}

/// Smallest `n >= 1` with `[n]P = O` among `1..=limit`, by repeated
/// addition. Used as an independent oracle in tests.
pub fn brute_force_order(curve: &WeierstrassCurve, pt: &CurvePoint, limit: u64) -> Option<u64> {
    let mut acc = pt.clone();
    for n in 1..=limit {
        if acc.is_infinity() {
            return Some(n);
        }
        acc = curve.add(&acc, pt);
    }
    None
}
