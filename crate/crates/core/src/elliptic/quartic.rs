//! Genus-one double covers `z^2 = q(x)` of the line, with `q` a binary
//! quartic: classical invariants, the Jacobian, and an explicit
//! isomorphism to a short Weierstrass model sending a chosen rational point
//! to the identity.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::curve::{CurvePoint, WeierstrassCurve};
use super::EllipticError;
use crate::algebra::rational::{self, int, Rational};
use crate::algebra::Polynomial;

/// `q(x) = a0 x^4 + a1 x^3 + a2 x^2 + a3 x + a4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryQuartic {
    #[serde(with = "rational::serde_str_vec")]
    coeffs: Vec<Rational>,
}

/// A point of `z^2 = q(x)`. The two points over `x = infinity` exist over
/// Q when `a0` is a nonzero square; `sign` picks `z / x^2 -> sign * sqrt(a0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuarticPoint {
    Affine { x: Rational, z: Rational },
    Infinity { sign: i8 },
}

impl QuarticPoint {
    pub fn affine(x: Rational, z: Rational) -> Self {
        QuarticPoint::Affine { x, z }
    }

    /// The image under `z -> -z`.
    pub fn conjugate(&self) -> Self {
        match self {
            QuarticPoint::Affine { x, z } => QuarticPoint::Affine {
                x: x.clone(),
                z: -z,
            },
            QuarticPoint::Infinity { sign } => QuarticPoint::Infinity { sign: -sign },
        }
    }
}

impl BinaryQuartic {
    /// Coefficients from `a0` (the `x^4` coefficient) down to `a4`.
    pub fn new(coeffs: [Rational; 5]) -> Result<Self, EllipticError> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(EllipticError::ZeroQuartic);
        }
        Ok(BinaryQuartic {
            coeffs: coeffs.to_vec(),
        })
    }

    pub fn from_ints(c: [i64; 5]) -> Result<Self, EllipticError> {
        Self::new(c.map(int))
    }

    /// From a univariate polynomial of degree at most 4.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self, EllipticError> {
        let d = p.to_dense();
        if d.len() > 5 {
            return Err(EllipticError::DegenerateQuartic);
        }
        let mut c: [Rational; 5] = Default::default();
        for (k, v) in d.into_iter().enumerate() {
            c[4 - k] = v;
        }
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn polynomial(&self) -> Polynomial {
        let asc: Vec<Rational> = self.coeffs.iter().rev().cloned().collect();
        Polynomial::from_coeffs(&asc)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `(I, J)` with `I = 12 a0 a4 - 3 a1 a3 + a2^2` and
    /// `J = 72 a0 a2 a4 + 9 a1 a2 a3 - 27 a0 a3^2 - 27 a1^2 a4 - 2 a2^3`.
    pub fn invariants(&self) -> (Rational, Rational) {
        let [a, b, c, d, e] = [0, 1, 2, 3, 4].map(|i| &self.coeffs[i]);
        let i = a * e * int(12) - b * d * int(3) + c * c;
        let j = a * c * e * int(72) + b * c * d * int(9)
            - a * d * d * int(27)
            - b * b * e * int(27)
            - c * c * c * int(2);
        (i, j)
    }

    /// Discriminant of the binary form, `(4 I^3 - J^2) / 27`; nonzero iff
    /// `q` has four distinct roots on the projective line.
    pub fn discriminant(&self) -> Rational {
        let (i, j) = self.invariants();
        (rational::pow(&i, 3) * int(4) - &j * &j) / int(27)
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.discriminant().is_zero()
    }

    /// `q(x + shift)`.
    pub fn translate(&self, shift: &Rational) -> BinaryQuartic {
        // Horner-style Taylor shift on ascending coefficients
        let mut asc: Vec<Rational> = self.coeffs.iter().rev().cloned().collect();
        let n = asc.len();
        for i in 0..n {
            for k in (i..n - 1).rev() {
                let add = &asc[k + 1] * shift;
                asc[k] += add;
            }
        }
        let mut c: [Rational; 5] = Default::default();
        for (k, v) in asc.into_iter().enumerate() {
            c[4 - k] = v;
        }
        BinaryQuartic { coeffs: c.to_vec() }
    }

    /// `x^4 q(1/x)`.
    pub fn reversed(&self) -> BinaryQuartic {
        BinaryQuartic {
            coeffs: self.coeffs.iter().rev().cloned().collect(),
        }
    }

    pub fn contains(&self, pt: &QuarticPoint) -> bool {
        match pt {
            QuarticPoint::Affine { x, z } => z * z == self.eval(x),
            QuarticPoint::Infinity { sign } => {
                (*sign == 1 || *sign == -1) && !self.leading().is_zero() && rational::is_square(self.leading())
            }
        }
    }
}

/// `Y^2 = X^3 - 27 I X - 27 J`, the Jacobian of `z^2 = q(x)`.
pub fn jacobian_of_quartic(q: &BinaryQuartic) -> Result<WeierstrassCurve, EllipticError> {
    if !q.is_nondegenerate() {
        return Err(EllipticError::DegenerateQuartic);
    }
    let (i, j) = q.invariants();
    WeierstrassCurve::new(-i * int(27), -j * int(27))
}

/// Long Weierstrass coefficients `[a1, a2, a3, a4, a6]`.
type LongCoeffs = [Rational; 5];

fn long_to_short(l: &LongCoeffs) -> (Rational, Rational, Rational) {
    let [a1, a2, a3, a4, a6] = l;
    let b2 = a1 * a1 + a2 * int(4);
    let b4 = a4 * int(2) + a1 * a3;
    let b6 = a3 * a3 + a6 * int(4);
    let c4 = &b2 * &b2 - &b4 * int(24);
    let c6 = -rational::pow(&b2, 3) + &b2 * &b4 * int(36) - &b6 * int(216);
    (-c4 / int(48), -c6 / int(864), b2)
}

#[derive(Clone, Debug)]
enum MapKind {
    /// Base point `(x0, s)` with `s != 0`; `shifted = q(x + x0)`.
    Generic { x0: Rational, s: Rational, shifted: BinaryQuartic },
    /// Base point `(x0, 0)`.
    Branch { x0: Rational, shifted: BinaryQuartic },
    /// Base point at infinity, handled through `x -> 1/x`.
    AtInfinity(Box<QuarticMap>),
}

/// An isomorphism from `z^2 = q(x)` to a short Weierstrass curve taking the
/// base point to the identity.
#[derive(Clone, Debug)]
pub struct QuarticMap {
    pub curve: WeierstrassCurve,
    long: LongCoeffs,
    kind: MapKind,
}

pub fn quartic_to_weierstrass(q: &BinaryQuartic, base: &QuarticPoint) -> Result<QuarticMap, EllipticError> {
    if !q.is_nondegenerate() {
        return Err(EllipticError::DegenerateQuartic);
    }
    if !q.contains(base) {
        return Err(EllipticError::NotOnCurve);
    }
    match base {
        QuarticPoint::Infinity { sign } => {
            let s = rational::sqrt(q.leading()).expect("checked by contains") * int(*sign as i64);
            let inner = quartic_to_weierstrass(&q.reversed(), &QuarticPoint::affine(Rational::zero(), s))?;
            Ok(QuarticMap {
                curve: inner.curve.clone(),
                long: inner.long.clone(),
                kind: MapKind::AtInfinity(Box::new(inner)),
            })
        }
        QuarticPoint::Affine { x, z } if z.is_zero() => {
            let shifted = q.translate(x);
            let [a, b, c, d, _] = [0, 1, 2, 3, 4].map(|i| shifted.coeffs[i].clone());
            // Y^2 = X^3 + c X^2 + b d X + a d^2 with X = d/u, Y = d z / u^2
            let long = [Rational::zero(), c, Rational::zero(), &b * &d, &a * &d * &d];
            let (ca, cb, _) = long_to_short(&long);
            Ok(QuarticMap {
                curve: WeierstrassCurve::new(ca, cb)?,
                long,
                kind: MapKind::Branch { x0: x.clone(), shifted },
            })
        }
        QuarticPoint::Affine { x, z } => {
            let shifted = q.translate(x);
            let [a, b, c, d, _] = [0, 1, 2, 3, 4].map(|i| shifted.coeffs[i].clone());
            let s = z.clone();
            let a1 = &d / &s;
            let a2 = &c - &d * &d / (&s * &s * int(4));
            let a3 = &s * &b * int(2);
            let a4 = -(&s * &s * &a * int(4));
            let a6 = &a2 * &a4;
            let long = [a1, a2, a3, a4, a6];
            let (ca, cb, _) = long_to_short(&long);
            Ok(QuarticMap {
                curve: WeierstrassCurve::new(ca, cb)?,
                long,
                kind: MapKind::Generic {
                    x0: x.clone(),
                    s,
                    shifted,
                },
            })
        }
    }
}

impl QuarticMap {
    fn to_short(&self, xl: Rational, yl: Rational) -> CurvePoint {
        let [a1, _, a3, _, _] = &self.long;
        let (_, _, b2) = long_to_short(&self.long);
        let ys = &yl + (a1 * &xl + a3) / int(2);
        let xs = xl + b2 / int(12);
        CurvePoint::Affine(xs, ys)
    }

    /// Image of a point of the quartic model; `None` where the formulas
    /// are not regular.
    pub fn forward(&self, pt: &QuarticPoint) -> Option<CurvePoint> {
        match &self.kind {
            MapKind::AtInfinity(inner) => match pt {
                QuarticPoint::Infinity { sign } => {
                    let s = rational::sqrt(inner_leading_of_reversed(inner)?)? * int(*sign as i64);
                    inner.forward(&QuarticPoint::affine(Rational::zero(), s))
                }
                QuarticPoint::Affine { x, z } if x.is_zero() => {
                    if z.is_zero() {
                        return None;
                    }
                    let sign = if z.is_positive() { 1 } else { -1 };
                    inner.forward(&QuarticPoint::Infinity { sign })
                }
                QuarticPoint::Affine { x, z } => {
                    let u = x.recip();
                    inner.forward(&QuarticPoint::affine(u.clone(), z * &u * &u))
                }
            },
            MapKind::Branch { x0, shifted } => {
                let d = &shifted.coeffs[3];
                match pt {
                    QuarticPoint::Affine { x, z } => {
                        let u = x - x0;
                        if u.is_zero() {
                            return Some(CurvePoint::Infinity);
                        }
                        Some(self.to_short(d / &u, d * z / (&u * &u)))
                    }
                    QuarticPoint::Infinity { sign } => {
                        let r = rational::sqrt(shifted.leading())?;
                        Some(self.to_short(Rational::zero(), d * r * int(*sign as i64)))
                    }
                }
            }
            MapKind::Generic { x0, s, shifted } => {
                let [a, _, c, d, _] = [0, 1, 2, 3, 4].map(|i| &shifted.coeffs[i]);
                match pt {
                    QuarticPoint::Affine { x, z } => {
                        let u = x - x0;
                        if u.is_zero() {
                            if z == s {
                                return Some(CurvePoint::Infinity);
                            }
                            let [a1, a2, a3, _, _] = &self.long;
                            return Some(self.to_short(-a2.clone(), a1 * a2 - a3));
                        }
                        let u2 = &u * &u;
                        let xl = (s * (z + s) * int(2) + d * &u) / &u2;
                        let yl = (s * s * (z + s) * int(4) + s * (d * &u + c * &u2) * int(2)
                            - d * d * &u2 / (s * int(2)))
                            / (&u2 * &u);
                        Some(self.to_short(xl, yl))
                    }
                    QuarticPoint::Infinity { sign } => {
                        let r = rational::sqrt(a)?;
                        Some(self.to_short(s * r * int(2 * *sign as i64), Rational::zero()))
                    }
                }
            }
        }
    }

    /// Image of the base point's conjugate `(x0, -z0)`.
    pub fn conjugate_base_image(&self) -> CurvePoint {
        match &self.kind {
            MapKind::Branch { .. } => CurvePoint::Infinity,
            MapKind::Generic { x0, s, .. } => self
                .forward(&QuarticPoint::affine(x0.clone(), -s.clone()))
                .expect("regular at the conjugate base point"),
            MapKind::AtInfinity(inner) => inner.conjugate_base_image(),
        }
    }
}

fn inner_leading_of_reversed(inner: &QuarticMap) -> Option<&Rational> {
    match &inner.kind {
        MapKind::Generic { shifted, .. } | MapKind::Branch { shifted, .. } => Some(shifted.leading()),
        MapKind::AtInfinity(_) => None,
    }
}
