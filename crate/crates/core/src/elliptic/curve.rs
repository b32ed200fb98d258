//! Short Weierstrass curves over Q and their group law.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::EllipticError;
use crate::algebra::rational::{self, int, Rational};

/// `y^2 = x^3 + a x + b` over Q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeierstrassCurve {
    #[serde(rename = "A", with = "rational::serde_str")]
    pub a: Rational,
    #[serde(rename = "B", with = "rational::serde_str")]
    pub b: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurvePoint {
    Infinity,
    Affine(Rational, Rational),
}

/// `"infinity"` or `["x", "y"]`.
impl Serialize for CurvePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CurvePoint::Infinity => s.serialize_str("infinity"),
            CurvePoint::Affine(x, y) => [rational::to_string(x), rational::to_string(y)].serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for CurvePoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Tag(String),
            Pair(Vec<String>),
        }
        match Raw::deserialize(d)? {
            Raw::Tag(t) if t == "infinity" => Ok(CurvePoint::Infinity),
            Raw::Pair(v) if v.len() == 2 => {
                let x = rational::parse(&v[0]).map_err(serde::de::Error::custom)?;
                let y = rational::parse(&v[1]).map_err(serde::de::Error::custom)?;
                Ok(CurvePoint::Affine(x, y))
            }
            _ => Err(serde::de::Error::custom("expected \"infinity\" or a pair of rationals")),
        }
    }
}

impl CurvePoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        CurvePoint::Affine(x, y)
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn neg(&self) -> CurvePoint {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(x.clone(), -y),
        }
    }
}

impl WeierstrassCurve {
    pub fn new(a: Rational, b: Rational) -> Result<Self, EllipticError> {
        let c = WeierstrassCurve { a, b };
        if c.discriminant().is_zero() {
            return Err(EllipticError::Singular);
        }
        Ok(c)
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self, EllipticError> {
        Self::new(int(a), int(b))
    }

    /// `-16 (4A^3 + 27B^2)`.
    pub fn discriminant(&self) -> Rational {
        let four_a3 = rational::pow(&self.a, 3) * int(4);
        let b2 = &self.b * &self.b * int(27);
        -(four_a3 + b2) * int(16)
    }

    pub fn j_invariant(&self) -> Result<Rational, EllipticError> {
        let four_a3 = rational::pow(&self.a, 3) * int(4);
        let den = &four_a3 + &self.b * &self.b * int(27);
        if den.is_zero() {
            return Err(EllipticError::Singular);
        }
        Ok(four_a3 * int(1728) / den)
    }

    pub fn rhs(&self, x: &Rational) -> Rational {
        x * x * x + &self.a * x + &self.b
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => y * y == self.rhs(x),
        }
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let lambda = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return CurvePoint::Infinity;
            }
            (x1 * x1 * int(3) + &self.a) / (y1 * int(2))
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &lambda * &lambda - x1 - x2;
        let y3 = &lambda * (x1 - &x3) - y1;
        CurvePoint::Affine(x3, y3)
    }

    pub fn double(&self, p: &CurvePoint) -> CurvePoint {
        self.add(p, p)
    }

    /// `[n]P` by double-and-add; negative `n` negates.
    pub fn scalar_mul(&self, n: i64, p: &CurvePoint) -> CurvePoint {
        let mut k = n.unsigned_abs();
        let mut base = if n < 0 { p.neg() } else { p.clone() };
        let mut acc = CurvePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.double(&base);
            }
        }
        acc
    }

    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn pt(x: i64, y: i64) -> CurvePoint {
        CurvePoint::Affine(int(x), int(y))
    }

    #[test]
    fn j_invariant_examples() {
        assert_eq!(WeierstrassCurve::from_ints(1, 0).unwrap().j_invariant().unwrap(), int(1728));
        assert_eq!(WeierstrassCurve::from_ints(0, 1).unwrap().j_invariant().unwrap(), int(0));
        assert_eq!(WeierstrassCurve::from_ints(1, 1).unwrap().j_invariant().unwrap(), rat(6912, 31));
        assert!(matches!(WeierstrassCurve::from_ints(0, 0), Err(EllipticError::Singular)));
        assert!(matches!(WeierstrassCurve::from_ints(-3, 2), Err(EllipticError::Singular)));
    }

    #[test]
    fn group_law_on_x3_plus_1() {
        let e = WeierstrassCurve::from_ints(0, 1).unwrap();
        let p = pt(2, 3);
        assert_eq!(e.add(&p, &CurvePoint::Infinity), p);
        assert_eq!(e.scalar_mul(2, &p), pt(0, 1));
        assert_eq!(e.scalar_mul(3, &p), pt(-1, 0));
        assert_eq!(e.scalar_mul(6, &p), CurvePoint::Infinity);
        assert_eq!(e.scalar_mul(-1, &p), pt(2, -3));
        assert!(e.contains(&e.scalar_mul(5, &p)));
    }
}
