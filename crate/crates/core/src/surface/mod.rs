//! Tri-quadratic surfaces `F(x, y, t) = 0` in P^1 x P^1 x P^1 with two
//! elliptic fibrations: projection to the t-line (axis 1) and to the
//! x-line (axis 2). On both fibrations the moving coordinate is `y`, and
//! the fiberwise involution swaps the two y-roots over a fixed point of
//! the other base.

mod fiber;
mod locus;
pub mod samples;
mod validate;

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::rational::{self, Rational};
use crate::algebra::{AlgebraError, Polynomial};
use crate::elliptic::EllipticError;

pub use fiber::{FiberComponent, FiberSlice, FiberStatus};
pub use locus::{direct_fiber_singular, JMap};
pub use validate::{Check, ValidationReport};

/// Degree of the fiberwise map `chi`; `m^2` with `m = 2` for an involution.
pub const CHI_DEGREE: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("invalid surface: {check} fails ({witness})")]
    Invalid { check: String, witness: String },
    #[error("axis must be 1 or 2, got {0}")]
    BadAxis(u8),
    #[error("point is not on the surface")]
    NotOnSurface,
    #[error("fiber over {0} is identically zero")]
    FiberVanishes(String),
    #[error("involution undefined at this point")]
    SingularPosition,
    #[error("malformed surface data: {0}")]
    Malformed(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Elliptic(#[from] EllipticError),
}

/// A point of the projective line, normalized to `[a : 1]` or `[1 : 0]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum P1 {
    Finite(Rational),
    Infinity,
}

impl P1 {
    pub fn from_pair(a: Rational, b: Rational) -> Option<P1> {
        if b.is_zero() {
            if a.is_zero() {
                None
            } else {
                Some(P1::Infinity)
            }
        } else {
            Some(P1::Finite(a / b))
        }
    }

    pub fn int(n: i64) -> P1 {
        P1::Finite(rational::int(n))
    }

    pub fn pair(&self) -> [Rational; 2] {
        match self {
            P1::Finite(a) => [a.clone(), Rational::one()],
            P1::Infinity => [Rational::one(), Rational::zero()],
        }
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            P1::Finite(a) => Some(a),
            P1::Infinity => None,
        }
    }

    /// `[a : b] -> [b : a]`.
    pub fn flip(&self) -> P1 {
        match self {
            P1::Infinity => P1::Finite(Rational::zero()),
            P1::Finite(a) if a.is_zero() => P1::Infinity,
            P1::Finite(a) => P1::Finite(a.recip()),
        }
    }
}

impl fmt::Display for P1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1::Finite(a) => write!(f, "{}", a),
            P1::Infinity => write!(f, "oo"),
        }
    }
}

impl fmt::Debug for P1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for P1 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let [a, b] = self.pair();
        [rational::to_string(&a), rational::to_string(&b)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for P1 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<P1, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        if v.len() != 2 {
            return Err(serde::de::Error::custom("expected a pair of rationals"));
        }
        let a = rational::parse(&v[0]).map_err(serde::de::Error::custom)?;
        let b = rational::parse(&v[1]).map_err(serde::de::Error::custom)?;
        P1::from_pair(a, b).ok_or_else(|| serde::de::Error::custom("(0, 0) is not a point of P^1"))
    }
}

/// A point of P^1 x P^1 x P^1 with coordinates `x`, `y`, `t`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfacePoint {
    pub x: P1,
    pub y: P1,
    pub t: P1,
}

impl SurfacePoint {
    pub fn new(x: P1, y: P1, t: P1) -> Self {
        SurfacePoint { x, y, t }
    }

    pub fn affine(x: Rational, y: Rational, t: Rational) -> Self {
        SurfacePoint::new(P1::Finite(x), P1::Finite(y), P1::Finite(t))
    }

    pub fn ints(x: i64, y: i64, t: i64) -> Self {
        SurfacePoint::new(P1::int(x), P1::int(y), P1::int(t))
    }

    pub fn coord(&self, var: usize) -> &P1 {
        match var {
            0 => &self.x,
            1 => &self.y,
            _ => &self.t,
        }
    }

    fn coord_mut(&mut self, var: usize) -> &mut P1 {
        match var {
            0 => &mut self.x,
            1 => &mut self.y,
            _ => &mut self.t,
        }
    }

    pub fn flipped(&self, var: usize) -> SurfacePoint {
        let mut p = self.clone();
        let c = p.coord(var).flip();
        *p.coord_mut(var) = c;
        p
    }

    /// Exchange `x` and `t`.
    pub fn swapped(&self) -> SurfacePoint {
        SurfacePoint::new(self.t.clone(), self.y.clone(), self.x.clone())
    }

    /// Affine coordinates when all three are finite.
    pub fn as_affine(&self) -> Option<[Rational; 3]> {
        Some([
            self.x.finite()?.clone(),
            self.y.finite()?.clone(),
            self.t.finite()?.clone(),
        ])
    }
}

impl fmt::Display for SurfacePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x={}, y={}, t={})", self.x, self.y, self.t)
    }
}

impl fmt::Debug for SurfacePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Fibration label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    /// Projection to the t-line.
    One,
    /// Projection to the x-line.
    Two,
}

impl Axis {
    pub fn from_index(i: u8) -> Result<Axis, SurfaceError> {
        match i {
            1 => Ok(Axis::One),
            2 => Ok(Axis::Two),
            _ => Err(SurfaceError::BadAxis(i)),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Axis::One => 1,
            Axis::Two => 2,
        }
    }

    pub fn other(self) -> Axis {
        match self {
            Axis::One => Axis::Two,
            Axis::Two => Axis::One,
        }
    }

    pub fn both() -> [Axis; 2] {
        [Axis::One, Axis::Two]
    }
}

impl Serialize for Axis {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.index())
    }
}

impl<'de> Deserialize<'de> for Axis {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Axis, D::Error> {
        Axis::from_index(u8::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

type Coeffs = [[[Rational; 3]; 3]; 3];

/// `F = sum c_{ijk} x^i y^j t^k` over `0 <= i, j, k <= 2`, read in the
/// affine chart of each factor.
#[derive(Clone, PartialEq, Eq)]
pub struct Surface222 {
    c: Coeffs,
}

impl Surface222 {
    pub fn zero() -> Self {
        Surface222 {
            c: Default::default(),
        }
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ([usize; 3], Rational)>,
    {
        let mut s = Self::zero();
        for ([i, j, k], v) in terms {
            s.c[i][j][k] += v;
        }
        s
    }

    pub fn from_int_terms(terms: &[([usize; 3], i64)]) -> Self {
        Self::from_terms(terms.iter().map(|(e, v)| (*e, rational::int(*v))))
    }

    /// From a polynomial in `(x, y, t)` of degree at most 2 in each.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self, SurfaceError> {
        if p.nvars() != 3 {
            return Err(SurfaceError::Malformed("expected a polynomial in x, y, t".into()));
        }
        let mut s = Self::zero();
        for (e, v) in p.terms() {
            if e.iter().any(|&d| d > 2) {
                return Err(SurfaceError::Malformed(format!("degree exceeds 2 in term {:?}", e)));
            }
            s.c[e[0] as usize][e[1] as usize][e[2] as usize] = v.clone();
        }
        Ok(s)
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[i][j][k]
    }

    pub fn is_zero(&self) -> bool {
        self.nonzero_terms().next().is_none()
    }

    pub fn nonzero_terms(&self) -> impl Iterator<Item = ([usize; 3], &Rational)> + '_ {
        (0..27).filter_map(move |n| {
            let (i, j, k) = (n / 9, (n / 3) % 3, n % 3);
            let v = &self.c[i][j][k];
            (!v.is_zero()).then_some(([i, j, k], v))
        })
    }

    /// `F` as a polynomial in `(x, y, t)`.
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_terms(
            3,
            self.nonzero_terms()
                .map(|([i, j, k], v)| ([i as u32, j as u32, k as u32], v.clone())),
        )
    }

    /// `[a : b] -> [b : a]` in coordinate `var`.
    pub fn flipped(&self, var: usize) -> Surface222 {
        let mut out = Self::zero();
        for ([i, j, k], v) in self.nonzero_terms() {
            let mut e = [i, j, k];
            e[var] = 2 - e[var];
            out.c[e[0]][e[1]][e[2]] = v.clone();
        }
        out
    }

    /// Exchange `x` and `t`.
    pub fn swapped(&self) -> Surface222 {
        let mut out = Self::zero();
        for ([i, j, k], v) in self.nonzero_terms() {
            out.c[k][j][i] = v.clone();
        }
        out
    }

    /// The surface with axis 2 relabelled as axis 1.
    pub fn view(&self, axis: Axis) -> Surface222 {
        match axis {
            Axis::One => self.clone(),
            Axis::Two => self.swapped(),
        }
    }

    /// Evaluates the tri-homogeneous form at a point.
    pub fn eval_point(&self, p: &SurfacePoint) -> Rational {
        let [x, y, t] = [&p.x, &p.y, &p.t].map(|c| c.pair());
        let mut acc = Rational::zero();
        for ([i, j, k], v) in self.nonzero_terms() {
            acc += v * hom_monomial(&x, i) * hom_monomial(&y, j) * hom_monomial(&t, k);
        }
        acc
    }

    pub fn contains(&self, p: &SurfacePoint) -> bool {
        self.eval_point(p).is_zero()
    }

    /// Flips coordinates until the point is affine. Returns the chart
    /// surface, the affine point and the flipped variables.
    pub fn affine_chart(&self, p: &SurfacePoint) -> (Surface222, [Rational; 3], [bool; 3]) {
        let mut s = self.clone();
        let mut q = p.clone();
        let mut flips = [false; 3];
        for v in 0..3 {
            if q.coord(v).finite().is_none() {
                s = s.flipped(v);
                q = q.flipped(v);
                flips[v] = true;
            }
        }
        (s, q.as_affine().expect("all coordinates finite"), flips)
    }

    /// Conic-bundle coefficients for axis 1: `F = a y^2 + b y + c` with
    /// `a, b, c` polynomials in `(x, t)`.
    pub fn conic_coefficients(&self) -> [Polynomial; 3] {
        [2, 1, 0].map(|j| {
            Polynomial::from_terms(
                2,
                (0..3).flat_map(|i| (0..3).map(move |k| (i, k))).filter_map(|(i, k)| {
                    let v = &self.c[i][j][k];
                    (!v.is_zero()).then(|| ([i as u32, k as u32, 0], v.clone()))
                }),
            )
        })
    }

    /// `q = b^2 - 4ac` as a polynomial in `(x, t)`.
    pub fn fiber_quartic_polynomial(&self) -> Polynomial {
        let [a, b, c] = self.conic_coefficients();
        &(&b * &b) - &(&a * &c).scale(&rational::int(4))
    }

    pub fn chi_degree(&self, _axis: Axis) -> u32 {
        CHI_DEGREE
    }
}

fn hom_monomial(pair: &[Rational; 2], e: usize) -> Rational {
    rational::pow(&pair[0], e as u32) * rational::pow(&pair[1], 2 - e as u32)
}

impl fmt::Display for Surface222 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.polynomial())
    }
}

impl fmt::Debug for Surface222 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surface222({})", self.polynomial())
    }
}

#[derive(Serialize, Deserialize)]
struct SurfaceJson {
    #[serde(rename = "type")]
    kind: String,
    coeffs: Vec<(usize, usize, usize, String)>,
}

impl Serialize for Surface222 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SurfaceJson {
            kind: "surface222".into(),
            coeffs: self
                .nonzero_terms()
                .map(|([i, j, k], v)| (i, j, k, rational::to_string(v)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Surface222 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Surface222, D::Error> {
        let raw = SurfaceJson::deserialize(d)?;
        if raw.kind != "surface222" {
            return Err(serde::de::Error::custom(format!("unknown surface type {:?}", raw.kind)));
        }
        let mut terms = Vec::new();
        for (i, j, k, v) in raw.coeffs {
            if i > 2 || j > 2 || k > 2 {
                return Err(serde::de::Error::custom("exponent out of range"));
            }
            terms.push(([i, j, k], rational::parse(&v).map_err(serde::de::Error::custom)?));
        }
        Ok(Surface222::from_terms(terms))
    }
}
