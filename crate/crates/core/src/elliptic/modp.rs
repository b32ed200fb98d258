//! Reduction of curves and points modulo small primes, naive point
//! counting and orders in E(F_p).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::curve::{CurvePoint, WeierstrassCurve};
use super::ring::{Fp, RingElem};
use super::EllipticError;
use crate::algebra::Rational;

/// Largest prime accepted for naive counting.
pub const MAX_COUNT_PRIME: u64 = 1 << 20;

/// `q mod p`, or `None` if `p` divides the denominator.
pub fn reduce_rational(q: &Rational, p: u64) -> Option<Fp> {
    let pb = BigInt::from(p);
    let den = q.denom().mod_floor(&pb).to_u64().unwrap();
    if den == 0 {
        return None;
    }
    let num = q.numer().mod_floor(&pb).to_u64().unwrap();
    let d = Fp { v: den, p };
    Some(Fp { v: num, p }.mul(&d.inv().unwrap()))
}

/// A short Weierstrass curve over F_p, `p >= 3`, with nonzero discriminant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveModP {
    pub p: u64,
    pub a: Fp,
    pub b: Fp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointModP {
    Infinity,
    Affine(Fp, Fp),
}

impl CurveModP {
    pub fn new(p: u64, a: Fp, b: Fp) -> Result<Self, EllipticError> {
        if p < 3 || !crate::bounds::is_prime(p) {
            return Err(EllipticError::BadPrime(p));
        }
        let c = CurveModP { p, a, b };
        let d = a.pow(3).mul(&a.int_like(4)).add(&b.mul(&b).mul(&b.int_like(27)));
        if d.is_zero_elem() {
            return Err(EllipticError::BadReduction(p));
        }
        Ok(c)
    }

    /// Reduction of a curve over Q; fails at primes of bad reduction or
    /// primes dividing a denominator of the model.
    pub fn reduce(curve: &WeierstrassCurve, p: u64) -> Result<Self, EllipticError> {
        if p < 3 || !crate::bounds::is_prime(p) {
            return Err(EllipticError::BadPrime(p));
        }
        let a = reduce_rational(&curve.a, p).ok_or(EllipticError::BadReduction(p))?;
        let b = reduce_rational(&curve.b, p).ok_or(EllipticError::BadReduction(p))?;
        Self::new(p, a, b)
    }

    pub fn rhs(&self, x: Fp) -> Fp {
        x.mul(&x).mul(&x).add(&self.a.mul(&x)).add(&self.b)
    }

    pub fn contains(&self, pt: &PointModP) -> bool {
        match pt {
            PointModP::Infinity => true,
            PointModP::Affine(x, y) => y.mul(y) == self.rhs(*x),
        }
    }

    /// Reduction of a rational point; points with `p` in a denominator
    /// reduce to the identity.
    pub fn reduce_point(&self, pt: &CurvePoint) -> PointModP {
        match pt {
            CurvePoint::Infinity => PointModP::Infinity,
            CurvePoint::Affine(x, y) => match (reduce_rational(x, self.p), reduce_rational(y, self.p)) {
                (Some(x), Some(y)) => PointModP::Affine(x, y),
                _ => PointModP::Infinity,
            },
        }
    }

    pub fn add(&self, p1: &PointModP, p2: &PointModP) -> PointModP {
        let (x1, y1, x2, y2) = match (p1, p2) {
            (PointModP::Infinity, _) => return *p2,
            (_, PointModP::Infinity) => return *p1,
            (PointModP::Affine(x1, y1), PointModP::Affine(x2, y2)) => (*x1, *y1, *x2, *y2),
        };
        let lambda = if x1 == x2 {
            if y1.add(&y2).is_zero_elem() {
                return PointModP::Infinity;
            }
            let num = x1.mul(&x1).mul(&x1.int_like(3)).add(&self.a);
            num.mul(&y1.mul(&y1.int_like(2)).inv().unwrap())
        } else {
            y2.sub(&y1).mul(&x2.sub(&x1).inv().unwrap())
        };
        let x3 = lambda.mul(&lambda).sub(&x1).sub(&x2);
        let y3 = lambda.mul(&x1.sub(&x3)).sub(&y1);
        PointModP::Affine(x3, y3)
    }

    pub fn scalar_mul(&self, mut k: u64, pt: &PointModP) -> PointModP {
        let mut base = *pt;
        let mut acc = PointModP::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add(&base, &base);
            }
        }
        acc
    }

    /// Legendre symbols of every residue, indexed by value.
    fn quadratic_characters(&self) -> Vec<i8> {
        let p = self.p as usize;
        let mut chi = vec![-1i8; p];
        chi[0] = 0;
        for v in 1..p {
            chi[v * v % p] = 1;
        }
        chi
    }

    /// `#E(F_p)` by summing quadratic characters over all x.
    pub fn count_points(&self) -> u64 {
        let chi = self.quadratic_characters();
        let mut total: i64 = self.p as i64 + 1;
        for x in 0..self.p {
            total += chi[self.rhs(Fp { v: x, p: self.p }).v as usize] as i64;
        }
        total as u64
    }

    /// Every point of E(F_p), identity first.
    pub fn points(&self) -> Vec<PointModP> {
        let mut roots: Vec<Vec<u64>> = vec![Vec::new(); self.p as usize];
        for y in 0..self.p {
            roots[(y * y % self.p) as usize].push(y);
        }
        let mut out = vec![PointModP::Infinity];
        for x in 0..self.p {
            let xf = Fp { v: x, p: self.p };
            for &y in &roots[self.rhs(xf).v as usize] {
                out.push(PointModP::Affine(xf, Fp { v: y, p: self.p }));
            }
        }
        out
    }

    /// Order of a point in a group of known order `n`.
    pub fn point_order(&self, pt: &PointModP, n: u64) -> u64 {
        let mut m = n;
        for (l, _) in factorize(n) {
            while m % l == 0 && self.scalar_mul(m / l, pt) == PointModP::Infinity {
                m /= l;
            }
        }
        m
    }
}

/// `#E(F_p)` for a curve over Q with good reduction at the odd prime `p`.
pub fn count_points_mod_p(curve: &WeierstrassCurve, p: u64) -> Result<u64, EllipticError> {
    if p > MAX_COUNT_PRIME {
        return Err(EllipticError::BadPrime(p));
    }
    Ok(CurveModP::reduce(curve, p)?.count_points())
}

/// Prime factorization by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let cur = ds.clone();
        let mut pw = 1;
        for _ in 0..e {
            pw *= p;
            ds.extend(cur.iter().map(|d| d * pw));
        }
    }
    ds.sort_unstable();
    ds
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Whether a rational is p-integral.
pub fn is_p_integral(q: &Rational, p: u64) -> bool {
    !(q.denom() % BigInt::from(p)).is_zero()
}
