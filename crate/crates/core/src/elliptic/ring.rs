//! The minimal commutative-ring interface used by the division-polynomial
//! recurrence, with instances for Q, Q[x, y, t] and F_p.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{rational, Polynomial, Rational};

pub trait RingElem: Clone {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// The integer `v` in the ring of `self`.
    fn int_like(&self, v: i64) -> Self;
    fn is_zero_elem(&self) -> bool;
}

impl RingElem for Rational {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn int_like(&self, v: i64) -> Self {
        rational::int(v)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl RingElem for Polynomial {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn int_like(&self, v: i64) -> Self {
        Polynomial::constant(self.nvars(), rational::int(v))
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

/// An element of F_p, `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    pub v: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Fp {
        Fp {
            v: v.rem_euclid(p as i64) as u64,
            p,
        }
    }

    pub fn pow(&self, mut e: u64) -> Fp {
        let mut b = *self;
        let mut acc = Fp { v: 1 % self.p, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Option<Fp> {
        if self.v == 0 {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }

    pub fn neg(&self) -> Fp {
        Fp {
            v: (self.p - self.v) % self.p,
            p: self.p,
        }
    }
}

impl RingElem for Fp {
    fn add(&self, o: &Self) -> Self {
        Fp {
            v: (self.v + o.v) % self.p,
            p: self.p,
        }
    }
    fn sub(&self, o: &Self) -> Self {
        Fp {
            v: (self.v + self.p - o.v) % self.p,
            p: self.p,
        }
    }
    fn mul(&self, o: &Self) -> Self {
        Fp {
            v: self.v * o.v % self.p,
            p: self.p,
        }
    }
    fn int_like(&self, v: i64) -> Self {
        Fp::new(v, self.p)
    }
    fn is_zero_elem(&self) -> bool {
        self.v == 0
    }
}

/// Dense integer polynomial in one variable, ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    fn trimmed(mut v: Vec<BigInt>) -> IntPoly {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
        IntPoly(v)
    }

    pub fn x() -> IntPoly {
        IntPoly(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly::trimmed(vec![c])
    }

    fn zip(&self, o: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> IntPoly {
        let zero = BigInt::zero();
        let n = self.0.len().max(o.0.len());
        IntPoly::trimmed(
            (0..n)
                .map(|i| f(self.0.get(i).unwrap_or(&zero), o.0.get(i).unwrap_or(&zero)))
                .collect(),
        )
    }
}

impl RingElem for IntPoly {
    fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a + b)
    }
    fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a - b)
    }
    fn mul(&self, o: &Self) -> Self {
        if self.0.is_empty() || o.0.is_empty() {
            return IntPoly(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::trimmed(out)
    }
    fn int_like(&self, v: i64) -> Self {
        IntPoly::constant(BigInt::from(v))
    }
    fn is_zero_elem(&self) -> bool {
        self.0.is_empty()
    }
}
