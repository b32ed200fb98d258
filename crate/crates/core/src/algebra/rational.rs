//! Arbitrary-precision rationals and their string form.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator. Zero is always `0/1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use super::AlgebraError;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Formats as `"num/den"`; integers keep the explicit `/1`.
pub fn to_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"num/den"` or a bare integer `"num"`.
pub fn parse(s: &str) -> Result<Rational, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// Square root in Q, if it exists.
pub fn sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn is_square(q: &Rational) -> bool {
    sqrt(q).is_some()
}

pub fn pow(q: &Rational, e: u32) -> Rational {
    num_traits::pow(q.clone(), e as usize)
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// The rational in the closed interval `[lo, hi]` with the smallest
/// denominator (and, among those, the smallest absolute numerator).
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    simplest_positive(lo, hi)
}

fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    // continued-fraction descent on 0 < lo <= hi
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    if &(&fl + Rational::one()) <= hi {
        return fl + Rational::one();
    }
    // lo and hi share the integer part; recurse on reciprocals of the fractional parts
    let lo_f = lo - &fl;
    let hi_f = hi - &fl;
    let inner = simplest_positive(&hi_f.recip(), &lo_f.recip());
    fl + inner.recip()
}

pub mod serde_str {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_string(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

pub mod serde_str_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(qs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(qs.len()))?;
        for q in qs {
            seq.serialize_element(&to_string(q))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse(s).map_err(serde::de::Error::custom))
            .collect()
    }
}
