//! Sparse polynomials in up to three variables over Q.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{self, Rational};
use super::AlgebraError;

pub const MAX_VARS: usize = 3;

/// Exponent vector; entries past `nvars` are always zero.
pub type Exponents = [u32; MAX_VARS];

/// A polynomial with rational coefficients in `nvars` variables.
///
/// Terms with zero coefficients are never stored, so two equal
/// polynomials have identical term maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&nvars), "arity must be 1..=3");
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert([0; MAX_VARS], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable with index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Self::monomial(nvars, e, Rational::one())
    }

    pub fn monomial(nvars: usize, exps: Exponents, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(exps, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Univariate polynomial from ascending coefficients.
    pub fn from_coeffs(coeffs: &[Rational]) -> Self {
        Self::from_terms(
            1,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| ([i as u32, 0, 0], c.clone())),
        )
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        let cs: Vec<Rational> = coeffs.iter().map(|&c| rational::int(c)).collect();
        Self::from_coeffs(&cs)
    }

    pub fn add_term(&mut self, exps: Exponents, c: Rational) {
        debug_assert!(exps[self.nvars..].iter().all(|&e| e == 0));
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == [0; MAX_VARS])
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&[0; MAX_VARS])
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coefficient(&self, exps: &Exponents) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree in variable `i`, `None` for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Largest total degree of a term, counting only the listed variables.
    pub fn degree_in_vars(&self, vars: &[usize]) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| vars.iter().map(|&v| e[v]).sum())
            .max()
    }

    /// Same polynomial, viewed with a larger arity.
    pub fn with_nvars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars || self.terms.keys().all(|e| e[nvars..].iter().all(|&x| x == 0)));
        Polynomial {
            nvars,
            terms: self.terms.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert!(point.len() >= self.nvars);
        let mut powers: Vec<Vec<Rational>> = Vec::with_capacity(self.nvars);
        for (i, v) in point.iter().take(self.nvars).enumerate() {
            let d = self.degree_in(i).unwrap_or(0) as usize;
            let mut pw = Vec::with_capacity(d + 1);
            pw.push(Rational::one());
            for k in 1..=d {
                let next = &pw[k - 1] * v;
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..self.nvars {
                if e[i] > 0 {
                    t *= &powers[i][e[i] as usize];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `value` for variable `i`; the arity is kept and the
    /// variable simply no longer occurs.
    pub fn specialize(&self, i: usize, value: &Rational) -> Self {
        let d = self.degree_in(i).unwrap_or(0) as usize;
        let mut pw = vec![Rational::one()];
        for k in 1..=d {
            let next = &pw[k - 1] * value;
            pw.push(next);
        }
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let k = e2[i] as usize;
            e2[i] = 0;
            out.add_term(e2, c * &pw[k]);
        }
        out
    }

    /// Substitutes polynomials (all of arity `nvars_out`) for every variable.
    pub fn compose(&self, subs: &[Polynomial]) -> Self {
        assert_eq!(subs.len(), self.nvars);
        let nvars_out = subs[0].nvars;
        let mut cache: Vec<Vec<Polynomial>> = subs.iter().map(|s| vec![Self::one(s.nvars), s.clone()]).collect();
        let mut out = Self::zero(nvars_out);
        for (e, c) in &self.terms {
            let mut t = Self::constant(nvars_out, c.clone());
            for i in 0..self.nvars {
                let k = e[i] as usize;
                while cache[i].len() <= k {
                    let next = &cache[i][cache[i].len() - 1] * &subs[i];
                    cache[i].push(next);
                }
                if k > 0 {
                    t = &t * &cache[i][k];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = [0; MAX_VARS];
            for i in 0..self.nvars {
                e2[perm[i]] = e[i];
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// `x_i^deg * p(.., 1/x_i, ..)`, the reversal in variable `i` with
    /// respect to a formal degree `deg >= degree_in(i)`.
    pub fn reverse_in(&self, i: usize, deg: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            assert!(e[i] <= deg, "formal degree below actual degree");
            let mut e2 = *e;
            e2[i] = deg - e[i];
            out.add_term(e2, c.clone());
        }
        out
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = *e;
                e2[i] -= 1;
                out.add_term(e2, c * rational::int(e[i] as i64));
            }
        }
        out
    }

    /// Coefficients with respect to variable `i`: entry `k` is the
    /// coefficient of `x_i^k` (a polynomial not involving `x_i`).
    pub fn coefficients_in(&self, i: usize) -> Vec<Polynomial> {
        let d = match self.degree_in(i) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![Self::zero(self.nvars); d + 1];
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let k = e2[i] as usize;
            e2[i] = 0;
            out[k].add_term(e2, c.clone());
        }
        out
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(nvars: usize, i: usize, coeffs: &[Polynomial]) -> Self {
        let mut out = Self::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (e, v) in &c.terms {
                debug_assert_eq!(e[i], 0);
                let mut e2 = *e;
                e2[i] = k as u32;
                out.add_term(e2, v.clone());
            }
        }
        out
    }

    /// Ascending dense coefficients; requires a polynomial that only
    /// involves variable 0.
    pub fn to_dense(&self) -> Vec<Rational> {
        self.to_dense_in(0)
    }

    /// Ascending dense coefficients in variable `i`; all other variables
    /// must be absent.
    pub fn to_dense_in(&self, i: usize) -> Vec<Rational> {
        let d = match self.degree_in(i) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![Rational::zero(); d + 1];
        for (e, c) in &self.terms {
            assert!(
                (0..self.nvars).all(|j| j == i || e[j] == 0),
                "polynomial involves more than one variable"
            );
            out[e[i] as usize] = c.clone();
        }
        out
    }

    /// Whether only variable `i` (or none) occurs.
    pub fn only_involves(&self, i: usize) -> bool {
        self.terms
            .keys()
            .all(|e| (0..self.nvars).all(|j| j == i || e[j] == 0))
    }

    /// Leading coefficient in the univariate sense (variable 0).
    pub fn leading_coeff(&self) -> Rational {
        match self.degree_in(0) {
            None => Rational::zero(),
            Some(d) => self.coefficient(&[d, 0, 0]),
        }
    }

    /// Leading coefficient in the lexicographic term order.
    pub fn lex_leading(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Scales so that all coefficients are coprime integers with a
    /// positive lexicographically leading coefficient.
    pub fn primitive_integer(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let den = rational::common_denominator(self.terms.values());
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den / c.denom());
            g = num_integer::Integer::gcd(&g, &n);
        }
        let mut factor = Rational::new(den, g);
        if self.lex_leading().unwrap().1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Integer coefficients of a polynomial already in primitive integer
    /// form (or any polynomial with integral coefficients).
    pub fn integer_coeffs(&self) -> Option<Vec<(Exponents, BigInt)>> {
        self.terms
            .iter()
            .map(|(e, c)| c.is_integer().then(|| (*e, c.numer().clone())))
            .collect()
    }

    pub fn is_monic(&self) -> bool {
        self.lex_leading().map(|(_, c)| c.is_one()).unwrap_or(false)
    }

    /// Divides by the lexicographic leading coefficient.
    pub fn make_monic(&self) -> Polynomial {
        match self.lex_leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Exact division in Q[x_0, .., x_{n-1}]; `None` if `d` does not divide.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        assert_eq!(self.nvars, d.nvars);
        if d.is_zero() {
            return None;
        }
        let (de, dc) = d.lex_leading().map(|(e, c)| (*e, c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((re, rc)) = rem.lex_leading().map(|(e, c)| (*e, c.clone())) {
            let mut qe = [0; MAX_VARS];
            for i in 0..MAX_VARS {
                if re[i] < de[i] {
                    return None;
                }
                qe[i] = re[i] - de[i];
            }
            let qc = rc / &dc;
            let t = Polynomial::monomial(self.nvars, qe, qc);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    pub fn checked_same_arity(&self, other: &Polynomial) -> Result<(), AlgebraError> {
        if self.nvars != other.nvars {
            Err(AlgebraError::ArityMismatch(self.nvars, other.nvars))
        } else {
            Ok(())
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut acc: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                *acc.entry(e).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Polynomial {
            nvars: self.nvars,
            terms: acc,
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

const VAR_NAMES: [&str; 3] = ["x", "y", "t"];

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names: &[&str] = if self.nvars == 1 { &["x"] } else { &VAR_NAMES };
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let a = c.abs();
            let mono: Vec<String> = (0..self.nvars)
                .filter(|&i| e[i] > 0)
                .map(|i| {
                    if e[i] == 1 {
                        names[i].to_string()
                    } else {
                        format!("{}^{}", names[i], e[i])
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                write!(f, "{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.nvars, self)
    }
}

/// JSON form: `{"nvars": n, "terms": [[e0, .., "num/den"], ..]}`.
#[derive(Serialize, Deserialize)]
struct PolyJson {
    nvars: usize,
    terms: Vec<Vec<serde_json::Value>>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut row: Vec<serde_json::Value> =
                    e[..self.nvars].iter().map(|&x| serde_json::Value::from(x)).collect();
                row.push(serde_json::Value::from(rational::to_string(c)));
                row
            })
            .collect();
        PolyJson {
            nvars: self.nvars,
            terms,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let pj = PolyJson::deserialize(d)?;
        if !(1..=MAX_VARS).contains(&pj.nvars) {
            return Err(D::Error::custom("nvars must be 1..=3"));
        }
        let mut p = Polynomial::zero(pj.nvars);
        for row in pj.terms {
            if row.len() != pj.nvars + 1 {
                return Err(D::Error::custom("term has wrong length"));
            }
            let mut e = [0u32; MAX_VARS];
            for i in 0..pj.nvars {
                e[i] = row[i]
                    .as_u64()
                    .and_then(|v| u32::try_from(v).ok())
                    .ok_or_else(|| D::Error::custom("bad exponent"))?;
            }
            let c = row[pj.nvars]
                .as_str()
                .ok_or_else(|| D::Error::custom("coefficient must be a string"))?;
            p.add_term(e, rational::parse(c).map_err(D::Error::custom)?);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn x() -> Polynomial {
        Polynomial::var(3, 0)
    }
    fn y() -> Polynomial {
        Polynomial::var(3, 1)
    }
    fn t() -> Polynomial {
        Polynomial::var(3, 2)
    }

    #[test]
    fn arithmetic_and_eval() {
        let p = &(&x() * &y()) + &t().pow(2);
        let q = &p * &p;
        let pt = [int(2), rat(1, 3), int(-1)];
        assert_eq!(q.eval(&pt), p.eval(&pt) * p.eval(&pt));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = &x() + &t();
        let b = &(&y() * &y()) - &Polynomial::constant(3, int(3));
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!((&prod + &x()).exact_div(&a), None);
    }

    #[test]
    fn specialize_and_coefficients() {
        let p = &(&x().pow(2) * &t()) + &y();
        let s = p.specialize(2, &int(3));
        assert_eq!(s, &x().pow(2).scale(&int(3)) + &y());
        let cs = p.coefficients_in(0);
        assert_eq!(cs.len(), 3);
        assert_eq!(Polynomial::from_coefficients_in(3, 0, &cs), p);
    }

    #[test]
    fn json_roundtrip() {
        let p = &x().scale(&rat(-3, 7)) + &t().pow(3);
        let s = serde_json::to_string(&p).unwrap();
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn primitive_integer_form() {
        let p = Polynomial::from_coeffs(&[rat(1, 2), rat(-1, 3)]);
        assert_eq!(p.primitive_integer(), Polynomial::from_int_coeffs(&[-3, 2]));
    }
}
