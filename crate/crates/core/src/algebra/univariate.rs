//! Univariate algorithms: division, gcd, squarefree parts, exact square
//! roots and rational-root extraction.
//!
//! Everything here works on dense ascending coefficient vectors internally;
//! the public functions take and return arity-1 [`Polynomial`]s.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use super::rational::{self, Rational};
use super::AlgebraError;

pub(crate) type Dense = Vec<Rational>;

pub(crate) fn trim(mut v: Dense) -> Dense {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn deg(v: &Dense) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

pub(crate) fn dense_mul(a: &[Rational], b: &[Rational]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn dense_div_rem(a: &[Rational], b: &[Rational]) -> (Dense, Dense) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b[db].recip();
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] * &lead_inv;
        for (j, bc) in b.iter().enumerate() {
            r[k + j] -= &c * bc;
        }
        q[k] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

fn monic(v: Dense) -> Dense {
    match v.last() {
        None => v,
        Some(l) => {
            let inv = l.recip();
            v.iter().map(|c| c * &inv).collect()
        }
    }
}

pub(crate) fn dense_gcd(a: &[Rational], b: &[Rational]) -> Dense {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = dense_div_rem(&a, &b);
        // keep coefficient growth in check
        a = monic(b);
        b = monic(r);
    }
    monic(a)
}

pub(crate) fn dense_derivative(a: &[Rational]) -> Dense {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * rational::int(i as i64))
        .collect()
}

fn univariate(p: &Polynomial) -> Result<Dense, AlgebraError> {
    if p.nvars() != 1 {
        return Err(AlgebraError::NotUnivariate);
    }
    Ok(p.to_dense())
}

/// Division with remainder of univariate polynomials.
pub fn div_rem(a: &Polynomial, b: &Polynomial) -> Result<(Polynomial, Polynomial), AlgebraError> {
    let (a, b) = (univariate(a)?, univariate(b)?);
    if b.is_empty() {
        return Err(AlgebraError::DivisionByZero);
    }
    let (q, r) = dense_div_rem(&a, &b);
    Ok((Polynomial::from_coeffs(&q), Polynomial::from_coeffs(&r)))
}

/// Monic gcd of two univariate polynomials (zero only when both are zero).
pub fn gcd_univariate(a: &Polynomial, b: &Polynomial) -> Result<Polynomial, AlgebraError> {
    let (a, b) = (univariate(a)?, univariate(b)?);
    Ok(Polynomial::from_coeffs(&dense_gcd(&a, &b)))
}

/// `p / gcd(p, p')`, made monic.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial, AlgebraError> {
    let a = univariate(p)?;
    if a.is_empty() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let g = dense_gcd(&a, &dense_derivative(&a));
    let (q, _) = dense_div_rem(&a, &g);
    Ok(Polynomial::from_coeffs(&monic(q)))
}

/// Whether a nonzero univariate polynomial has no repeated root.
pub fn is_squarefree(p: &Polynomial) -> Result<bool, AlgebraError> {
    let a = univariate(p)?;
    if a.is_empty() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    Ok(deg(&dense_gcd(&a, &dense_derivative(&a))) == Some(0))
}

/// Exact square root `s` with `s^2 = p`, if one exists in Q[x].
pub fn sqrt_univariate(p: &Polynomial) -> Result<Option<Polynomial>, AlgebraError> {
    let a = univariate(p)?;
    if a.is_empty() {
        return Ok(Some(p.clone()));
    }
    let n = a.len() - 1;
    if n % 2 == 1 {
        return Ok(None);
    }
    let m = n / 2;
    let lead = match rational::sqrt(&a[n]) {
        Some(l) => l,
        None => return Ok(None),
    };
    // solve for coefficients from the top down: s_m = lead, then
    // a_{m+k} = sum_{i+j=m+k} s_i s_j determines s_{k}.
    let mut s = vec![Rational::zero(); m + 1];
    s[m] = lead.clone();
    let two_lead = &lead * rational::int(2);
    for k in (0..m).rev() {
        // coefficient of x^{m+k}
        let mut acc = a[m + k].clone();
        for i in (k + 1)..=m {
            let j = m + k - i;
            if j > k && j <= m {
                acc -= &s[i] * &s[j];
            }
        }
        s[k] = acc / &two_lead;
    }
    let sq = dense_mul(&s, &s);
    if trim(sq) == a {
        Ok(Some(Polynomial::from_coeffs(&s)))
    } else {
        Ok(None)
    }
}

/// Sturm sequence of a squarefree polynomial.
type IntDense = Vec<BigInt>;

/// Positive multiple of `v` with coprime integer coefficients.
fn primitive_int(v: &[Rational]) -> IntDense {
    let den = v.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: IntDense = v.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|c| c / &g).collect()
    }
}

fn sturm_sequence(p: &[Rational]) -> Vec<IntDense> {
    let mut seq: Vec<Dense> = vec![p.to_vec(), dense_derivative(p)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let (_, r) = dense_div_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        // positive rescaling keeps signs and limits growth
        let prim = primitive_int(&r);
        seq.push(prim.iter().map(|c| -Rational::from_integer(c.clone())).collect());
    }
    seq.iter().map(|v| primitive_int(v)).collect()
}

/// Sign of `p(u/v)` for `v > 0`, from the homogenized integer form.
fn sign_at(p: &[BigInt], x: &Rational) -> i8 {
    let (u, v) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut vpow = BigInt::one();
    // Horner from the top: acc = acc * u + c_(n-k) * v^k
    for (k, c) in p.iter().rev().enumerate() {
        if k > 0 {
            vpow *= v;
        }
        acc = acc * u + c * &vpow;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

fn sign_changes(seq: &[IntDense], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let v = sign_at(p, x);
        if v == 0 {
            continue;
        }
        if last != 0 && last != v {
            count += 1;
        }
        last = v;
    }
    count
}

/// Number of distinct real roots in the half-open interval `(a, b]`.
fn count_roots(seq: &[IntDense], a: &Rational, b: &Rational) -> usize {
    sign_changes(seq, a) - sign_changes(seq, b)
}

/// All rational roots of a nonzero univariate polynomial, with
/// multiplicity, in ascending order.
///
/// Real roots of the squarefree part are isolated with a Sturm sequence and
/// refined until the isolating interval is shorter than `1/(2 L^2)`, where
/// `L` is the leading coefficient of the primitive integer form. A rational
/// root `u/v` in lowest terms has `v | L`, so it is then the unique fraction
/// of denominator at most `L` in its interval, which is the simplest fraction
/// there; that candidate is confirmed by exact evaluation.
pub fn rational_roots(p: &Polynomial) -> Result<Vec<Rational>, AlgebraError> {
    let a = univariate(p)?;
    if a.is_empty() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let sf = squarefree_part(p)?;
    let prim = sf.primitive_integer();
    let sfd = prim.to_dense();
    if sfd.len() <= 1 {
        return Ok(Vec::new());
    }
    let f = primitive_int(&sfd);
    let lead = sfd.last().unwrap().abs();
    // Cauchy bound
    let bound = sfd[..sfd.len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(Rational::zero(), |m, c| if c > m { c } else { m })
        + Rational::one();
    let width_goal = (&lead * &lead * rational::int(2)).recip();
    let seq = sturm_sequence(&sfd);

    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound.clone())];
    // exact roots at an endpoint are caught by the evaluation below
    if sign_at(&f, &-bound.clone()) == 0 {
        roots.push(-bound.clone());
    }
    while let Some((lo, hi)) = stack.pop() {
        let n = count_roots(&seq, &lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            if let Some(r) = refine_simple(&f, lo, hi, &width_goal) {
                roots.push(r);
            }
            continue;
        }
        let mid = (&lo + &hi) / rational::int(2);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    roots.sort();
    roots.dedup();

    // multiplicities against the original polynomial
    let mut out = Vec::new();
    for r in roots {
        let lin = vec![-r.clone(), Rational::one()];
        let mut cur = a.clone();
        loop {
            let (q, rem) = dense_div_rem(&cur, &lin);
            if !rem.is_empty() {
                break;
            }
            out.push(r.clone());
            cur = q;
        }
    }
    Ok(out)
}

/// The rational root in `(lo, hi]`, which holds exactly one simple root of
/// `f`, if that root is rational.
fn refine_simple(f: &[BigInt], mut lo: Rational, mut hi: Rational, width_goal: &Rational) -> Option<Rational> {
    let s_hi = sign_at(f, &hi);
    if s_hi == 0 {
        return Some(hi);
    }
    let two = rational::int(2);
    while &(&hi - &lo) >= width_goal {
        let mid = (&lo + &hi) / &two;
        let s = sign_at(f, &mid);
        if s == 0 {
            return Some(mid);
        }
        if s == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let cand = rational::simplest_between(&lo, &hi);
    (sign_at(f, &cand) == 0).then_some(cand)
}

/// Distinct rational roots, ascending.
pub fn distinct_rational_roots(p: &Polynomial) -> Result<Vec<Rational>, AlgebraError> {
    let mut r = rational_roots(p)?;
    r.dedup();
    Ok(r)
}

/// Newton interpolation through `(xs[i], ys[i])`; xs must be distinct.
pub(crate) fn interpolate(xs: &[Rational], ys: &[Rational]) -> Dense {
    let n = xs.len();
    let mut coef: Vec<Rational> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = &xs[i] - &xs[i - j];
            coef[i] = num / den;
        }
    }
    // expand Newton form
    let mut out: Dense = vec![coef[n - 1].clone()];
    for i in (0..n - 1).rev() {
        // out = out * (x - xs[i]) + coef[i]
        let mut next = vec![Rational::zero(); out.len() + 1];
        for (k, c) in out.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xs[i];
        }
        next[0] += &coef[i];
        out = next;
    }
    trim(out)
}
