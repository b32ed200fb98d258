//! Resultants, discriminants and the gcd entry point.
//!
//! Conventions, fixed once for the whole crate:
//! * `Res_x(p, q)` is the determinant of the Sylvester matrix built from the
//!   degrees of `p` and `q` in `x` as polynomials over the remaining
//!   variables, so `Res_x(p, q) = lc(p)^deg q * prod q(roots of p)`.
//! * `disc_x(p) = (-1)^(n(n-1)/2) Res_x(p, p') / lc(p)` with `n = deg_x p`;
//!   this gives `b^2 - 4ac` for quadratics and `-4A^3 - 27B^2` for
//!   `x^3 + Ax + B`.
//!
//! Downstream code only ever tests these for vanishing.
//!
//! Multivariate resultants are computed by evaluating the remaining
//! variables at integer points, taking Sylvester determinants over Q and
//! interpolating. Because the Sylvester matrix is built with the generic
//! degrees, every specialization of the determinant is the determinant of
//! the specialized matrix, so interpolation recovers the exact polynomial.

use num_traits::{One, Zero};

use super::poly::{Polynomial, MAX_VARS};
use super::rational::{self, Rational};
use super::univariate::{self, interpolate};
use super::AlgebraError;

/// Determinant by fraction Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let piv = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(p) => p,
            None => return Rational::zero(),
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        let inv = pv.recip();
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Sylvester matrix determinant of two dense coefficient vectors taken
/// with the given formal degrees.
fn sylvester_det(p: &[Rational], dp: usize, q: &[Rational], dq: usize) -> Rational {
    let n = dp + dq;
    if n == 0 {
        return Rational::one();
    }
    let coeff = |v: &[Rational], k: usize| v.get(k).cloned().unwrap_or_else(Rational::zero);
    let mut m = vec![vec![Rational::zero(); n]; n];
    for r in 0..dq {
        for k in 0..=dp {
            m[r][r + k] = coeff(p, dp - k);
        }
    }
    for r in 0..dp {
        for k in 0..=dq {
            m[dq + r][r + k] = coeff(q, dq - k);
        }
    }
    determinant(m)
}

/// Resultant of `p` and `q` with respect to variable `var`.
pub fn resultant(p: &Polynomial, q: &Polynomial, var: usize) -> Result<Polynomial, AlgebraError> {
    p.checked_same_arity(q)?;
    let nvars = p.nvars();
    if var >= nvars {
        return Err(AlgebraError::BadVariable(var));
    }
    let dp = p.degree_in(var).unwrap_or(0);
    let dq = q.degree_in(var).unwrap_or(0);
    if dp == 0 || dq == 0 {
        return Err(AlgebraError::DegreeTooLow { needed: 1 });
    }
    let others: Vec<usize> = (0..nvars).filter(|&v| v != var).collect();
    // degree bounds of the result in each remaining variable
    let bounds: Vec<u32> = others
        .iter()
        .map(|&v| dq * p.degree_in(v).unwrap_or(0) + dp * q.degree_in(v).unwrap_or(0))
        .collect();
    let eval_at = |vals: &[Rational]| -> Rational {
        let mut ps = p.clone();
        let mut qs = q.clone();
        for (k, &v) in others.iter().enumerate() {
            ps = ps.specialize(v, &vals[k]);
            qs = qs.specialize(v, &vals[k]);
        }
        let pd = ps.to_dense_in(var);
        let qd = qs.to_dense_in(var);
        sylvester_det(&pd, dp as usize, &qd, dq as usize)
    };
    let out = match others.len() {
        0 => Polynomial::constant(nvars, eval_at(&[])),
        1 => {
            let xs: Vec<Rational> = (0..=bounds[0] as i64).map(rational::int).collect();
            let ys: Vec<Rational> = xs.iter().map(|x| eval_at(std::slice::from_ref(x))).collect();
            let c = interpolate(&xs, &ys);
            dense_into(nvars, others[0], &c)
        }
        _ => {
            let (v0, v1) = (others[0], others[1]);
            let xs0: Vec<Rational> = (0..=bounds[0] as i64).map(rational::int).collect();
            let xs1: Vec<Rational> = (0..=bounds[1] as i64).map(rational::int).collect();
            // for every value of v0 interpolate in v1
            let rows: Vec<Vec<Rational>> = xs0
                .iter()
                .map(|a| {
                    let ys: Vec<Rational> = xs1.iter().map(|b| eval_at(&[a.clone(), b.clone()])).collect();
                    let mut c = interpolate(&xs1, &ys);
                    c.resize(xs1.len(), Rational::zero());
                    c
                })
                .collect();
            let mut out = Polynomial::zero(nvars);
            for k in 0..xs1.len() {
                let ys: Vec<Rational> = rows.iter().map(|r| r[k].clone()).collect();
                let c = interpolate(&xs0, &ys);
                for (j, cj) in c.iter().enumerate() {
                    let mut e = [0u32; MAX_VARS];
                    e[v0] = j as u32;
                    e[v1] = k as u32;
                    out.add_term(e, cj.clone());
                }
            }
            out
        }
    };
    Ok(out)
}

fn dense_into(nvars: usize, var: usize, c: &[Rational]) -> Polynomial {
    let mut out = Polynomial::zero(nvars);
    for (k, ck) in c.iter().enumerate() {
        let mut e = [0u32; MAX_VARS];
        e[var] = k as u32;
        out.add_term(e, ck.clone());
    }
    out
}

/// Discriminant of `p` with respect to `var`.
pub fn discriminant(p: &Polynomial, var: usize) -> Result<Polynomial, AlgebraError> {
    let n = p.degree_in(var).unwrap_or(0);
    if n < 2 {
        return Err(AlgebraError::DegreeTooLow { needed: 2 });
    }
    let dp = p.derivative(var);
    let res = resultant(p, &dp, var)?;
    let lc = p.coefficients_in(var).pop().expect("nonzero");
    let mut d = res.exact_div(&lc).ok_or(AlgebraError::InexactDivision)?;
    if (n * (n - 1) / 2) % 2 == 1 {
        d = -d;
    }
    Ok(d)
}

/// Greatest common divisor.
///
/// Univariate inputs give the monic gcd. For two or three variables the
/// result is the gcd normalized to primitive integer form (coprime integer
/// coefficients, positive lexicographic leading coefficient), computed
/// recursively from contents and a primitive pseudo-remainder sequence.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, AlgebraError> {
    p.checked_same_arity(q)?;
    if p.nvars() == 1 {
        return univariate::gcd_univariate(p, q);
    }
    let vars: Vec<usize> = (0..p.nvars()).collect();
    Ok(mv_gcd(p, q, &vars).primitive_integer())
}

/// gcd over Q in the variables `vars` (the polynomials involve no others).
fn mv_gcd(p: &Polynomial, q: &Polynomial, vars: &[usize]) -> Polynomial {
    let nv = p.nvars();
    if p.is_zero() {
        return q.primitive_integer();
    }
    if q.is_zero() {
        return p.primitive_integer();
    }
    let used: Vec<usize> = vars
        .iter()
        .copied()
        .filter(|&v| p.degree_in(v).unwrap_or(0) > 0 || q.degree_in(v).unwrap_or(0) > 0)
        .collect();
    if used.is_empty() {
        return Polynomial::one(nv);
    }
    let main = *used.last().unwrap();
    let rest: Vec<usize> = used[..used.len() - 1].to_vec();
    let (cp, pp) = content_split(p, main, &rest);
    let (cq, pq) = content_split(q, main, &rest);
    let c = mv_gcd(&cp, &cq, &rest);
    // primitive PRS in the main variable
    let mut a = pp;
    let mut b = pq;
    if a.degree_in(main) < b.degree_in(main) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.degree_in(main) == Some(0) {
            a = Polynomial::one(nv);
            break;
        }
        let r = pseudo_rem(&a, &b, main);
        a = b;
        b = if r.is_zero() {
            r
        } else {
            content_split(&r, main, &rest).1
        };
    }
    let g = content_split(&a, main, &rest).1;
    (&c * &g).primitive_integer()
}

/// Splits `p` into its content (gcd of coefficients in `main`, a
/// polynomial in `rest`) and primitive part.
fn content_split(p: &Polynomial, main: usize, rest: &[usize]) -> (Polynomial, Polynomial) {
    let coeffs = p.coefficients_in(main);
    let mut c = Polynomial::zero(p.nvars());
    for k in coeffs.iter().filter(|k| !k.is_zero()) {
        c = if rest.is_empty() {
            Polynomial::one(p.nvars())
        } else {
            mv_gcd(&c, k, rest)
        };
        if c.is_constant() {
            break;
        }
    }
    if c.is_zero() || c.is_constant() {
        return (Polynomial::one(p.nvars()), p.primitive_integer());
    }
    let pp = p.exact_div(&c).expect("content divides");
    (c, pp)
}

/// Pseudo-remainder of `a` by `b` in variable `v`.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let db = b.degree_in(v).unwrap();
    let lb = b.coefficients_in(v).pop().unwrap();
    let mut r = a.clone();
    while let Some(dr) = r.degree_in(v) {
        if dr < db || r.is_zero() {
            break;
        }
        let lr = r.coefficients_in(v).pop().unwrap();
        let mut e = [0u32; MAX_VARS];
        e[v] = dr - db;
        let shift = Polynomial::monomial(r.nvars(), e, Rational::one());
        r = &(&r * &lb) - &(&(&lr * &shift) * b);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn x2() -> Polynomial {
        Polynomial::var(2, 0)
    }
    fn t2() -> Polynomial {
        Polynomial::var(2, 1)
    }
    fn c2(v: i64) -> Polynomial {
        Polynomial::constant(2, int(v))
    }

    #[test]
    fn resultant_examples() {
        // Res_x(x - t, x - 1) = t - 1
        let r = resultant(&(&x2() - &t2()), &(&x2() - &c2(1)), 0).unwrap();
        assert_eq!(r, &t2() - &c2(1));
        // Res_x(x^2+1, x+1) = 2
        let p = Polynomial::from_int_coeffs(&[1, 0, 1]);
        let q = Polynomial::from_int_coeffs(&[1, 1]);
        assert_eq!(resultant(&p, &q, 0).unwrap(), Polynomial::constant(1, int(2)));
        // identical inputs
        let s = &x2().pow(2) - &t2();
        assert!(resultant(&s, &s, 0).unwrap().is_zero());
        assert!(resultant(&c2(3), &s, 0).is_err());
    }

    #[test]
    fn discriminant_examples() {
        let s = &x2().pow(2) - &t2();
        assert_eq!(discriminant(&s, 0).unwrap(), t2().scale(&int(4)));
        assert!(discriminant(&Polynomial::from_int_coeffs(&[1, -2, 1]), 0).unwrap().is_zero());
        assert!(discriminant(&Polynomial::from_int_coeffs(&[1, 1]), 0).is_err());
        // x^3 + A x + B with A = t, B = 1 in two variables
        let cubic = &(&x2().pow(3) + &(&t2() * &x2())) + &c2(1);
        let d = discriminant(&cubic, 0).unwrap();
        let expected = -(&t2().pow(3).scale(&int(4)) + &c2(27));
        assert_eq!(d, expected);
    }

    #[test]
    fn three_variable_resultant() {
        let x = Polynomial::var(3, 0);
        let y = Polynomial::var(3, 1);
        let t = Polynomial::var(3, 2);
        // Res_x(x - y, x^2 - t) = y^2 - t
        let r = resultant(&(&x - &y), &(&x.pow(2) - &t), 0).unwrap();
        assert_eq!(r, &y.pow(2) - &t);
    }

    #[test]
    fn multivariate_gcd() {
        let x = Polynomial::var(3, 0);
        let y = Polynomial::var(3, 1);
        let t = Polynomial::var(3, 2);
        let common = &(&x * &y) + &t;
        let a = &common * &(&x + &Polynomial::one(3));
        let b = &common * &(&y.pow(2) - &t);
        let g = poly_gcd(&a, &b).unwrap();
        assert_eq!(g, common);
        assert!(a.exact_div(&g).is_some() && b.exact_div(&g).is_some());
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = Polynomial::var(1, 0);
        let b = Polynomial::var(2, 0);
        assert!(matches!(poly_gcd(&a, &b), Err(AlgebraError::ArityMismatch(1, 2))));
    }
}
