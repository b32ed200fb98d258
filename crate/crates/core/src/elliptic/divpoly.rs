//! Division polynomials of `y^2 = x^3 + Ax + B`.
//!
//! Convention: `psi_r = f_r` for odd `r` and `psi_r = 2y * f_r` for even
//! `r`, with `f_r` a polynomial in `x`, `A`, `B` only. For an affine point
//! `P = (x0, y0)`, `[r]P = O` iff `psi_r(P) = 0`, i.e. iff `f_r(x0) = 0`
//! (odd `r`) or `y0 * f_r(x0) = 0` (even `r`). Since `y0 = 0` iff
//! `x0^3 + A x0 + B = 0`, the x-only form of the test is the vanishing of
//! [`DivisionPolynomial::torsion_polynomial`], which is `f_r` for odd `r`
//! and `f_r * (x^3 + Ax + B)` for even `r`.
//!
//! The recurrence is run on values in any commutative ring, which serves
//! three purposes: polynomials in `x` over Q, pointwise values over Q or
//! F_p, and the symbolic equations of the exclusion sets.

use super::curve::{CurvePoint, WeierstrassCurve};
use num_integer::Integer;
use num_traits::Zero;

use super::ring::{IntPoly, RingElem};
use super::EllipticError;
use crate::algebra::{Polynomial, Rational};

/// `f_0, .., f_r` evaluated at `x` on the curve with coefficients `a`, `b`.
pub fn f_values<R: RingElem>(r: usize, x: &R, a: &R, b: &R) -> Vec<R> {
    let c = |v: i64| x.int_like(v);
    let x2 = x.mul(x);
    let x3 = x2.mul(x);
    let x4 = x2.mul(&x2);
    let x6 = x3.mul(&x3);
    let a2 = a.mul(a);
    let a3 = a2.mul(a);
    let b2 = b.mul(b);
    // w = y^2, ww = (2y)^4 = 16 w^2
    let w = x3.add(&a.mul(x)).add(b);
    let ww = c(16).mul(&w.mul(&w));

    let mut f: Vec<R> = Vec::with_capacity(r.max(4) + 1);
    f.push(c(0));
    f.push(c(1));
    f.push(c(1));
    // 3x^4 + 6Ax^2 + 12Bx - A^2
    f.push(
        c(3).mul(&x4)
            .add(&c(6).mul(&a.mul(&x2)))
            .add(&c(12).mul(&b.mul(x)))
            .sub(&a2),
    );
    // 2(x^6 + 5Ax^4 + 20Bx^3 - 5A^2x^2 - 4ABx - 8B^2 - A^3)
    f.push(
        c(2).mul(
            &x6.add(&c(5).mul(&a.mul(&x4)))
                .add(&c(20).mul(&b.mul(&x3)))
                .sub(&c(5).mul(&a2.mul(&x2)))
                .sub(&c(4).mul(&a.mul(&b.mul(x))))
                .sub(&c(8).mul(&b2))
                .sub(&a3),
        ),
    );
    for n in 5..=r {
        let m = n / 2;
        let v = if n % 2 == 1 {
            // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
            let t1 = f[m + 2].mul(&f[m].mul(&f[m]).mul(&f[m]));
            let t2 = f[m - 1].mul(&f[m + 1].mul(&f[m + 1]).mul(&f[m + 1]));
            if m % 2 == 0 {
                ww.mul(&t1).sub(&t2)
            } else {
                t1.sub(&ww.mul(&t2))
            }
        } else {
            // psi_{2m} = psi_m / (2y) * (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2)
            let inner = f[m + 2]
                .mul(&f[m - 1].mul(&f[m - 1]))
                .sub(&f[m - 2].mul(&f[m + 1].mul(&f[m + 1])));
            f[m].mul(&inner)
        };
        f.push(v);
    }
    f.truncate(r + 1);
    f
}

/// `f_r` (see the module docs) of a curve over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionPolynomial {
    pub r: u32,
    /// `f_r` as a polynomial in `x`.
    pub x_part: Polynomial,
    /// `x^3 + Ax + B`, the factor joining `x_part` for even `r`.
    pub two_torsion: Polynomial,
}

impl DivisionPolynomial {
    /// Vanishes at `x0` exactly when `[r]P = O` for the points `P` with
    /// x-coordinate `x0`.
    pub fn torsion_polynomial(&self) -> Polynomial {
        if self.r % 2 == 0 {
            &self.x_part * &self.two_torsion
        } else {
            self.x_part.clone()
        }
    }
}

/// Weight of `f_r` when `x`, `A`, `B` have weights 2, 4, 6.
fn weight(r: u32) -> u32 {
    if r % 2 == 1 {
        r * r - 1
    } else {
        r * r - 4
    }
}

pub fn division_polynomial(r: u32, curve: &WeierstrassCurve) -> Result<DivisionPolynomial, EllipticError> {
    if r < 1 {
        return Err(EllipticError::BadMultiplier(r as i64));
    }
    // f_r(u^2 x, u^4 A, u^6 B) = u^w f_r(x, A, B); with u clearing the
    // denominators of A and B the recurrence runs over Z[x]
    let u = curve.a.denom().lcm(curve.b.denom());
    let ua = (&curve.a * Rational::from_integer(u.pow(4))).to_integer();
    let ub = (&curve.b * Rational::from_integer(u.pow(6))).to_integer();
    let f = f_values(r as usize, &IntPoly::x(), &IntPoly::constant(ua), &IntPoly::constant(ub));
    let g = &f[r as usize];
    let uw = Rational::from_integer(u.pow(weight(r)));
    let x_part = Polynomial::from_terms(
        1,
        g.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let coeff = Rational::from_integer(c * u.pow(2 * k as u32)) / &uw;
            ([k as u32, 0, 0], coeff)
        }),
    );
    let x = Polynomial::var(1, 0);
    let a = Polynomial::constant(1, curve.a.clone());
    let b = Polynomial::constant(1, curve.b.clone());
    let two_torsion = &(&x.pow(3) + &(&a * &x)) + &b;
    Ok(DivisionPolynomial { r, x_part, two_torsion })
}

/// Whether `[r]P = O`, decided by the division-polynomial predicate.
pub fn order_divides(curve: &WeierstrassCurve, p: &CurvePoint, r: u32) -> bool {
    match p {
        CurvePoint::Infinity => true,
        CurvePoint::Affine(x, y) => {
            let f = f_values(r as usize, x, &curve.a, &curve.b);
            let v: &Rational = &f[r as usize];
            if r % 2 == 0 {
                num_traits::Zero::is_zero(y) || num_traits::Zero::is_zero(v)
            } else {
                num_traits::Zero::is_zero(v)
            }
        }
    }
}
