//! Singular fibers, the j-map, and lines contained in the surface.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize, Serializer};

use super::fiber::to_view;
use super::{Axis, Surface222, SurfaceError, SurfacePoint, P1};
use crate::algebra::rational::{int, Rational};
use crate::algebra::univariate::{dense_div_rem, dense_gcd, distinct_rational_roots, squarefree_part, trim};
use crate::algebra::univariate::gcd_univariate;
use crate::algebra::{poly_gcd, resultant, AlgebraError, Polynomial, RationalFunction};

/// Formal degree of the singular-locus polynomial in the base parameter.
pub const DELTA_FORMAL_DEGREE: u32 = 24;

/// `Delta(t)`: the fiber over finite `t0` is singular iff `Delta(t0) = 0`;
/// the fiber over infinity is singular iff `deg Delta < 24`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularLocus {
    pub axis: Axis,
    pub delta: Polynomial,
}

impl SingularLocus {
    pub fn is_singular_at(&self, base: &P1) -> bool {
        match base {
            P1::Finite(t) => self.delta.eval(std::slice::from_ref(t)).is_zero(),
            P1::Infinity => self.delta.degree_in(0).unwrap_or(0) < DELTA_FORMAL_DEGREE,
        }
    }

    /// Rational base values with singular fibers.
    pub fn rational_points(&self) -> Vec<P1> {
        let mut out: Vec<P1> = distinct_rational_roots(&self.delta)
            .unwrap_or_default()
            .into_iter()
            .map(P1::Finite)
            .collect();
        if self.is_singular_at(&P1::Infinity) {
            out.push(P1::Infinity);
        }
        out
    }
}

/// `j(t)` of the fibers and its degree (`None` when constant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JMap {
    pub axis: Axis,
    pub j: RationalFunction,
    pub degree: Option<u32>,
}

impl Serialize for JMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("JMap", 4)?;
        st.serialize_field("axis", &self.axis)?;
        st.serialize_field("numerator", self.j.numerator())?;
        st.serialize_field("denominator", self.j.denominator())?;
        match self.degree {
            Some(d) => st.serialize_field("degree", &d)?,
            None => st.serialize_field("degree", "infinity")?,
        }
        st.end()
    }
}

impl Surface222 {
    /// Coefficients `a0 .. a4` (of `x^4 .. x^0`) of the fiber quartic as
    /// polynomials in the base parameter.
    pub fn quartic_family(&self, axis: Axis) -> [Polynomial; 5] {
        let q = self.view(axis).fiber_quartic_polynomial();
        let by_x = q.coefficients_in(0);
        std::array::from_fn(|i| {
            let k = 4 - i;
            match by_x.get(k) {
                Some(p) if !p.is_zero() => Polynomial::from_coeffs(&p.to_dense_in(1)),
                _ => Polynomial::zero(1),
            }
        })
    }

    /// Invariants `I(t)`, `J(t)` of the fiber quartic.
    pub fn quartic_invariants(&self, axis: Axis) -> (Polynomial, Polynomial) {
        let [a, b, c, d, e] = self.quartic_family(axis);
        let k = |n: i64| int(n);
        let i = &(&(&a * &e).scale(&k(12)) - &(&b * &d).scale(&k(3))) + &(&c * &c);
        let j = &(&(&(&(&a * &c) * &e).scale(&k(72)) + &(&(&b * &c) * &d).scale(&k(9)))
            - &(&(&(&a * &d) * &d).scale(&k(27)) + &(&(&b * &b) * &e).scale(&k(27))))
            - &(&(&c * &c) * &c).scale(&k(2));
        (i, j)
    }

    pub fn singular_locus(&self, axis: Axis) -> Result<SingularLocus, SurfaceError> {
        let (i, j) = self.quartic_invariants(axis);
        let delta = (&(&i.pow(3)).scale(&int(4)) - &(&j * &j)).scale(&Rational::new(1.into(), 27.into()));
        if delta.is_zero() {
            return Err(SurfaceError::Invalid {
                check: format!("generic fiber of axis {} is smooth", axis.index()),
                witness: "discriminant of the fiber quartic vanishes identically".into(),
            });
        }
        Ok(SingularLocus { axis, delta })
    }

    /// `j = 6912 I^3 / (4 I^3 - J^2)` in lowest terms.
    pub fn j_map(&self, axis: Axis) -> Result<JMap, SurfaceError> {
        let (i, j) = self.quartic_invariants(axis);
        let i3 = i.pow(3);
        let den = &i3.scale(&int(4)) - &(&j * &j);
        if den.is_zero() {
            return Err(SurfaceError::Invalid {
                check: format!("generic fiber of axis {} is smooth", axis.index()),
                witness: "4I^3 - J^2 vanishes identically".into(),
            });
        }
        let jf = RationalFunction::new(i3.scale(&int(6912)), den)?;
        let degree = (!jf.is_constant()).then(|| jf.degree());
        Ok(JMap { axis, j: jf, degree })
    }

    /// Lines `{x = x0, t = t0}` on the surface (coordinates of the axis
    /// view), i.e. the points of the base where `a`, `b`, `c` all vanish.
    pub fn vertical_lines(&self, axis: Axis) -> Result<Vec<(P1, P1)>, SurfaceError> {
        let view = self.view(axis);
        let [a, b, c] = view.conic_coefficients();
        let g = poly_gcd(&poly_gcd(&a, &b)?, &c)?;
        if !g.is_constant() {
            return Err(SurfaceError::Invalid {
                check: "F has no factor free of y".into(),
                witness: g.to_string(),
            });
        }
        let mut out: Vec<(P1, P1)> = Vec::new();
        for fx in [false, true] {
            for ft in [false, true] {
                let mut s = view.clone();
                if fx {
                    s = s.flipped(0);
                }
                if ft {
                    s = s.flipped(2);
                }
                let [a, b, c] = s.conic_coefficients();
                let combos = [
                    a.clone(),
                    b.clone(),
                    c.clone(),
                    &a + &b,
                    &b + &c,
                    &(&a + &b.scale(&int(2))) + &c.scale(&int(3)),
                ];
                let polys: Vec<&Polynomial> = combos.iter().filter(|p| !p.is_zero()).collect();
                let mut r = Polynomial::zero(1);
                for (n, p) in polys.iter().enumerate() {
                    for q in &polys[n + 1..] {
                        r = gcd_univariate(&r, &eliminate(p, q, 0)?)?;
                    }
                }
                if r.is_zero() {
                    return Err(SurfaceError::Invalid {
                        check: "fiber coefficients have finitely many common zeros".into(),
                        witness: format!("a = {}, b = {}, c = {}", a, b, c),
                    });
                }
                if r.is_constant() {
                    continue;
                }
                for t0 in distinct_rational_roots(&r)? {
                    let g = s
                        .conic_at(&t0)
                        .iter()
                        .filter(|p| !p.is_zero())
                        .try_fold(Polynomial::zero(1), |g, p| gcd_univariate(&g, p))?;
                    if g.is_zero() {
                        return Err(SurfaceError::FiberVanishes(t0.to_string()));
                    }
                    if g.is_constant() {
                        continue;
                    }
                    for x0 in distinct_rational_roots(&g)? {
                        let mut xp = P1::Finite(x0);
                        let mut tp = P1::Finite(t0.clone());
                        if fx {
                            xp = xp.flip();
                        }
                        if ft {
                            tp = tp.flip();
                        }
                        if !out.contains(&(xp.clone(), tp.clone())) {
                            out.push((xp, tp));
                        }
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Whether `F(x0, ., t0)` vanishes identically at the point's base and
    /// cover coordinate, i.e. the point lies on a line of the view.
    pub fn on_vertical_line(&self, axis: Axis, p: &SurfacePoint) -> bool {
        let vp = to_view(axis, p);
        let (abc, _) = self.view(axis).local_conic(&vp);
        abc.iter().all(|v| v.is_zero())
    }
}

/// A univariate polynomial in the variable other than `var` vanishing at
/// the projections of all common zeros of `p` and `q`; zero when they
/// share a factor of positive degree in `var`.
fn eliminate(p: &Polynomial, q: &Polynomial, var: usize) -> Result<Polynomial, AlgebraError> {
    let other = 1 - var;
    let dp = p.degree_in(var).unwrap_or(0);
    let dq = q.degree_in(var).unwrap_or(0);
    let r = if dp > 0 && dq > 0 {
        resultant(p, q, var)?
    } else if dp == 0 {
        p.clone()
    } else {
        q.clone()
    };
    Ok(Polynomial::from_coeffs(&r.to_dense_in(other)))
}

type Dense = Vec<Rational>;

/// Elements of `Q[x]/(m)` reduced mod `m`.
fn reduce(a: &[Rational], m: &[Rational]) -> Dense {
    dense_div_rem(a, m).1
}

fn mul_mod(a: &[Rational], b: &[Rational], m: &[Rational]) -> Dense {
    reduce(&crate::algebra::univariate::dense_mul(a, b), m)
}

/// Inverse of `a` mod `m` via the extended Euclidean algorithm, assuming
/// `gcd(a, m) = 1`.
fn inv_mod(a: &[Rational], m: &[Rational]) -> Dense {
    let (mut r0, mut r1) = (m.to_vec(), reduce(a, m));
    let (mut s0, mut s1): (Dense, Dense) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = dense_div_rem(&r0, &r1);
        let s2 = trim(sub(&s0, &crate::algebra::univariate::dense_mul(&q, &s1)));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is a nonzero constant
    let c = r0[0].recip();
    reduce(&s0.iter().map(|v| v * &c).collect::<Dense>(), m)
}

fn sub(a: &[Rational], b: &[Rational]) -> Dense {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] -= v;
    }
    trim(out)
}

/// Polynomial in `y` over `Q[x]/(m)`, ascending in `y`.
type YPoly = Vec<Dense>;

fn trim_y(mut p: YPoly, m: &[Rational]) -> YPoly {
    for c in p.iter_mut() {
        *c = reduce(c, m);
    }
    while p.last().map(|c| c.is_empty()).unwrap_or(false) {
        p.pop();
    }
    p
}

enum Lead {
    Invertible,
    Split(Dense, Dense),
}

fn lead_status(lc: &[Rational], m: &[Rational]) -> Lead {
    let g = dense_gcd(lc, m);
    if g.len() <= 1 {
        Lead::Invertible
    } else {
        let other = dense_div_rem(m, &g).0;
        Lead::Split(g, other)
    }
}

/// Splits `m` into coprime factors over each of which `gcd(f, g)` has
/// uniform degree; returns the pairs `(factor, gcd)`.
fn gcd_split(m: Dense, f: YPoly, g: YPoly) -> Vec<(Dense, YPoly)> {
    let f = trim_y(f, &m);
    let g = trim_y(g, &m);
    if g.is_empty() {
        return vec![(m, f)];
    }
    let lc = g.last().unwrap().clone();
    match lead_status(&lc, &m) {
        Lead::Split(m1, m2) => {
            let mut out = gcd_split(m1, f.clone(), g.clone());
            out.extend(gcd_split(m2, f, g));
            out
        }
        Lead::Invertible => {
            if f.len() < g.len() {
                return gcd_split(m, g, f);
            }
            let inv = inv_mod(&lc, &m);
            let mut r = f;
            while r.len() >= g.len() && !r.is_empty() {
                let shift = r.len() - g.len();
                let factor = mul_mod(r.last().unwrap(), &inv, &m);
                for (k, gc) in g.iter().enumerate() {
                    let prod = mul_mod(&factor, gc, &m);
                    r[k + shift] = reduce(&sub(&r[k + shift], &prod), &m);
                }
                r = trim_y(r, &m);
                // the leading entry of r may now vanish only at some roots
                if let Some(l) = r.last() {
                    if let Lead::Split(m1, m2) = lead_status(l, &m) {
                        let mut out = gcd_split(m1, r.clone(), g.clone());
                        out.extend(gcd_split(m2, r, g));
                        return out;
                    }
                }
            }
            gcd_split(m, g, r)
        }
    }
}

fn to_ypoly(p: &Polynomial) -> YPoly {
    p.coefficients_in(1)
        .iter()
        .map(|c| trim(c.to_dense_in(0)))
        .collect()
}

fn affine_singular(g: &Polynomial) -> Result<bool, AlgebraError> {
    if g.is_zero() {
        return Ok(true);
    }
    let gx = g.derivative(0);
    let gy = g.derivative(1);
    if gy.is_zero() {
        // union of lines x = const: singular iff a root is repeated
        let u = Polynomial::from_coeffs(&g.to_dense_in(0));
        if u.degree_in(0).unwrap_or(0) == 0 {
            return Ok(false);
        }
        let d = dense_gcd(&u.to_dense(), &crate::algebra::univariate::dense_derivative(&u.to_dense()));
        return Ok(d.len() > 1);
    }
    let r = eliminate(g, &gy, 1)?;
    if r.is_zero() {
        // g and g_y share a factor of positive y-degree, so g has a
        // repeated factor
        return Ok(true);
    }
    if r.is_constant() {
        return Ok(false);
    }
    let m = squarefree_part(&r)?.to_dense();
    let branches = gcd_split(m, to_ypoly(g), to_ypoly(&gy));
    for (m, h) in branches {
        for (m2, h2) in gcd_split(m, h, to_ypoly(&gx)) {
            let h2 = trim_y(h2, &m2);
            if h2.is_empty() || h2.len() >= 2 {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Whether the axis fiber over `base` has a singular point, decided by
/// solving `G = G_x = G_y = 0` in all four affine charts of P^1 x P^1.
pub fn direct_fiber_singular(s: &Surface222, axis: Axis, base: &P1) -> Result<bool, SurfaceError> {
    let slice = match s.fiber_slice(axis, base) {
        Ok(sl) => sl,
        Err(SurfaceError::FiberVanishes(_)) => return Ok(true),
        Err(e) => return Err(e),
    };
    let g = slice.form();
    for fx in [false, true] {
        for fy in [false, true] {
            let mut h = g.clone();
            if fx {
                h = h.reverse_in(0, 2);
            }
            if fy {
                h = h.reverse_in(1, 2);
            }
            if affine_singular(&h)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
