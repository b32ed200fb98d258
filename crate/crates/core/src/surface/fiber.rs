//! Fibers, the fiberwise involution, and Q-irreducible fiber components.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Axis, Surface222, SurfaceError, SurfacePoint, P1};
use crate::algebra::rational::{self, int, Rational};
use crate::algebra::univariate::{div_rem, gcd_univariate, rational_roots, sqrt_univariate};
use crate::algebra::Polynomial;
use crate::elliptic::BinaryQuartic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberStatus {
    Smooth,
    Singular,
}

/// The fiber over a base value, written `a(x) y^2 + b(x) y + c(x) = 0`
/// with `x` the coordinate of the other base.
#[derive(Clone, Debug)]
pub struct FiberSlice {
    pub axis: Axis,
    pub base: P1,
    /// Whether the base coordinate was inverted to reach the value.
    pub flipped_base: bool,
    pub a: Polynomial,
    pub b: Polynomial,
    pub c: Polynomial,
    /// `b^2 - 4ac` of formal degree 4; `None` when it vanishes identically.
    pub quartic: Option<BinaryQuartic>,
}

impl FiberSlice {
    pub fn status(&self) -> FiberStatus {
        match &self.quartic {
            Some(q) if q.is_nondegenerate() => FiberStatus::Smooth,
            _ => FiberStatus::Singular,
        }
    }

    pub fn is_smooth(&self) -> bool {
        self.status() == FiberStatus::Smooth
    }

    /// The fiber as a polynomial in `(x, y)`.
    pub fn form(&self) -> Polynomial {
        let y = Polynomial::var(2, 1);
        let lift = |p: &Polynomial| p.with_nvars(2);
        &(&lift(&self.a) * &(&y * &y)) + &(&(&lift(&self.b) * &y) + &lift(&self.c))
    }
}

fn eval_row(row: &[Rational; 3], t: &Rational) -> Rational {
    &row[0] + t * (&row[1] + t * &row[2])
}

impl Surface222 {
    /// Affine rational points with `x` and `t` of height at most `h`, sorted.
    pub fn affine_points(&self, h: u64) -> Vec<SurfacePoint> {
        let rs = crate::exclusion::component::rationals_by_height(h);
        let mut out = Vec::new();
        for t in &rs {
            let conic = self.conic_at(t);
            for x in &rs {
                let xs = std::slice::from_ref(x);
                let [a, b, c] = conic.each_ref().map(|p| p.eval(xs));
                if a.is_zero() {
                    if !b.is_zero() {
                        out.push(SurfacePoint::affine(x.clone(), -c / b, t.clone()));
                    }
                    continue;
                }
                let disc = &b * &b - &a * &c * Rational::from_integer(4.into());
                if let Some(r) = crate::algebra::rational::sqrt(&disc) {
                    let two_a = &a + &a;
                    out.push(SurfacePoint::affine(x.clone(), (-&b + &r) / &two_a, t.clone()));
                    out.push(SurfacePoint::affine(x.clone(), (-&b - &r) / &two_a, t.clone()));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Conic coefficients `[a, b, c]` of the axis-1 fiber over a finite `t`.
    pub(crate) fn conic_at(&self, t: &Rational) -> [Polynomial; 3] {
        [2usize, 1, 0].map(|j| {
            let coeffs: Vec<Rational> = (0..3).map(|i| eval_row(&self.c[i][j], t)).collect();
            Polynomial::from_coeffs(&coeffs)
        })
    }

    /// The chart surface and finite base value reaching `base` on axis 1.
    fn base_chart(&self, base: &P1) -> (Surface222, Rational, bool) {
        match base {
            P1::Finite(t) => (self.clone(), t.clone(), false),
            P1::Infinity => (self.flipped(2), Rational::zero(), true),
        }
    }

    pub fn fiber_slice(&self, axis: Axis, base: &P1) -> Result<FiberSlice, SurfaceError> {
        let (chart, t0, flipped_base) = self.view(axis).base_chart(base);
        let [a, b, c] = chart.conic_at(&t0);
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(SurfaceError::FiberVanishes(base.to_string()));
        }
        let q = &(&b * &b) - &(&a * &c).scale(&int(4));
        let quartic = if q.is_zero() {
            None
        } else {
            Some(BinaryQuartic::from_polynomial(&q)?)
        };
        Ok(FiberSlice {
            axis,
            base: base.clone(),
            flipped_base,
            a,
            b,
            c,
            quartic,
        })
    }

    /// Base value of the axis fiber through `p`.
    pub fn base_of(&self, axis: Axis, p: &SurfacePoint) -> P1 {
        match axis {
            Axis::One => p.t.clone(),
            Axis::Two => p.x.clone(),
        }
    }

    pub fn fiber_status(&self, axis: Axis, base: &P1) -> Result<FiberStatus, SurfaceError> {
        match self.fiber_slice(axis, base) {
            Ok(s) => Ok(s.status()),
            Err(SurfaceError::FiberVanishes(_)) => Ok(FiberStatus::Singular),
            Err(e) => Err(e),
        }
    }

    /// Values of `(a, b, c)` at the point, in the chart where its cover
    /// coordinate and base are finite, together with the chart flips.
    pub(crate) fn local_conic(&self, view_pt: &SurfacePoint) -> ([Rational; 3], [bool; 2]) {
        let mut s = self.clone();
        let mut flips = [false; 2];
        for (n, var) in [0usize, 2].into_iter().enumerate() {
            if view_pt.coord(var).finite().is_none() {
                s = s.flipped(var);
                flips[n] = true;
            }
        }
        let x = view_pt.x.finite().cloned().unwrap_or_else(Rational::zero);
        let t = view_pt.t.finite().cloned().unwrap_or_else(Rational::zero);
        let [a, b, c] = s.conic_at(&t);
        ([a, b, c].map(|p| p.eval(std::slice::from_ref(&x))), flips)
    }

    /// The fiberwise involution: same fiber, same cover coordinate, the
    /// other root of the quadratic in `y`.
    pub fn involution(&self, axis: Axis, p: &SurfacePoint) -> Result<SurfacePoint, SurfaceError> {
        if !self.contains(p) {
            return Err(SurfaceError::NotOnSurface);
        }
        let view = self.view(axis);
        let vp = to_view(axis, p);
        let ([a, b, c], _) = view.local_conic(&vp);
        let [y0, y1] = vp.y.pair();
        let candidates = [
            (&c * &y1, &a * &y0),
            (-(&b * &y1) - &a * &y0, &a * &y1),
            (&c * &y0, -(&b * &y0) - &c * &y1),
        ];
        let y = candidates
            .into_iter()
            .find_map(|(n, d)| P1::from_pair(n, d))
            .ok_or(SurfaceError::SingularPosition)?;
        let out = SurfacePoint::new(vp.x.clone(), y, vp.t.clone());
        Ok(from_view(axis, &out))
    }

    /// Whether `p` is a singular point of its axis fiber.
    pub fn is_fiber_singular_point(&self, axis: Axis, p: &SurfacePoint) -> Result<bool, SurfaceError> {
        if !self.contains(p) {
            return Err(SurfaceError::NotOnSurface);
        }
        let vp = to_view(axis, p);
        let (chart, aff, _) = self.view(axis).affine_chart(&vp);
        let f = chart.polynomial();
        Ok([0usize, 1]
            .iter()
            .all(|&v| f.derivative(v).eval(&aff).is_zero()))
    }

    /// Q-irreducible components of the axis fiber over `base`, in the
    /// coordinates `(x, y)` of the fiber chart.
    pub fn fiber_components(&self, axis: Axis, base: &P1) -> Result<Vec<FiberComponent>, SurfaceError> {
        let slice = self.fiber_slice(axis, base)?;
        factor_fiber(&slice.form())
    }

    /// The component of the axis fiber through `p`.
    pub fn component_through(&self, axis: Axis, p: &SurfacePoint) -> Result<FiberComponent, SurfaceError> {
        if !self.contains(p) {
            return Err(SurfaceError::NotOnSurface);
        }
        let vp = to_view(axis, p);
        let comps = self.fiber_components(axis, &vp.t)?;
        comps
            .into_iter()
            .find(|c| c.contains(&vp.x, &vp.y))
            .ok_or(SurfaceError::NotOnSurface)
    }

    /// The surface point with fiber coordinates `(x, y)` over `base`.
    pub fn point_on_fiber(&self, axis: Axis, base: &P1, x: P1, y: P1) -> SurfacePoint {
        from_view(axis, &SurfacePoint::new(x, y, base.clone()))
    }
}

pub(crate) fn to_view(axis: Axis, p: &SurfacePoint) -> SurfacePoint {
    match axis {
        Axis::One => p.clone(),
        Axis::Two => p.swapped(),
    }
}

pub(crate) fn from_view(axis: Axis, p: &SurfacePoint) -> SurfacePoint {
    to_view(axis, p)
}

/// A Q-irreducible factor of a fiber form, with formal bidegree in
/// `(x, y)`. The lines `x = oo` and `y = oo` are the constant factor `1`
/// with bidegree `(1, 0)` and `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberComponent {
    pub factor: Polynomial,
    pub bidegree: (u32, u32),
    pub multiplicity: u32,
}

impl FiberComponent {
    fn new(factor: Polynomial, bidegree: (u32, u32), multiplicity: u32) -> Self {
        FiberComponent {
            factor: factor.primitive_integer(),
            bidegree,
            multiplicity,
        }
    }

    /// Vertical for the projection to the cover coordinate `x`.
    pub fn is_vertical(&self) -> bool {
        self.bidegree.1 == 0
    }

    pub fn contains(&self, x: &P1, y: &P1) -> bool {
        let [x0, x1] = x.pair();
        let [y0, y1] = y.pair();
        let (dx, dy) = self.bidegree;
        let mut acc = Rational::zero();
        for (e, v) in self.factor.terms() {
            acc += v
                * rational::pow(&x0, e[0])
                * rational::pow(&x1, dx - e[0])
                * rational::pow(&y0, e[1])
                * rational::pow(&y1, dy - e[1]);
        }
        acc.is_zero()
    }

    /// Rational `y` with `(x, y)` on the component, `x` finite.
    pub fn y_values_over(&self, x: &Rational) -> Vec<P1> {
        if self.is_vertical() {
            return Vec::new();
        }
        let row: Vec<Rational> = self
            .factor
            .coefficients_in(1)
            .iter()
            .map(|c| c.eval(&[x.clone(), Rational::zero()]))
            .collect();
        let dy = self.bidegree.1 as usize;
        let mut coeffs = row;
        coeffs.resize(dy + 1, Rational::zero());
        let mut out = Vec::new();
        if coeffs.iter().all(|c| c.is_zero()) {
            return out;
        }
        if coeffs[dy].is_zero() {
            out.push(P1::Infinity);
        }
        let p = Polynomial::from_coeffs(&coeffs);
        if p.degree_in(0).unwrap_or(0) > 0 {
            if let Ok(roots) = rational_roots(&p) {
                let mut seen: Vec<Rational> = Vec::new();
                for r in roots {
                    if !seen.contains(&r) {
                        seen.push(r.clone());
                        out.push(P1::Finite(r));
                    }
                }
            }
        }
        out
    }
}

fn univariate_in(p: &Polynomial, var: usize) -> Polynomial {
    Polynomial::from_coeffs(&p.to_dense_in(var))
}

fn gcd_all(polys: &[Polynomial]) -> Polynomial {
    polys
        .iter()
        .filter(|p| !p.is_zero())
        .fold(Polynomial::zero(1), |g, p| gcd_univariate(&g, p).expect("univariate"))
}

/// Univariate factor in variable `var` of a bivariate polynomial, split
/// into rational linear factors and the remaining cofactor.
fn split_univariate(g: &Polynomial, var: usize, out: &mut Vec<FiberComponent>) {
    let mut rest = g.clone();
    let roots = rational_roots(g).unwrap_or_default();
    let mut distinct: Vec<(Rational, u32)> = Vec::new();
    for r in roots {
        match distinct.iter_mut().find(|(v, _)| *v == r) {
            Some(e) => e.1 += 1,
            None => distinct.push((r, 1)),
        }
    }
    let lift = |p: &Polynomial| {
        let exps = p.terms().map(|(e, c)| {
            let mut e2 = [0u32; 3];
            e2[var] = e[0];
            (e2, c.clone())
        });
        Polynomial::from_terms(2, exps)
    };
    for (r, m) in distinct {
        let lin = Polynomial::from_coeffs(&[-r.clone(), Rational::one()]);
        for _ in 0..m {
            rest = div_rem(&rest, &lin).expect("univariate").0;
        }
        let bideg = if var == 0 { (1, 0) } else { (0, 1) };
        out.push(FiberComponent::new(lift(&lin), bideg, m));
    }
    let d = rest.degree_in(0).unwrap_or(0);
    if d > 0 {
        let bideg = if var == 0 { (d, 0) } else { (0, d) };
        out.push(FiberComponent::new(lift(&rest), bideg, 1));
    }
}

/// Factors a fiber form of bidegree at most `(2, 2)` over Q.
pub(crate) fn factor_fiber(g: &Polynomial) -> Result<Vec<FiberComponent>, SurfaceError> {
    let mut out = Vec::new();
    let dx = g.degree_in(0).unwrap_or(0);
    let dy = g.degree_in(1).unwrap_or(0);
    if dx < 2 {
        out.push(FiberComponent::new(Polynomial::one(2), (1, 0), 2 - dx));
    }
    if dy < 2 {
        out.push(FiberComponent::new(Polynomial::one(2), (0, 1), 2 - dy));
    }
    // content in x: gcd of the y-coefficients; content in y likewise
    let ycoeffs: Vec<Polynomial> = g.coefficients_in(1).iter().map(|p| univariate_in(p, 0)).collect();
    let gx = gcd_all(&ycoeffs);
    let xcoeffs: Vec<Polynomial> = g.coefficients_in(0).iter().map(|p| univariate_in(p, 1)).collect();
    let gy = gcd_all(&xcoeffs);
    let mut h = g.clone();
    if gx.degree_in(0).unwrap_or(0) > 0 {
        split_univariate(&gx, 0, &mut out);
        h = h.exact_div(&gx.with_nvars(2)).ok_or(crate::algebra::AlgebraError::InexactDivision)?;
    }
    if gy.degree_in(0).unwrap_or(0) > 0 {
        split_univariate(&gy, 1, &mut out);
        let gy2 = Polynomial::from_terms(2, gy.terms().map(|(e, c)| ([0, e[0], 0], c.clone())));
        h = h.exact_div(&gy2).ok_or(crate::algebra::AlgebraError::InexactDivision)?;
    }
    let hx = h.degree_in(0).unwrap_or(0);
    let hy = h.degree_in(1).unwrap_or(0);
    if hx == 0 && hy == 0 {
        return Ok(out);
    }
    if hy == 2 && hx > 0 {
        let cs = h.coefficients_in(1);
        let (c, b, a) = (univariate_in(&cs[0], 0), univariate_in(&cs[1], 0), univariate_in(&cs[2], 0));
        let disc = &(&b * &b) - &(&a * &c).scale(&int(4));
        if let Some(s) = sqrt_univariate(&disc)? {
            let y = Polynomial::var(2, 1);
            let two_ay = &a.with_nvars(2).scale(&int(2)) * &y;
            let f1 = &(&two_ay + &b.with_nvars(2)) - &s.with_nvars(2);
            let f2 = &(&two_ay + &b.with_nvars(2)) + &s.with_nvars(2);
            let mut parts = Vec::new();
            for f in [f1, f2] {
                let co: Vec<Polynomial> = f.coefficients_in(1).iter().map(|p| univariate_in(p, 0)).collect();
                let content = gcd_all(&co);
                let prim = f.exact_div(&content.with_nvars(2)).ok_or(crate::algebra::AlgebraError::InexactDivision)?;
                let bideg = (prim.degree_in(0).unwrap_or(0), prim.degree_in(1).unwrap_or(0));
                parts.push(FiberComponent::new(prim, bideg, 1));
            }
            if parts[0].factor == parts[1].factor {
                parts.pop();
                parts[0].multiplicity = 2;
            }
            out.extend(parts);
            return Ok(out);
        }
    }
    out.push(FiberComponent::new(h, (hx, hy), 1));
    Ok(out)
}
