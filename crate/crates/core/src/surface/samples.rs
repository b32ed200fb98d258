//! Sample surfaces: a vetted generic surface and constructed special cases.

use super::{Surface222, SurfacePoint};
use crate::algebra::Polynomial;

const VETTED_JSON: &str = include_str!("../../fixtures/vetted_surface.json");

fn from_poly(terms: &[([u32; 3], i64)]) -> Surface222 {
    let p = Polynomial::from_terms(3, terms.iter().map(|(e, v)| (*e, crate::algebra::rational::int(*v))));
    Surface222::from_polynomial(&p).expect("degrees within (2, 2, 2)")
}

/// The vetted generic surface; `(0, 0, 0)` is a ramification point for
/// both fibrations.
pub fn vetted() -> Surface222 {
    serde_json::from_str(VETTED_JSON).expect("fixture parses")
}

const TORSION3_JSON: &str = include_str!("../../fixtures/torsion3_surface.json");

/// A valid surface with points of class order 3 for axis 2 over `x = -2`.
pub fn torsion3() -> Surface222 {
    serde_json::from_str(TORSION3_JSON).expect("fixture parses")
}

/// `(x^2 + 1) y^2 - x^2 + t R` with `R(0, 0, 0) != 0`: the axis 1 fiber
/// over `t = 0` has a node at `(x, y) = (0, 0)`.
pub fn nodal() -> Surface222 {
    from_poly(&[
        ([2, 2, 0], 1),
        ([0, 2, 0], 1),
        ([2, 0, 0], -1),
        // t * (1 + x y + 2 y^2 t + x^2 t - x y^2)
        ([0, 0, 1], 1),
        ([1, 1, 1], 1),
        ([0, 2, 2], 2),
        ([2, 0, 2], 1),
        ([1, 2, 1], -1),
    ])
}

/// As [`nodal`] but with `R(0, 0, 0) = 0`, so `(0, 0, 0)` is a singular
/// point of its fiber for both fibrations.
pub fn doubly_nodal() -> Surface222 {
    from_poly(&[
        ([2, 2, 0], 1),
        ([0, 2, 0], 1),
        ([2, 0, 0], -1),
        // t * (x y + 2 y^2 t + x^2 t - x y^2 + y t + x)
        ([1, 1, 1], 1),
        ([0, 2, 2], 2),
        ([2, 0, 2], 1),
        ([1, 2, 1], -1),
        ([0, 1, 2], 1),
        ([1, 0, 1], 1),
    ])
}

/// `(x^2 + 1)(t^2 + 1) y^2 - (x^2 - 1)(t^2 + 2)`: every axis 1 fiber is
/// `z^2 = c (x^4 - 1)`, so `j = 1728` throughout.
pub fn isotrivial() -> Surface222 {
    from_poly(&[
        ([2, 2, 2], 1),
        ([2, 2, 0], 1),
        ([0, 2, 2], 1),
        ([0, 2, 0], 1),
        ([2, 0, 2], -1),
        ([2, 0, 0], -2),
        ([0, 0, 2], 1),
        ([0, 0, 0], 2),
    ])
}

/// `(x^2 - y^2)(t^2 - 1)`.
pub fn product() -> Surface222 {
    from_poly(&[([2, 0, 2], 1), ([2, 0, 0], -1), ([0, 2, 2], -1), ([0, 2, 0], 1)])
}

/// `(x - 1)(y^2 t + x y + t^2) + (t - 1)(x^2 y^2 + y + 1)`, containing the
/// line `x = 1, t = 1`.
pub fn with_line() -> Surface222 {
    let x = Polynomial::var(3, 0);
    let y = Polynomial::var(3, 1);
    let t = Polynomial::var(3, 2);
    let one = Polynomial::one(3);
    let a = &(&(&y * &y) * &t) + &(&(&x * &y) + &(&t * &t));
    let b = &(&(&(&x * &x) * &(&y * &y)) + &y) + &one;
    let f = &(&(&x - &one) * &a) + &(&(&t - &one) * &b);
    Surface222::from_polynomial(&f).expect("degrees within (2, 2, 2)")
}

pub fn origin() -> SurfacePoint {
    SurfacePoint::ints(0, 0, 0)
}
