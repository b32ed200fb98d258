//! Equations for `T_{i,r}` over the generic fiber.
//!
//! With `P = (x, z)` on `z^2 = q(x)` and `q(x + u) = e4 u^4 + e3 u^3 +
//! e2 u^2 + e1 u + z^2`, the Weierstrass model with `P` as identity has
//! `b2 = 4 e2`, `b4 = 2 e1 e3 - 8 z^2 e4`, `b6 = 4 z^2 e3^2 - 16 z^2 e2 e4 +
//! 4 e1^2 e4`, and the conjugate `(x, -z)` maps to
//! `X = (3 e1^2 - 8 e2 z^2) / (12 z^2)`,
//! `Y = (4 z^2 e1 e2 - e1^3 - 8 z^4 e3) / (8 z^3)`.
//! Only `z^2 = q` enters `X`, `A`, `B`, so the conditions are polynomial in
//! the cover coordinate and the base parameter alone.

use serde::{Deserialize, Serialize};

use super::ExclusionError;
use crate::algebra::rational::{int, rat};
use crate::algebra::Polynomial;
use crate::elliptic::divpoly::f_values;
use crate::surface::{Axis, Surface222};

/// Largest `r` accepted at all.
pub const R_CEILING: u32 = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationConfig {
    /// `r` above this needs `allow_expensive`.
    pub r_max: u32,
    pub allow_expensive: bool,
    /// Largest number of monomials in a generator.
    pub monomial_budget: usize,
}

impl Default for EquationConfig {
    fn default() -> Self {
        EquationConfig {
            r_max: 5,
            allow_expensive: false,
            monomial_budget: 20_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionEquations {
    pub axis: Axis,
    pub r: u32,
    /// Polynomials in `(x, y, t)`; they vanish at every point of a smooth
    /// fiber whose class has order dividing `r`.
    pub generators: Vec<Polynomial>,
    /// Loci on which the generators carry no information.
    pub degeneracy: Vec<String>,
    pub notes: Vec<String>,
}

fn dx(p: &Polynomial, k: u32) -> Polynomial {
    // k-th Taylor coefficient in x: p^(k) / k!
    let mut d = p.clone();
    let mut fact = 1i64;
    for i in 1..=k {
        d = d.derivative(0);
        fact *= i as i64;
    }
    d.scale(&rat(1, fact))
}

/// Monomial estimate for `f_r(N, D^2 A, D^3 B)`.
fn estimate(r: u32, x_per_weight: u32, t_per_weight: u32) -> usize {
    let w = if r % 2 == 1 { r * r - 1 } else { r * r - 4 };
    let h = w / 2;
    ((h * x_per_weight + 1) as usize) * ((h * t_per_weight + 1) as usize)
}

/// The pieces `(q, N, D, Ynum, A, B)` for the axis view, in `(x, t)`.
pub(crate) fn generic_image(s: &Surface222, axis: Axis) -> [Polynomial; 6] {
    let q = s.view(axis).fiber_quartic_polynomial();
    let [e1, e2, e3, e4] = [1, 2, 3, 4].map(|k| dx(&q, k));
    let b2 = e2.scale(&int(4));
    let b4 = &(&e1 * &e3).scale(&int(2)) - &(&q * &e4).scale(&int(8));
    let b6 = &(&(&(&q * &e3) * &e3).scale(&int(4)) - &(&(&q * &e2) * &e4).scale(&int(16)))
        + &(&(&e1 * &e1) * &e4).scale(&int(4));
    let c4 = &(&b2 * &b2) - &b4.scale(&int(24));
    let c6 = &(&(&b2 * &b4).scale(&int(36)) - &b2.pow(3)) - &b6.scale(&int(216));
    let a = c4.scale(&rat(-1, 48));
    let b = c6.scale(&rat(-1, 864));
    let n = &(&e1 * &e1).scale(&int(3)) - &(&e2 * &q).scale(&int(8));
    let d = q.scale(&int(12));
    let ynum = &(&(&(&q * &e1) * &e2).scale(&int(4)) - &e1.pow(3)) - &(&(&q * &q) * &e3).scale(&int(8));
    [q, n, d, ynum, a, b]
}

fn to_surface_vars(p: &Polynomial, axis: Axis) -> Polynomial {
    Polynomial::from_terms(
        3,
        p.terms().map(|(e, c)| {
            let exps = match axis {
                Axis::One => [e[0], 0, e[1]],
                Axis::Two => [e[1], 0, e[0]],
            };
            (exps, c.clone())
        }),
    )
}

pub fn emit_t_equations(
    s: &Surface222,
    axis: Axis,
    r: u32,
    cfg: &EquationConfig,
) -> Result<ExclusionEquations, ExclusionError> {
    let limit = if cfg.allow_expensive { R_CEILING } else { cfg.r_max.min(R_CEILING) };
    if r < 1 || r > limit {
        return Err(ExclusionError::BadR(r, limit));
    }
    let [q, n, d, ynum, a, b] = generic_image(s, axis);
    let mut notes = vec!["zero set contains the points whose class order divides r".to_string()];
    if r > 5 {
        notes.push(format!("r = {} is expensive: generator size grows like r^4", r));
    }
    let gen = match r {
        1 => q.clone(),
        2 => ynum.clone(),
        _ => {
            let xw = n.degree_in(0).unwrap_or(0).max(1) / 2 + 1;
            let tw = n.degree_in(1).unwrap_or(0).max(1) / 2 + 1;
            let est = estimate(r, xw.max(2), tw.max(2));
            if est > cfg.monomial_budget.saturating_mul(4) {
                return Err(ExclusionError::Budget(format!(
                    "about {} monomials expected, budget {}",
                    est, cfg.monomial_budget
                )));
            }
            let d2 = &d * &d;
            let d3 = &d2 * &d;
            let f = f_values(r as usize, &n, &(&d2 * &a), &(&d3 * &b)).pop().expect("r >= 1");
            if r % 2 == 0 {
                &f * &ynum
            } else {
                f
            }
        }
    };
    let mut gen = gen.primitive_integer();
    let mut removed = 0;
    if r > 1 {
        while let Some(g) = gen.exact_div(&q) {
            gen = g;
            removed += 1;
        }
    }
    if removed > 0 {
        notes.push(format!("removed the factor q^{}", removed));
    }
    if gen.num_terms() > cfg.monomial_budget {
        return Err(ExclusionError::Budget(format!(
            "{} monomials, budget {}",
            gen.num_terms(),
            cfg.monomial_budget
        )));
    }
    let mut degeneracy = vec!["q(x, t) = 0: fixed points of the involution".to_string()];
    degeneracy.push("Delta(t) = 0: singular fibers".to_string());
    Ok(ExclusionEquations {
        axis,
        r,
        generators: vec![to_surface_vars(&gen.primitive_integer(), axis)],
        degeneracy,
        notes,
    })
}
