//! Certificates that a fiber component is not contained in the torsion
//! locus of the other fibration.

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{class_order, ClassOrder, ExclusionError, OrderResult};
use crate::algebra::rational::rat;
use crate::algebra::Rational;
use crate::surface::{Axis, FiberComponent, Surface222, SurfacePoint, P1};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Largest numerator and denominator of the cover coordinate.
    pub height: u64,
    /// Candidate points tried before giving up.
    pub max_candidates: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            height: 24,
            max_candidates: 600,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentOutcome {
    /// A witness of infinite order was found.
    Certified,
    /// The component is a fiber of the other fibration too.
    Vertical,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCertificate {
    pub from_axis: Axis,
    pub base: P1,
    /// Whether the fiber through the point is smooth, in which case the
    /// component is the whole fiber.
    pub whole_fiber: bool,
    pub component: FiberComponent,
    pub horizontal: bool,
    pub outcome: ComponentOutcome,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<OrderResult>,
    pub candidates_tried: usize,
}

/// Rationals `n/d` with `max(|n|, d) <= h`, by increasing height, then by
/// value.
pub fn rationals_by_height(h: u64) -> Vec<Rational> {
    let h = h as i64;
    let mut out: Vec<(i64, Rational)> = Vec::new();
    for d in 1..=h {
        for n in -h..=h {
            if n.gcd(&d) == 1 || (n == 0 && d == 1) {
                out.push((n.abs().max(d), rat(n, d)));
            }
        }
    }
    out.sort();
    out.into_iter().map(|(_, q)| q).collect()
}

fn witness_ok(s: &Surface222, axis: Axis, pt: &SurfacePoint) -> Option<OrderResult> {
    match class_order(s, axis, pt) {
        Ok(r) if r.order == ClassOrder::Infinite => Some(r),
        _ => None,
    }
}

/// Certifies that the component of the `from_axis` fiber through `p` is
/// horizontal for the other fibration and not contained in its torsion
/// locus, via a point of infinite class order on a smooth fiber of the
/// other fibration.
pub fn component_certificate(
    s: &Surface222,
    p: &SurfacePoint,
    from_axis: Axis,
    cfg: &SearchConfig,
) -> Result<ComponentCertificate, ExclusionError> {
    let component = s.component_through(from_axis, p)?;
    let base = s.base_of(from_axis, p);
    let whole_fiber = s.fiber_slice(from_axis, &base).map(|sl| sl.is_smooth()).unwrap_or(false);
    let other = from_axis.other();
    let mut cert = ComponentCertificate {
        from_axis,
        base: base.clone(),
        whole_fiber,
        horizontal: !component.is_vertical(),
        component,
        outcome: ComponentOutcome::Vertical,
        witness: None,
        candidates_tried: 0,
    };
    if !cert.horizontal {
        return Ok(cert);
    }
    let mut candidates = vec![p.clone()];
    for x in rationals_by_height(cfg.height) {
        for y in cert.component.y_values_over(&x) {
            let pt = s.point_on_fiber(from_axis, &base, P1::Finite(x.clone()), y);
            if pt != *p {
                candidates.push(pt);
            }
        }
        if candidates.len() >= cfg.max_candidates {
            break;
        }
    }
    candidates.truncate(cfg.max_candidates.max(1));
    let found = candidates
        .par_iter()
        .enumerate()
        .find_map_first(|(k, pt)| witness_ok(s, other, pt).map(|r| (k, r)));
    match found {
        Some((k, r)) => {
            cert.outcome = ComponentOutcome::Certified;
            cert.witness = Some(r);
            cert.candidates_tried = k + 1;
        }
        None => {
            cert.outcome = ComponentOutcome::Inconclusive;
            cert.candidates_tried = candidates.len();
        }
    }
    Ok(cert)
}

impl ComponentCertificate {
    /// Re-verifies the component and, when present, the witness.
    pub fn recheck(&self, s: &Surface222, p: &SurfacePoint) -> bool {
        let comp = match s.component_through(self.from_axis, p) {
            Ok(c) => c,
            Err(_) => return false,
        };
        if comp != self.component || s.base_of(self.from_axis, p) != self.base {
            return false;
        }
        if self.horizontal == comp.is_vertical() {
            return false;
        }
        match (self.outcome, &self.witness) {
            (ComponentOutcome::Certified, Some(w)) => {
                let vp = match self.from_axis {
                    Axis::One => w.point.clone(),
                    Axis::Two => w.point.swapped(),
                };
                self.horizontal
                    && w.axis == self.from_axis.other()
                    && s.contains(&w.point)
                    && s.base_of(self.from_axis, &w.point) == self.base
                    && comp.contains(&vp.x, &vp.y)
                    && w.order == ClassOrder::Infinite
                    && w.recheck(s)
            }
            (ComponentOutcome::Vertical, None) => !self.horizontal,
            (ComponentOutcome::Inconclusive, None) => true,
            _ => false,
        }
    }
}
