//! Density verdicts for a surface with two elliptic fibrations and
//! fiberwise involutions: single-point certification and threshold counts.
//!
//! A verdict never claims non-density; `Inconclusive` only means the
//! supplied evidence did not discharge the hypotheses.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Rational;
use crate::bounds::{global_bound, BoundError};
use crate::exclusion::{
    class_order, component_certificate, ClassOrder, ComponentCertificate, ComponentOutcome, ExclusionError,
    OrderResult, SearchConfig,
};
use crate::surface::{Axis, FiberStatus, Surface222, SurfaceError, SurfacePoint, P1};

/// Cutoff used by the threshold rules.
pub const THRESHOLD_CUTOFF: u64 = 15;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertifyError {
    #[error("point {0} is not on the surface")]
    NotOnSurface(String),
    #[error("j-map of axis {0} is constant")]
    ConstantJ(u8),
    #[error(transparent)]
    Exclusion(#[from] ExclusionError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Bound(#[from] BoundError),
}

impl From<crate::elliptic::EllipticError> for CertifyError {
    fn from(e: crate::elliptic::EllipticError) -> Self {
        CertifyError::Exclusion(e.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    Dense,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// One point outside the exclusion set with cutoff `B(d)`.
    Efficient,
    /// More than `n_K min(d1 M1, d2 M2)` points outside `Z0 u Z1 u Z2`.
    Notefficient,
    /// More than `n_K (d1 M1 + d2 M2)` points outside `Z0 u (Z1 n Z2)`.
    Efficienttwo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdMode {
    Min,
    Sum,
}

impl ThresholdMode {
    pub fn rule(self) -> Rule {
        match self {
            ThresholdMode::Min => Rule::Notefficient,
            ThresholdMode::Sum => Rule::Efficienttwo,
        }
    }
}

/// `mu(j0)`: 4 for `j0 = 1728`, 6 for `j0 = 0`, 2 otherwise.
pub fn mu_factor(j0: &Rational) -> u32 {
    if *j0 == Rational::from_integer(1728.into()) {
        4
    } else if *j0 == Rational::from_integer(0.into()) {
        6
    } else {
        2
    }
}

/// `n_K min(d1 M1, d2 M2)` or `n_K (d1 M1 + d2 M2)`.
pub fn threshold(mode: ThresholdMode, n_k: u64, d1: u64, m1: u64, d2: u64, m2: u64) -> u128 {
    let (a, b) = ((d1 as u128) * (m1 as u128), (d2 as u128) * (m2 as u128));
    let base = match mode {
        ThresholdMode::Min => a.min(b),
        ThresholdMode::Sum => a + b,
    };
    (n_k as u128) * base
}

/// Dense iff the count is strictly larger than the threshold.
pub fn threshold_outcome(count: u128, threshold: u128) -> Outcome {
    if count > threshold {
        Outcome::Dense
    } else {
        Outcome::Inconclusive
    }
}

/// One checked statement of a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "fact", rename_all = "snake_case")]
pub enum Fact {
    OnSurface { point: SurfacePoint },
    Bound { d: u32, bound: String },
    Fiber { axis: Axis, base: P1, status: FiberStatus },
    ClassOrder { result: OrderResult },
    FiberSingularPoint { axis: Axis, point: SurfacePoint, singular: bool },
    Component { point: SurfacePoint, certificate: ComponentCertificate },
    JDegree { axis: Axis, degree: Option<u32> },
    ChiDegree { axis: Axis, value: u32 },
    Cutoff { x: u64 },
    PointOutside { point: SurfacePoint, outside: bool },
    Threshold {
        mode: ThresholdMode,
        n_k: u64,
        d1: u64,
        m1: u64,
        d2: u64,
        m2: u64,
        threshold: String,
        count: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub rule: Rule,
    pub surface: Surface222,
    pub evidence: Vec<Fact>,
    pub caveats: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyConfig {
    pub degree: u32,
    pub search: SearchConfig,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            degree: 1,
            search: SearchConfig::default(),
        }
    }
}

fn check_on(s: &Surface222, p: &SurfacePoint) -> Result<(), CertifyError> {
    if s.contains(p) {
        Ok(())
    } else {
        Err(CertifyError::NotOnSurface(p.to_string()))
    }
}

/// Certifies density from a single point: on some fibration the point is
/// either of infinite class order on a smooth fiber or a nonsingular point
/// of a singular fiber, and the fiber component through it carries a
/// point of infinite class order for the other fibration.
pub fn certify_point(s: &Surface222, p: &SurfacePoint, cfg: &CertifyConfig) -> Result<Verdict, CertifyError> {
    check_on(s, p)?;
    let table = global_bound(cfg.degree)?;
    let mut evidence = vec![
        Fact::OnSurface { point: p.clone() },
        Fact::Bound {
            d: cfg.degree,
            bound: table.bound.to_string(),
        },
    ];
    let mut caveats = Vec::new();
    let mut outcome = Outcome::Inconclusive;
    for axis in Axis::both() {
        let base = s.base_of(axis, p);
        let status = s.fiber_status(axis, &base)?;
        evidence.push(Fact::Fiber {
            axis,
            base: base.clone(),
            status,
        });
        let route = match status {
            FiberStatus::Smooth => {
                let r = class_order(s, axis, p)?;
                let ok = r.order == ClassOrder::Infinite;
                if !ok {
                    caveats.push(format!(
                        "axis {}: class of (alpha(P)) - (P) has order {}, so P lies in T_{}",
                        axis.index(),
                        r.order,
                        axis.index()
                    ));
                }
                evidence.push(Fact::ClassOrder { result: r });
                ok
            }
            FiberStatus::Singular => {
                let singular = s.is_fiber_singular_point(axis, p)?;
                evidence.push(Fact::FiberSingularPoint {
                    axis,
                    point: p.clone(),
                    singular,
                });
                if singular {
                    caveats.push(format!(
                        "axis {}: P is a singular point of a singular fiber, so P lies in Z_{}",
                        axis.index(),
                        axis.index()
                    ));
                } else {
                    caveats.push(format!(
                        "axis {}: P is a smooth rational point of a singular fiber; its component is rational",
                        axis.index()
                    ));
                }
                !singular
            }
        };
        if !route {
            continue;
        }
        let cert = component_certificate(s, p, axis, &cfg.search)?;
        let certified = cert.outcome == ComponentOutcome::Certified;
        if !certified {
            caveats.push(format!(
                "axis {}: component through P not certified for axis {} ({:?})",
                axis.index(),
                axis.other().index(),
                cert.outcome
            ));
        }
        evidence.push(Fact::Component {
            point: p.clone(),
            certificate: cert,
        });
        if certified {
            outcome = Outcome::Dense;
            break;
        }
    }
    if outcome == Outcome::Dense && cfg.degree != 1 {
        outcome = Outcome::Inconclusive;
        caveats.push("point arithmetic is over Q; a verdict is only given for d = 1".into());
    }
    Ok(Verdict {
        outcome,
        rule: Rule::Efficient,
        surface: s.clone(),
        evidence,
        caveats,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdInput {
    pub points: Vec<SurfacePoint>,
    pub n_k: u64,
    pub mode: ThresholdMode,
}

/// Facts for one point and whether it is certified outside the mode's
/// exclusion set.
fn classify(
    s: &Surface222,
    p: &SurfacePoint,
    mode: ThresholdMode,
    search: &SearchConfig,
) -> Result<(bool, Vec<Fact>), CertifyError> {
    let mut facts = Vec::new();
    let mut infinite = [false; 2];
    for (n, axis) in Axis::both().into_iter().enumerate() {
        let r = class_order(s, axis, p)?;
        infinite[n] = r.order == ClassOrder::Infinite;
        facts.push(Fact::ClassOrder { result: r });
    }
    let outside = match mode {
        // a point of infinite order on both smooth fibers avoids T_1, T_2,
        // S_1 n S_2, and hence the components inside their union
        ThresholdMode::Min => infinite[0] && infinite[1],
        ThresholdMode::Sum => {
            if !(infinite[0] || infinite[1]) {
                false
            } else if infinite[0] && infinite[1] {
                true
            } else {
                let mut all = true;
                for axis in Axis::both() {
                    let cert = component_certificate(s, p, axis, search)?;
                    all &= cert.outcome == ComponentOutcome::Certified;
                    facts.push(Fact::Component {
                        point: p.clone(),
                        certificate: cert,
                    });
                    if !all {
                        break;
                    }
                }
                all
            }
        }
    };
    facts.push(Fact::PointOutside {
        point: p.clone(),
        outside,
    });
    Ok((outside, facts))
}

pub fn certify_threshold(
    s: &Surface222,
    input: &ThresholdInput,
    search: &SearchConfig,
) -> Result<Verdict, CertifyError> {
    let mut degrees = [0u64; 2];
    let mut evidence = Vec::new();
    for (n, axis) in Axis::both().into_iter().enumerate() {
        let j = s.j_map(axis)?;
        evidence.push(Fact::JDegree {
            axis,
            degree: j.degree,
        });
        evidence.push(Fact::ChiDegree {
            axis,
            value: s.chi_degree(axis),
        });
        degrees[n] = j.degree.ok_or(CertifyError::ConstantJ(axis.index()))? as u64;
    }
    evidence.push(Fact::Cutoff { x: THRESHOLD_CUTOFF });
    let mut points = input.points.clone();
    points.sort();
    points.dedup();
    for p in &points {
        check_on(s, p)?;
    }
    let classified: Vec<Result<(bool, Vec<Fact>), CertifyError>> =
        points.par_iter().map(|p| classify(s, p, input.mode, search)).collect();
    let mut count = 0u64;
    for c in classified {
        let (outside, facts) = c?;
        count += outside as u64;
        evidence.extend(facts);
    }
    let (m1, m2) = (s.chi_degree(Axis::One) as u64, s.chi_degree(Axis::Two) as u64);
    let th = threshold(input.mode, input.n_k, degrees[0], m1, degrees[1], m2);
    evidence.push(Fact::Threshold {
        mode: input.mode,
        n_k: input.n_k,
        d1: degrees[0],
        m1,
        d2: degrees[1],
        m2,
        threshold: th.to_string(),
        count,
    });
    let outcome = threshold_outcome(count as u128, th);
    let mut caveats = vec![format!("n_K = {} is supplied by the user", input.n_k)];
    if outcome == Outcome::Inconclusive {
        caveats.push(format!("{} certified points do not exceed the threshold {}", count, th));
    }
    Ok(Verdict {
        outcome,
        rule: input.mode.rule(),
        surface: s.clone(),
        evidence,
        caveats,
    })
}

fn replay(s: &Surface222, f: &Fact) -> bool {
    match f {
        Fact::OnSurface { point } => s.contains(point),
        Fact::Bound { d, bound } => global_bound(*d).map(|t| t.bound.to_string() == *bound).unwrap_or(false),
        Fact::Fiber { axis, base, status } => s.fiber_status(*axis, base).map(|st| st == *status).unwrap_or(false),
        Fact::ClassOrder { result } => result.recheck(s),
        Fact::FiberSingularPoint { axis, point, singular } => s
            .is_fiber_singular_point(*axis, point)
            .map(|v| v == *singular)
            .unwrap_or(false),
        Fact::Component { point, certificate } => certificate.recheck(s, point),
        Fact::JDegree { axis, degree } => s.j_map(*axis).map(|j| j.degree == *degree).unwrap_or(false),
        Fact::ChiDegree { axis, value } => s.chi_degree(*axis) == *value,
        Fact::Cutoff { x } => *x == THRESHOLD_CUTOFF,
        Fact::PointOutside { .. } | Fact::Threshold { .. } => true,
    }
}

fn order_of(ev: &[Fact], axis: Axis, p: &SurfacePoint) -> Option<ClassOrder> {
    ev.iter().find_map(|f| match f {
        Fact::ClassOrder { result } if result.axis == axis && result.point == *p => Some(result.order),
        _ => None,
    })
}

fn component_certified(ev: &[Fact], axis: Axis, p: &SurfacePoint) -> bool {
    ev.iter().any(|f| match f {
        Fact::Component { point, certificate } => {
            point == p && certificate.from_axis == axis && certificate.outcome == ComponentOutcome::Certified
        }
        _ => false,
    })
}

fn route_open(ev: &[Fact], axis: Axis, p: &SurfacePoint) -> bool {
    let smooth_infinite = order_of(ev, axis, p) == Some(ClassOrder::Infinite);
    let smooth_point_of_singular = ev.iter().any(|f| {
        matches!(f, Fact::FiberSingularPoint { axis: a, point, singular: false } if *a == axis && point == p)
    });
    smooth_infinite || smooth_point_of_singular
}

/// Replays every fact from scratch and checks that the outcome follows
/// from them.
pub fn recheck(v: &Verdict) -> bool {
    let s = &v.surface;
    let ev = &v.evidence;
    if !ev.iter().all(|f| replay(s, f)) {
        return false;
    }
    match v.rule {
        Rule::Efficient => {
            let p = match ev.iter().find_map(|f| match f {
                Fact::OnSurface { point } => Some(point.clone()),
                _ => None,
            }) {
                Some(p) => p,
                None => return false,
            };
            let d_one = ev.iter().any(|f| matches!(f, Fact::Bound { d: 1, .. }));
            let justified = d_one
                && Axis::both()
                    .into_iter()
                    .any(|axis| route_open(ev, axis, &p) && component_certified(ev, axis, &p));
            match v.outcome {
                Outcome::Dense => justified,
                Outcome::Inconclusive => true,
            }
        }
        Rule::Notefficient | Rule::Efficienttwo => {
            let Some(Fact::Threshold { mode, n_k, d1, m1, d2, m2, threshold: th, count }) =
                ev.iter().find(|f| matches!(f, Fact::Threshold { .. }))
            else {
                return false;
            };
            if mode.rule() != v.rule {
                return false;
            }
            let degs_ok = ev.iter().all(|f| match f {
                Fact::JDegree { axis, degree } => {
                    let want = if *axis == Axis::One { *d1 } else { *d2 };
                    degree.map(|d| d as u64) == Some(want)
                }
                Fact::ChiDegree { axis, value } => *value as u64 == if *axis == Axis::One { *m1 } else { *m2 },
                _ => true,
            });
            let expected = threshold(*mode, *n_k, *d1, *m1, *d2, *m2);
            let mut supported = 0u64;
            for f in ev {
                if let Fact::PointOutside { point, outside: true } = f {
                    let inf = Axis::both().map(|a| order_of(ev, a, point) == Some(ClassOrder::Infinite));
                    let ok = match mode {
                        ThresholdMode::Min => inf[0] && inf[1],
                        ThresholdMode::Sum => {
                            (inf[0] && inf[1])
                                || ((inf[0] || inf[1])
                                    && Axis::both().into_iter().all(|a| component_certified(ev, a, point)))
                        }
                    };
                    if !ok {
                        return false;
                    }
                    supported += 1;
                }
            }
            degs_ok
                && expected.to_string() == *th
                && supported == *count
                && threshold_outcome(*count as u128, expected) == v.outcome
        }
    }
}
