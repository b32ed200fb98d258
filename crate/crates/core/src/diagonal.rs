//! Diagonal quartic surfaces `a x^4 + b y^4 + c z^4 + d w^4 = 0` with `abcd`
//! a square, and a height-bounded search over the family
//! `x^4 - y^4 = t (z^4 - w^4)`.
//!
//! A rational point with nonzero coordinates off the 48 lines makes the
//! rational points Zariski dense.
//!
//! Lines. Over an algebraic closure the 48 lines split into three pairings
//! of the coordinates, `{x,y}{z,w}`, `{x,z}{y,w}` and `{x,w}{y,z}`. For the
//! first pairing they are `x = i^k r y, z = i^l s w` with `r^4 = -b/a` and
//! `s^4 = -d/c`, 16 lines inside `a x^4 + b y^4 = c z^4 + d w^4 = 0`. A point
//! of the surface with `a x^4 + b y^4 = 0` also has `c z^4 + d w^4 = 0`, so
//! `x/y` and `z/w` (or a vanishing pair) pick out one of these lines.
//! Hence a point of the surface lies on a line iff
//! `(a x^4 + b y^4)(a x^4 + c z^4)(a x^4 + d w^4) = 0`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{self, Rational};
use crate::certifier::Outcome;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagonalError {
    #[error("coefficient {0} is zero")]
    ZeroCoefficient(char),
    #[error("product of the coefficients {0} is not a square")]
    NotSquare(String),
    #[error("point is zero")]
    ZeroPoint,
    #[error("point is not on the surface")]
    NotOnSurface,
    #[error("t must be nonzero")]
    ZeroT,
    #[error("height must be at least 1")]
    ZeroHeight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalQuartic {
    #[serde(with = "rational::serde_str_vec")]
    coeffs: Vec<Rational>,
}

impl DiagonalQuartic {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self, DiagonalError> {
        for (name, v) in ['a', 'b', 'c', 'd'].iter().zip([&a, &b, &c, &d]) {
            if v.is_zero() {
                return Err(DiagonalError::ZeroCoefficient(*name));
            }
        }
        let prod = &a * &b * &c * &d;
        if !rational::is_square(&prod) {
            return Err(DiagonalError::NotSquare(rational::to_string(&prod)));
        }
        Ok(DiagonalQuartic {
            coeffs: vec![a, b, c, d],
        })
    }

    /// `x^4 - y^4 = t (z^4 - w^4)`, i.e. coefficients `(1, -1, -t, t)`.
    pub fn family(t: &Rational) -> Result<Self, DiagonalError> {
        if t.is_zero() {
            return Err(DiagonalError::ZeroT);
        }
        Self::new(rational::int(1), rational::int(-1), -t.clone(), t.clone())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn terms(&self, p: &QuarticPoint4) -> [Rational; 4] {
        std::array::from_fn(|i| &self.coeffs[i] * rational::pow(&p.coords[i], 4))
    }

    pub fn contains(&self, p: &QuarticPoint4) -> bool {
        self.terms(p).iter().fold(Rational::zero(), |acc, v| acc + v).is_zero()
    }
}

/// `[x:y:z:w]`, not all zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticPoint4 {
    #[serde(with = "rational::serde_str_vec")]
    coords: Vec<Rational>,
}

impl QuarticPoint4 {
    pub fn new(coords: [Rational; 4]) -> Result<Self, DiagonalError> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(DiagonalError::ZeroPoint);
        }
        Ok(QuarticPoint4 { coords: coords.to_vec() })
    }

    pub fn ints(v: [i64; 4]) -> Result<Self, DiagonalError> {
        Self::new(v.map(rational::int))
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }
}

/// The three pairing binomials `a x^4 + b y^4`, `a x^4 + c z^4`, `a x^4 + d w^4`.
pub fn binomials(q: &DiagonalQuartic, p: &QuarticPoint4) -> [Rational; 3] {
    let t = q.terms(p);
    [&t[0] + &t[1], &t[0] + &t[2], &t[0] + &t[3]]
}

/// Whether `p` lies on one of the 48 lines.
pub fn line_test(q: &DiagonalQuartic, p: &QuarticPoint4) -> Result<bool, DiagonalError> {
    if !q.contains(p) {
        return Err(DiagonalError::NotOnSurface);
    }
    Ok(binomials(q, p).iter().any(|v| v.is_zero()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalVerdict {
    pub outcome: Outcome,
    pub quartic: DiagonalQuartic,
    pub point: QuarticPoint4,
    pub conditions: Vec<Condition>,
    pub caveats: Vec<String>,
}

const ON_SURFACE: &str = "on_surface";
const NONZERO: &str = "coordinates_nonzero";
const OFF_LINES: &str = "off_lines";

fn conditions(q: &DiagonalQuartic, p: &QuarticPoint4) -> Vec<Condition> {
    let on = q.contains(p);
    let nonzero = p.coords.iter().all(|c| !c.is_zero());
    let off = on && !binomials(q, p).iter().any(|v| v.is_zero());
    vec![
        Condition {
            name: ON_SURFACE.into(),
            holds: on,
        },
        Condition {
            name: NONZERO.into(),
            holds: nonzero,
        },
        Condition {
            name: OFF_LINES.into(),
            holds: off,
        },
    ]
}

/// Dense iff `p` is on the surface, has no zero coordinate and lies on
/// none of the lines.
pub fn certify_diagonal(q: &DiagonalQuartic, p: &QuarticPoint4) -> DiagonalVerdict {
    let conds = conditions(q, p);
    let caveats = conds
        .iter()
        .filter(|c| !c.holds)
        .map(|c| match c.name.as_str() {
            ON_SURFACE => "point is not on the surface".to_string(),
            NONZERO => "point has a zero coordinate".to_string(),
            _ => "point lies on one of the 48 lines".to_string(),
        })
        .collect::<Vec<_>>();
    let outcome = if conds.iter().all(|c| c.holds) {
        Outcome::Dense
    } else {
        Outcome::Inconclusive
    };
    DiagonalVerdict {
        outcome,
        quartic: q.clone(),
        point: p.clone(),
        conditions: conds,
        caveats,
    }
}

/// Re-evaluates every recorded condition by substitution.
pub fn recheck(v: &DiagonalVerdict) -> bool {
    let fresh = conditions(&v.quartic, &v.point);
    let all = fresh.iter().all(|c| c.holds);
    fresh == v.conditions && (v.outcome == Outcome::Dense) == all
}

/// Positive values `u^4 - v^4` for `0 <= v < u <= H`, indexed for lookup.
pub struct FourthPowerDiffs {
    height: u64,
    pairs: Vec<(u64, u32, u32)>,
    index: HashMap<u64, Vec<(u32, u32)>>,
}

impl FourthPowerDiffs {
    pub fn new(height: u64) -> Self {
        let mut pairs = Vec::new();
        for u in 1..=height {
            for v in 0..u {
                pairs.push((u.pow(4) - v.pow(4), u as u32, v as u32));
            }
        }
        let mut index: HashMap<u64, Vec<(u32, u32)>> = HashMap::with_capacity(pairs.len());
        for &(d, u, v) in &pairs {
            index.entry(d).or_default().push((u, v));
        }
        FourthPowerDiffs { height, pairs, index }
    }

    pub fn height(&self) -> u64 {
        self.height
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    #[serde(with = "rational::serde_str")]
    pub t: Rational,
    #[serde(rename = "H")]
    pub height: u64,
    /// Primitive points run through the certifier, the trivial point included.
    pub tested: u64,
    pub trivial_rejected: bool,
    pub found: Option<[u64; 4]>,
    pub verdict: Option<DiagonalVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all: Option<Vec<[u64; 4]>>,
}

fn gcd4(p: &[u64; 4]) -> u64 {
    p.iter().fold(0u64, |g, &v| g.gcd(&v))
}

/// Integer form of the certifier's conditions on `b x^4 - b y^4 - a z^4 + a w^4 = 0`
/// for a point already known to lie on it.
pub fn family_certifies(a: i128, b: u128, p: &[u64; 4]) -> bool {
    if p.iter().any(|&v| v == 0) {
        return false;
    }
    let [x, y, z, w] = p.map(|v| (v as i128).pow(4));
    let b = b as i128;
    x != y && b * x != a * z && b * x != -a * w
}

fn to_point(p: &[u64; 4]) -> QuarticPoint4 {
    QuarticPoint4::ints(p.map(|v| v as i64)).expect("nonzero")
}

/// Searches `b (x^4 - y^4) = a (z^4 - w^4)` for `t = a/b` over primitive
/// points with nonnegative coordinates at most `H`.
///
/// Points with `x^4 = y^4` force `z^4 = w^4`; they all lie on lines and only
/// the trivial point `[1:1:1:1]` is enumerated from that family. Sign
/// changes of coordinates do not affect certification.
pub fn conjecture_search(t: &Rational, height: u64, all: bool) -> Result<SearchReport, DiagonalError> {
    if height == 0 {
        return Err(DiagonalError::ZeroHeight);
    }
    let table = FourthPowerDiffs::new(height);
    conjecture_search_in(&table, t, all)
}

pub fn conjecture_search_in(table: &FourthPowerDiffs, t: &Rational, all: bool) -> Result<SearchReport, DiagonalError> {
    let q = DiagonalQuartic::family(t)?;
    let trivial = QuarticPoint4::ints([1, 1, 1, 1]).expect("nonzero");
    let trivial_rejected = certify_diagonal(&q, &trivial).outcome == Outcome::Inconclusive;

    let a = t.numer().clone();
    let b = t.denom().clone();
    let negative = a.is_negative();
    let a_signed = i128::try_from(a.clone()).unwrap_or(i128::MAX);
    let a_abs: BigInt = a.abs();
    let (a_abs, b) = (
        u128::try_from(a_abs).unwrap_or(u128::MAX),
        u128::try_from(b).unwrap_or(u128::MAX),
    );

    // b D1 = |a| D2 with D1 = x^4 - y^4 > 0 and D2 = +-(z^4 - w^4) > 0
    let mut hits: Vec<[u64; 4]> = table
        .pairs
        .par_iter()
        .flat_map_iter(|&(d2, z, w)| {
            let num = (d2 as u128).checked_mul(a_abs);
            let lhs = num.filter(|n| n % b == 0).map(|n| n / b);
            let matches = lhs
                .and_then(|d1| u64::try_from(d1).ok())
                .and_then(|d1| table.index.get(&d1))
                .cloned()
                .unwrap_or_default();
            matches.into_iter().flat_map(move |(x, y)| {
                let (z, w) = if negative { (w, z) } else { (z, w) };
                let p = [x as u64, y as u64, z as u64, w as u64];
                [p, [p[1], p[0], p[3], p[2]]]
            })
        })
        .filter(|p| gcd4(p) == 1)
        .collect();
    hits.sort_unstable();
    hits.dedup();

    let passes: Vec<[u64; 4]> = hits
        .par_iter()
        .filter(|p| family_certifies(a_signed, b, p))
        .cloned()
        .collect();
    let certified: Vec<[u64; 4]> = if all {
        passes
            .par_iter()
            .filter(|p| certify_diagonal(&q, &to_point(p)).outcome == Outcome::Dense)
            .cloned()
            .collect()
    } else {
        passes
            .iter()
            .find(|p| certify_diagonal(&q, &to_point(p)).outcome == Outcome::Dense)
            .cloned()
            .into_iter()
            .collect()
    };
    let found = certified.first().cloned();
    let verdict = found.map(|p| certify_diagonal(&q, &to_point(&p)));
    Ok(SearchReport {
        t: t.clone(),
        height: table.height,
        tested: hits.len() as u64 + 1,
        trivial_rejected,
        found,
        verdict,
        all: if all { Some(certified) } else { None },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    #[serde(with = "rational::serde_str")]
    pub t: Rational,
    pub tested: u64,
    pub trivial_rejected: bool,
    pub found: Option<[u64; 4]>,
}

/// Every reduced `t = a/b` with `1 <= a, b <= max`, in increasing order of `(b, a)`.
pub fn sweep_values(max: i64) -> Vec<Rational> {
    let mut out = Vec::new();
    for b in 1..=max {
        for a in 1..=max {
            if a.gcd(&b) == 1 {
                out.push(rational::rat(a, b));
            }
        }
    }
    out
}

pub fn sweep(max: i64, height: u64) -> Result<Vec<SweepRow>, DiagonalError> {
    if height == 0 {
        return Err(DiagonalError::ZeroHeight);
    }
    let table = FourthPowerDiffs::new(height);
    sweep_values(max)
        .iter()
        .map(|t| {
            conjecture_search_in(&table, t, false).map(|r| SweepRow {
                t: r.t,
                tested: r.tested,
                trivial_rejected: r.trivial_rejected,
                found: r.found,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn square_product_required() {
        assert!(DiagonalQuartic::new(int(1), int(1), int(1), int(2)).is_err());
        assert!(DiagonalQuartic::new(int(1), int(2), int(3), int(6)).is_ok());
        assert!(DiagonalQuartic::family(&rat(-7, 3)).is_ok());
        assert_eq!(DiagonalQuartic::family(&int(0)), Err(DiagonalError::ZeroT));
    }

    #[test]
    fn trivial_point_on_line() {
        let q = DiagonalQuartic::family(&int(2)).unwrap();
        let p = QuarticPoint4::ints([1, 1, 1, 1]).unwrap();
        assert!(line_test(&q, &p).unwrap());
        let v = certify_diagonal(&q, &p);
        assert_eq!(v.outcome, Outcome::Inconclusive);
        assert!(recheck(&v));
    }

    #[test]
    fn euler_quadruple() {
        // 59^4 + 158^4 = 133^4 + 134^4
        let q = DiagonalQuartic::family(&int(1)).unwrap();
        let p = QuarticPoint4::ints([158, 133, 134, 59]).unwrap();
        assert!(!line_test(&q, &p).unwrap());
        let v = certify_diagonal(&q, &p);
        assert_eq!(v.outcome, Outcome::Dense);
        assert!(recheck(&v));
    }

    #[test]
    fn zero_coordinate() {
        let q = DiagonalQuartic::family(&int(1)).unwrap();
        let p = QuarticPoint4::ints([1, 0, 1, 0]).unwrap();
        assert_eq!(certify_diagonal(&q, &p).outcome, Outcome::Inconclusive);
    }
}
