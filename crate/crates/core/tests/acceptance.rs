//! Acceptance suite. Each criterion prints one PASS/FAIL line; the test
//! fails if any criterion fails.
//!
//! Run with `cargo test -p fibdense --test acceptance -- --nocapture`.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use fibdense::algebra::rational::{int, rat};
use fibdense::algebra::{Polynomial, Rational};
use fibdense::bounds::{global_bound, max_prime_power, oesterle_primes};
use fibdense::certifier::{
    certify_point, certify_threshold, recheck, threshold, threshold_outcome, CertifyConfig, Outcome, ThresholdInput,
    ThresholdMode,
};
use fibdense::diagonal::{self, certify_diagonal, DiagonalQuartic, QuarticPoint4, SweepRow};
use fibdense::elliptic::{
    division_polynomial, jacobian_of_quartic, point_order, point_order_certified, verify_certificate, CurvePoint,
    PointOrder, WeierstrassCurve,
};
use fibdense::exclusion::{class_order, emit_t_equations, ClassOrder, EquationConfig, SearchConfig};
use fibdense::surface::{direct_fiber_singular, samples, Axis, FiberStatus, Surface222, SurfacePoint, P1};

// pinned tolerances and budgets
const MISMATCHES_ALLOWED: usize = 0;
const C1_BUDGET: Duration = Duration::from_secs(1);
const C2_BUDGET: Duration = Duration::from_secs(60);
const C4_BUDGET: Duration = Duration::from_secs(60);
const C7_BUDGET: Duration = Duration::from_secs(30 * 60);
const C2_CURVES: usize = 10;
const C2_R_MAX: usize = 20;
const C4_BASES: usize = 20;
const C4_INVOLUTION_POINTS: usize = 100;
const C5_MIN_POINTS: usize = 30;
const C7_MAX: i64 = 20;
const C7_HEIGHT: u64 = 1000;
const SEED: u64 = 20240611;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, budget: Duration) -> Result<Duration, String> {
    let el = start.elapsed();
    ensure(el < budget, format!("took {:?}, budget {:?}", el, budget))?;
    Ok(el)
}

// ---------- 1: bounds ----------

fn is_prime_naive(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|k| k * k <= n).all(|k| n % k != 0)
}

/// Caps written out from the formulas, with u128 arithmetic.
fn naive_cap(p: u64, d: u32) -> u128 {
    let d = d as u128;
    match p {
        2 => 129 * (3u128.pow(d as u32) - 1) * (3 * d).pow(6),
        3 => 65 * (5u128.pow(d as u32) - 1) * (2 * d).pow(6),
        _ => 65 * (3u128.pow(d as u32) - 1) * (2 * d).pow(6),
    }
}

fn criterion_1() -> Check {
    let start = Instant::now();
    for d in 1..=6u32 {
        // p <= (1 + 3^(d/2))^2, compared in f64 with a margin and confirmed exactly near the edge
        let edge = (1.0 + 3f64.powf(d as f64 / 2.0)).powi(2);
        let primes: Vec<u64> = (2..=(edge.floor() as u64 + 2))
            .filter(|&p| is_prime_naive(p))
            .filter(|&p| {
                let p = p as f64;
                if (p - edge).abs() > 1e-6 {
                    p < edge
                } else {
                    // (p - 1 - 3^d)^2 <= 4 * 3^d on the boundary
                    let k = p as i128 - 1 - 3i128.pow(d);
                    k <= 0 || k * k <= 4 * 3i128.pow(d)
                }
            })
            .collect();
        let lib = oesterle_primes(d).map_err(|e| e.to_string())?;
        ensure(lib == primes, format!("d = {}: primes {:?} vs {:?}", d, lib, primes))?;
        let mut b = BigUint::from(1u32);
        for &p in &primes {
            let cap = naive_cap(p, d);
            let mut n = 0u32;
            while (p as u128).pow(n + 1) <= cap {
                n += 1;
            }
            let (ln, lpw) = max_prime_power(p, d).map_err(|e| e.to_string())?;
            ensure(ln == n, format!("d = {}, p = {}: n_p {} vs {}", d, p, ln, n))?;
            ensure(lpw == BigUint::from(p).pow(n), format!("d = {}, p = {}: power", d, p))?;
            b *= BigUint::from(p).pow(n);
        }
        let t = global_bound(d).map_err(|e| e.to_string())?;
        ensure(t.bound == b, format!("d = {}: B mismatch", d))?;
    }
    let t1 = global_bound(1).map_err(|e| e.to_string())?;
    let expected = BigUint::from(2u32).pow(17) * BigUint::from(3u32).pow(8) * BigUint::from(5u32).pow(5)
        * BigUint::from(7u32).pow(4);
    ensure(t1.bound == expected, "B(1) != 2^17 3^8 5^5 7^4")?;
    ensure(
        t1.caps.iter().map(|c| c.0).collect::<Vec<_>>() == vec![2, 3, 5, 7],
        "prime set for d = 1",
    )?;
    let el = within(start, C1_BUDGET)?;
    Ok(format!("B(1) = {}, d = 1..6 cross-checked, {:?}", t1.bound, el))
}

// ---------- 2: division polynomials mod p ----------

fn modp(v: i128, p: i128) -> i128 {
    ((v % p) + p) % p
}

fn inv_mod(a: i128, p: i128) -> i128 {
    let (mut r0, mut r1, mut s0, mut s1) = (modp(a, p), p, 1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    modp(s0, p)
}

type Pt = Option<(i128, i128)>;

fn add_mod(a: i128, p: i128, u: Pt, v: Pt) -> Pt {
    let (x1, y1) = match u {
        None => return v,
        Some(q) => q,
    };
    let (x2, y2) = match v {
        None => return u,
        Some(q) => q,
    };
    let lam = if x1 == x2 {
        if modp(y1 + y2, p) == 0 {
            return None;
        }
        modp((3 * x1 * x1 + a) * inv_mod(2 * y1, p), p)
    } else {
        modp((y2 - y1) * inv_mod(x2 - x1, p), p)
    };
    let x3 = modp(lam * lam - x1 - x2, p);
    let y3 = modp(lam * (x1 - x3) - y1, p);
    Some((x3, y3))
}

fn reduce_rational(q: &Rational, p: i128) -> i128 {
    let n = modp((q.numer() % p).to_i128().unwrap(), p);
    let d = modp((q.denom() % p).to_i128().unwrap(), p);
    modp(n * inv_mod(d, p), p)
}

/// Dense coefficients of a univariate polynomial reduced mod p.
fn reduce_poly(poly: &Polynomial, p: i128) -> Vec<i128> {
    let mut out = Vec::new();
    for (e, c) in poly.terms() {
        let k = e[0] as usize;
        if out.len() <= k {
            out.resize(k + 1, 0);
        }
        out[k] = modp(out[k] + reduce_rational(c, p), p);
    }
    out
}

fn eval_mod(coeffs: &[i128], x: i128, p: i128) -> i128 {
    coeffs.iter().rev().fold(0, |acc, c| modp(acc * x + c, p))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(SEED);
    let primes: Vec<i128> = (990..1200).filter(|&p| is_prime_naive(p as u64)).collect();
    let mut mismatches = 0usize;
    let mut compared = 0usize;
    let mut curves = 0;
    while curves < C2_CURVES {
        let a: i64 = rng.gen_range(-50..=50);
        let b: i64 = rng.gen_range(-50..=50);
        let p = primes[rng.gen_range(0..primes.len())];
        let disc = 4 * (a as i128).pow(3) + 27 * (b as i128).pow(2);
        if disc == 0 || disc % p == 0 {
            continue;
        }
        curves += 1;
        let curve = WeierstrassCurve::from_ints(a, b).map_err(|e| e.to_string())?;
        let (am, bm) = (modp(a as i128, p), modp(b as i128, p));
        // all affine points by enumeration
        let mut pts = Vec::new();
        for x in 0..p {
            let rhs = modp(x * x * x + am * x + bm, p);
            for y in 0..p {
                if modp(y * y, p) == rhs {
                    pts.push((x, y));
                }
            }
        }
        let xs_on_curve: BTreeSet<i128> = pts.iter().map(|q| q.0).collect();
        for r in 1..=C2_R_MAX {
            let mut expected = BTreeSet::new();
            for &pt in &pts {
                let mut acc: Pt = None;
                for _ in 0..r {
                    acc = add_mod(am, p, acc, Some(pt));
                }
                if acc.is_none() {
                    expected.insert(pt.0);
                }
            }
            let psi = reduce_poly(
                &division_polynomial(r as u32, &curve)
                    .map_err(|e| e.to_string())?
                    .torsion_polynomial(),
                p,
            );
            let got: BTreeSet<i128> = xs_on_curve
                .iter()
                .copied()
                .filter(|&x| eval_mod(&psi, x, p) == 0)
                .collect();
            compared += 1;
            if got != expected {
                mismatches += 1;
            }
        }
    }
    ensure(
        mismatches <= MISMATCHES_ALLOWED,
        format!("{} mismatches in {} (curve, r) pairs", mismatches, compared),
    )?;
    let el = within(start, C2_BUDGET)?;
    Ok(format!("{} (curve, r) pairs, 0 mismatches, {:?}", compared, el))
}

// ---------- 3: point orders ----------

/// Order by exact repeated addition up to 12; over Q no torsion point has
/// larger order.
fn exhaustive_order(curve: &WeierstrassCurve, pt: &CurvePoint) -> Option<u64> {
    let mut acc = pt.clone();
    for n in 1..=12u64 {
        if acc.is_infinity() {
            return Some(n);
        }
        acc = curve.add(&acc, pt);
        if n == 12 && acc.is_infinity() {
            return Some(13);
        }
    }
    None
}

fn criterion_3() -> Check {
    let e1 = WeierstrassCurve::from_ints(0, 1).map_err(|e| e.to_string())?;
    let p6 = CurvePoint::affine(int(2), int(3));
    let o = point_order(&e1, &p6).map_err(|e| e.to_string())?;
    ensure(o == PointOrder::Finite(6), format!("(2,3) on y^2 = x^3 + 1: {:?}", o))?;
    ensure(exhaustive_order(&e1, &p6) == Some(6), "exhaustive order of (2,3)")?;

    let mut twos = 0;
    for (a, b, x) in [(0, 1, -1), (-1, 0, 0), (-1, 0, 1), (-1, 0, -1), (-4, 0, 2)] {
        let c = WeierstrassCurve::from_ints(a, b).map_err(|e| e.to_string())?;
        let pt = CurvePoint::affine(int(x), int(0));
        let o = point_order(&c, &pt).map_err(|e| e.to_string())?;
        ensure(o == PointOrder::Finite(2), format!("y = 0 point on ({}, {})", a, b))?;
        ensure(exhaustive_order(&c, &pt) == Some(2), "exhaustive order 2")?;
        twos += 1;
    }

    let e2 = WeierstrassCurve::from_ints(0, -2).map_err(|e| e.to_string())?;
    let p = CurvePoint::affine(int(3), int(5));
    let cert = point_order_certified(&e2, &p, 3).map_err(|e| e.to_string())?;
    ensure(cert.order == PointOrder::Infinite, "(3,5) on y^2 = x^3 - 2 not INFINITE")?;
    ensure(exhaustive_order(&e2, &p).is_none(), "(3,5) has a finite order <= 12")?;
    ensure(verify_certificate(&e2, &p, &cert), "certificate does not replay")?;
    // the gcd of the reduced group orders bounds any torsion order; the point's
    // reductions must be incompatible with a single finite order
    let g = cert.reductions.iter().fold(0u64, |g, r| num_integer::gcd(g, r.group_order));
    ensure(g == cert.gcd, "recorded gcd differs")?;
    let first = cert.reductions[0].point_order;
    let incompatible = cert.reductions.iter().any(|r| r.point_order != first || r.point_order == 1)
        || !e2.scalar_mul(first as i64, &p).is_infinity();
    ensure(incompatible, "reductions do not rule out a finite order")?;
    Ok(format!(
        "order 6, {} order-2 points, INFINITE with gcd {} over primes {:?}",
        twos,
        cert.gcd,
        cert.reductions.iter().map(|r| r.p).collect::<Vec<_>>()
    ))
}

// ---------- 4: fiber pipeline ----------

fn criterion_4() -> Check {
    let start = Instant::now();
    let s = samples::vetted();
    let mut rng = StdRng::seed_from_u64(SEED + 4);
    let mut j_checked = 0;
    let mut singular_seen = 0;
    for axis in Axis::both() {
        let jm = s.j_map(axis).map_err(|e| e.to_string())?;
        let locus = s.singular_locus(axis).map_err(|e| e.to_string())?;
        let mut bases: Vec<P1> = (0..C4_BASES)
            .map(|_| {
                let n: i64 = rng.gen_range(-60..=60);
                let d: i64 = rng.gen_range(1..=60);
                P1::Finite(rat(n, d))
            })
            .collect();
        bases.extend(locus.rational_points());
        bases.push(P1::Infinity);
        for base in &bases {
            let delta_says = locus.is_singular_at(base);
            let direct = direct_fiber_singular(&s, axis, base).map_err(|e| e.to_string())?;
            ensure(
                delta_says == direct,
                format!("axis {} base {:?}: Delta {} direct {}", axis.index(), base, delta_says, direct),
            )?;
            if delta_says {
                singular_seen += 1;
                continue;
            }
            let (P1::Finite(t0), false) = (base, false) else {
                continue;
            };
            let slice = s.fiber_slice(axis, base).map_err(|e| e.to_string())?;
            let q = slice.quartic.ok_or("smooth fiber without quartic")?;
            let jac = jacobian_of_quartic(&q).map_err(|e| e.to_string())?;
            let j_fiber = jac.j_invariant().map_err(|e| e.to_string())?;
            let j_map = jm.j.eval(t0).ok_or("j-map pole at a smooth fiber")?;
            ensure(j_fiber == j_map, format!("axis {} t0 = {}: j mismatch", axis.index(), t0))?;
            j_checked += 1;
        }
    }
    let mut pts = s.affine_points(6);
    pts.shuffle(&mut rng);
    let mut inv_checked = 0;
    for p in &pts {
        if inv_checked >= C4_INVOLUTION_POINTS {
            break;
        }
        let mut ok_here = true;
        for axis in Axis::both() {
            let q = match s.involution(axis, p) {
                Ok(q) => q,
                Err(_) => {
                    ok_here = false;
                    break;
                }
            };
            let back = s.involution(axis, &q).map_err(|e| e.to_string())?;
            ensure(back == *p, format!("involution not an involution at {}", p))?;
            ensure(s.contains(&q), "image off the surface")?;
            ensure(s.base_of(axis, &q) == s.base_of(axis, p), "image on another fiber")?;
        }
        if ok_here {
            inv_checked += 1;
        }
    }
    ensure(inv_checked >= C4_INVOLUTION_POINTS, format!("only {} involution points", inv_checked))?;
    let el = within(start, C4_BUDGET)?;
    Ok(format!(
        "{} j values, {} singular fibers agree, {} involution points, {:?}",
        j_checked, singular_seen, inv_checked, el
    ))
}

// ---------- 5: T-equations ----------

fn criterion_5() -> Check {
    let surfaces = [("vetted", samples::vetted()), ("torsion3", samples::torsion3())];
    let mut tallies: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
    let mut mismatches = Vec::new();
    for (name, s) in &surfaces {
        let pts = s.affine_points(3);
        for axis in Axis::both() {
            let orders: Vec<(SurfacePoint, ClassOrder)> = pts
                .iter()
                .map(|p| class_order(s, axis, p).map(|r| (p.clone(), r.order)))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            for r in 1..=3u32 {
                let eq = emit_t_equations(s, axis, r, &EquationConfig::default()).map_err(|e| e.to_string())?;
                for (p, o) in &orders {
                    // singular fibers and, for r > 1, the ramification locus are degeneracy loci
                    if *o == ClassOrder::Undefined || (r > 1 && *o == ClassOrder::Finite(1)) {
                        continue;
                    }
                    let aff = p.as_affine().ok_or("non-affine sample")?;
                    let vanish = eq.generators.iter().all(|g| g.eval(&aff).is_zero());
                    let want = *o == ClassOrder::Finite(r as u64);
                    let e = tallies.entry(r).or_default();
                    e.0 += 1;
                    e.1 += want as usize;
                    if vanish != want {
                        mismatches.push(format!("{} axis {} r {} at {}", name, axis.index(), r, p));
                    }
                }
            }
        }
    }
    ensure(
        mismatches.len() <= MISMATCHES_ALLOWED,
        format!("mismatches: {:?}", mismatches),
    )?;
    for r in 1..=3 {
        let (n, pos) = tallies.get(&r).copied().unwrap_or_default();
        ensure(n >= C5_MIN_POINTS, format!("r = {}: only {} points", r, n))?;
        ensure(pos > 0, format!("r = {}: no point of order r sampled", r))?;
    }
    Ok(format!("(points, order-r points) per r: {:?}", tallies))
}

// ---------- 6: end-to-end certification ----------

fn criterion_6() -> Check {
    let s = samples::vetted();
    let cfg = CertifyConfig::default();
    let dense_pt = SurfacePoint::affine(int(-2), int(-1), rat(1, 2));
    let v = certify_point(&s, &dense_pt, &cfg).map_err(|e| e.to_string())?;
    ensure(v.outcome == Outcome::Dense, "fixture point not Dense")?;
    ensure(recheck(&v), "Dense verdict does not replay")?;
    let again = certify_point(&s, &dense_pt, &cfg).map_err(|e| e.to_string())?;
    ensure(
        serde_json::to_string(&v).unwrap() == serde_json::to_string(&again).unwrap(),
        "verdict not deterministic",
    )?;

    let ram = SurfacePoint::ints(0, 0, 0);
    for axis in Axis::both() {
        let o = class_order(&s, axis, &ram).map_err(|e| e.to_string())?;
        ensure(o.order == ClassOrder::Finite(1), "origin is not a ramification point")?;
    }
    let v = certify_point(&s, &ram, &cfg).map_err(|e| e.to_string())?;
    ensure(v.outcome == Outcome::Inconclusive, "ramification point not Inconclusive")?;
    ensure(recheck(&v), "Inconclusive verdict does not replay")?;

    let dn = samples::doubly_nodal();
    let o = SurfacePoint::ints(0, 0, 0);
    for axis in Axis::both() {
        let st = dn.fiber_status(axis, &dn.base_of(axis, &o)).map_err(|e| e.to_string())?;
        ensure(st == FiberStatus::Singular, "singular-singular fixture on a smooth fiber")?;
        ensure(
            dn.is_fiber_singular_point(axis, &o).map_err(|e| e.to_string())?,
            "fixture is not a singular point of its fiber",
        )?;
    }
    let v = certify_point(&dn, &o, &cfg).map_err(|e| e.to_string())?;
    ensure(v.outcome == Outcome::Inconclusive, "singular-singular point not Inconclusive")?;
    Ok("Dense fixture replays; ramification and singular-singular fixtures Inconclusive".into())
}

// ---------- 7: conjecture sweep ----------

const SWEEP_FIXTURE: &str = include_str!("../fixtures/conjecture_sweep_h1000.json");

fn sweep_in_pool(threads: usize) -> Result<Vec<SweepRow>, String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| e.to_string())?;
    pool.install(|| diagonal::sweep(C7_MAX, C7_HEIGHT)).map_err(|e| e.to_string())
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let pinned: Vec<SweepRow> = serde_json::from_str(SWEEP_FIXTURE).map_err(|e| e.to_string())?;
    let default_run = diagonal::sweep(C7_MAX, C7_HEIGHT).map_err(|e| e.to_string())?;
    ensure(default_run.len() == 255, format!("{} values of t", default_run.len()))?;
    ensure(default_run == pinned, "sweep differs from the pinned table")?;
    for threads in [1, 3] {
        ensure(sweep_in_pool(threads)? == pinned, format!("sweep differs with {} threads", threads))?;
    }
    let mut found = 0;
    for row in &default_run {
        ensure(row.trivial_rejected, format!("t = {}: trivial point accepted", row.t))?;
        let q = DiagonalQuartic::family(&row.t).map_err(|e| e.to_string())?;
        let trivial = QuarticPoint4::ints([1, 1, 1, 1]).unwrap();
        ensure(
            certify_diagonal(&q, &trivial).outcome == Outcome::Inconclusive,
            "trivial point certified",
        )?;
        if let Some(p) = row.found {
            let pt = QuarticPoint4::ints(p.map(|v| v as i64)).unwrap();
            let v = certify_diagonal(&q, &pt);
            ensure(
                v.outcome == Outcome::Dense && diagonal::recheck(&v),
                format!("t = {}: {:?} does not re-verify", row.t, p),
            )?;
            found += 1;
        }
    }
    let el = within(start, C7_BUDGET)?;
    Ok(format!(
        "{} values of t, {} with a certifying point, stable for 1/3/default threads, {:?}",
        default_run.len(),
        found,
        el
    ))
}

// ---------- 8: thresholds ----------

fn criterion_8() -> Check {
    let mut cases = 0;
    for n_k in [0u64, 1, 2, 3, 7] {
        for (d1, m1, d2, m2) in [(2u64, 4u64, 3u64, 4u64), (1, 4, 1, 4), (24, 4, 24, 4), (5, 4, 2, 4), (0, 4, 3, 4)] {
            for (mode, base) in [
                (ThresholdMode::Min, (d1 * m1).min(d2 * m2)),
                (ThresholdMode::Sum, d1 * m1 + d2 * m2),
            ] {
                let th = threshold(mode, n_k, d1, m1, d2, m2);
                ensure(th == (n_k * base) as u128, format!("threshold {:?} {} {}", mode, n_k, th))?;
                ensure(threshold_outcome(th, th) == Outcome::Inconclusive, "equality must be Inconclusive")?;
                ensure(threshold_outcome(th + 1, th) == Outcome::Dense, "boundary + 1 must be Dense")?;
                if th > 0 {
                    ensure(threshold_outcome(th - 1, th) == Outcome::Inconclusive, "below threshold")?;
                }
                cases += 1;
            }
        }
    }
    ensure(threshold(ThresholdMode::Min, 2, 2, 4, 3, 4) == 16, "min-rule example")?;
    ensure(threshold(ThresholdMode::Sum, 2, 2, 4, 3, 4) == 40, "sum-rule example")?;

    // end to end: d1 = d2 = 24, M = 4, n_K = 0
    let s: Surface222 = samples::vetted();
    let pt = SurfacePoint::affine(int(-2), int(-1), rat(1, 2));
    let search = SearchConfig::default();
    for mode in [ThresholdMode::Min, ThresholdMode::Sum] {
        let one = ThresholdInput {
            points: vec![pt.clone()],
            n_k: 0,
            mode,
        };
        let v = certify_threshold(&s, &one, &search).map_err(|e| e.to_string())?;
        ensure(v.outcome == Outcome::Dense && recheck(&v), "n_K = 0 with one point")?;
        let none = ThresholdInput {
            points: vec![],
            n_k: 0,
            mode,
        };
        let v = certify_threshold(&s, &none, &search).map_err(|e| e.to_string())?;
        ensure(v.outcome == Outcome::Inconclusive && recheck(&v), "n_K = 0 with no points")?;
        let many = ThresholdInput {
            points: vec![pt.clone()],
            n_k: 1,
            mode,
        };
        let v = certify_threshold(&s, &many, &search).map_err(|e| e.to_string())?;
        ensure(v.outcome == Outcome::Inconclusive, "one point below threshold 96")?;
    }
    Ok(format!("{} synthetic cases plus end-to-end boundary checks", cases))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("1 bound reproduction", criterion_1),
        ("2 division-polynomial oracle", criterion_2),
        ("3 order-test soundness", criterion_3),
        ("4 fiber-pipeline consistency", criterion_4),
        ("5 T-equation consistency", criterion_5),
        ("6 end-to-end certification", criterion_6),
        ("7 conjecture-family sweep", criterion_7),
        ("8 threshold logic", criterion_8),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let res = std::panic::catch_unwind(f).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        match res {
            Ok(detail) => println!("criterion {}: PASS ({})", name, detail),
            Err(why) => {
                println!("criterion {}: FAIL ({})", name, why);
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
