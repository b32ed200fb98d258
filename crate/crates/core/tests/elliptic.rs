use fibdense::algebra::rational::{int, rat};
use fibdense::algebra::Rational;
use fibdense::elliptic::curve::{CurvePoint, WeierstrassCurve};
use fibdense::elliptic::divpoly::{division_polynomial, order_divides};
use fibdense::elliptic::order::{point_order, point_order_certified, verify_certificate, PointOrder};
use fibdense::elliptic::quartic::{quartic_to_weierstrass, BinaryQuartic, QuarticPoint};
use num_traits::Zero;

fn pt(x: i64, y: i64) -> CurvePoint {
    CurvePoint::affine(int(x), int(y))
}

#[test]
fn known_orders() {
    let cases = [
        ((0, 1), (2, 3), PointOrder::Finite(6)),
        ((1, 0), (0, 0), PointOrder::Finite(2)),
        ((-43, 166), (3, 8), PointOrder::Finite(7)),
        ((0, -2), (3, 5), PointOrder::Infinite),
        ((-2, 0), (-1, 1), PointOrder::Infinite),
    ];
    for ((a, b), (x, y), want) in cases {
        let e = WeierstrassCurve::from_ints(a, b).unwrap();
        let p = pt(x, y);
        assert_eq!(point_order(&e, &p).unwrap(), want, "{} {}", a, b);
        let cert = point_order_certified(&e, &p, 3).unwrap();
        assert!(verify_certificate(&e, &p, &cert));
    }
}

#[test]
fn order_checks() {
    let e = WeierstrassCurve::from_ints(-43, 166).unwrap();
    let p = pt(3, 8);
    assert!(e.scalar_mul(7, &p).is_infinity());
    assert!(order_divides(&e, &p, 7));
    assert!(order_divides(&e, &p, 14));
    assert!(!order_divides(&e, &p, 5));
    assert!(point_order(&e, &pt(3, 9)).is_err());
    assert!(WeierstrassCurve::from_ints(0, 0).is_err());
}

#[test]
fn division_polynomial_roots() {
    // y^2 = x^3 + 1: 3-torsion at x = 0 and x = -4^(1/3)
    let e = WeierstrassCurve::from_ints(0, 1).unwrap();
    let f3 = division_polynomial(3, &e).unwrap().torsion_polynomial();
    assert!(f3.eval(&[int(0)]).is_zero());
    assert_eq!(f3.degree_in(0), Some(4));
    let f2 = division_polynomial(2, &e).unwrap().torsion_polynomial();
    assert!(f2.eval(&[int(-1)]).is_zero());
    for r in 1..=10u32 {
        let d = division_polynomial(r, &e).unwrap().torsion_polynomial();
        let deg = d.degree_in(0).unwrap_or(0);
        let want = if r % 2 == 1 { (r * r - 1) / 2 } else { (r * r - 4) / 2 + 3 };
        assert_eq!(deg, want, "r = {}", r);
    }
}

#[test]
fn quartic_map_sends_base_to_identity() {
    // z^2 = x^4 - 2x^2 + 4x + 1, point (0, 1)
    let q = BinaryQuartic::from_ints([1, 0, -2, 4, 1]).unwrap();
    let base = QuarticPoint::affine(Rational::zero(), int(1));
    let m = quartic_to_weierstrass(&q, &base).unwrap();
    assert_eq!(m.forward(&base), Some(CurvePoint::Infinity));
    let img = m.conjugate_base_image();
    assert!(m.curve.contains(&img));
    // j agrees with the quartic invariants
    let (i, j) = q.invariants();
    let c = &i * &i * &i * int(4);
    let want = &c * int(1728) / (&c - &j * &j);
    assert_eq!(m.curve.j_invariant().unwrap(), want);
    // other points land on the curve
    for x in [rat(1, 1), rat(2, 1), rat(-1, 2)] {
        let v = q.eval(&x);
        if let Some(z) = fibdense::algebra::rational::sqrt(&v) {
            let p = QuarticPoint::affine(x, z);
            assert!(m.curve.contains(&m.forward(&p).unwrap()));
        }
    }
}

#[test]
fn degenerate_quartic_is_rejected() {
    let q = BinaryQuartic::from_ints([1, 0, -2, 0, 1]).unwrap();
    assert!(quartic_to_weierstrass(&q, &QuarticPoint::affine(int(0), int(1))).is_err());
}

#[test]
fn orders_serialize_as_integer_or_infinite() {
    assert_eq!(serde_json::to_string(&PointOrder::Finite(6)).unwrap(), "6");
    assert_eq!(serde_json::to_string(&PointOrder::Infinite).unwrap(), "\"INFINITE\"");
    let back: PointOrder = serde_json::from_str("\"INFINITE\"").unwrap();
    assert_eq!(back, PointOrder::Infinite);
    assert!(serde_json::from_str::<PointOrder>("0").is_err());
}
