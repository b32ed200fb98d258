use fibdense::algebra::rational::{int, rat};
use fibdense::surface::{direct_fiber_singular, samples, Axis, FiberStatus, Surface222, SurfacePoint, P1};

#[test]
fn samples_validate_as_expected() {
    for s in [samples::vetted(), samples::torsion3(), samples::nodal(), samples::doubly_nodal()] {
        let r = s.validate();
        assert!(r.valid, "{:?}", r.first_failure());
    }
    let r = samples::product().validate();
    assert!(!r.valid);
    assert!(r.first_failure().is_some());
    assert!(samples::product().validated().is_err());
    assert!(Surface222::zero().validated().is_err());
}

#[test]
fn vetted_has_degree_24_discriminants() {
    let s = samples::vetted();
    for axis in Axis::both() {
        let j = s.j_map(axis).unwrap();
        assert!(j.degree.is_some());
        let loc = s.singular_locus(axis).unwrap();
        assert!(loc.delta.degree_in(0).unwrap() <= 24);
    }
}

#[test]
fn isotrivial_j_is_constant() {
    let s = samples::isotrivial();
    assert_eq!(s.j_map(Axis::One).unwrap().degree, None);
}

#[test]
fn delta_agrees_with_direct_singularity() {
    for s in [samples::vetted(), samples::nodal(), samples::with_line()] {
        for axis in Axis::both() {
            let loc = s.singular_locus(axis).unwrap();
            for n in -4..=4 {
                let b = P1::int(n);
                assert_eq!(loc.is_singular_at(&b), direct_fiber_singular(&s, axis, &b).unwrap(), "t = {}", n);
            }
        }
    }
}

#[test]
fn nodal_fiber_over_zero() {
    let s = samples::nodal();
    assert_eq!(s.fiber_status(Axis::One, &P1::int(0)).unwrap(), FiberStatus::Singular);
    assert!(s.is_fiber_singular_point(Axis::One, &samples::origin()).unwrap());
    let d = samples::doubly_nodal();
    for axis in Axis::both() {
        assert!(d.is_fiber_singular_point(axis, &samples::origin()).unwrap());
    }
}

#[test]
fn with_line_has_a_vertical_line() {
    let s = samples::with_line();
    let p = SurfacePoint::ints(1, 5, 1);
    assert!(s.contains(&p));
    assert!(Axis::both().iter().any(|&a| s.on_vertical_line(a, &p)));
}

#[test]
fn involution_is_an_involution() {
    let s = samples::vetted();
    let pts = s.affine_points(3);
    assert!(!pts.is_empty());
    for p in pts.iter().take(20) {
        for axis in Axis::both() {
            let q = s.involution(axis, p).unwrap();
            assert!(s.contains(&q));
            assert_eq!(s.base_of(axis, &q), s.base_of(axis, p));
            assert_eq!(&s.involution(axis, &q).unwrap(), p);
        }
    }
}

#[test]
fn swapped_surface_exchanges_axes() {
    let s = samples::vetted();
    let w = s.swapped();
    let p = SurfacePoint::affine(int(-2), int(-1), rat(1, 2));
    assert!(s.contains(&p) && w.contains(&p.swapped()));
    assert_eq!(s.base_of(Axis::Two, &p), w.base_of(Axis::One, &p.swapped()));
    assert_eq!(w.swapped(), s);
}

#[test]
fn json_round_trip() {
    let s = samples::vetted();
    let text = serde_json::to_string(&s).unwrap();
    let back: Surface222 = serde_json::from_str(&text).unwrap();
    assert_eq!(back, s);
}
