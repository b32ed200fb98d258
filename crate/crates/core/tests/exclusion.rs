use fibdense::algebra::rational::{int, rat};
use fibdense::exclusion::{
    class_order, component_certificate, emit_t_equations, in_t_up_to, in_z, satisfies_xi, ClassOrder,
    ComponentOutcome, EquationConfig, ExclusionError, SearchConfig, Tri,
};
use fibdense::surface::{samples, Axis, SurfacePoint};
use num_traits::Zero;

fn dense_point() -> SurfacePoint {
    SurfacePoint::affine(int(-2), int(-1), rat(1, 2))
}

fn order3_point() -> SurfacePoint {
    SurfacePoint::affine(int(-2), rat(-2, 3), int(-1))
}

#[test]
fn ramification_point_has_order_one() {
    let s = samples::vetted();
    for axis in Axis::both() {
        let r = class_order(&s, axis, &samples::origin()).unwrap();
        assert_eq!(r.order, ClassOrder::Finite(1));
        assert!(r.recheck(&s));
    }
}

#[test]
fn order_three_on_torsion3() {
    let s = samples::torsion3();
    let p = order3_point();
    assert!(s.contains(&p));
    let r = class_order(&s, Axis::Two, &p).unwrap();
    assert_eq!(r.order, ClassOrder::Finite(3));
    assert!(r.recheck(&s));
    assert!(satisfies_xi(&s, Axis::Two, &p, 3).unwrap());
    assert!(!satisfies_xi(&s, Axis::Two, &p, 2).unwrap());
    assert_eq!(in_t_up_to(&s, Axis::Two, &p, 3).unwrap(), Tri::Yes);
    assert_eq!(in_t_up_to(&s, Axis::Two, &p, 2).unwrap(), Tri::No);
    assert_eq!(in_z(&s, Axis::Two, &p, 3, true).unwrap().member, Tri::Yes);
}

#[test]
fn infinite_order_point() {
    let s = samples::vetted();
    let p = dense_point();
    for axis in Axis::both() {
        let r = class_order(&s, axis, &p).unwrap();
        assert_eq!(r.order, ClassOrder::Infinite);
        assert!(r.recheck(&s));
        assert_eq!(in_t_up_to(&s, axis, &p, 1000).unwrap(), Tri::No);
    }
}

#[test]
fn singular_fiber_policies() {
    let s = samples::nodal();
    let o = samples::origin();
    assert_eq!(class_order(&s, Axis::One, &o).unwrap().order, ClassOrder::Undefined);
    assert!(matches!(satisfies_xi(&s, Axis::One, &o, 5), Err(ExclusionError::SingularFiber)));
    assert_eq!(in_t_up_to(&s, Axis::One, &o, 5).unwrap(), Tri::Undefined);
    // the node itself lies in the closure
    assert_eq!(in_z(&s, Axis::One, &o, 5, true).unwrap().member, Tri::Yes);
}

#[test]
fn t_equations_vanish_on_torsion() {
    let s = samples::torsion3();
    let p = order3_point();
    let eq = emit_t_equations(&s, Axis::Two, 3, &EquationConfig::default()).unwrap();
    let a = p.as_affine().unwrap();
    assert!(eq.generators.iter().all(|g| g.eval(&a).is_zero()));
    let eq1 = emit_t_equations(&s, Axis::Two, 1, &EquationConfig::default()).unwrap();
    assert!(eq1.generators.iter().any(|g| !g.eval(&a).is_zero()));
    let d = dense_point().as_affine().unwrap();
    let v = samples::vetted();
    for r in 1..=3 {
        let eq = emit_t_equations(&v, Axis::One, r, &EquationConfig::default()).unwrap();
        assert!(eq.generators.iter().any(|g| !g.eval(&d).is_zero()), "r = {}", r);
    }
}

#[test]
fn t_equation_limits() {
    let s = samples::vetted();
    let cfg = EquationConfig::default();
    assert!(matches!(emit_t_equations(&s, Axis::One, 0, &cfg), Err(ExclusionError::BadR(0, _))));
    assert!(matches!(emit_t_equations(&s, Axis::One, 6, &cfg), Err(ExclusionError::BadR(6, 5))));
    let tight = EquationConfig {
        monomial_budget: 10,
        ..cfg
    };
    assert!(matches!(emit_t_equations(&s, Axis::One, 3, &tight), Err(ExclusionError::Budget(_))));
}

#[test]
fn component_certificates() {
    let s = samples::vetted();
    let p = dense_point();
    for axis in Axis::both() {
        let c = component_certificate(&s, &p, axis, &SearchConfig::default()).unwrap();
        assert_eq!(c.outcome, ComponentOutcome::Certified);
        assert!(c.recheck(&s, &p));
        let mut bad = c.clone();
        bad.outcome = ComponentOutcome::Vertical;
        assert!(!bad.recheck(&s, &p));
    }
    let w = samples::with_line();
    let p = SurfacePoint::ints(1, 5, 1);
    let vertical = Axis::both()
        .iter()
        .map(|&a| component_certificate(&w, &p, a, &SearchConfig::default()).unwrap())
        .filter(|c| c.outcome == ComponentOutcome::Vertical)
        .count();
    assert!(vertical >= 1);
}
