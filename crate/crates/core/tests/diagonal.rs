use fibdense::algebra::rational::{int, rat};
use fibdense::certifier::Outcome;
use fibdense::diagonal::{
    certify_diagonal, conjecture_search, line_test, recheck, DiagonalError, DiagonalQuartic, QuarticPoint4,
};

fn fermat() -> DiagonalQuartic {
    DiagonalQuartic::new(int(1), int(-1), int(-1), int(1)).unwrap()
}

#[test]
fn euler_quadruple_is_dense() {
    // 158^4 + 59^4 = 133^4 + 134^4
    let q = fermat();
    let p = QuarticPoint4::ints([158, 133, 134, 59]).unwrap();
    assert!(q.contains(&p));
    assert!(!line_test(&q, &p).unwrap());
    let v = certify_diagonal(&q, &p);
    assert_eq!(v.outcome, Outcome::Dense);
    assert!(recheck(&v));
}

#[test]
fn points_on_lines_are_inconclusive() {
    let q = fermat();
    let p = QuarticPoint4::ints([1, 1, 1, 1]).unwrap();
    assert!(line_test(&q, &p).unwrap());
    let v = certify_diagonal(&q, &p);
    assert_eq!(v.outcome, Outcome::Inconclusive);
    assert!(recheck(&v));
    let p = QuarticPoint4::ints([1, 0, 1, 0]).unwrap();
    assert_eq!(certify_diagonal(&q, &p).outcome, Outcome::Inconclusive);
}

#[test]
fn tampered_verdict_fails_recheck() {
    let q = fermat();
    let mut v = certify_diagonal(&q, &QuarticPoint4::ints([1, 1, 1, 1]).unwrap());
    v.outcome = Outcome::Dense;
    assert!(!recheck(&v));
}

#[test]
fn bad_input() {
    assert!(matches!(DiagonalQuartic::new(int(0), int(1), int(1), int(1)), Err(DiagonalError::ZeroCoefficient(_))));
    assert!(DiagonalQuartic::new(int(1), int(-1), int(-2), int(1)).is_err());
    assert!(QuarticPoint4::ints([0, 0, 0, 0]).is_err());
    assert!(conjecture_search(&int(0), 100, false).is_err());
    assert!(conjecture_search(&int(1), 0, false).is_err());
}

#[test]
fn small_height_exhausts_without_a_point() {
    let r = conjecture_search(&int(1), 50, false).unwrap();
    assert!(r.trivial_rejected);
    assert_eq!(r.found, None);
    assert!(r.tested >= 1);
}

#[test]
fn search_finds_certified_points() {
    for (t, want) in [(int(3), [2, 4, 1, 3]), (int(2), [37, 141, 165, 175])] {
        let r = conjecture_search(&t, 200, false).unwrap();
        assert_eq!(r.found, Some(want));
        let v = r.verdict.unwrap();
        assert_eq!(v.outcome, Outcome::Dense);
        assert!(recheck(&v));
    }
}

#[test]
fn search_is_deterministic() {
    let t = rat(-3, 2);
    let a = conjecture_search(&t, 120, true).unwrap();
    let b = conjecture_search(&t, 120, true).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}
