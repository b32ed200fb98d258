use fibdense::algebra::rational::{self, int, rat};
use fibdense::algebra::univariate::{div_rem, squarefree_part};
use fibdense::algebra::{discriminant, poly_gcd, rational_roots, resultant, Polynomial, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn uni(c: &[i64]) -> Polynomial {
    Polynomial::from_int_coeffs(c)
}

fn x() -> Polynomial {
    Polynomial::var(2, 0)
}

fn t() -> Polynomial {
    Polynomial::var(2, 1)
}

fn k(c: i64) -> Polynomial {
    Polynomial::constant(2, int(c))
}

#[test]
fn gcd_examples() {
    assert_eq!(poly_gcd(&uni(&[-1, 0, 1]), &uni(&[-1, 1])).unwrap(), uni(&[-1, 1]));
    let p = uni(&[4, 0, 2]);
    assert_eq!(poly_gcd(&p, &Polynomial::zero(1)).unwrap(), uni(&[2, 0, 1]));
    let g = poly_gcd(&uni(&[-1, 0, 0, 0, 1]), &uni(&[-1, 0, 0, 0, 0, 0, 1])).unwrap();
    assert_eq!(g, uni(&[-1, 0, 1]));
    // division oracle
    assert!(div_rem(&uni(&[-1, 0, 0, 0, 1]), &g).unwrap().1.is_zero());
    assert!(poly_gcd(&uni(&[1, 1]), &x()).is_err());
}

#[test]
fn resultant_examples() {
    let r = resultant(&(&x() - &t()), &(&x() - &k(1)), 0).unwrap();
    // Res_x(x - t, x - 1) = +-(t - 1)
    assert!(r == &t() - &k(1) || r == &k(1) - &t());
    let r = resultant(&uni(&[1, 0, 1]), &uni(&[1, 1]), 0).unwrap();
    assert_eq!(r, Polynomial::constant(1, int(2)));
    let p = &(&x() * &x()) - &t();
    assert!(resultant(&p, &p, 0).unwrap().is_zero());
    assert!(resultant(&k(3), &p, 0).is_err());
}

#[test]
fn discriminant_examples() {
    let d = discriminant(&(&(&x() * &x()) - &t()), 0).unwrap();
    assert_eq!(d, t().scale(&int(4)));
    assert!(discriminant(&uni(&[1, -2, 1]), 0).unwrap().is_zero());
    // x^3 + A x + B with A = 2, B = 3: -(4 A^3 + 27 B^2)
    let d = discriminant(&uni(&[3, 2, 0, 1]), 0).unwrap();
    assert_eq!(d, Polynomial::constant(1, int(-(4 * 8 + 27 * 9))));
    assert!(discriminant(&uni(&[1, 1]), 0).is_err());
}

#[test]
fn rational_root_examples() {
    assert_eq!(rational_roots(&uni(&[-1, 0, 1])).unwrap(), vec![int(-1), int(1)]);
    assert!(rational_roots(&uni(&[1, 0, 1])).unwrap().is_empty());
    assert_eq!(rational_roots(&uni(&[1, -5, 6])).unwrap(), vec![rat(1, 3), rat(1, 2)]);
    assert_eq!(rational_roots(&uni(&[1, -2, 1])).unwrap(), vec![int(1), int(1)]);
    assert!(rational_roots(&Polynomial::zero(1)).is_err());
}

#[test]
fn rational_roots_of_large_coefficients() {
    // (7x - 3)(x + 11/5)(x^2 + 2) * 10^20
    let big = Polynomial::constant(1, Rational::from_integer(num_bigint::BigInt::from(10u32).pow(20)));
    let p = &(&(&(&uni(&[-3, 7]) * &Polynomial::from_coeffs(&[rat(11, 5), int(1)])) * &uni(&[2, 0, 1])) * &big);
    assert_eq!(rational_roots(p).unwrap(), vec![rat(-11, 5), rat(3, 7)]);
}

#[test]
fn rationals_are_canonical() {
    let q = rational::parse("6/-4").unwrap();
    assert_eq!(rational::to_string(&q), "-3/2");
    assert_eq!(rational::to_string(&rational::parse("0/5").unwrap()), "0/1");
    assert!(rational::parse("1/0").is_err());
    assert!(rational::parse("abc").is_err());
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-5i64..=5, 1..5).prop_map(|c| uni(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gcd_divides_both(p in small_poly(), q in small_poly(), r in small_poly()) {
        let a = &p * &r;
        let b = &q * &r;
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = poly_gcd(&a, &b).unwrap();
        prop_assert!(div_rem(&a, &g).unwrap().1.is_zero());
        prop_assert!(div_rem(&b, &g).unwrap().1.is_zero());
        if !r.is_zero() {
            prop_assert!(div_rem(&g, &r.primitive_integer()).unwrap().1.is_zero() || r.is_constant());
        }
    }

    #[test]
    fn inverse_is_exact(n in -1000i64..1000, d in 1i64..1000) {
        prop_assume!(n != 0);
        let q = rat(n, d);
        prop_assert!((&q * q.recip()).is_one());
    }

    #[test]
    fn resultant_vanishing_matches_gcd(
        a in prop::collection::vec(-3i64..=3, 3),
        b in prop::collection::vec(-3i64..=3, 3),
        t0 in -6i64..=6,
    ) {
        // p = x^2 + (a0 + a1 t) x + a2, q = x^2 + (b0 + b1 t) x + b2
        let p = &(&(&x() * &x()) + &(&(&k(a[0]) + &t().scale(&int(a[1]))) * &x())) + &k(a[2]);
        let q = &(&(&x() * &x()) + &(&(&k(b[0]) + &t().scale(&int(b[1]))) * &x())) + &k(b[2]);
        let r = resultant(&p, &q, 0).unwrap();
        let tv = int(t0);
        let ps = p.specialize(1, &tv).with_nvars(1);
        let qs = q.specialize(1, &tv).with_nvars(1);
        let g = poly_gcd(&ps, &qs).unwrap();
        let vanishes = r.eval(&[int(0), tv.clone()]).is_zero();
        prop_assert_eq!(vanishes, g.degree_in(0).unwrap_or(0) > 0);
    }

    #[test]
    fn discriminant_detects_repeated_roots(c in prop::collection::vec(-3i64..=3, 3), t0 in -5i64..=5) {
        // x^3 + (c0 + t) x^2 + c1 x + c2 t
        let p = &(&(&(&x() * &x()) * &x()) + &(&(&k(c[0]) + &t()) * &(&x() * &x()))) + &(&(&k(c[1]) * &x()) + &(&k(c[2]) * &t()));
        let d = discriminant(&p, 0).unwrap();
        let ps = p.specialize(1, &int(t0)).with_nvars(1);
        let sf = squarefree_part(&ps).unwrap();
        prop_assert_eq!(d.eval(&[int(0), int(t0)]).is_zero(), sf.degree_in(0) < ps.degree_in(0));
    }
}
