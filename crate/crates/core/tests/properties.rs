mod common;

use common::{check_invariants, check_scaling, palindromic};
use palinlace::interlace::{angle_interlaces, interlace_number, shift_geometric};
use palinlace::Scalar;
use proptest::prelude::*;

fn half_coeffs(n: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-30i64..=30, 1i64..=4), n / 2).prop_filter("nonzero", |h| h.iter().any(|&(a, _)| a != 0))
}

fn trim_palindromic() -> impl Strategy<Value = (usize, Vec<(i64, i64)>)> {
    (3usize..=10).prop_flat_map(|n| (Just(n), half_coeffs(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariants((n, half) in trim_palindromic()) {
        let p = palindromic(n, &half);
        if let Err(e) = check_invariants(&p) {
            return Err(TestCaseError::fail(e));
        }
    }

    #[test]
    fn scaling((n, half) in trim_palindromic(), num in 1i64..50, den in 1i64..10) {
        let p = palindromic(n, &half);
        if let Err(e) = check_scaling(&p, &Scalar::ratio(num, den)) {
            return Err(TestCaseError::fail(e));
        }
    }

    #[test]
    fn interlace_threshold((n, half) in trim_palindromic()) {
        let p = palindromic(n, &half);
        let il = interlace_number(&p).unwrap().value;
        let pa = p.p_alpha().unwrap();
        let delta = Scalar::ratio(1, 1000);
        prop_assert!(angle_interlaces(&pa.instantiate(&(&il + &delta))).unwrap());
        prop_assert!(!angle_interlaces(&pa.instantiate(&(&il - &delta))).unwrap());
    }

    #[test]
    fn shift_by_geometric((n, half) in trim_palindromic(), a in -40i64..40) {
        let p = palindromic(n, &half);
        let r = interlace_number(&p).unwrap();
        prop_assume!(!r.certs.contains(&0));
        let a = Scalar::ratio(a, 4);
        let q = shift_geometric(&p, &a);
        prop_assume!(!q.is_zero());
        let shifted = interlace_number(&q).unwrap().value.to_f64();
        let expected = r.value.to_f64() + a.to_f64() / 2.0;
        prop_assert!(shifted >= expected - 1e-9);
        let p1 = p.eval_unity(n, 0).unwrap().to_f64();
        // q(1) = p(1) + (n − 1)a, so equality needs a ≥ −(2il + p(1))/n
        if a.to_f64() >= -(2.0 * r.value.to_f64() + p1) / n as f64 + 1e-12 {
            prop_assert!((shifted - expected).abs() < 1e-9);
        }
    }
}

#[test]
fn shift_equality_threshold_is_over_n() {
    // il = 11/4, p(1) = 11: equality for a ≥ −11/2, not for a = −8 ≥ −33/4
    let p = palindromic(3, &[(11, 2)]);
    let il = |a: i64| interlace_number(&shift_geometric(&p, &Scalar::int(a))).unwrap().value;
    assert_eq!(il(-5), Scalar::ratio(1, 4));
    assert_eq!(il(-8), Scalar::ratio(5, 2));
}
