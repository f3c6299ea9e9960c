//! Worked examples for each module, checked against small independent oracles.

mod common;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use ntd_core::arith::{binomial, factorial, int_pow, rat, ratio};
use ntd_core::fps::ftilde_egf;
use ntd_core::polynomials::{
    derivative_recurrence_step, eval_poly, ftilde_value, geometric_number, geometric_polynomial,
    geometric_two_variable, noncentral_td, tanny_dowling,
};
use ntd_core::series::{ftilde_series, geometric_series_value};
use ntd_core::triangles::{
    noncentral_whitney, stirling2, translated_whitney, translated_whitney_explicit, whitney,
};
use ntd_core::{Rational, RationalPolynomial, RationalSeries, TdVariant};

fn poly(coeffs: &[i64]) -> RationalPolynomial {
    RationalPolynomial::new(coeffs.iter().map(|&c| rat(c)).collect())
}

fn eps() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10).pow(20))
}

fn pascal(n: usize) -> Vec<Vec<u64>> {
    let mut rows = vec![vec![1u64]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![1u64; i + 1];
        for k in 1..i {
            row[k] = prev[k - 1] + prev[k];
        }
        rows.push(row);
    }
    rows
}

#[test]
fn exact_arithmetic() {
    let rows = pascal(20);
    assert_eq!(binomial(5, 2), BigInt::from(rows[5][2]));
    assert_eq!(binomial(5, 2), BigInt::from(10));
    for n in 0..=20u32 {
        assert_eq!(binomial(n, 0), BigInt::one());
        for k in 0..=n {
            assert_eq!(binomial(n, k), BigInt::from(rows[n as usize][k as usize]));
        }
    }
    assert!(binomial(3, 5).is_zero());

    assert_eq!(int_pow(&rat(-2), 3).unwrap(), rat(-8));
    assert_eq!(int_pow(&rat(0), 0).unwrap(), rat(1));
    assert_eq!(int_pow(&ratio(3, 2), -2).unwrap(), ratio(4, 9));
    assert!(int_pow(&rat(0), -1).is_err());

    assert_eq!(factorial(0), BigInt::one());
    assert_eq!(factorial(4), BigInt::from(24));
    assert_eq!(factorial(10), BigInt::from((1..=10u64).product::<u64>()));
}

#[test]
fn truncated_series() {
    let e = |c: i64, order| RationalSeries::exp_linear(&rat(c), order);
    assert_eq!(
        e(0, 5).coeffs(),
        vec![rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)].as_slice()
    );
    assert_eq!(
        e(1, 3).coeffs(),
        [rat(1), rat(1), ratio(1, 2), ratio(1, 6)].as_slice()
    );
    assert_eq!(e(-2, 2).coeffs(), [rat(1), rat(-2), rat(2)].as_slice());

    let a = RationalSeries::new(vec![rat(1), rat(1)], 2);
    let b = RationalSeries::new(vec![rat(1), rat(-1)], 2);
    assert_eq!((&a * &b).coeffs(), [rat(1), rat(0), rat(-1)].as_slice());
    assert_eq!(&e(1, 6) * &e(-1, 6), RationalSeries::one(6));
    assert_eq!(&e(1, 3) * &e(1, 3), e(2, 3));

    let one_minus_z = RationalSeries::new(vec![rat(1), rat(-1)], 4);
    assert_eq!(
        one_minus_z.reciprocal().unwrap().coeffs(),
        vec![rat(1); 5].as_slice()
    );
    let two = RationalSeries::constant(rat(2), 3);
    assert_eq!(
        two.reciprocal().unwrap().coeffs(),
        [ratio(1, 2), rat(0), rat(0), rat(0)].as_slice()
    );
    assert!(RationalSeries::new(vec![rat(0), rat(1)], 3)
        .reciprocal()
        .is_err());

    // 1 - (e^z - 1) has reciprocal sum_n w_n z^n / n!
    let denom = &RationalSeries::constant(rat(2), 6) - &e(1, 6);
    let inv = denom.reciprocal().unwrap();
    let ordinary: Vec<Rational> = (0..=4)
        .map(|n| {
            Rational::from_integer(BigInt::from(common::ordered_partitions(n)))
                / Rational::from_integer(factorial(n as u32))
        })
        .collect();
    assert_eq!(&inv.coeffs()[..5], ordinary.as_slice());
    let bell: Vec<Rational> = (0..=6)
        .map(|n| Rational::from_integer(BigInt::from(common::ordered_partitions(n))))
        .collect();
    assert_eq!(inv.egf_values(), bell);

    assert_eq!(
        RationalSeries::new(vec![rat(1), rat(1), ratio(1, 2)], 2).egf_values(),
        vec![rat(1); 3]
    );

    assert_eq!(
        ftilde_egf(&rat(1), &rat(0), &rat(1), 4).unwrap(),
        bell[..5].to_vec()
    );
    for (m, a) in [(2, 1), (3, -2), (1, 2)] {
        let values = ftilde_egf(&rat(m), &rat(a), &rat(0), 5).unwrap();
        let powers: Vec<Rational> = (0..=5).map(|n| int_pow(&rat(-a), n).unwrap()).collect();
        assert_eq!(values, powers);
    }
    let values = ftilde_egf(&rat(2), &rat(1), &rat(1), 3).unwrap();
    for (n, v) in values.iter().enumerate() {
        assert_eq!(
            v,
            &noncentral_td(&rat(2), &rat(1), n as u32)
                .unwrap()
                .eval(&rat(1))
        );
    }
    assert!(ftilde_egf(&rat(0), &rat(1), &rat(1), 3).is_err());
}

#[test]
fn triangles() {
    for n in 0..=7u32 {
        let counts = common::set_partitions_by_blocks(n as usize);
        for k in 0..=n {
            assert_eq!(stirling2(n, k), BigInt::from(counts[k as usize]));
        }
        assert_eq!(stirling2(n, n), BigInt::one());
    }
    assert_eq!(stirling2(3, 2), BigInt::from(3));
    assert_eq!(stirling2(4, 2), BigInt::from(7));

    assert_eq!(translated_whitney(&rat(2), 3, 2), rat(6));
    assert_eq!(translated_whitney(&rat(5), 4, 4), rat(1));
    assert_eq!(translated_whitney(&rat(2), 4, 2), rat(28));
    assert_eq!(translated_whitney_explicit(&rat(2), 4, 2).unwrap(), rat(28));

    for n in 0..=6 {
        for k in 0..=n {
            assert_eq!(
                noncentral_whitney(&rat(1), &rat(0), n, k).unwrap(),
                Rational::from_integer(stirling2(n, k))
            );
        }
    }
    assert_eq!(noncentral_whitney(&rat(2), &rat(1), 2, 1).unwrap(), rat(0));
    assert_eq!(
        noncentral_whitney(&ratio(7, 3), &rat(-4), 0, 0).unwrap(),
        rat(1)
    );

    assert_eq!(whitney(&rat(1), 2, 1).unwrap(), rat(3));
    assert_eq!(whitney(&rat(3), 0, 0).unwrap(), rat(1));
    assert_eq!(whitney(&rat(2), 2, 2).unwrap(), rat(1));
}

#[test]
fn polynomial_families() {
    assert_eq!(geometric_polynomial(0), poly(&[1]));
    assert_eq!(geometric_polynomial(2), poly(&[0, 1, 2]));
    assert_eq!(geometric_polynomial(3).eval(&rat(1)), rat(13));

    assert_eq!(geometric_number(0), rat(1));
    assert_eq!(geometric_number(3), rat(13));
    assert_eq!(geometric_number(5), rat(541));
    assert_eq!(
        geometric_number(5),
        rat(common::ordered_partitions(5) as i64)
    );

    assert_eq!(noncentral_td(&rat(3), &rat(-2), 0).unwrap(), poly(&[1]));
    for n in 0..=6 {
        assert_eq!(
            noncentral_td(&rat(1), &rat(0), n).unwrap(),
            geometric_polynomial(n)
        );
    }
    assert_eq!(
        noncentral_td(&rat(2), &rat(0), 2).unwrap(),
        poly(&[0, 2, 2])
    );
    assert_eq!(ftilde_value(&rat(2), &rat(0), 2, &rat(2)).unwrap(), rat(12));

    assert_eq!(
        tanny_dowling(TdVariant::Second, &rat(3), 0).unwrap(),
        poly(&[1])
    );
    for n in 0..=6 {
        assert_eq!(
            tanny_dowling(TdVariant::Second, &rat(1), n).unwrap(),
            noncentral_td(&rat(1), &rat(-1), n).unwrap()
        );
        for m in 1..=3 {
            let first = tanny_dowling(TdVariant::First, &rat(m), n).unwrap();
            let second = tanny_dowling(TdVariant::Second, &rat(m), n).unwrap();
            assert_eq!(first, second.compose_scale(&rat(m)));
        }
    }

    for n in 0..=6 {
        assert_eq!(geometric_two_variable(&rat(0), n), geometric_polynomial(n));
        assert_eq!(geometric_two_variable(&ratio(5, 2), 0), poly(&[1]));
    }
    assert_eq!(geometric_two_variable(&rat(1), 2).eval(&rat(1)), rat(6));

    let x = poly(&[0, 1]);
    assert_eq!(derivative_recurrence_step(&poly(&[1])), x);
    assert_eq!(derivative_recurrence_step(&x), geometric_polynomial(2));
    assert_eq!(
        derivative_recurrence_step(&poly(&[0, 1, 2])),
        poly(&[0, 1, 6, 6])
    );

    assert_eq!(eval_poly(&poly(&[1]), &rat(9)), rat(1));
    assert_eq!(eval_poly(&poly(&[0, 1, 2]), &rat(1)), rat(3));
    assert_eq!(eval_poly(&poly(&[0, 1, 2]), &ratio(1, 2)), rat(1));
}

#[test]
fn series_enclosures() {
    let e = ftilde_series(&rat(1), &rat(0), 2, &rat(1), &eps(), 10_000).unwrap();
    assert!(e.contains(&rat(3)));
    assert!(e.width() <= eps());

    for (m, a, x) in [(1, 0, ratio(1, 3)), (2, 1, rat(1)), (3, -2, ratio(-1, 3))] {
        let e = ftilde_series(&rat(m), &rat(a), 0, &x, &eps(), 10_000).unwrap();
        assert!(e.contains(&rat(1)));
    }

    let exact = ftilde_value(&rat(2), &rat(1), 2, &rat(1)).unwrap();
    assert!(ftilde_series(&rat(2), &rat(1), 2, &rat(1), &eps(), 10_000)
        .unwrap()
        .contains(&exact));

    assert!(geometric_series_value(3, &rat(1), &eps())
        .unwrap()
        .contains(&rat(13)));
    assert!(geometric_series_value(0, &ratio(2, 5), &eps())
        .unwrap()
        .contains(&rat(1)));
    assert!(geometric_series_value(2, &ratio(1, 2), &eps())
        .unwrap()
        .contains(&rat(1)));

    let err = ftilde_series(&rat(1), &rat(0), 2, &rat(-2), &eps(), 10_000).unwrap_err();
    assert!(err.to_string().contains("|x/(m+x)| < 1"));
    assert!(ftilde_series(&rat(1), &rat(0), 30, &ratio(9, 1), &eps(), 10).is_err());
}
