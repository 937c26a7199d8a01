#![allow(dead_code)]

use goldroot::{QuadExt, Radical, Rational, Sign};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn rational_in(num: i64, den: i64) -> impl Strategy<Value = Rational> {
    (-num..=num, 1..=den).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn nonneg_rational(num: i64, den: i64) -> impl Strategy<Value = Rational> {
    (0..=num, 1..=den).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn q5() -> impl Strategy<Value = QuadExt> {
    (rational_in(40, 12), rational_in(40, 12)).prop_map(|(a, b)| QuadExt::new(a, b, 5).unwrap())
}

pub fn quad_any() -> impl Strategy<Value = QuadExt> {
    (
        rational_in(30, 8),
        rational_in(30, 8),
        prop::sample::select(vec![2u64, 3, 5, 6, 7, 10, 13]),
    )
        .prop_map(|(a, b, d)| QuadExt::new(a, b, d).unwrap())
}

/// Tier-1 or tier-2 radicals over Q(√5).
pub fn radical() -> impl Strategy<Value = Radical> {
    prop_oneof![
        q5().prop_map(Radical::Quad),
        (q5(), any::<bool>()).prop_map(|(e, neg)| {
            let sign = if neg { Sign::Minus } else { Sign::Plus };
            Radical::nested(sign, e.abs()).unwrap()
        }),
    ]
}
