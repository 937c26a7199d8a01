mod common;

use common::*;
use goldroot::{denest, Polynomial, QuadExt, Radical, Sign};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational_in(20, 6), 0..=5).prop_map(Polynomial::new)
}

proptest! {
    #[test]
    fn evaluation_is_a_ring_homomorphism(p in poly(), q in poly(), x in radical()) {
        let (ep, eq) = (p.eval_at(&x), q.eval_at(&x));
        prop_assert_eq!((&p * &q).eval_at(&x), ep.checked_mul(&eq).unwrap());
        prop_assert_eq!((&p + &q).eval_at(&x), ep.checked_add(&eq).unwrap());
    }

    #[test]
    fn nested_and_denested_points_evaluate_alike(p in poly(), w in q5(), neg in any::<bool>()) {
        let sign = if neg { Sign::Minus } else { Sign::Plus };
        let nested = Radical::nested(sign, w.square()).unwrap();
        let flat = denest::canonicalize(&nested);
        let Radical::Quad(t) = &flat else { panic!("squares always denest") };
        let at_nested = p.eval_at(&nested);
        let collapsed = at_nested.u.checked_add(&at_nested.v.checked_mul(t).unwrap()).unwrap();
        prop_assert_eq!(collapsed, p.eval_at(&flat).u);
        prop_assert_eq!(p.is_root(&nested), p.is_root(&flat));
    }

    #[test]
    fn minimal_polynomial_kills_its_point(x in radical()) {
        let m = denest::minimal_polynomial(&x);
        prop_assert!(m.is_root(&x));
        prop_assert!(matches!(m.degree(), Some(1 | 2 | 4)));
        prop_assert_eq!(m.leading().cloned(), Some(goldroot::rational::int(1)));
    }

    #[test]
    fn division_reconstructs(p in poly(), q in poly()) {
        prop_assume!(!q.is_zero());
        let (quot, rem) = p.div_rem(&q).unwrap();
        prop_assert_eq!(&(&quot * &q) + &rem, p);
        prop_assert!(rem.degree() < q.degree());
    }
}

#[test]
fn constant_and_zero_polynomials() {
    let x = Radical::Quad(QuadExt::sqrt_of_squarefree(5));
    assert!(Polynomial::zero().is_root(&x));
    assert!(!Polynomial::from_ints(&[3]).is_root(&x));
}
