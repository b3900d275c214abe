use locdual::ring::{Field, Monomial, MonomialOrder, Polynomial, Ring, RingMatrix};
use proptest::prelude::*;

fn ring() -> Ring {
    Ring::degrevlex(Field::prime(32003).unwrap(), ["x", "y", "z"]).unwrap()
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..=5), 0..5).prop_map(|terms| {
        let r = ring();
        terms.into_iter().fold(r.zero(), |acc, ((a, b, c), k)| {
            acc + r.monomial(&[a, b, c]).scale(&r.field().from_i64(k))
        })
    })
}

fn monomial_strategy() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, 3).prop_map(|e| Monomial::from_exponents(&e))
}

fn matrix_strategy(n: usize) -> impl Strategy<Value = RingMatrix> {
    prop::collection::vec(poly_strategy(), n * n).prop_map(move |entries| {
        let rows = entries.chunks(n).map(|c| c.to_vec()).collect();
        RingMatrix::from_rows(&ring(), rows).unwrap()
    })
}

const ORDERS: [MonomialOrder; 3] = [MonomialOrder::Lex, MonomialOrder::DegRevLex, MonomialOrder::Elimination { block: 1 }];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &ring().one(), a.clone());
    }

    #[test]
    fn orders_are_monomial_orders(a in monomial_strategy(), b in monomial_strategy(), c in monomial_strategy()) {
        for ord in ORDERS {
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&a.mul(&c), &b.mul(&c)));
            prop_assert!(ord.cmp(&Monomial::one(3), &a) != std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn leading_term_of_product(a in poly_strategy(), b in poly_strategy()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let lead = (&a * &b).leading_monomial().unwrap().clone();
        prop_assert_eq!(lead, a.leading_monomial().unwrap().mul(b.leading_monomial().unwrap()));
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix_strategy(2), b in matrix_strategy(2)) {
        let ab = a.try_mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), &a.det().unwrap() * &b.det().unwrap());
        prop_assert_eq!(a.transpose().det().unwrap(), a.det().unwrap());
    }
}
