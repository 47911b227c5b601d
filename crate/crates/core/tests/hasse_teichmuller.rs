use hgnum::series::{product_rule_sum, quotient_rule_binomial, quotient_rule_compositions};
use hgnum::{Rational, TruncatedSeries};
use proptest::prelude::*;

const ORDER: usize = 20;

fn poly(coeffs: Vec<(i64, i64)>) -> TruncatedSeries {
    TruncatedSeries::from_fn(ORDER, |k| {
        coeffs
            .get(k)
            .map_or_else(Rational::zero, |&(p, q)| Rational::new(p, q))
    })
}

fn coeffs(nonzero_constant: bool) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..=9, 1i64..=6), 1..=11).prop_map(move |mut v| {
        if nonzero_constant && v[0].0 == 0 {
            v[0].0 = 1;
        }
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn product_rule(fs in prop::collection::vec(coeffs(false), 2..=4), n in 0usize..=6) {
        let factors: Vec<TruncatedSeries> = fs.into_iter().map(poly).collect();
        let product = factors.iter().skip(1).fold(factors[0].clone(), |a, f| a.mul(f));
        prop_assert_eq!(product.hasse_teichmuller(n), product_rule_sum(&factors, n));
    }

    #[test]
    fn quotient_rules(c in coeffs(true), n in 1usize..=6) {
        let f = poly(c);
        let lhs = f.reciprocal().unwrap().hasse_teichmuller(n);
        prop_assert_eq!(&lhs, &quotient_rule_compositions(&f, n).unwrap());
        prop_assert_eq!(&lhs, &quotient_rule_binomial(&f, n).unwrap());
    }

    #[test]
    fn divided_derivative(c in coeffs(false), n in 0usize..=6) {
        let f = poly(c);
        let expected = f.nth_derivative(n).scale(&(Rational::one() / hgnum::exact::factorial(n)));
        prop_assert_eq!(f.hasse_teichmuller(n), expected);
    }
}
