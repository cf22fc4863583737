//! Exact integer and rational arithmetic shared by every other module.

mod binomial;
mod dyadic;
mod row;

use std::cmp::Ordering;

pub use binomial::{binomial, central_binomial, BinomialCache};
pub use dyadic::DyadicRational;
pub use num_bigint::BigInt;
pub use row::{make_row, CoefficientRow, CoefficientTriangle};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Three-way comparison by cross-multiplication.
pub fn rational_cmp(a: &Rational, b: &Rational) -> Ordering {
    // Denominators are positive, so the cross products preserve order.
    (a.numer() * b.denom()).cmp(&(b.numer() * a.denom()))
}

/// Compares `lhs_coef * prod(lhs)` with `rhs_coef * prod(rhs)` by clearing
/// all denominators at once, with no intermediate gcd reductions.
pub fn cmp_products(
    lhs_coef: u64,
    lhs: &[&Rational],
    rhs_coef: u64,
    rhs: &[&Rational],
) -> Ordering {
    let mut left = BigInt::from(lhs_coef);
    let mut right = BigInt::from(rhs_coef);
    for v in lhs {
        left *= v.numer();
        right *= v.denom();
    }
    for v in rhs {
        right *= v.numer();
        left *= v.denom();
    }
    left.cmp(&right)
}

/// `coef * prod(values)` as a reduced rational; used when reporting.
pub fn product(coef: u64, values: &[&Rational]) -> Rational {
    values
        .iter()
        .fold(Rational::from_integer(BigInt::from(coef)), |acc, v| {
            acc * *v
        })
}

/// Shorthand for an integer-valued rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Shorthand for `numer / denom`; panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cmp_examples() {
        assert_eq!(rational_cmp(&ratio(7, 10), &ratio(3, 2)), Ordering::Less);
        assert_eq!(rational_cmp(&ratio(5, 2), &ratio(5, 2)), Ordering::Equal);
        assert_eq!(
            rational_cmp(&ratio(1806, 64), &ratio(1155, 64)),
            Ordering::Greater
        );
    }

    #[test]
    fn product_comparison() {
        let (a, b) = (ratio(21, 8), ratio(43, 4));
        let (c, d) = (ratio(15, 4), ratio(77, 16));
        assert_eq!(cmp_products(1, &[&a, &b], 1, &[&c, &d]), Ordering::Greater);
        assert_eq!(
            cmp_products(2, &[&ratio(1, 2)], 1, &[&int(1)]),
            Ordering::Equal
        );
        assert_eq!(cmp_products(3, &[&ratio(-1, 3)], 0, &[]), Ordering::Less);
        assert_eq!(product(4, &[&a, &d]), ratio(1617, 32));
    }

    #[test]
    fn cmp_handles_signs() {
        assert_eq!(rational_cmp(&ratio(-1, 3), &ratio(1, 5)), Ordering::Less);
        assert_eq!(rational_cmp(&ratio(1, -3), &ratio(-1, 3)), Ordering::Equal);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(p, q)| ratio(p, q))
    }

    proptest! {
        #[test]
        fn cmp_is_total_order(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!(rational_cmp(&a, &b), rational_cmp(&b, &a).reverse());
            if rational_cmp(&a, &b) != Ordering::Greater && rational_cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(rational_cmp(&a, &c), Ordering::Greater);
            }
            prop_assert_eq!(rational_cmp(&a, &b), a.cmp(&b));
            prop_assert_eq!(cmp_products(3, &[&a, &b], 2, &[&c]), (int(3) * &a * &b).cmp(&(int(2) * &c)));
        }

        #[test]
        fn normalization_idempotent(p in -10_000i64..10_000, q in 1i64..10_000) {
            let once = ratio(p, q);
            let twice = Rational::new(once.numer().clone(), once.denom().clone());
            prop_assert_eq!(&once, &twice);
            prop_assert_eq!(once.numer(), twice.numer());
            prop_assert_eq!(once.denom(), twice.denom());
        }
    }
}
