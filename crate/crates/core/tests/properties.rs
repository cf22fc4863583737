use interlace_core::boros_moll::{
    closed_forms, leading_coefficient, row_direct, triangle_recurrence, triangle_recurrence_dyadic,
};
use interlace_core::criterion::{
    build_triangle, check_gen1, check_gen2, criterion_report, distinct_real_roots, family,
    sample_cone_recurrence, FamilyId,
};
use interlace_core::exact::{int, ratio};
use interlace_core::inequality::{
    check_cross_descent, check_lemma_tl1, k_fold_log_concavity, l_operator, ratio_sequence,
};
use interlace_core::{CoefficientRow, Rational};
use num_traits::Signed;
use proptest::prelude::*;

/// Schoolbook product of polynomials given low to high.
fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![int(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[test]
fn closed_forms_match_direct_rows() {
    for n in 0..=60 {
        let (a, b, c) = closed_forms(n);
        assert_eq!(a, row_direct(n + 1).at(n).clone(), "d_n(n+1), n={n}");
        assert_eq!(
            b,
            row_direct(n + 1).at(n + 1).clone(),
            "d_(n+1)(n+1), n={n}"
        );
        assert_eq!(c, row_direct(n + 2).at(n).clone(), "d_n(n+2), n={n}");
    }
}

#[test]
fn denominators_divide_four_to_the_m() {
    for (m, row) in triangle_recurrence_dyadic(80).iter().enumerate() {
        assert!(row
            .iter()
            .all(|v| v.is_positive() && v.exp2() <= 2 * m as u64));
        assert_eq!(row[m].to_rational(), leading_coefficient(m));
    }
}

#[test]
fn tl1_implies_cross_descent() {
    let tri = triangle_recurrence(80);
    for m in 2..80 {
        let (a, b) = (tri.row(m), tri.row(m + 1));
        if check_lemma_tl1(a, b).unwrap().passed() {
            assert!(check_cross_descent(a, b).unwrap().passed(), "m={m}");
        }
    }
}

#[test]
fn builtin_families_satisfy_conditions() {
    let mut ids = vec![
        FamilyId::Pascal,
        FamilyId::StirlingCycle,
        FamilyId::StirlingSecond,
    ];
    ids.extend((0..=4).map(FamilyId::Whitney));
    for id in ids {
        let rec = family(id);
        assert!(check_gen1(&rec, 50).unwrap().passed(), "{id:?}");
        assert!(check_gen2(&rec, 50).unwrap().passed(), "{id:?}");
    }
}

#[test]
fn bell_numbers_from_row_sums() {
    let tri = build_triangle(&family(FamilyId::StirlingSecond), 10).unwrap();
    let bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
    for (n, b) in bell.iter().enumerate() {
        assert_eq!(tri.row(n).sum(), int(*b), "B_{n}");
    }
}

fn positive_row() -> impl Strategy<Value = CoefficientRow> {
    prop::collection::vec((1i64..50, 1i64..8), 1..10).prop_map(|v| {
        CoefficientRow::from_entries(v.into_iter().map(|(p, q)| ratio(p, q)).collect()).unwrap()
    })
}

/// Distinct rational roots plus irreducible quadratics `(x - p)^2 + q`.
fn factored_poly() -> impl Strategy<Value = (Vec<Rational>, usize)> {
    let roots = prop::collection::btree_set((-20i64..20, 1i64..4), 0..=4);
    let quads = prop::collection::vec((-5i64..5, 1i64..6), 0..=2);
    (roots, quads).prop_map(|(roots, quads)| {
        let roots: std::collections::BTreeSet<Rational> =
            roots.into_iter().map(|(p, q)| ratio(p, q)).collect();
        let mut poly = vec![int(1)];
        for r in &roots {
            poly = poly_mul(&poly, &[-r.clone(), int(1)]);
        }
        for (p, q) in quads {
            // x^2 - 2p x + p^2 + q, discriminant -4q < 0
            poly = poly_mul(&poly, &[int(p * p + q), int(-2 * p), int(1)]);
        }
        (poly, roots.len())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratio_sequence_shape(row in positive_row()) {
        let seq = ratio_sequence(&row).unwrap();
        prop_assert_eq!(seq.ratios.len(), row.degree());
        prop_assert!(seq.ratios.iter().all(|r| r.is_positive()));
    }

    #[test]
    fn l_operator_preserves_degree(row in positive_row()) {
        let l = l_operator(&row);
        prop_assert_eq!(l.degree, row.degree());
        prop_assert_eq!(l.entries.len(), row.len());
    }

    #[test]
    fn k_fold_depth_is_bounded(row in positive_row(), k in 0usize..4) {
        let report = k_fold_log_concavity(&row, k);
        if let Some(depth) = report.depth {
            prop_assert!(depth <= k);
        }
        prop_assert_eq!(report.failed_at.is_none(), report.depth == Some(k));
    }

    #[test]
    fn sturm_counts_distinct_real_roots((poly, expected) in factored_poly()) {
        prop_assume!(poly.len() <= 9);
        prop_assert_eq!(distinct_real_roots(&poly).unwrap(), expected);
    }

    #[test]
    fn cone_recurrences_interlace(seed in any::<u64>()) {
        let rec = sample_cone_recurrence(seed);
        let report = criterion_report(&rec, 14, 10).unwrap();
        prop_assert!(report.conditions_hold(), "{}", rec.name());
        if report.hypotheses_hold() {
            prop_assert!(report.conclusion_holds(), "{}", rec.name());
        }
        prop_assert!(report.real_rooted.passed(), "{}", rec.name());
    }
}
