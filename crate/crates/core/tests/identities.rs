use hankel_core::{
    catalan, check_point, cigler_matrix, det, det_bareiss, eval_general, hankel_matrix,
    hankel_transform, sweep, BigInt, DetMethod, HankelSpec, SequenceSource,
};
use proptest::prelude::*;

#[test]
fn sweep_covers_grid_in_r_major_order() {
    let records = sweep(12, 8).unwrap();
    assert_eq!(records.len(), 117);
    for (idx, rec) in records.iter().enumerate() {
        assert_eq!((rec.shift_r, rec.order_n), (idx / 13, idx % 13));
        assert!(rec.agree, "n = {}, r = {}", rec.order_n, rec.shift_r);
    }
}

#[test]
fn formula_beyond_acceptance_grid() {
    for r in 9..=11 {
        for n in 0..=6 {
            let direct = det_bareiss(&hankel_matrix(&HankelSpec::catalan(n, r)).unwrap()).unwrap();
            assert_eq!(direct, eval_general(n, r).unwrap(), "n = {n}, r = {r}");
        }
    }
    let rec = check_point(30, 6).unwrap();
    assert!(rec.agree);
}

#[test]
fn large_transform_matches_formula() {
    let values = hankel_transform(&SequenceSource::BuiltinCatalan, 5, 40).unwrap();
    for (n, v) in values.iter().enumerate() {
        assert_eq!(v, &eval_general(n, 5).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cigler_reduction_holds(n in 0usize..25, r in 0usize..9) {
        let direct = det_bareiss(&hankel_matrix(&HankelSpec::catalan(n, r)).unwrap()).unwrap();
        prop_assert_eq!(&direct, &det_bareiss(&cigler_matrix(n, r)).unwrap());
        prop_assert_eq!(&direct, &eval_general(n, r).unwrap());
    }

    #[test]
    fn one_by_one_is_catalan(r in 0usize..60) {
        let m = hankel_matrix(&HankelSpec::catalan(1, r)).unwrap();
        prop_assert_eq!(det(&m, DetMethod::Auto).unwrap(), catalan(r));
    }

    #[test]
    fn auto_and_bareiss_agree(
        terms in proptest::collection::vec(-1000i64..1000, 15),
        n in 0usize..8,
    ) {
        let source = SequenceSource::explicit(terms.into_iter().map(BigInt::from).collect()).unwrap();
        let m = hankel_matrix(&HankelSpec::new(source, n, 0)).unwrap();
        prop_assert_eq!(det(&m, DetMethod::Auto).unwrap(), det(&m, DetMethod::Bareiss).unwrap());
        prop_assert_eq!(det(&m, DetMethod::Laplace).unwrap(), det(&m, DetMethod::Bareiss).unwrap());
    }
}
