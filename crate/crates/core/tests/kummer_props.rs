use proptest::prelude::*;
use wildmono::kummer::{different_m_over_l, quadratic_different, step_e_construct};
use wildmono::monodromy::{attach_root, make_params, step_a_certificate, CoeffSpec};
use wildmono::padic::{qi, EisensteinRing, Ring};

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    /// The different of `Q_2(sqrt z)` depends only on the square class of `z`.
    #[test]
    fn different_is_a_square_class_invariant(z in (-200i64..200).prop_filter("odd", |z| z % 2 != 0), w in (-50i64..50).prop_filter("odd", |w| w % 2 != 0)) {
        let r = EisensteinRing::rational(2, 40).unwrap();
        let zr = r.from_int(z);
        let zw = r.mul(&zr, &r.from_int(w * w));
        let a = quadratic_different(&*r, &zr, None, None).unwrap().d;
        let b = quadratic_different(&*r, &zw, None, None).unwrap().d;
        prop_assert_eq!(a, b);
        let expect = match z.rem_euclid(4) {
            1 => 0,
            _ => 2,
        };
        prop_assert_eq!(a, expect);
    }
}

#[test]
fn family_different_is_q_plus_two() {
    for (n, us) in [
        (1u32, vec![vec![0], vec![1]]),
        (2, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]),
    ] {
        for u in us {
            let params = make_params(2, n, &u, CoeffSpec::int(1)).unwrap();
            let m = attach_root(&params, None).unwrap();
            step_a_certificate(&params, &m).unwrap();
            let e = step_e_construct(&params, &m).unwrap();
            assert!(
                e.slack.value > qi(0),
                "n = {n}, u = {u:?}: slack {}",
                e.slack.value
            );
            assert_eq!(e.v_leading, e.s);
            let d = different_m_over_l(&params, &m, &e).unwrap().d;
            assert_eq!(d, params.q as i64 + 2, "n = {n}, u = {u:?}");
        }
    }
}
