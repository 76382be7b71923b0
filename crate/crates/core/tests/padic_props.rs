use proptest::prelude::*;
use wildmono::monodromy::{attach_root, make_params, CoeffSpec};
use wildmono::padic::{EisensteinRing, Ring, Valued, Q};

fn k_ring() -> std::sync::Arc<EisensteinRing> {
    make_params(2, 2, &[1, 1], CoeffSpec::int(1))
        .unwrap()
        .tower
        .k_ring(20)
        .unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-40i64..40, 5)
}

fn v<R: Valued>(r: &R, a: &R::El) -> Option<Q> {
    r.valuation(a).unwrap().finite()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn valuation_is_multiplicative(a in coeffs(), b in coeffs()) {
        let k = k_ring();
        let (x, y) = (k.from_coefficients(&a), k.from_coefficients(&b));
        if let (Some(va), Some(vb)) = (v(&*k, &x), v(&*k, &y)) {
            prop_assert_eq!(v(&*k, &k.mul(&x, &y)), Some(va + vb));
        }
    }

    #[test]
    fn ultrametric(a in coeffs(), b in coeffs()) {
        let k = k_ring();
        let (x, y) = (k.from_coefficients(&a), k.from_coefficients(&b));
        if let (Some(va), Some(vb)) = (v(&*k, &x), v(&*k, &y)) {
            let s = k.valuation(&k.add(&x, &y)).unwrap();
            prop_assert_ne!(s.exceeds(va.min(vb) - Q::from_integer(1) / 1000), Some(false));
            if va != vb {
                prop_assert_eq!(s.finite(), Some(va.min(vb)));
            }
        }
    }

    #[test]
    fn inverse_round_trip(a in coeffs()) {
        let k = k_ring();
        let x = k.from_coefficients(&a);
        prop_assume!(v(&*k, &x).is_some());
        let one = k.mul(&x, &k.inverse(&x).unwrap());
        let err = k.valuation(&k.sub(&one, &k.one())).unwrap();
        prop_assert_ne!(err.exceeds(Q::from_integer(5)), Some(false));
    }
}

#[test]
fn valuation_is_multiplicative_in_l() {
    let params = make_params(2, 1, &[1], CoeffSpec::int(1)).unwrap();
    let m = attach_root(&params, None).unwrap();
    let l = &*m.l;
    let mut runner = proptest::test_runner::TestRunner::new(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    });
    let elem = proptest::collection::vec(-9i64..9, 4);
    runner
        .run(&(elem.clone(), elem), |(a, b)| {
            let build = |c: &[i64]| {
                let mut acc = l.zero();
                let mut yk = l.one();
                for &ci in c {
                    acc = l.add(&acc, &l.mul_int(&yk, ci));
                    yk = l.mul(&yk, &m.y);
                }
                acc
            };
            let (x, y) = (build(&a), build(&b));
            if let (Some(vx), Some(vy)) = (v(l, &x), v(l, &y)) {
                prop_assert_eq!(v(l, &l.mul(&x, &y)), Some(vx + vy));
            }
            Ok(())
        })
        .unwrap();
}
