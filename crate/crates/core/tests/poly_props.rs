use proptest::prelude::*;
use wildmono::padic::{EisensteinRing, Ring, Valued, Q};
use wildmono::poly::{
    discriminant, newton_polygon, poly_mul, resultant, taylor_shift, ValuedPolynomial,
};

fn qp() -> std::sync::Arc<EisensteinRing> {
    EisensteinRing::rational(2, 40).unwrap()
}

/// Monic polynomials with integer coefficients.
fn monic(deg: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-64i64..64, deg).prop_map(|mut c| {
        c.push(1);
        c
    })
}

fn lift(r: &EisensteinRing, c: &[i64]) -> ValuedPolynomial<<EisensteinRing as Ring>::El> {
    ValuedPolynomial::new("Q_2", c.iter().map(|&x| r.from_int(x)).collect())
}

/// Root valuations with multiplicity, sorted.
fn vals(r: &EisensteinRing, f: &ValuedPolynomial<<EisensteinRing as Ring>::El>) -> Option<Vec<Q>> {
    let np = newton_polygon(r, f).ok()?;
    let mut out = Vec::new();
    for s in &np.segments {
        out.extend(std::iter::repeat_n(s.slope, s.length));
    }
    out.sort();
    Some(out)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 150, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn newton_polygon_of_product_merges(a in monic(3), b in monic(2)) {
        prop_assume!(a[0] != 0 && b[0] != 0);
        let r = qp();
        let (f, g) = (lift(&r, &a), lift(&r, &b));
        let fg = ValuedPolynomial::new("Q_2", poly_mul(&*r, &f.coeffs, &g.coeffs));
        let (Some(mut sf), Some(sg), Some(sfg)) = (vals(&r, &f), vals(&r, &g), vals(&r, &fg)) else {
            return Ok(());
        };
        sf.extend(sg);
        sf.sort();
        prop_assert_eq!(sf, sfg);
    }

    #[test]
    fn slope_lengths_sum_to_constant_term(a in monic(4)) {
        prop_assume!(a[0] != 0);
        let r = qp();
        let f = lift(&r, &a);
        let np = newton_polygon(&*r, &f).unwrap();
        let total: Q = np.segments.iter().map(|s| s.slope * s.length as i64).sum();
        prop_assert_eq!(total, r.valuation(&f.coeffs[0]).unwrap().finite().unwrap());
        prop_assert_eq!(np.segments.iter().map(|s| s.length).sum::<usize>(), 4);
    }

    #[test]
    fn discriminant_of_product(a in monic(2), b in monic(2)) {
        let r = qp();
        let (f, g) = (lift(&r, &a), lift(&r, &b));
        let fg = ValuedPolynomial::new("Q_2", poly_mul(&*r, &f.coeffs, &g.coeffs));
        let v = |x| r.valuation(&x).unwrap().finite();
        let (Some(df), Some(dg), Some(res), Some(dfg)) = (
            v(discriminant(&*r, &f).unwrap()),
            v(discriminant(&*r, &g).unwrap()),
            v(resultant(&*r, &f, &g).unwrap()),
            v(discriminant(&*r, &fg).unwrap()),
        ) else {
            return Ok(());
        };
        prop_assert_eq!(dfg, df + dg + res * 2);
    }

    #[test]
    fn taylor_shift_round_trip(a in monic(4), t in -20i64..20) {
        let r = qp();
        let f = lift(&r, &a);
        let back = taylor_shift(&*r, &taylor_shift(&*r, &f, &r.from_int(t)), &r.from_int(-t));
        for (x, y) in back.coeffs.iter().zip(&f.coeffs) {
            prop_assert!(r.valuation(&r.sub(x, y)).unwrap().finite().is_none());
        }
    }
}
