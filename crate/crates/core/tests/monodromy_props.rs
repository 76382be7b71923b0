use wildmono::monodromy::{
    attach_root, compute_step_iii, make_params, verify_step_i, verify_step_iv, CoeffSpec,
};
use wildmono::padic::{q, qi};

/// `v(B_{j+1}) = (1 + p + ... + p^j) / p^j` for unit `c`, through `n = 3`.
#[test]
fn step_iii_ladder() {
    for (n, u) in [
        (1u32, vec![1]),
        (2, vec![1, 1]),
        (2, vec![0, 1]),
        (3, vec![1, 1, 1]),
    ] {
        let params = make_params(2, n, &u, CoeffSpec::int(1)).unwrap();
        let m = attach_root(&params, None).unwrap();
        let iii = compute_step_iii(&params, &m).unwrap();
        for j in 0..n {
            let want = q((0..=j).map(|t| 2i64.pow(t)).sum(), 2i64.pow(j));
            assert_eq!(iii.v_b[j as usize + 1], want, "n = {n}, j = {j}");
        }
        assert!(iii.congruence.value > qi(0) && iii.bridge.value > qi(0));
        assert!(verify_step_iv(&params, &m, &iii).unwrap().min_slack.value > qi(0));
    }
}

#[test]
fn slope_is_critical_valuation_over_q_squared() {
    for (n, u) in [(1u32, vec![0]), (2, vec![1, 0]), (3, vec![0, 1, 1])] {
        let params = make_params(2, n, &u, CoeffSpec::int(1)).unwrap();
        let k = params.tower.k_ring(24).unwrap();
        let sr = verify_step_i(&params, &k).unwrap();
        let qq = params.q as usize;
        assert_eq!(sr.newton_polygon.segments.len(), 1);
        assert_eq!(sr.newton_polygon.segments[0].length, qq * qq);
        assert_eq!(sr.slope * (qq * qq) as i64, params.v_a_n());
    }
}
