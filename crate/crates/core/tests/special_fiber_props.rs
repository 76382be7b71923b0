use wildmono::special_fiber::{build_extraspecial, genus_as, SpecialCurve};

fn residues(p: u64, n: u32) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| (0..p as i64).map(move |x| [v.clone(), vec![x]].concat()))
            .collect();
    }
    out
}

#[test]
fn models_are_extraspecial_of_order_p_q_squared() {
    for (p, n) in [(2u64, 1u32), (2, 2), (3, 1)] {
        for u in residues(p, n) {
            let c = SpecialCurve::new(p, n, &u).unwrap();
            let g = build_extraspecial(&c, None).unwrap();
            let s = g.summary(true);
            let q = p.pow(n) as usize;
            assert!(s.group_axioms, "p = {p}, u = {u:?}");
            assert_eq!(s.order, p as usize * q * q, "p = {p}, u = {u:?}");
            assert_eq!(s.center_order, p as usize);
            assert!(s.center_equals_derived_equals_frattini && s.quotient_elementary_abelian);
            assert_eq!(c.genus(), genus_as(p, n));
        }
    }
}

#[test]
fn pairing_is_alternating() {
    let c = SpecialCurve::new(2, 2, &[1, 1]).unwrap();
    let g = build_extraspecial(&c, None).unwrap();
    let f = &g.field;
    for a in &g.translations {
        assert_eq!(g.pairing(a, a).unwrap(), f.zero());
        for b in &g.translations {
            assert_eq!(g.pairing(a, b).unwrap(), f.neg(&g.pairing(b, a).unwrap()));
        }
    }
}
