//! One test per acceptance criterion; each prints a single status line.

mod common;

use std::time::{Duration, Instant};

use proptest::test_runner::{Config, TestRunner};
use serde_json::json;
use wildmono::conductor::{jacobian_conductors, swan, ConductorInput};
use wildmono::exact::ExactField;
use wildmono::kummer::{
    different_m_over_l, quadratic_different, step_e_construct, step_f_filtration,
};
use wildmono::monodromy::{
    attach_root, compute_step_iii, make_params, root_distance_report, step_a_certificate,
    verify_step_i, verify_step_iv, verify_step_v, CoeffSpec, CurveParams,
};
use wildmono::padic::{q, qi, EisensteinRing, Ring, Valued, Q};
use wildmono::poly::{discriminant, ValuedPolynomial};
use wildmono::ramification::{
    admissible_abelian_breaks, assemble_g_filtration, different_exponent, hasse_arf_check, phi,
    psi, tower_transitivity, RamFiltration,
};
use wildmono::scenario::{run_scenario, verify_paper_example, Check, Scenario, Status};
use wildmono::special_fiber::{
    build_extraspecial, prolongation_solutions, prolongation_solutions_brute, special_filtration,
    SpecialCurve,
};

fn report(n: u32, name: &str, pass: bool, detail: String) {
    println!(
        "criterion {n:>2} [{}] {name}: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} failed: {detail}");
}

fn show(xs: &[Q]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn new_runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn ex1() -> CurveParams {
    make_params(2, 2, &[1, 1], CoeffSpec::int(1)).unwrap()
}

fn ex0() -> CurveParams {
    make_params(2, 1, &[1], CoeffSpec::int(1)).unwrap()
}

#[test]
fn criterion_01_worked_example() {
    let t0 = Instant::now();
    let r = verify_paper_example(None);
    let elapsed = t0.elapsed();
    let s = &r.summary;
    let pass = s.degree_m_over_k == Some(32)
        && s.d_mk == Some(66)
        && s.d_mur == Some(194)
        && r.passed
        && elapsed < Duration::from_secs(60);
    report(
        1,
        "worked example",
        pass,
        format!(
            "[M:K] = {:?}, d(M/K) = {:?}, d(M/Q_2^ur) = {:?}, {elapsed:.2?} (limit 60 s)",
            s.degree_m_over_k, s.d_mk, s.d_mur
        ),
    );
}

#[test]
fn criterion_02_newton_slope() {
    let t0 = Instant::now();
    let p = ex1();
    let k = p.tower.k_ring(24).unwrap();
    let sr = verify_step_i(&p, &k).unwrap();
    let elapsed = t0.elapsed();
    let segs: Vec<(String, usize)> = sr
        .newton_polygon
        .segments
        .iter()
        .map(|s| (s.slope.to_string(), s.length))
        .collect();
    let margins_ok = sr
        .margins
        .iter()
        .all(|m| m.min_margin.is_none_or(|x| x >= qi(0)));
    let pass =
        segs == vec![("3/8".to_string(), 16)] && margins_ok && elapsed < Duration::from_secs(5);
    report(
        2,
        "Newton slope",
        pass,
        format!("segments {segs:?}, margins >= 0: {margins_ok}, {elapsed:.2?} (limit 5 s)"),
    );
}

#[test]
fn criterion_03_discriminant_identity() {
    let t0 = Instant::now();
    let p = ex1();
    let exact = ExactField::new(2, &p.tower.eisenstein).unwrap();
    let l = ValuedPolynomial::new("K", p.build_l_raw(&exact).unwrap());
    let v_exact = exact
        .valuation(&discriminant(&exact, &l).unwrap())
        .unwrap()
        .finite()
        .unwrap();
    let elapsed = t0.elapsed();
    let m = attach_root(&p, None).unwrap();
    let v_trunc = root_distance_report(&p, &m).unwrap().v_disc;
    let want = p.v_a_n() * 16;
    let pass = v_exact == qi(96)
        && want == qi(96)
        && v_trunc == v_exact
        && elapsed < Duration::from_secs(30);
    report(
        3,
        "discriminant identity",
        pass,
        format!("exact v(disc) = {v_exact}, q^2 v(a_n) = {want}, truncated = {v_trunc}, {elapsed:.2?} (limit 30 s)"),
    );
}

#[test]
fn criterion_04_congruences_and_ladder() {
    let mut lines = Vec::new();
    let mut pass = true;
    for p in [ex1(), ex0()] {
        let m = attach_root(&p, None).unwrap();
        let iii = compute_step_iii(&p, &m).unwrap();
        let iv = verify_step_iv(&p, &m, &iii).unwrap();
        let v = verify_step_v(&p, &m, &iii).unwrap();
        let slacks = [
            iii.congruence.value,
            iii.bridge.value,
            iv.min_slack.value,
            v.min_slack.value,
        ];
        // v(B_{j+1}) = (1 + ... + p^j)/p^j + v(c)/p^(j+1), v(c) = 0
        let ladder: Vec<Q> = (0..p.n)
            .map(|j| {
                let pj = 2i64.pow(j);
                q((0..=j).map(|t| 2i64.pow(t)).sum(), pj)
            })
            .collect();
        let ok = slacks.iter().all(|s| *s > qi(0)) && iii.v_b[1..] == ladder[..];
        pass &= ok;
        lines.push(format!(
            "n = {}: slacks [{}], ladder [{}]",
            p.n,
            show(&slacks),
            show(&iii.v_b[1..])
        ));
    }
    report(4, "Step III/IV/V congruences", pass, lines.join("; "));
}

#[test]
fn criterion_05_kummer_different() {
    let mut ds = Vec::new();
    let mut filtrations_ok = true;
    for p in [ex1(), ex0()] {
        let m = attach_root(&p, None).unwrap();
        step_a_certificate(&p, &m).unwrap();
        let e = step_e_construct(&p, &m).unwrap();
        let d = different_m_over_l(&p, &m, &e).unwrap().d;
        let h = step_f_filtration(p.q, d).unwrap();
        filtrations_ok &= h.triples() == vec![(0, 1 + p.q as u32, 2)];
        ds.push(d);
    }
    let q2 = EisensteinRing::rational(2, 20).unwrap();
    let d3 = quadratic_different(&*q2, &q2.from_int(3), None, None)
        .unwrap()
        .d;
    let pass = ds == vec![6, 4] && d3 == 2 && filtrations_ok;
    report(
        5,
        "Kummer different",
        pass,
        format!(
            "EX1 {}, EX0 {}, Q_2(sqrt 3) {d3}, H-filtrations ok: {filtrations_ok}",
            ds[0], ds[1]
        ),
    );
}

#[test]
fn criterion_06_filtration_assembly() {
    let g1 = assemble_g_filtration(2, 2, Some(6))
        .unwrap()
        .exact()
        .cloned()
        .unwrap();
    let g0 = assemble_g_filtration(2, 1, Some(4))
        .unwrap()
        .exact()
        .cloned()
        .unwrap();
    let d_sum = different_exponent(&g1);
    let lk = RamFiltration::new(2, &[(0, 1, 16)]).unwrap();
    let d_tower = tower_transitivity(6, 2, different_exponent(&lk));
    let pass = g1.triples() == vec![(0, 1, 32), (2, 5, 2)]
        && g0.triples() == vec![(0, 1, 8), (2, 3, 2)]
        && d_sum == 66
        && d_tower == 66;
    report(
        6,
        "filtration assembly",
        pass,
        format!(
            "EX1 {:?}, EX0 {:?}, sum {d_sum}, tower {d_tower}",
            g1.triples(),
            g0.triples()
        ),
    );
}

#[test]
fn criterion_07_conductors() {
    let c1 = jacobian_conductors(
        2,
        2,
        &assemble_g_filtration(2, 2, Some(6))
            .unwrap()
            .exact()
            .cloned()
            .unwrap(),
    )
    .unwrap();
    let c0 = jacobian_conductors(
        2,
        1,
        &assemble_g_filtration(2, 1, Some(4))
            .unwrap()
            .exact()
            .cloned()
            .unwrap(),
    )
    .unwrap();
    let pass = c1.conductor == 9 && c0.conductor == 5 && c1.swan_base == 1 && c0.swan_base == 1;
    report(
        7,
        "conductors",
        pass,
        format!(
            "f = {} / {}, sw over unramified base = {} / {}",
            c1.conductor, c0.conductor, c1.swan_base, c0.swan_base
        ),
    );
}

#[test]
fn criterion_08_special_fiber() {
    let mut pass = true;
    let mut notes = Vec::new();
    let curve = SpecialCurve::new(2, 2, &[1, 1]).unwrap();
    for m in 1..=8 {
        let s = prolongation_solutions(&curve, m).unwrap();
        let mut brute = prolongation_solutions_brute(&curve, m).unwrap();
        let mut k = s.elements.clone();
        k.sort();
        brute.sort();
        pass &= k == brute && s.is_subspace() && k.len().is_power_of_two() && k.len() <= 16;
    }
    for (n, u) in [
        (1, vec![0]),
        (1, vec![1]),
        (2, vec![1, 1]),
        (2, vec![0, 0]),
        (2, vec![0, 1]),
        (2, vec![1, 0]),
    ] {
        let c = SpecialCurve::new(2, n, &u).unwrap();
        let g = build_extraspecial(&c, None).unwrap();
        let s = g.summary(true);
        let qq = 2usize.pow(n);
        let assembled = assemble_g_filtration(2, n, Some(qq as u64 + 2))
            .unwrap()
            .exact()
            .cloned()
            .unwrap();
        let ok = s.group_axioms
            && s.order == 2 * qq * qq
            && s.center_order == 2
            && s.center_equals_derived_equals_frattini
            && s.quotient_elementary_abelian
            && s.j_order == 2 * qq
            && g.table.is_abelian_subset(&g.j)
            && special_filtration(2, n).unwrap() == assembled;
        pass &= ok;
        notes.push(format!("u = {u:?}: |G| = {}", s.order));
    }
    report(8, "special fiber", pass, notes.join(", "));
}

#[test]
fn criterion_09_property_suites() {
    let mut runner = new_runner(1000);
    let herbrand = runner.run(&common::filtration(), |f| {
        let (ph, ps) = (phi(&f), psi(&f));
        for k in 0..40 {
            let x = q(k, 3);
            assert_eq!(ph.eval(ps.eval(x)), x);
            assert_eq!(ps.eval(ph.eval(x)), x);
        }
        assert!(ph.is_concave() && ps.is_convex());
        assert_eq!(ph.compose(&ps).eval(q(7, 2)), q(7, 2));
        Ok(())
    });
    let mut runner = new_runner(1000);
    let swan_props = runner.run(&common::filtration(), |f| {
        let dims = |f: &RamFiltration| {
            let mut d = std::collections::BTreeMap::from([(1u64, 8u64)]);
            for s in &f.segments {
                d.insert(s.order, if s.order == 1 { 8 } else { 2 });
            }
            d
        };
        let a = ConductorInput::new(f.clone(), 4, dims(&f)).unwrap();
        let r = ConductorInput::new(f.refined(), 4, dims(&f)).unwrap();
        assert_eq!(a.swan_rational(), r.swan_rational());
        assert_eq!(a.swan_rational() == qi(0), f.order_at(1) == 1);
        Ok(())
    });
    // the abelian piece M / M^J with break t = 1 + q
    let j = RamFiltration::new(2, &[(0, 1, 8), (2, 5, 2)]).unwrap();
    let upper = phi(&j).eval(qi(5));
    let outer = RamFiltration::new(2, &[(0, 1, 16)]).unwrap();
    let ha = hasse_arf_check(&j)
        && upper == qi(2)
        && admissible_abelian_breaks(2, 2, &outer).unwrap().contains(5);
    let sw0 = swan(
        &ConductorInput::new(
            RamFiltration::new(2, &[(0, 0, 3)]).unwrap(),
            1,
            [(1, 2), (3, 0)].into(),
        )
        .unwrap(),
    )
    .unwrap()
        == 0;
    let pass = herbrand.is_ok() && swan_props.is_ok() && ha && sw0;
    report(
        9,
        "property suites",
        pass,
        format!(
            "phi/psi on 1000 filtrations: {}, swan on 1000: {}, Hasse-Arf upper break {upper}",
            herbrand.is_ok(),
            swan_props.is_ok()
        ),
    );
}

#[test]
fn criterion_10_odd_prime_guard() {
    let r = run_scenario(&Scenario::new(3, 1, &[1], json!(1)));
    let f = r.check(Check::Filtration).unwrap();
    let is_family = f.status == Status::Family
        && f.data["kind"] == "family"
        && f.data["breaks"] == json!({"start": 4, "step": 3});
    let no_value = r.summary.filtration.is_none() && f.data.get("filtration").is_none();
    let pass = is_family && no_value && r.passed;
    report(
        10,
        "odd-prime guard",
        pass,
        format!("filtration status {:?}, data {}", f.status, f.data),
    );
}
