//! The special fiber `w^2 - w = t^2 + t^3 + t^5`: translations that prolong,
//! the extra-special group they generate, and its filtration at infinity.

use wildmono::special_fiber::{
    build_extraspecial, prolongation_solutions, prolongation_solutions_brute, special_filtration,
    SpecialCurve,
};

fn main() -> wildmono::Result<()> {
    let curve = SpecialCurve::new(2, 2, &[1, 1])?;
    println!("genus {}", curve.genus());
    for m in 1..=8 {
        let space = prolongation_solutions(&curve, m)?;
        let brute = prolongation_solutions_brute(&curve, m)?;
        println!(
            "F_2^{m}: {} prolonging translations (exhaustive: {})",
            space.elements.len(),
            brute.len()
        );
    }
    let g = build_extraspecial(&curve, None)?;
    let s = g.summary(true);
    println!(
        "over F_2^{}: |G| = {}, |Z| = {}, |D| = {}, |Phi| = {}, |J| = {}",
        s.field_degree, s.order, s.center_order, s.derived_order, s.frattini_order, s.j_order
    );
    let a = &g.translations[1];
    let b = g.translations.iter().find(|b| {
        g.pairing(a, b)
            .map(|z| z.0.iter().any(|&c| c != 0))
            .unwrap_or(false)
    });
    if let Some(b) = b {
        println!(
            "commutator pairing of {a:?} and {b:?}: {:?}",
            g.pairing(a, b)?
        );
    }
    println!(
        "filtration at infinity: {:?}",
        special_filtration(2, 2)?.triples()
    );

    let small = build_extraspecial(&SpecialCurve::new(2, 1, &[0])?, None)?;
    println!(
        "w^2 - w = t^3: {}",
        small.summary(true).small_group.unwrap_or_default()
    );
    Ok(())
}
