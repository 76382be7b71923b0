//! Lower filtrations, Herbrand's function and the different of a tower.

use wildmono::padic::{fmt_q, qi};
use wildmono::ramification::{
    admissible_abelian_breaks, assemble_g_filtration, different_exponent, hasse_arf_check, phi,
    psi, quotient, restrict_to_minimal, tower_transitivity, RamFiltration,
};

fn main() -> wildmono::Result<()> {
    let g = assemble_g_filtration(2, 2, Some(6))?
        .exact()
        .cloned()
        .expect("p = 2 is exact");
    let f = phi(&g);
    println!("G: {:?}", g.triples());
    for u in [1, 2, 5, 6] {
        println!("  phi({u}) = {}", fmt_q(&f.eval(qi(u))));
    }
    println!("  psi(5/4) = {}", fmt_q(&psi(&g).eval(f.eval(qi(5)))));
    let upper: Vec<String> = g.upper_breaks().iter().map(fmt_q).collect();
    println!("  upper breaks {upper:?}");

    let h = restrict_to_minimal(&g, 2)?;
    let gh = quotient(&g, &h)?;
    println!("Z(G): {:?}, G/Z(G): {:?}", h.triples(), gh.triples());
    println!(
        "phi(G) = phi(G/Z) o phi(Z): {}",
        phi(&gh).compose(&phi(&h)) == f
    );

    let d_mk = different_exponent(&g);
    println!(
        "d(M/K) = {d_mk} = {} ; d(M/Q_2^ur) = {}",
        tower_transitivity(different_exponent(&h), 2, different_exponent(&gh)),
        tower_transitivity(d_mk, 32, 4)
    );

    let j = RamFiltration::new(2, &[(0, 1, 8), (2, 5, 2)])?;
    let prog = admissible_abelian_breaks(2, 2, &gh)?;
    println!(
        "abelian piece: Hasse-Arf {}, admissible breaks {:?}",
        hasse_arf_check(&j),
        prog.first(4)
    );
    Ok(())
}
