//! Different of the quadratic layer `M = L(sqrt f(y))`, and the same
//! refinement loop on a few quadratic extensions of `Q_2`.

use wildmono::kummer::{
    different_m_over_l, quadratic_different, step_e_construct, step_f_filtration,
};
use wildmono::monodromy::{attach_root, make_params, step_a_certificate, CoeffSpec};
use wildmono::padic::{EisensteinRing, Ring};

fn main() -> wildmono::Result<()> {
    let q2 = EisensteinRing::rational(2, 20)?;
    for z in [3, 5, 7, 17] {
        let d = quadratic_different(&*q2, &q2.from_int(z), None, None)?;
        println!(
            "Q_2(sqrt {z}): different exponent {} (trace {:?})",
            d.d, d.trace
        );
    }

    for (n, u) in [(1, vec![1]), (2, vec![1, 1]), (2, vec![0, 1])] {
        let params = make_params(2, n, &u, CoeffSpec::int(1))?;
        let m = attach_root(&params, None)?;
        step_a_certificate(&params, &m)?;
        let e = step_e_construct(&params, &m)?;
        let d = different_m_over_l(&params, &m, &e)?;
        let h = step_f_filtration(params.q, d.d)?;
        println!(
            "n = {n}, u = {u:?}: s = {}, v_L(f u^2 - 1) climbs {:?}, d(M/L) = {}, Gal(M/L) filtration {:?}",
            e.s,
            d.trace,
            d.d,
            h.triples()
        );
    }
    Ok(())
}
