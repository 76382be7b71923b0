//! Newton polygon of the monodromy polynomial and its discriminant, computed
//! twice: truncated over `K` and exactly over `Z[pi]/(Phi)`.

use std::time::Instant;

use wildmono::exact::ExactField;
use wildmono::monodromy::{make_params, verify_step_i, CoeffSpec};
use wildmono::padic::{fmt_q, Valued};
use wildmono::poly::{discriminant, ValuedPolynomial};

fn main() -> wildmono::Result<()> {
    let params = make_params(2, 2, &[1, 1], CoeffSpec::int(1))?;
    let k = params.tower.k_ring(24)?;
    let report = verify_step_i(&params, &k)?;
    for (name, desc) in &params.tower.levels {
        println!("{name}: {desc}");
    }
    for s in &report.newton_polygon.segments {
        println!("segment: slope {} length {}", fmt_q(&s.slope), s.length);
    }
    for m in &report.margins {
        println!(
            "{:<28} {} inequalities, min margin {}",
            m.family,
            m.inequalities,
            m.min_margin.map_or("-".into(), |x| fmt_q(&x))
        );
    }

    let t0 = Instant::now();
    let exact = ExactField::new(2, &params.tower.eisenstein)?;
    let l_raw = ValuedPolynomial::new("K", params.build_l_raw(&exact)?);
    let disc = discriminant(&exact, &l_raw)?;
    let v = exact.valuation(&disc)?;
    println!(
        "exact v(disc L) = {v}  (q^2 v(a_n) = {})  [{:.2?}]",
        fmt_q(&(params.v_a_n() * 16)),
        t0.elapsed()
    );
    Ok(())
}
