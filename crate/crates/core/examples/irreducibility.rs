//! The root `y` of the monodromy polynomial and the value-group certificate
//! that `L = K(y)` is totally ramified of degree `q^2`.

use wildmono::monodromy::{attach_root, make_params, step_a_certificate, CoeffSpec};
use wildmono::padic::fmt_q;

fn main() -> wildmono::Result<()> {
    for (p, n, u) in [
        (2, 1, vec![1]),
        (2, 2, vec![1, 1]),
        (2, 2, vec![0, 1]),
        (3, 1, vec![1]),
    ] {
        let params = make_params(p, n, &u, CoeffSpec::int(1))?;
        let m = attach_root(&params, None)?;
        let cert = step_a_certificate(&params, &m)?;
        let (a, b, c) = cert.uniformizer;
        println!(
            "p = {p}, n = {n}, u = {u:?}: v(y) = {}, v(t) = {}, e(L/K) >= {} = deg L, uniformizer pi^{a} y^{b} t^{c}",
            fmt_q(&m.v_y()),
            fmt_q(&cert.v_t),
            cert.e_lower_bound
        );
    }
    Ok(())
}
