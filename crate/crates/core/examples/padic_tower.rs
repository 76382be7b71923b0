//! The base of the tower: `K = Q_p(pi)` with `pi^(1+q) = lambda`, truncated
//! arithmetic, and the two valuation normalizations.

use wildmono::padic::{build_tower, fmt_q, DualValuation, Ring, Valued};

fn main() -> wildmono::Result<()> {
    for (p, n) in [(2, 1), (2, 2), (3, 1)] {
        let tower = build_tower(p, n)?;
        let k = tower.k_ring(12)?;
        let e = k.ramification_index();
        println!(
            "p = {p}, n = {n}: e(K/Q_p) = {e}, lambda = pi^{}",
            tower.lambda_exponent()
        );

        let pi = k.pi_pow(1);
        let x = k.add(&k.pow(&pi, 2), &k.from_int(p as i64));
        let v = k.valuation(&x)?.finite().expect("nonzero");
        let dv = DualValuation::new(v, "K", e);
        println!(
            "  v(pi^2 + p) = {} (v_p = 1), {} (v_K(pi) = 1)",
            dv.v_p, dv.v_level
        );

        let inv = k.inverse(&x)?;
        let one = k.mul(&x, &inv);
        println!(
            "  (pi^2 + p)^-1 known to O({})",
            fmt_q(&k.precision_of(&inv).unwrap())
        );
        println!(
            "  x * x^-1 - 1 has valuation {}",
            k.valuation(&k.sub(&one, &k.one()))?
        );
    }
    Ok(())
}
