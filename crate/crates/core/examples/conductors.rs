//! Conductor exponents of the Jacobian over `K` and over the maximal
//! unramified base.

use wildmono::conductor::jacobian_conductors;
use wildmono::ramification::shape_with_break;

fn main() -> wildmono::Result<()> {
    for n in 1..=3 {
        let q = 2u64.pow(n);
        let g = shape_with_break(2, n, (1 + q) as u32)?;
        let c = jacobian_conductors(2, n, &g)?;
        println!(
            "q = {q}: g = {}, f(Jac/K) = {} + {} = {}, sw over Q_2^ur = {}",
            c.genus, c.epsilon, c.swan, c.conductor, c.swan_base
        );
    }
    Ok(())
}
