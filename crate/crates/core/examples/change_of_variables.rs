//! The `B_i` ladder and the congruences that put the curve into stable
//! form over `M`, followed by the root-distance computation.

use wildmono::monodromy::{
    attach_root, compute_step_iii, make_params, root_distance_report, verify_step_iv,
    verify_step_v, CoeffSpec,
};
use wildmono::padic::fmt_q;

fn main() -> wildmono::Result<()> {
    for (n, u) in [(1, vec![1]), (2, vec![1, 1])] {
        let params = make_params(2, n, &u, CoeffSpec::int(1))?;
        let m = attach_root(&params, None)?;
        let iii = compute_step_iii(&params, &m)?;
        let ladder: Vec<String> = iii.v_b.iter().map(fmt_q).collect();
        println!("n = {n}: v(B_0..B_n) = [{}]", ladder.join(", "));
        println!(
            "  B_n^q congruence slack {}, bridge slack {}",
            fmt_q(&iii.congruence.value),
            fmt_q(&iii.bridge.value)
        );
        let iv = verify_step_iv(&params, &m, &iii)?;
        let v = verify_step_v(&params, &m, &iii)?;
        println!(
            "  f(S+y) congruence slack {}; over M: {}",
            fmt_q(&iv.min_slack.value),
            fmt_q(&v.min_slack.value)
        );
        let d = root_distance_report(&params, &m)?;
        println!(
            "  v(disc L) = {}, pairwise root distance {}",
            fmt_q(&d.v_disc),
            fmt_q(&d.distance)
        );
    }
    Ok(())
}
