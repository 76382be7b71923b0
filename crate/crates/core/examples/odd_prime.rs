//! For odd `p` the break of `M/L` is only pinned to an arithmetic
//! progression; the run reports the family instead of a single filtration.

use serde_json::json;
use wildmono::scenario::{run_scenario, Check, Scenario};

fn main() {
    let mut s = Scenario::new(3, 1, &[1], json!(1));
    s.checks = Some(vec![
        Check::StepI,
        Check::StepA,
        Check::StepIv,
        Check::StepVii,
        Check::Filtration,
        Check::Conductor,
    ]);
    let r = run_scenario(&s);
    print!("{}", r.to_text());
    let fam = &r.check(Check::Filtration).unwrap().data;
    println!(
        "admissible breaks: start {}, step {}",
        fam["breaks"]["start"], fam["breaks"]["step"]
    );
}
