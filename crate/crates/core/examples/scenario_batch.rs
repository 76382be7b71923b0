//! Runs a batch of scenarios in parallel and prints one summary line each.

use serde_json::json;
use wildmono::scenario::{run_batch, Scenario};

fn main() {
    let mut batch = Vec::new();
    for (n, u) in [
        (1, vec![0]),
        (1, vec![1]),
        (2, vec![0, 0]),
        (2, vec![0, 1]),
        (2, vec![1, 0]),
        (2, vec![1, 1]),
    ] {
        batch.push(Scenario::new(2, n, &u, json!(1)));
    }
    batch.push(Scenario::new(2, 2, &[1, 1], json!("lambda")));
    batch.push(Scenario::new(3, 1, &[1], json!(1)));
    for r in run_batch(&batch) {
        let s = &r.scenario;
        println!(
            "p = {}, n = {}, u = {:?}, c = {}: {:?}, f = {:?}, d(M/K) = {:?}, passed = {}",
            s.p,
            s.n,
            s.u,
            s.c,
            r.classification.unwrap(),
            r.summary.f,
            r.summary.d_mk,
            r.passed
        );
    }
}
