//! The worked example `(p, n, u, c) = (2, 2, (1, 1), 1)` end to end: degree
//! of the monodromy extension, its filtration, differents and conductors.

use wildmono::scenario::verify_paper_example;

fn main() {
    let report = verify_paper_example(None);
    print!("{}", report.to_text());
    if !report.passed {
        std::process::exit(1);
    }
}
