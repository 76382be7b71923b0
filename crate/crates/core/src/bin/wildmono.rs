use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use wildmono::scenario::{run_batch, verify_paper_example, Check, Report, Scenario};

/// Runs verification scenarios for lifts with maximal wild monodromy.
#[derive(Parser, Debug)]
#[command(version, about)]
struct Args {
    /// Scenario JSON file (an object or an array of objects); repeatable.
    #[arg(long)]
    scenario: Vec<PathBuf>,
    /// Restrict to these checks; repeatable.
    #[arg(long = "check", value_parser = parse_check)]
    checks: Vec<Check>,
    /// Working precision in p-adic digits of K (overrides the scenario).
    #[arg(long)]
    precision: Option<u32>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Run the canned worked example.
    #[arg(long)]
    paper_example: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_check(s: &str) -> Result<Check, String> {
    Check::parse(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let args = Args::parse();
    let start = Instant::now();
    let mut reports: Vec<Report> = Vec::new();
    if args.paper_example {
        reports.push(verify_paper_example(args.precision));
    }
    let mut scenarios = Vec::new();
    for path in &args.scenario {
        match Scenario::load(path) {
            Ok(s) => scenarios.extend(s),
            Err(e) => {
                eprintln!("{}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }
    if !args.paper_example && scenarios.is_empty() {
        eprintln!("nothing to do: pass --scenario <file> or --paper-example");
        return ExitCode::from(2);
    }
    for s in &mut scenarios {
        if args.precision.is_some() {
            s.precision = args.precision;
        }
        if !args.checks.is_empty() {
            s.checks = Some(args.checks.clone());
        }
    }
    reports.extend(run_batch(&scenarios));

    let text = if args.json {
        let v: Vec<&Report> = reports.iter().collect();
        let body = if v.len() == 1 {
            serde_json::to_string_pretty(v[0])
        } else {
            serde_json::to_string_pretty(&v)
        };
        body.expect("reports serialize") + "\n"
    } else {
        reports
            .iter()
            .map(Report::to_text)
            .collect::<Vec<_>>()
            .join("\n")
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("{}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    eprintln!("elapsed: {:.3?}", start.elapsed());
    if reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
