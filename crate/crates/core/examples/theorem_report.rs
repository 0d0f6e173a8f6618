//! Runs the full theorem suite and prints one line per claim.
//!
//! `cargo run --release --example theorem_report -- 4` runs with four threads.

use std::time::Instant;

use arclab::theorems::{run_all_with, Limits, Size};

fn main() {
    let jobs = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let start = Instant::now();
    let report = run_all_with(Limits::default(), 0, jobs);
    for c in &report.claims {
        let n = match c.n {
            Some(Size::One(n)) => n.to_string(),
            Some(Size::Two([m, n])) => format!("{m}x{n}"),
            None => "-".into(),
        };
        println!("{:<5} {:<28} {:<5} {}", format!("{:?}", c.status).to_lowercase(), c.claim, n, c.detail);
    }
    println!(
        "{} claims, {} failed, {:.1?}",
        report.claims.len(),
        report.failures().count(),
        start.elapsed()
    );
}
