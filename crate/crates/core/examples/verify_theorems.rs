//! Run the closed-form and bound harness and summarise each verdict.
//!
//! `cargo run --release --example verify_theorems [-- theorem-id]`

use multires::solver::SolverOptions;
use multires::verify::{run_all, run_theorem, Outcome, VerifyParams};

fn main() -> multires::Result<()> {
    let checks = match std::env::args().nth(1) {
        Some(id) => vec![run_theorem(&id, &VerifyParams::default())?],
        None => run_all(&SolverOptions::default())?,
    };
    for c in &checks {
        println!(
            "{:<18} {:<8} {:?}: {} pass, {} discrepant, {} fail, {} skipped",
            c.id,
            c.range,
            c.verdict,
            c.count(Outcome::Pass),
            c.count(Outcome::Discrepant),
            c.count(Outcome::Fail),
            c.count(Outcome::Skipped)
        );
        for i in c.non_passing().take(3) {
            println!("    {} | {}: expected {}, computed {}", i.instance, i.claim, i.expected, i.computed);
        }
    }
    Ok(())
}
