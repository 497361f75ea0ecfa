//! Search small graphs whose local multiset dimension meets the chromatic
//! lower bound g(d, chi) with chi >= 3.
//!
//! `cargo run --release --example chromatic_sharpness_search -- 6`

use multires::graph::to_graph6;
use multires::solver::SolverOptions;
use multires::verify::chromatic_sharpness_search;
use multires::Variant;

fn main() -> multires::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    for v in [Variant::Lmd, Variant::LdimMs] {
        let hits = chromatic_sharpness_search(3..=max, v, &SolverOptions::default())?;
        println!("{v}: {} graphs on <= {max} vertices attain the bound", hits.len());
        for (g, chi, bound) in hits.iter().take(8) {
            println!("  {} n={} chi={chi} value={bound}", to_graph6(g), g.n());
        }
    }
    Ok(())
}
