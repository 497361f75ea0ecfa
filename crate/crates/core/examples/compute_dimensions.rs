//! Solve all six variants for a few named graphs.
//!
//! `cargo run --example compute_dimensions -- wheel:8 cycle:7`

use multires::generators::gen;
use multires::solver::{all_dimensions, SolverOptions};

fn main() -> multires::Result<()> {
    let mut specs: Vec<String> = std::env::args().skip(1).collect();
    if specs.is_empty() {
        specs = ["cycle:7", "wheel:8", "complete:4", "corona:path:3/2,2,2"].map(String::from).to_vec();
    }
    let opts = SolverOptions::default().with_shards(4);
    for spec in &specs {
        let g = gen(spec)?;
        println!("{spec} (n = {}, m = {})", g.n(), g.edge_count());
        for r in all_dimensions(&g, &opts)? {
            let witness = r.witness.map_or_else(|| "-".to_string(), |w| format!("{w:?}"));
            println!("  {:<8}{:>9}  {witness}", r.variant.to_string(), r.value.to_string());
        }
    }
    Ok(())
}
