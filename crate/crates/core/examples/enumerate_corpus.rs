//! Tabulate value distributions over every connected labelled graph on n
//! vertices.

use std::collections::BTreeMap;

use multires::generators::all_connected;
use multires::solver::{all_dimensions, SolverOptions};

fn main() -> multires::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let opts = SolverOptions::default();
    for n in 1..=max {
        let mut table: BTreeMap<(String, String), usize> = BTreeMap::new();
        let mut count = 0;
        for g in all_connected(n)? {
            count += 1;
            for r in all_dimensions(&g, &opts)? {
                *table.entry((r.variant.to_string(), r.value.to_string())).or_default() += 1;
            }
        }
        println!("n = {n}: {count} graphs");
        for ((variant, value), k) in table {
            println!("  {variant:<8} {value:>9}: {k}");
        }
    }
    Ok(())
}
