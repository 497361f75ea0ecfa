//! Graphs with three landmarks and arbitrarily large cliques.

use multires::bounds::lower_bounds;
use multires::generators::gen_clique_gadget;
use multires::graph::clique_number;
use multires::solver::certify;
use multires::{Caps, Variant};

fn main() -> multires::Result<()> {
    let caps = Caps { clique: 64, chromatic: 24, ..Caps::default() };
    for n in [3, 4, 6, 8] {
        let gad = gen_clique_gadget(n)?;
        let omega = clique_number(&gad.graph, &caps)?;
        let lmd = certify(&gad.graph, &gad.landmarks, Variant::Lmd)?.is_valid();
        let ldms = certify(&gad.graph, &gad.landmarks, Variant::LdimMs)?.is_valid();
        let lower = lower_bounds(&gad.graph, &caps).map(|r| r.lower(Variant::Lmd).to_string());
        println!(
            "n={n:<3} order {:<4} k={} omega={omega:<3} W={:?} lmd-valid={lmd} ldim_ms-valid={ldms} lower={}",
            gad.graph.n(),
            gad.k,
            gad.landmarks,
            lower.unwrap_or_else(|e| e.to_string())
        );
    }
    let gad = gen_clique_gadget(5)?;
    for &u in &gad.clique {
        println!("  clique vertex {u}: label {:?}", gad.label_of(u).unwrap_or(&[]));
    }
    Ok(())
}
