//! Lower and upper bounds, infiniteness certificates and the 2-core bound.

use multires::bounds::{lower_bounds, maxsubgraph_bound};
use multires::generators::gen;
use multires::solver::{dimension, SolverOptions};
use multires::{Caps, Variant};

fn main() -> multires::Result<()> {
    for spec in ["wheel:6", "complete:5", "unicyclic:4/0=0,1,1", "gadget:6"] {
        let g = gen(spec)?;
        let report = lower_bounds(&g, &Caps { chromatic: 24, ..Caps::default() })?;
        println!("{spec}: diameter {}, omega {}, chi {}", report.diameter, report.omega, report.chi);
        for cert in &report.infinite {
            println!("  infinite: {}", cert.describe());
        }
        for vb in &report.variants {
            let upper = vb.upper.as_ref().map_or("-".to_string(), |b| b.value.to_string());
            println!("  {:<8} lower {:<3} upper {upper}", vb.variant.to_string(), vb.lower);
        }
        if g.edge_count() >= g.n() {
            let core = maxsubgraph_bound(&g)?;
            let core_graph = core.core.graph;
            let opts = SolverOptions::default();
            for v in [Variant::Lmd, Variant::LdimMs] {
                let (gv, cv) = (dimension(&g, v, &opts)?.value, dimension(&core_graph, v, &opts)?.value);
                println!("  2-core {v}: graph {gv}, core {cv}");
            }
        }
    }
    Ok(())
}
