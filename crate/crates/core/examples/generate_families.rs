//! Build graphs from family specs and print them as graph6 and edge lists.

use multires::generators::FamilySpec;
use multires::graph::to_graph6;

fn main() -> multires::Result<()> {
    let specs = [
        "path:4",
        "star:3",
        "wheel:5",
        "amal:2,3,4",
        "edge_amal:3,4",
        "corona:cycle:4/2,1,2,1",
        "join:path:2+cycle:4",
        "unicyclic:5/1=0/3=0,1",
        "gadget:5",
    ];
    for s in specs {
        let spec: FamilySpec = s.parse()?;
        let g = spec.generate()?;
        println!("{spec:<26} n={:<3} {}", g.n(), to_graph6(&g));
    }
    print!("{}", "edge_amal:2,3".parse::<FamilySpec>()?.generate()?.to_edge_list());
    Ok(())
}
