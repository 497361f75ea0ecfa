//! Run structure of optimal landmark sets on wheel rims.

use multires::generators::gen;
use multires::solver::{dimension, SolverOptions};
use multires::verify::{wheel_complement_runs, wheel_path_structure};
use multires::Variant;

fn main() -> multires::Result<()> {
    let opts = SolverOptions::default();
    for n in 4..=12 {
        let g = gen(&format!("wheel:{n}"))?;
        let lmd = dimension(&g, Variant::Lmd, &opts)?;
        let ldms = dimension(&g, Variant::LdimMs, &opts)?;
        let lmd_ok = match &lmd.witness {
            Some(w) => wheel_path_structure(n, w, false)?.to_string(),
            None => "-".into(),
        };
        let w = ldms.witness.unwrap_or_default();
        println!(
            "W{n:<3} lmd {:<9} runs ok {lmd_ok:<6} ldim_ms {} W={w:?} landmark runs 1|3 {} free runs 1|3 {}",
            lmd.value.to_string(),
            ldms.value,
            wheel_path_structure(n, &w, true)?,
            wheel_complement_runs(n, &w)?
        );
    }
    Ok(())
}
