//! Check landmark sets and list the pairs they fail to separate.

use multires::generators::gen;
use multires::solver::{certify, Certificate};
use multires::Variant;

fn main() -> multires::Result<()> {
    let w4 = gen("wheel:4")?;
    for (w, v) in [(vec![0, 4], Variant::LdimMs), (vec![0], Variant::LdimMs), (vec![0, 1, 2], Variant::Lmd)] {
        match certify(&w4, &w, v)? {
            Certificate::Valid => println!("W4 {v} {w:?}: valid"),
            Certificate::Invalid { violating_pairs } => {
                println!("W4 {v} {w:?}: invalid, unresolved {violating_pairs:?}")
            }
        }
    }
    Ok(())
}
