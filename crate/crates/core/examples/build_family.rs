//! Builds generalised Mycielski graphs and a few family members.
//!
//! cargo run --example build_family -- 2,3

use mycielski::graph::{build_family, cycle, is_isomorphic, mycielski};
use mycielski::MycielskiSpec;

fn main() -> mycielski::Result<()> {
    let spec: MycielskiSpec = std::env::args().nth(1).unwrap_or_else(|| "2,3".into()).parse()?;
    let g = build_family(&spec)?;
    println!("build_family({spec}) is in M_{}: {} vertices, {} edges", spec.family_index(), g.order(), g.edge_count());
    let names: Vec<String> = g.names().iter().take(6).map(ToString::to_string).collect();
    println!("first vertex names: {}", names.join(", "));
    println!("apex: {}", g.name(g.order() - 1));

    let c5 = cycle(5)?;
    let grotzsch = mycielski(&c5, 2)?;
    println!("M_2(C_5) has {} vertices and {} edges", grotzsch.order(), grotzsch.edge_count());
    let same = is_isomorphic(&build_family(&"2,2".parse()?)?, &grotzsch)?.is_some();
    println!("build_family(2,2) is isomorphic to M_2(C_5): {same}");
    Ok(())
}
