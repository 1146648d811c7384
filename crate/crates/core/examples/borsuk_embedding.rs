//! Near-antipodal embeddings of family members into spheres.
//!
//! cargo run --release --example borsuk_embedding -- 2 0.1

use mycielski::borsuk::{choose_rs, embed_family, verify_embedding};

fn main() -> mycielski::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(2, |s| s.parse().expect("n"));
    let delta: f64 = args.next().map_or(0.1, |s| s.parse().expect("delta"));
    let spec = choose_rs(n, delta)?;
    let e = embed_family(&spec)?;
    println!("choose_rs({n}, {delta}) = {spec}: {} vertices on S^{n}", e.graph.order());
    println!("defect max |f(u) + f(v)| = {:.6}", e.defect);
    println!("{}", verify_embedding(&e, delta));
    Ok(())
}
