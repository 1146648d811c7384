//! Refutes candidate antipodal maps S^n -> S^(n-1) under declared moduli.
//!
//! cargo run --release --example probe_maps

use mycielski::borsuk::{probe_map, CandidateMap};

fn main() -> mycielski::Result<()> {
    for (name, n) in [("sign", 1), ("drop-normalize", 2), ("drop-normalize", 3)] {
        let m = CandidateMap::builtin(name, n, None)?;
        let p = probe_map(&m, n)?;
        println!(
            "{name} on S^{n} (declared delta {}): graph {} with {} vertices, edge {{{}, {}}} colour {}, {:?} margin {:.4}",
            p.modulus.delta, p.spec, p.graph_order, p.edge_names.0, p.edge_names.1, p.colour, p.violation, p.margin
        );
        println!("  {}", p.detail);
    }
    Ok(())
}
