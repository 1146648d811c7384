//! Refutes 3-colourings of M_3(C_5) through balanced edges on its sphere model.
//!
//! cargo run --release --example refute_colourings

use mycielski::chromatic::KColouring;
use mycielski::fan::refute_colouring;
use mycielski::lift::sphere_model;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> mycielski::Result<()> {
    let model = sphere_model(&"2,3".parse()?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..5 {
        let c = KColouring::new((0..model.graph.order()).map(|_| rng.gen_range(1..=3)).collect(), 3)?;
        let cert = refute_colouring(&model.sphere, &c)?;
        let (u, v) = cert.g_edge;
        println!(
            "edge {{{}, {}}} has colour {} (lifted edge labels {:?}); certificate verifies: {}",
            model.graph.name(u),
            model.graph.name(v),
            cert.colour,
            cert.labels,
            cert.verify(&model.sphere, &c)?.passed()
        );
    }
    Ok(())
}
