//! Counts positive alternating facets of random balanced-free labellings.
//!
//! cargo run --release --example fan_parity

use mycielski::fan::{parity_survey, positive_alternating_count, Labelling};
use mycielski::simplicial::cross_polytope;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> mycielski::Result<()> {
    let (octahedron, _) = cross_polytope(2)?;
    let lam = Labelling::new(vec![1, -1, 2, -2, 3, -3], 3)?;
    let (count, facets) = positive_alternating_count(&octahedron, &lam)?;
    let names: Vec<Vec<&str>> = facets.iter().map(|f| f.iter().map(|&v| octahedron.name(v)).collect()).collect();
    println!("octahedron with labels +-j on +-e_j: {count} positive alternating facet(s): {names:?}");

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 1..=4 {
        let (k, _) = cross_polytope(n)?;
        let survey = parity_survey(&k, 200, &mut rng)?;
        println!("S^{n}: {} of {} sampled labellings have an odd count", survey.odd, survey.samples);
    }
    Ok(())
}
