//! Exact chromatic numbers with checkable certificates.
//!
//! cargo run --release --example chromatic_certificate

use std::time::Duration;

use mycielski::chromatic::{chi_exact, verify_certificate, ChiConfig};
use mycielski::graph::{build_family, complement, cycle, mycielski};

fn main() -> mycielski::Result<()> {
    let c7bar = complement(&cycle(7)?);
    let graphs = [
        ("complement of C7", c7bar.clone()),
        ("M_3(complement of C7)", mycielski(&c7bar, 3)?),
        ("build_family(2,2,2)", build_family(&"2,2,2".parse()?)?),
    ];
    for (name, g) in graphs {
        let outcome = chi_exact(&g, &ChiConfig::default())?;
        match outcome.exact() {
            Some(cert) => {
                let check = verify_certificate(&g, cert, Duration::from_secs(60))?;
                println!(
                    "{name}: chi = {} ({} vertices), lower bound {:?}, {} search nodes, re-verified: {}",
                    cert.chi,
                    g.order(),
                    cert.lower_bound_witness,
                    cert.nodes,
                    check.passed()
                );
            }
            None => println!("{name}: inconclusive, bounds {:?}", outcome.bounds()),
        }
    }
    Ok(())
}
