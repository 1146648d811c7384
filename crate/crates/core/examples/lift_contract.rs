//! Lifts a coloured sphere and checks the quotient contract.
//!
//! cargo run --example lift_contract

use mycielski::graph::{complete, is_isomorphic};
use mycielski::lift::{check_lift, general_lift, suspension_lift, ColouredSphere};

fn main() -> mycielski::Result<()> {
    let circle = ColouredSphere::circle(2)?;
    for r in 1..=3 {
        let lifted = general_lift(&circle, r)?;
        let report = check_lift(&circle, &lifted, r)?;
        println!(
            "r = {r}: {} vertices, {} facets, contract holds: {}",
            lifted.complex.vertex_count(),
            lifted.complex.facets().len(),
            report.passed()
        );
    }
    let mut s = ColouredSphere::circle(1)?;
    for k in 4..=5 {
        s = suspension_lift(&s)?;
        let q = s.quotient()?.graph;
        println!("suspension on S^{}: quotient is K{k}: {}", s.dim(), is_isomorphic(&q, &complete(k)?)?.is_some());
    }
    Ok(())
}
