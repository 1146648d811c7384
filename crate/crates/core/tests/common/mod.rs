//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

use mycielski::graph::{build_family, complement, complete, cycle, mycielski as myc, Graph};
use mycielski::lift::{general_lift, sphere_model, suspension_lift, ColouredSphere};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Graphs of order at most 9: named classics plus seeded random graphs.
pub fn small_graphs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 3..=9 {
        out.push((format!("C{n}"), cycle(n).unwrap()));
    }
    for n in 1..=9 {
        out.push((format!("K{n}"), complete(n).unwrap()));
    }
    out.push(("complement C7".into(), complement(&cycle(7).unwrap())));
    out.push(("complement C9".into(), complement(&cycle(9).unwrap())));
    out.push(("M2(K3)".into(), myc(&complete(3).unwrap(), 2).unwrap()));
    out.push(("M1(C5)".into(), myc(&cycle(5).unwrap(), 1).unwrap()));
    out.push(("family 1,1".into(), build_family(&"1,1".parse().unwrap()).unwrap()));
    out.push(("empty 4".into(), Graph::with_indices(4, []).unwrap()));
    out.push(("K3,3".into(), Graph::with_indices(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()));
    // Moser spindle: unit-distance graph with chromatic number 4.
    out.push((
        "Moser spindle".into(),
        Graph::with_indices(7, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (4, 5), (4, 6), (5, 6), (3, 6)]).unwrap(),
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..60 {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.15..0.85);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        out.push((format!("random {i} (n = {n}, p = {p:.2})"), Graph::with_indices(n, edges).unwrap()));
    }
    out
}

/// Chromatic number by plain backtracking over colour assignments in vertex order.
pub fn brute_force_chi(g: &Graph) -> u32 {
    fn extend(g: &Graph, k: u32, colours: &mut Vec<u32>) -> bool {
        let v = colours.len();
        if v == g.order() {
            return true;
        }
        for c in 1..=k {
            if g.neighbours(v).iter().all(|&w| w >= v || colours[w] != c) {
                colours.push(c);
                if extend(g, k, colours) {
                    return true;
                }
                colours.pop();
            }
        }
        false
    }
    (0..=g.order() as u32)
        .find(|&k| extend(g, k, &mut Vec::new()))
        .unwrap()
}

/// Every coloured sphere the crate ships or derives in its pipelines.
pub fn coloured_spheres() -> Vec<(String, ColouredSphere)> {
    let mut out = Vec::new();
    for r in 1..=5 {
        let s = ColouredSphere::circle(r).unwrap();
        out.push((format!("suspension of circle {r}"), suspension_lift(&s).unwrap()));
        out.push((format!("circle {r}"), s));
    }
    let c2 = ColouredSphere::circle(2).unwrap();
    for r in 1..=3 {
        out.push((format!("circle 2 lifted by {r}"), general_lift(&c2, r).unwrap()));
    }
    for spec in ["2,3", "2,2", "1,1", "3,2", "2,2,2"] {
        out.push((format!("sphere model {spec}"), sphere_model(&spec.parse().unwrap()).unwrap().sphere));
    }
    out
}
