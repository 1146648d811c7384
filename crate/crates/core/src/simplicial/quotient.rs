use serde::{Deserialize, Serialize};

use super::{verify_symmetric, verify_two_colouring, Colour, SymmetricComplex, TwoColouring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexName};

/// `G(K, kappa)` together with the projection from `K` and the cover `G~(K, kappa)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quotient {
    pub graph: Graph,
    /// `projection[v]` is the vertex of `graph` that `v` maps to.
    pub projection: Vec<usize>,
    /// The 1-skeleton of `K` without its monochromatic edges.
    pub cover: Graph,
}

/// Deletes monochromatic edges from the 1-skeleton and identifies antipodes.
///
/// Quotient vertices are numbered by the smallest `K`-vertex in their class
/// and named after the black member of the class.
pub fn quotient_graph(k: &SymmetricComplex, kappa: &TwoColouring) -> Result<Quotient> {
    let mut report = verify_symmetric(k);
    report.merge(verify_two_colouring(k, kappa));
    if !report.passed() {
        return Err(Error::contract("quotient_graph needs a symmetric complex with a proper antisymmetric 2-colouring", report));
    }

    let n = k.vertex_count();
    let mut projection = vec![usize::MAX; n];
    let mut names = Vec::with_capacity(n / 2);
    for v in 0..n {
        if projection[v] != usize::MAX {
            continue;
        }
        let id = names.len();
        projection[v] = id;
        projection[k.nu(v)] = id;
        let black = if kappa.colour(v) == Colour::Black { v } else { k.nu(v) };
        names.push(VertexName::base(k.name(black)));
    }

    let bichromatic: Vec<(usize, usize)> = k
        .edges()
        .into_iter()
        .filter(|&(a, b)| kappa.colour(a) != kappa.colour(b))
        .collect();
    let cover = Graph::new(k.names().iter().map(VertexName::base).collect(), bichromatic.iter().copied())?;

    let mut edges: Vec<(usize, usize)> = bichromatic
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (projection[a], projection[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let graph = Graph::new(names, edges)?;
    Ok(Quotient {
        graph,
        projection,
        cover,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, double_cover, is_isomorphic};
    use crate::simplicial::circle_complex;

    #[test]
    fn circle_quotients_are_odd_cycles() {
        for r in 1..=5 {
            let (k, kappa, _) = circle_complex(r).unwrap();
            let q = quotient_graph(&k, &kappa).unwrap();
            assert!(is_isomorphic(&q.graph, &cycle(2 * r + 1).unwrap()).unwrap().is_some());
            assert!(q.cover.is_bipartite());
            assert!(is_isomorphic(&double_cover(&q.graph), &q.cover).unwrap().is_some());
        }
    }

    #[test]
    fn c6_gives_a_triangle() {
        let (k, kappa, _) = circle_complex(1).unwrap();
        let q = quotient_graph(&k, &kappa).unwrap();
        assert!(is_isomorphic(&q.graph, &complete(3).unwrap()).unwrap().is_some());
        assert_eq!(q.projection, vec![0, 1, 2, 0, 1, 2]);
        let names: Vec<String> = q.graph.names().iter().map(ToString::to_string).collect();
        assert_eq!(names, vec!["v0", "v4", "v2"]);
    }

    #[test]
    fn each_edge_has_two_preimages() {
        let (k, kappa, _) = circle_complex(4).unwrap();
        let q = quotient_graph(&k, &kappa).unwrap();
        for &(x, y) in q.graph.edges() {
            let pre: Vec<(usize, usize)> = q
                .cover
                .edges()
                .iter()
                .copied()
                .filter(|&(a, b)| {
                    let (pa, pb) = (q.projection[a], q.projection[b]);
                    (pa.min(pb), pa.max(pb)) == (x, y)
                })
                .collect();
            assert_eq!(pre.len(), 2);
            let (a, b) = pre[0];
            let swapped = (k.nu(a).min(k.nu(b)), k.nu(a).max(k.nu(b)));
            assert_eq!(swapped, pre[1]);
        }
        for v in 0..q.graph.order() {
            assert_eq!(q.projection.iter().filter(|&&p| p == v).count(), 2);
        }
    }

    #[test]
    fn rejects_bad_colourings() {
        let (k, mut kappa, _) = circle_complex(2).unwrap();
        kappa.kappa[0] = Colour::White;
        match quotient_graph(&k, &kappa) {
            Err(Error::Contract { report, .. }) => assert!(report.failed("two-colouring/antisymmetric")),
            other => panic!("expected a contract error, got {other:?}"),
        }
    }
}
