use super::{Graph, MycielskiSpec, VertexName};
use crate::error::{Error, Result};

/// Seed graphs accepted by [`make_basic`].
#[derive(Clone, Debug)]
pub enum BasicKind {
    Cycle(usize),
    Complete(usize),
    ComplementOf(Graph),
}

pub fn make_basic(kind: BasicKind) -> Result<Graph> {
    match kind {
        BasicKind::Cycle(n) => cycle(n),
        BasicKind::Complete(n) => complete(n),
        BasicKind::ComplementOf(g) => Ok(complement(&g)),
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::domain(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::with_indices(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::domain("complete graph needs at least one vertex"));
    }
    Graph::with_indices(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// Simple complement on the same vertex set and names.
pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| !g.has_edge(a, b));
    Graph::new(g.names().to_vec(), edges).expect("complement of a simple graph is simple")
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::with_indices(10, outer.chain(spokes).chain(inner).collect::<Vec<_>>()).unwrap()
}

/// The generalised Mycielski graph `M_r(G)`.
///
/// Vertex `(u, i)` gets index `i * |V| + u`; the apex `z` is last. Edges: the
/// level-0 copy of `E`, both cross edges `{(u,i),(v,i+1)}` and `{(v,i),(u,i+1)}`
/// for each `{u,v}` in `E` and `0 <= i <= r-2`, and `{(u,r-1), z}` for every `u`.
pub fn mycielski(g: &Graph, r: usize) -> Result<Graph> {
    if r < 1 {
        return Err(Error::domain("mycielski needs r >= 1"));
    }
    let n = g.order();
    let depth = g.names().iter().map(VertexName::max_apex_depth).max().unwrap_or(0) + 1;
    let mut names = Vec::with_capacity(r * n + 1);
    for i in 0..r {
        names.extend(g.names().iter().map(|u| VertexName::level(u, i)));
    }
    names.push(VertexName::Apex(depth));

    let at = |u: usize, i: usize| i * n + u;
    let z = r * n;
    let mut edges = Vec::with_capacity(g.edge_count() * (2 * r - 1) + n);
    edges.extend(g.edges().iter().copied());
    for i in 0..r - 1 {
        for &(u, v) in g.edges() {
            edges.push((at(u, i), at(v, i + 1)));
            edges.push((at(v, i), at(u, i + 1)));
        }
    }
    edges.extend((0..n).map(|u| (at(u, r - 1), z)));
    Graph::new(names, edges)
}

/// Folds [`mycielski`] over `spec.rs`, starting from `K_2`.
pub fn build_family(spec: &MycielskiSpec) -> Result<Graph> {
    spec.rs.iter().try_fold(complete(2)?, |g, &r| mycielski(&g, r))
}

/// Bipartite double cover: `(v,+)` has index `v`, `(v,-)` has index `|V| + v`.
pub fn double_cover(g: &Graph) -> Graph {
    let n = g.order();
    let names = g
        .names()
        .iter()
        .map(|v| VertexName::base(format!("{v}+")))
        .chain(g.names().iter().map(|v| VertexName::base(format!("{v}-"))))
        .collect();
    let edges = g.edges().iter().flat_map(|&(u, v)| [(u, n + v), (n + u, v)]);
    Graph::new(names, edges.collect::<Vec<_>>()).expect("double cover of a simple graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;
    use proptest::prelude::*;

    fn spec(s: &str) -> MycielskiSpec {
        s.parse().unwrap()
    }

    #[test]
    fn basic_graphs() {
        let c5 = make_basic(BasicKind::Cycle(5)).unwrap();
        assert_eq!((c5.order(), c5.edge_count()), (5, 5));
        let cc7 = make_basic(BasicKind::ComplementOf(cycle(7).unwrap())).unwrap();
        assert_eq!((cc7.order(), cc7.edge_count()), (7, 14));
        let k2 = make_basic(BasicKind::Complete(2)).unwrap();
        assert_eq!((k2.order(), k2.edges()), (2, &[(0, 1)][..]));
        assert!(make_basic(BasicKind::Cycle(2)).is_err());
        assert!(complete(0).is_err());
    }

    #[test]
    fn m2_of_k2_is_c5() {
        let g = mycielski(&complete(2).unwrap(), 2).unwrap();
        assert!(is_isomorphic(&g, &cycle(5).unwrap()).unwrap().is_some());
    }

    #[test]
    fn m3_of_c5() {
        let g = mycielski(&cycle(5).unwrap(), 3).unwrap();
        assert_eq!(g.order(), 16);
        // 5 level-0 edges, 2 * 5 cross edges per layer gap (2 gaps), 5 apex edges.
        assert_eq!(g.edge_count(), 5 + 20 + 5);
        let fam = build_family(&spec("2,3")).unwrap();
        assert!(is_isomorphic(&g, &fam).unwrap().is_some());
    }

    #[test]
    fn r_one_is_a_cone() {
        let c5 = cycle(5).unwrap();
        let g = mycielski(&c5, 1).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.degree(5), 5);
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn family_edge_cases() {
        assert_eq!(build_family(&spec("")).unwrap(), complete(2).unwrap());
        assert!(mycielski(&complete(2).unwrap(), 0).is_err());
    }

    #[test]
    fn grotzsch_by_enumeration() {
        // Independent enumeration of M_2(C_5) straight from the vertex-set definition.
        let g = build_family(&spec("2,2")).unwrap();
        assert_eq!(g.order(), 2 * 5 + 1);
        let c5: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let adjacent = |a: usize, b: usize| c5.contains(&(a, b)) || c5.contains(&(b, a));
        let mut count = 0;
        for x in 0..11 {
            for y in x + 1..11 {
                let (lx, ux) = (x / 5, x % 5);
                let (ly, uy) = (y / 5, y % 5);
                let e = match (x == 10, y == 10) {
                    (_, true) => lx == 1,
                    _ => (lx == 0 && ly == 0 && adjacent(ux, uy)) || (lx != ly && adjacent(ux, uy)),
                };
                if e {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 20);
        let c5_graph = cycle(5).unwrap();
        let classic = mycielski(&c5_graph, 2).unwrap();
        assert!(is_isomorphic(&g, &classic).unwrap().is_some());
        assert_eq!(g.edge_count(), count);
    }

    #[test]
    fn m2_matches_classical_definition_exactly() {
        // Classical M_2 over (u,0),(u,1),z: {(u,0),(v,0)}, {(u,0),(v,1)}, {(u,1),z}.
        for g in [cycle(5).unwrap(), petersen(), complement(&cycle(7).unwrap())] {
            let n = g.order();
            let mut classic: Vec<(usize, usize)> = Vec::new();
            for &(u, v) in g.edges() {
                classic.push((u, v));
                classic.push((u, n + v));
                classic.push((v, n + u));
            }
            classic.extend((0..n).map(|u| (n + u, 2 * n)));
            let classic = Graph::with_indices(2 * n + 1, classic).unwrap();
            assert_eq!(mycielski(&g, 2).unwrap().edges(), classic.edges());
        }
    }

    #[test]
    fn names_trace_provenance() {
        let g = build_family(&spec("2,3")).unwrap();
        let labels: Vec<String> = g.names().iter().map(ToString::to_string).collect();
        assert!(labels.contains(&"(0.1).2".to_string()));
        assert!(labels.contains(&"z^1.0".to_string()));
        assert_eq!(labels.last().unwrap(), "z^2");
    }

    #[test]
    fn double_covers() {
        let c10 = double_cover(&cycle(5).unwrap());
        assert!(is_isomorphic(&c10, &cycle(10).unwrap()).unwrap().is_some());
        let k2 = double_cover(&complete(2).unwrap());
        assert_eq!(k2.edges(), &[(0, 3), (1, 2)]);
        let k3 = double_cover(&complete(3).unwrap());
        assert!(is_isomorphic(&k3, &cycle(6).unwrap()).unwrap().is_some());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
                Graph::with_indices(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect::<Vec<_>>())
                    .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn mycielski_counts(g in arb_graph(8), r in 1usize..5) {
            let m = mycielski(&g, r).unwrap();
            let (v, e) = (g.order(), g.edge_count());
            prop_assert_eq!(m.order(), r * v + 1);
            prop_assert_eq!(m.edge_count(), e + 2 * e * (r - 1) + v);
        }

        #[test]
        fn double_cover_is_bipartite(g in arb_graph(9)) {
            let d = double_cover(&g);
            prop_assert!(d.is_bipartite());
            prop_assert_eq!(d.edge_count(), 2 * g.edge_count());
        }
    }
}
