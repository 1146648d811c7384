//! Isomorphism testing for small graphs: joint colour refinement of both
//! graphs, then backtracking over refined classes in BFS order.

use std::collections::BTreeMap;

use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_ISO_CAP: usize = 200;

/// Returns a witness `map` (with `map[v]` the image in `h` of vertex `v` of `g`)
/// when the graphs are isomorphic, using the default order cap.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    is_isomorphic_with_cap(g, h, DEFAULT_ISO_CAP)
}

pub fn is_isomorphic_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<Option<Vec<usize>>> {
    for (what, x) in [("first graph", g), ("second graph", h)] {
        if x.order() > cap {
            return Err(Error::SizeLimit {
                what,
                actual: x.order(),
                cap,
            });
        }
    }
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let n = g.order();
    let (cg, ch) = refine(g, h);
    let mut hist_g = BTreeMap::new();
    let mut hist_h = BTreeMap::new();
    for v in 0..n {
        *hist_g.entry(cg[v]).or_insert(0usize) += 1;
        *hist_h.entry(ch[v]).or_insert(0usize) += 1;
    }
    if hist_g != hist_h {
        return Ok(None);
    }

    let order = search_order(g, &cg, &hist_g);
    let mut state = Search {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if state.extend(0) {
        debug_assert!(verify_isomorphism(g, h, &state.map));
        Ok(Some(state.map))
    } else {
        Ok(None)
    }
}

/// Checks a claimed isomorphism in `O(|V| + |E| log |E|)`.
pub fn verify_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if g.order() != h.order() || map.len() != g.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut seen = vec![false; h.order()];
    for &m in map {
        if m >= h.order() || seen[m] {
            return false;
        }
        seen[m] = true;
    }
    g.edges().iter().all(|&(a, b)| h.has_edge(map[a], map[b]))
}

/// Stable colouring of the disjoint union, so class ids are comparable across graphs.
fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.order();
    let mut cg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut ch: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut classes = count_distinct(&cg, &ch);
    loop {
        let sig = |x: &Graph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = x.neighbours(v).iter().map(|&w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sg: Vec<_> = (0..n).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..n).map(|v| sig(h, &ch, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(sh.iter()) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        cg = sg.iter().map(|s| ids[s]).collect();
        ch = sh.iter().map(|s| ids[s]).collect();
        let now = ids.len();
        if now == classes {
            return (cg, ch);
        }
        classes = now;
    }
}

fn count_distinct(a: &[usize], b: &[usize]) -> usize {
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// Rarest class first, then breadth-first so each new vertex touches mapped ones.
fn search_order(g: &Graph, colour: &[usize], hist: &BTreeMap<usize, usize>) -> Vec<usize> {
    let n = g.order();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (hist[&colour[v]], std::cmp::Reverse(g.degree(v)), v))
            .unwrap();
        placed[start] = true;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let v = order[head];
            head += 1;
            let mut next: Vec<usize> = g.neighbours(v).iter().copied().filter(|&w| !placed[w]).collect();
            next.sort_by_key(|&w| (hist[&colour[w]], w));
            for w in next {
                placed[w] = true;
                order.push(w);
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        // Restrict candidates to neighbours of an already-mapped neighbour's image when possible.
        let anchor = self.g.neighbours(v).iter().copied().find(|&w| self.map[w] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(w) => self.h.neighbours(self.map[w]).to_vec(),
            None => (0..self.h.order()).collect(),
        };
        for x in candidates {
            if self.used[x] || self.ch[x] != self.cg[v] || !self.consistent(v, x) {
                continue;
            }
            self.map[v] = x;
            self.used[x] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[v] = usize::MAX;
            self.used[x] = false;
        }
        false
    }

    fn consistent(&self, v: usize, x: usize) -> bool {
        let mut mapped_nbrs = 0;
        for &w in self.g.neighbours(v) {
            let m = self.map[w];
            if m != usize::MAX {
                if !self.h.has_edge(x, m) {
                    return false;
                }
                mapped_nbrs += 1;
            }
        }
        // Every mapped neighbour of x must come from a neighbour of v.
        let mapped_images = self.h.neighbours(x).iter().filter(|&&y| self.used[y]).count();
        mapped_images == mapped_nbrs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, complement, cycle, mycielski, petersen, VertexName};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn permuted(g: &Graph, perm: &[usize]) -> Graph {
        let mut names = vec![VertexName::base(""); g.order()];
        for v in 0..g.order() {
            names[perm[v]] = g.name(v).clone();
        }
        Graph::new(names, g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn c5_and_m2_k2() {
        let m = mycielski(&crate::graph::complete(2).unwrap(), 2).unwrap();
        let map = is_isomorphic(&cycle(5).unwrap(), &m).unwrap().unwrap();
        assert!(verify_isomorphism(&cycle(5).unwrap(), &m, &map));
    }

    #[test]
    fn different_orders() {
        assert!(is_isomorphic(&cycle(5).unwrap(), &cycle(6).unwrap()).unwrap().is_none());
    }

    #[test]
    fn petersen_under_random_relabelling() {
        let p = petersen();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut perm: Vec<usize> = (0..10).collect();
            perm.shuffle(&mut rng);
            let q = permuted(&p, &perm);
            let map = is_isomorphic(&p, &q).unwrap().unwrap();
            assert!(verify_isomorphism(&p, &q, &map));
        }
    }

    #[test]
    fn distinguishes_same_degree_sequences() {
        // C6 versus two triangles: both 2-regular on 6 vertices.
        let two_triangles = Graph::with_indices(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(is_isomorphic(&cycle(6).unwrap(), &two_triangles).unwrap().is_none());
        // Petersen versus the pentagonal prism: both cubic on 10 vertices.
        let prism = Graph::with_indices(
            10,
            (0..5)
                .map(|i| (i, (i + 1) % 5))
                .chain((0..5).map(|i| (5 + i, 5 + (i + 1) % 5)))
                .chain((0..5).map(|i| (i, i + 5)))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(is_isomorphic(&petersen(), &prism).unwrap().is_none());
    }

    #[test]
    fn larger_family_members() {
        let g = build_family(&"2,3,2".parse().unwrap()).unwrap();
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(3));
        let q = permuted(&g, &perm);
        assert!(is_isomorphic(&g, &q).unwrap().is_some());
        let other = build_family(&"1,5,2".parse().unwrap()).unwrap();
        assert_eq!(g.order(), other.order());
        // M_2(M_5(K_3)) keeps a triangle, M_2(M_3(C_5)) is triangle-free.
        assert!(is_isomorphic(&g, &other).unwrap().is_none());
    }

    #[test]
    fn size_cap() {
        let big = cycle(250).unwrap();
        assert!(matches!(is_isomorphic(&big, &big), Err(Error::SizeLimit { .. })));
        assert!(is_isomorphic_with_cap(&big, &big, 300).unwrap().is_some());
    }

    #[test]
    fn equivalence_on_fixture_set() {
        let set = vec![
            cycle(5).unwrap(),
            mycielski(&crate::graph::complete(2).unwrap(), 2).unwrap(),
            petersen(),
            complement(&cycle(7).unwrap()),
            cycle(7).unwrap(),
            build_family(&"2,2".parse().unwrap()).unwrap(),
        ];
        for a in &set {
            assert!(is_isomorphic(a, a).unwrap().is_some());
            for b in &set {
                let ab = is_isomorphic(a, b).unwrap().is_some();
                let ba = is_isomorphic(b, a).unwrap().is_some();
                assert_eq!(ab, ba);
            }
        }
    }
}
