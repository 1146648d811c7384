//! Finite simple graphs, the generalised Mycielski construction and the
//! small utilities the rest of the crate leans on.

mod build;
mod io;
mod iso;
mod name;

pub use build::{build_family, complement, complete, cycle, double_cover, make_basic, mycielski, petersen, BasicKind};
pub use io::GraphJson;
pub use iso::{is_isomorphic, is_isomorphic_with_cap, verify_isomorphism, DEFAULT_ISO_CAP};
pub use name::VertexName;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple graph with structured vertex names.
///
/// Edges are stored as `(a, b)` with `a < b`, sorted lexicographically, so two
/// equal graphs serialize identically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<VertexName>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and bad endpoints.
    pub fn new(names: Vec<VertexName>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = names.len();
        let mut canon: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::domain(format!("edge ({a}, {b}) has an endpoint outside 0..{n}")));
            }
            if a == b {
                return Err(Error::domain(format!("self-loop at vertex {a}")));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::domain(format!("duplicate edge {:?}", w[0])));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &canon {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { names, edges: canon, adj })
    }

    /// Graph on `0..n` with `Base("0")..Base("n-1")` names.
    pub fn with_indices(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Graph::new((0..n).map(|i| VertexName::base(i.to_string())).collect(), edges)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn names(&self) -> &[VertexName] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &VertexName {
        &self.names[v]
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Same edge set with fresh names.
    pub fn renamed(&self, names: Vec<VertexName>) -> Result<Self> {
        if names.len() != self.order() {
            return Err(Error::domain("renaming must keep the vertex count"));
        }
        Ok(Graph {
            names,
            edges: self.edges.clone(),
            adj: self.adj.clone(),
        })
    }

    /// A proper 2-colouring (side per vertex) if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.order()];
        let mut stack = Vec::new();
        for s in 0..self.order() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            stack.push(s);
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for &w in &self.adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_connected(&self) -> bool {
        if self.order() == 0 {
            return true;
        }
        let mut seen = vec![false; self.order()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.order()
    }

    /// Graphviz rendering; labels are the vertex names.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for (v, name) in self.names.iter().enumerate() {
            out.push_str(&format!("  {v} [label={:?}];\n", name.to_string()));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  {a} -- {b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        GraphJson::deserialize(d)?
            .into_graph()
            .map_err(serde::de::Error::custom)
    }
}

/// Iteration parameters `r_1, ..., r_{k-2}` of a member of the family `M_k`.
/// The empty list is `K_2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MycielskiSpec {
    pub rs: Vec<usize>,
}

impl MycielskiSpec {
    pub fn new(rs: Vec<usize>) -> Result<Self> {
        if let Some(pos) = rs.iter().position(|&r| r == 0) {
            return Err(Error::domain(format!("r at position {pos} must be at least 1")));
        }
        Ok(MycielskiSpec { rs })
    }

    /// `k` such that the built graph lies in `M_k`.
    pub fn family_index(&self) -> usize {
        self.rs.len() + 2
    }

    pub fn then(&self, r: usize) -> Result<Self> {
        let mut rs = self.rs.clone();
        rs.push(r);
        MycielskiSpec::new(rs)
    }
}

impl fmt::Display for MycielskiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rs.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for MycielskiSpec {
    type Err = Error;

    /// Parses `"2,3"`; the empty string and `"[]"` mean `K_2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if s.is_empty() {
            return Ok(MycielskiSpec::default());
        }
        let rs = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad r value {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        MycielskiSpec::new(rs)
    }
}
