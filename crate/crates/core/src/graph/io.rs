use serde::{Deserialize, Serialize};

use super::{Graph, VertexName};
use crate::error::Result;

/// JSON form `{order, names, edges}` with edges sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub order: usize,
    pub names: Vec<VertexName>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            order: g.order(),
            names: g.names().to_vec(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl GraphJson {
    pub fn into_graph(self) -> Result<Graph> {
        if self.names.len() != self.order {
            return Err(crate::Error::Parse(format!(
                "graph declares order {} but lists {} names",
                self.order,
                self.names.len()
            )));
        }
        Graph::new(self.names, self.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_family;

    #[test]
    fn json_round_trip_of_m3_c5() {
        let g = build_family(&"2,3".parse().unwrap()).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn order_mismatch_rejected() {
        let bad = r#"{"order":3,"names":["a","b"],"edges":[[0,1]]}"#;
        assert!(serde_json::from_str::<Graph>(bad).is_err());
    }

    #[test]
    fn dot_lists_every_edge() {
        let g = crate::graph::cycle(5).unwrap();
        let dot = g.to_dot();
        assert_eq!(dot.matches(" -- ").count(), 5);
        assert!(dot.contains("0 -- 4;"));
    }
}
