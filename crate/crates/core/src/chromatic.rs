//! Exact chromatic numbers by DSATUR branch and bound, and colouring checks.
//!
//! `chi_exact` brackets the answer between a greedy clique and a greedy
//! DSATUR colouring, then settles each candidate palette size from the bottom
//! with an exhaustive DSATUR search. A palette that is refuted stays refuted,
//! so a timed-out run still reports valid bounds.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::Report;

pub const DEFAULT_CHI_CAP: usize = 64;

/// Assignment of colours `1..=palette` to every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KColouring {
    pub palette: u32,
    pub colours: Vec<u32>,
}

impl KColouring {
    pub fn new(colours: Vec<u32>, palette: u32) -> Result<Self> {
        let c = KColouring { palette, colours };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        match self.colours.iter().position(|&x| x == 0 || x > self.palette) {
            Some(v) => Err(Error::domain(format!(
                "vertex {v} has colour {} outside 1..={}",
                self.colours[v], self.palette
            ))),
            None => Ok(()),
        }
    }

    pub fn colour(&self, v: usize) -> u32 {
        self.colours[v]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Number of distinct colours actually used.
    pub fn used(&self) -> usize {
        let mut seen: Vec<u32> = self.colours.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// Edges of `g` whose endpoints share a colour, in canonical edge order.
/// Empty exactly when `c` is proper.
pub fn verify_colouring(g: &Graph, c: &KColouring) -> Result<Vec<(usize, usize)>> {
    if c.len() != g.order() {
        return Err(Error::domain(format!(
            "colouring covers {} vertices but the graph has {}",
            c.len(),
            g.order()
        )));
    }
    c.validate()?;
    Ok(g.edges().iter().copied().filter(|&(a, b)| c.colour(a) == c.colour(b)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LowerBoundWitness {
    /// A clique of size `chi`.
    Clique { vertices: Vec<usize> },
    /// Exhaustive search found no proper colouring with `colours` colours.
    Exhaustion { colours: u32, nodes: u64 },
    /// Graphs with no vertices or no edges.
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticCertificate {
    pub chi: u32,
    pub optimal_colouring: KColouring,
    pub lower_bound_witness: LowerBoundWitness,
    pub method: String,
    pub nodes: u64,
    /// Wall-clock milliseconds; excluded from determinism comparisons.
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ChiOutcome {
    Exact(ChromaticCertificate),
    /// The budget ran out; `lower <= chi <= upper` still holds.
    Inconclusive {
        lower: u32,
        upper: u32,
        best_colouring: KColouring,
        nodes: u64,
        elapsed_ms: u64,
    },
}

impl ChiOutcome {
    pub fn exact(&self) -> Option<&ChromaticCertificate> {
        match self {
            ChiOutcome::Exact(c) => Some(c),
            ChiOutcome::Inconclusive { .. } => None,
        }
    }

    pub fn bounds(&self) -> (u32, u32) {
        match self {
            ChiOutcome::Exact(c) => (c.chi, c.chi),
            ChiOutcome::Inconclusive { lower, upper, .. } => (*lower, *upper),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ChiConfig {
    pub budget: Duration,
    pub cap: usize,
}

impl Default for ChiConfig {
    fn default() -> Self {
        ChiConfig {
            budget: Duration::from_secs(60),
            cap: DEFAULT_CHI_CAP,
        }
    }
}

impl ChiConfig {
    pub fn with_budget(budget: Duration) -> Self {
        ChiConfig {
            budget,
            ..ChiConfig::default()
        }
    }
}

pub fn chi_exact(g: &Graph, config: &ChiConfig) -> Result<ChiOutcome> {
    if g.order() > config.cap {
        return Err(Error::SizeLimit {
            what: "graph",
            actual: g.order(),
            cap: config.cap,
        });
    }
    let start = Instant::now();
    let deadline = start + config.budget;
    let n = g.order();
    let method = "dsatur-branch-and-bound".to_string();

    if g.edge_count() == 0 {
        let chi = u32::from(n > 0);
        return Ok(ChiOutcome::Exact(ChromaticCertificate {
            chi,
            optimal_colouring: KColouring {
                palette: chi,
                colours: vec![1; n],
            },
            lower_bound_witness: LowerBoundWitness::Trivial,
            method,
            nodes: 0,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }));
    }

    let clique = greedy_clique(g);
    let mut lower = clique.len() as u32;
    let mut best = dsatur_greedy(g);
    let mut upper = best.palette;
    let mut nodes = 0u64;
    let mut exhaustion: Option<(u32, u64)> = None;

    while lower < upper {
        let mut search = Dsatur::new(g, lower, deadline);
        let found = search.run();
        nodes += search.nodes;
        match found {
            None => {
                return Ok(ChiOutcome::Inconclusive {
                    lower,
                    upper,
                    best_colouring: best,
                    nodes,
                    elapsed_ms: start.elapsed().as_millis() as u64,
                })
            }
            Some(true) => {
                best = KColouring {
                    palette: lower,
                    colours: search.colour,
                };
                upper = lower;
            }
            Some(false) => {
                exhaustion = Some((lower, search.nodes));
                lower += 1;
            }
        }
    }

    let chi = upper;
    let lower_bound_witness = if clique.len() as u32 == chi {
        LowerBoundWitness::Clique { vertices: clique }
    } else {
        let (colours, nodes) = exhaustion.expect("chi above the clique bound was reached by refuting chi - 1");
        LowerBoundWitness::Exhaustion { colours, nodes }
    };
    debug_assert!(verify_colouring(g, &best).map(|m| m.is_empty()).unwrap_or(false));
    Ok(ChiOutcome::Exact(ChromaticCertificate {
        chi,
        optimal_colouring: best,
        lower_bound_witness,
        method,
        nodes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }))
}

/// Re-checks a certificate: the colouring is proper with `chi` colours and the
/// lower-bound witness holds. Exhaustion witnesses are re-run within `budget`.
pub fn verify_certificate(g: &Graph, cert: &ChromaticCertificate, budget: Duration) -> Result<Report> {
    let mut r = Report::new("chi-certificate");
    let c = &cert.optimal_colouring;
    let mono = verify_colouring(g, c)?;
    r.record("proper", mono.first().map(|e| format!("edge {e:?} is monochromatic")));
    r.record(
        "palette",
        (c.palette != cert.chi || c.used() > cert.chi as usize)
            .then(|| format!("palette {} and {} colours used for chi = {}", c.palette, c.used(), cert.chi)),
    );
    let witness = match &cert.lower_bound_witness {
        LowerBoundWitness::Trivial => (g.edge_count() != 0 || cert.chi != u32::from(g.order() > 0))
            .then(|| "trivial witness on a graph with edges".to_string()),
        LowerBoundWitness::Clique { vertices } => {
            let pairwise = vertices
                .iter()
                .enumerate()
                .all(|(i, &a)| vertices[..i].iter().all(|&b| a < g.order() && b < g.order() && g.has_edge(a, b)));
            (!pairwise || vertices.len() as u32 != cert.chi).then(|| format!("{vertices:?} is not a clique of size {}", cert.chi))
        }
        LowerBoundWitness::Exhaustion { colours, .. } => {
            if *colours + 1 != cert.chi {
                Some(format!("exhaustion of {colours} colours does not bound chi = {}", cert.chi))
            } else {
                match is_colourable(g, *colours, budget) {
                    Some(None) => None,
                    Some(Some(_)) => Some(format!("graph is {colours}-colourable")),
                    None => Some(format!("re-running the {colours}-colour search timed out")),
                }
            }
        }
    };
    r.record("lower-bound", witness);
    Ok(r)
}

/// Exhaustive decision: is `g` properly `k`-colourable? `None` on timeout.
pub fn is_colourable(g: &Graph, k: u32, budget: Duration) -> Option<Option<KColouring>> {
    let mut search = Dsatur::new(g, k, Instant::now() + budget);
    search.run().map(|ok| {
        ok.then_some(KColouring {
            palette: k,
            colours: search.colour,
        })
    })
}

fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for v in 0..g.order() {
        let mut cand: Vec<usize> = g.neighbours(v).to_vec();
        cand.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
        let mut clique = vec![v];
        for w in cand {
            if clique.iter().all(|&x| g.has_edge(x, w)) {
                clique.push(w);
            }
        }
        if clique.len() > best.len() {
            clique.sort_unstable();
            best = clique;
        }
    }
    best
}

/// Vertex with the highest (saturation, degree), lowest index on ties.
fn pick(g: &Graph, colour: &[u32], sat_deg: &[u32]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for v in 0..g.order() {
        if colour[v] != 0 {
            continue;
        }
        best = match best {
            Some(b) if (sat_deg[v], g.degree(v)) <= (sat_deg[b], g.degree(b)) => Some(b),
            _ => Some(v),
        };
    }
    best
}

fn dsatur_greedy(g: &Graph) -> KColouring {
    let n = g.order();
    let mut colour = vec![0u32; n];
    let mut sat_deg = vec![0u32; n];
    let mut palette = 0;
    while let Some(v) = pick(g, &colour, &sat_deg) {
        let c = (1..)
            .find(|c| g.neighbours(v).iter().all(|&w| colour[w] != *c))
            .unwrap();
        colour[v] = c;
        palette = palette.max(c);
        for &w in g.neighbours(v) {
            if colour[w] == 0 {
                let seen = g.neighbours(w).iter().filter(|&&x| colour[x] == c).count();
                if seen == 1 {
                    sat_deg[w] += 1;
                }
            }
        }
    }
    KColouring { palette, colours: colour }
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: u32,
    colour: Vec<u32>,
    /// `counts[v * (k + 1) + c]`: neighbours of `v` currently coloured `c`.
    counts: Vec<u32>,
    sat_deg: Vec<u32>,
    nodes: u64,
    deadline: Instant,
    timed_out: bool,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, k: u32, deadline: Instant) -> Self {
        let n = g.order();
        Dsatur {
            g,
            k,
            colour: vec![0; n],
            counts: vec![0; n * (k as usize + 1)],
            sat_deg: vec![0; n],
            nodes: 0,
            deadline,
            timed_out: false,
        }
    }

    fn run(&mut self) -> Option<bool> {
        let ok = self.search(0, 0);
        if self.timed_out {
            None
        } else {
            Some(ok)
        }
    }

    fn assign(&mut self, v: usize, c: u32) {
        self.colour[v] = c;
        let stride = self.k as usize + 1;
        for &w in self.g.neighbours(v) {
            let slot = &mut self.counts[w * stride + c as usize];
            *slot += 1;
            if *slot == 1 {
                self.sat_deg[w] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: u32) {
        self.colour[v] = 0;
        let stride = self.k as usize + 1;
        for &w in self.g.neighbours(v) {
            let slot = &mut self.counts[w * stride + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.sat_deg[w] -= 1;
            }
        }
    }

    fn search(&mut self, coloured: usize, max_used: u32) -> bool {
        if coloured == self.g.order() {
            return true;
        }
        self.nodes += 1;
        if self.nodes & 0xfff == 0 && Instant::now() > self.deadline {
            self.timed_out = true;
        }
        if self.timed_out {
            return false;
        }
        let v = pick(self.g, &self.colour, &self.sat_deg).unwrap();
        let stride = self.k as usize + 1;
        // Colours above max_used + 1 are interchangeable with max_used + 1.
        for c in 1..=(max_used + 1).min(self.k) {
            if self.counts[v * stride + c as usize] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(coloured + 1, max_used.max(c)) {
                return true;
            }
            self.unassign(v, c);
            if self.timed_out {
                return false;
            }
        }
        false
    }
}
