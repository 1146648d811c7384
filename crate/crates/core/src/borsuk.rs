//! Near-antipodal sphere embeddings of family members, the regular-simplex
//! colouring of spheres, and modulus-conditional probes of candidate
//! antipodal maps `S^n -> S^(n-1)`.
//!
//! Two unrelated epsilons appear here. Inside [`embed_family`] the step angle
//! between levels is `pi / 2r`. Inside [`probe_map`] the output tolerance is
//! `1 / sqrt(n + 2)`.

use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_family, Graph, MycielskiSpec};
use crate::report::Report;

pub const UNIT_TOL: f64 = 1e-9;

pub fn norm(x: &[f64]) -> f64 {
    x.iter().map(|a| a * a).sum::<f64>().sqrt()
}

pub fn sum_norm(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x + y) * (x + y)).sum::<f64>().sqrt()
}

pub fn diff_norm(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn check_unit(x: &[f64]) -> Result<()> {
    let n = norm(x);
    if (n - 1.0).abs() > UNIT_TOL {
        return Err(Error::domain(format!("vector has norm {n}, expected 1")));
    }
    Ok(())
}

/// Defect of the odd cycle `C_(2r+1)` placed on the circle with step angle `2r pi / (2r+1)`.
pub fn base_defect(r: usize) -> f64 {
    2.0 * (PI / (4 * r + 2) as f64).sin()
}

/// Per-level `r` values giving an embedding into `S^n` with defect below `delta`.
///
/// Level `j` of `n` (counting the base as level 1) targets `delta / 2^(n-j)`.
/// Lifts use `r = max(2, ceil(2 pi / target))`, so each step angle is at most a
/// quarter of the target; the base uses the least `r >= 2` whose closed-form
/// defect is below its target.
pub fn choose_rs(n: usize, delta: f64) -> Result<MycielskiSpec> {
    if n == 0 {
        return Err(Error::domain("choose_rs needs n >= 1"));
    }
    if !(delta > 0.0 && delta < 2.0) {
        return Err(Error::domain(format!("delta must lie in (0, 2), got {delta}")));
    }
    let base_target = delta / 2f64.powi(n as i32 - 1);
    let mut r0 = 2;
    while base_defect(r0) >= base_target {
        r0 += 1;
    }
    let mut rs = vec![r0];
    for level in 1..n {
        let target = delta / 2f64.powi((n - 1 - level) as i32);
        rs.push(((2.0 * PI / target).ceil() as usize).max(2));
    }
    MycielskiSpec::new(rs)
}

/// A family member together with unit vectors in `R^(n+1)` for its vertices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbeddedGraph {
    pub n: usize,
    pub spec: MycielskiSpec,
    pub graph: Graph,
    pub coords: Vec<Vec<f64>>,
    pub defect: f64,
}

impl EmbeddedGraph {
    pub fn edge_sums(&self) -> impl Iterator<Item = f64> + '_ {
        self.graph
            .edges()
            .iter()
            .map(|&(u, v)| sum_norm(&self.coords[u], &self.coords[v]))
    }

    pub fn recompute_defect(&self) -> f64 {
        self.edge_sums().fold(0.0, f64::max)
    }

    /// Per-edge `u,v,sum_norm,diff_norm` rows with a header.
    pub fn edge_csv(&self) -> String {
        let mut out = String::from("u,v,sum_norm,diff_norm\n");
        for &(u, v) in self.graph.edges() {
            let (a, b) = (&self.coords[u], &self.coords[v]);
            writeln!(out, "{u},{v},{:.17e},{:.17e}", sum_norm(a, b), diff_norm(a, b)).unwrap();
        }
        out
    }
}

/// Walks a 2-regular connected graph from vertex 0, always to the smaller unvisited neighbour.
fn cycle_order(g: &Graph) -> Result<Vec<usize>> {
    if g.order() < 3 || (0..g.order()).any(|v| g.degree(v) != 2) || !g.is_connected() {
        return Err(Error::domain("base graph is not a cycle"));
    }
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    while order.len() < g.order() {
        let next = g.neighbours(cur).iter().copied().filter(|&w| w != prev).min().unwrap();
        order.push(next);
        prev = cur;
        cur = next;
    }
    Ok(order)
}

/// Places `build_family(spec)` on `S^n`, `n = spec.len()`.
pub fn embed_family(spec: &MycielskiSpec) -> Result<EmbeddedGraph> {
    let Some(&r0) = spec.rs.first() else {
        return Err(Error::domain("embedding needs a spec with at least one r"));
    };
    let mut graph = build_family(&MycielskiSpec::new(vec![r0])?)?;
    let order = cycle_order(&graph)?;
    let step = 2.0 * r0 as f64 * PI / (2 * r0 + 1) as f64;
    let mut coords = vec![Vec::new(); graph.order()];
    for (k, &v) in order.iter().enumerate() {
        let t = k as f64 * step;
        coords[v] = vec![t.cos(), t.sin()];
    }

    for &r in &spec.rs[1..] {
        let base = graph.order();
        let mut next = Vec::with_capacity(base * r + 1);
        for i in 0..r {
            let t = PI * i as f64 / (2 * r) as f64;
            let (c, s) = (t.cos(), t.sin());
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            for x in &coords {
                let mut y: Vec<f64> = x.iter().map(|a| a * c).collect();
                y.push(sign * s);
                next.push(y);
            }
        }
        let dim = coords[0].len() + 1;
        let mut apex = vec![0.0; dim];
        apex[dim - 1] = if r % 2 == 0 { 1.0 } else { -1.0 };
        next.push(apex);
        coords = next;
        graph = crate::graph::mycielski(&graph, r)?;
    }

    let mut e = EmbeddedGraph {
        n: spec.rs.len(),
        spec: spec.clone(),
        graph,
        coords,
        defect: 0.0,
    };
    e.defect = e.recompute_defect();
    Ok(e)
}

/// Unit norms, defect below `delta`, and Borsuk-graph membership at `sqrt(4 - delta^2)`.
pub fn verify_embedding(e: &EmbeddedGraph, delta: f64) -> Report {
    let mut r = Report::new("embedding");
    r.record(
        "shape",
        (e.coords.len() != e.graph.order() || e.coords.iter().any(|x| x.len() != e.n + 1))
            .then(|| format!("expected {} vectors in R^{}", e.graph.order(), e.n + 1)),
    );
    if !r.passed() {
        return r;
    }
    r.record(
        "unit-norms",
        e.coords
            .iter()
            .position(|x| (norm(x) - 1.0).abs() > UNIT_TOL)
            .map(|v| format!("vertex {} has norm {}", e.graph.name(v), norm(&e.coords[v]))),
    );
    let recomputed = e.recompute_defect();
    r.record(
        "stored-defect",
        ((recomputed - e.defect).abs() > 1e-12).then(|| format!("stored {} but recomputed {recomputed}", e.defect)),
    );
    let edges = e.graph.edges();
    r.record(
        "defect",
        edges
            .iter()
            .find(|&&(u, v)| sum_norm(&e.coords[u], &e.coords[v]) >= delta)
            .map(|&(u, v)| {
                format!(
                    "edge {{{}, {}}} has |f(u)+f(v)| = {} >= {delta}",
                    e.graph.name(u),
                    e.graph.name(v),
                    sum_norm(&e.coords[u], &e.coords[v])
                )
            }),
    );
    let threshold = (4.0 - delta * delta).max(0.0).sqrt();
    r.record(
        "borsuk-membership",
        edges
            .iter()
            .find(|&&(u, v)| diff_norm(&e.coords[u], &e.coords[v]) < threshold - UNIT_TOL)
            .map(|&(u, v)| {
                format!(
                    "edge {{{}, {}}} has |f(u)-f(v)| = {} < {threshold}",
                    e.graph.name(u),
                    e.graph.name(v),
                    diff_norm(&e.coords[u], &e.coords[v])
                )
            }),
    );
    r
}

/// Vertices of a regular simplex inscribed in the unit sphere of `R^d`: `d + 1` unit
/// vectors with pairwise inner product `-1/d`.
///
/// For `d = 1` these are `-1, +1`. For larger `d`, `w_1 = e_d` and the others are
/// `(sqrt(1 - 1/d^2) s_j, -1/d)` for the vertices `s_j` in dimension `d - 1`.
pub fn regular_simplex(d: usize) -> Vec<Vec<f64>> {
    assert!(d >= 1);
    if d == 1 {
        return vec![vec![-1.0], vec![1.0]];
    }
    let scale = (1.0 - 1.0 / (d * d) as f64).sqrt();
    let mut top = vec![0.0; d];
    top[d - 1] = 1.0;
    let mut out = vec![top];
    for s in regular_simplex(d - 1) {
        let mut w: Vec<f64> = s.iter().map(|a| a * scale).collect();
        w.push(-1.0 / d as f64);
        out.push(w);
    }
    out
}

/// Colour in `1..=len(x)+1` of the simplex vertex closest to `x`; ties go to the lower index.
pub fn simplex_colouring(x: &[f64]) -> Result<u32> {
    if x.is_empty() {
        return Err(Error::domain("simplex colouring needs a nonempty vector"));
    }
    check_unit(x)?;
    Ok(argmax_colour(&regular_simplex(x.len()), x))
}

fn argmax_colour(simplex: &[Vec<f64>], x: &[f64]) -> u32 {
    let vals: Vec<f64> = simplex.iter().map(|w| dot(w, x)).collect();
    let best = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    vals.iter().position(|&v| v >= best - TIE_TOL).unwrap() as u32 + 1
}

/// Inner products this close to the maximum count as ties.
pub const TIE_TOL: f64 = 1e-12;

/// Declared uniform-continuity modulus: `|x - y| < delta` implies `|m(x) - m(y)| < epsilon`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Modulus {
    pub epsilon: f64,
    pub delta: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MapKind {
    /// `S^1 -> S^0`: sign of the first coordinate, `+1` at ties.
    Sign,
    /// `S^n -> S^(n-1)`: drop the last coordinate and normalise; poles go to `(1, 0, ..)`.
    DropNormalize,
    /// Image of the nearest tabulated point, lowest index on ties.
    Tabulated { points: Vec<Vec<f64>>, images: Vec<Vec<f64>> },
}

/// A candidate antipodal map `S^n -> S^(n-1)` with its declared modulus.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CandidateMap {
    pub name: String,
    pub n: usize,
    pub kind: MapKind,
    pub modulus: Modulus,
}

/// On-disk tabulated map: `{points, images, modulus: {epsilon, delta}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TabulatedMapFile {
    pub points: Vec<Vec<f64>>,
    pub images: Vec<Vec<f64>>,
    pub modulus: Modulus,
}

pub const POLE_TOL: f64 = 1e-12;

impl CandidateMap {
    /// `sign` (only `n = 1`, default delta 0.1) or `drop-normalize` (default delta 0.5).
    pub fn builtin(name: &str, n: usize, delta: Option<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("candidate maps need n >= 1"));
        }
        let (kind, default_delta) = match name {
            "sign" if n == 1 => (MapKind::Sign, 0.1),
            "sign" => return Err(Error::domain("the sign map is defined on S^1 only")),
            "drop-normalize" => (MapKind::DropNormalize, 0.5),
            other => return Err(Error::domain(format!("unknown built-in map {other:?}"))),
        };
        Ok(CandidateMap {
            name: name.to_string(),
            n,
            kind,
            modulus: Modulus {
                epsilon: 2.0 * probe_epsilon(n),
                delta: delta.unwrap_or(default_delta),
            },
        })
    }

    pub fn tabulated(name: impl Into<String>, file: TabulatedMapFile) -> Result<Self> {
        let TabulatedMapFile { points, images, modulus } = file;
        let Some(first) = points.first() else {
            return Err(Error::domain("tabulated map has no points"));
        };
        let n = first.len().checked_sub(1).filter(|&n| n >= 1).ok_or_else(|| Error::domain("points must lie in R^(n+1), n >= 1"))?;
        if points.len() != images.len() {
            return Err(Error::domain(format!("{} points but {} images", points.len(), images.len())));
        }
        for p in &points {
            if p.len() != n + 1 {
                return Err(Error::domain("points have mixed dimensions"));
            }
            check_unit(p)?;
        }
        for y in &images {
            if y.len() != n {
                return Err(Error::domain(format!("images must lie in R^{n}")));
            }
            check_unit(y)?;
        }
        if !(modulus.delta > 0.0 && modulus.epsilon > 0.0) {
            return Err(Error::domain("modulus needs positive epsilon and delta"));
        }
        Ok(CandidateMap {
            name: name.into(),
            n,
            kind: MapKind::Tabulated { points, images },
            modulus,
        })
    }

    /// Evaluates the map; the output is checked to be a unit vector.
    pub fn eval(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n + 1 {
            return Err(Error::domain(format!("map on S^{} got a vector of length {}", self.n, x.len())));
        }
        let y = match &self.kind {
            MapKind::Sign => vec![if x[0] >= 0.0 { 1.0 } else { -1.0 }],
            MapKind::DropNormalize => {
                let head = &x[..self.n];
                let len = norm(head);
                if len <= POLE_TOL {
                    let mut y = vec![0.0; self.n];
                    y[0] = 1.0;
                    y
                } else {
                    head.iter().map(|a| a / len).collect()
                }
            }
            MapKind::Tabulated { points, images } => {
                let mut best = 0;
                let mut best_val = f64::NEG_INFINITY;
                for (j, p) in points.iter().enumerate() {
                    let val = dot(p, x);
                    if val > best_val {
                        best = j;
                        best_val = val;
                    }
                }
                images[best].clone()
            }
        };
        check_unit(&y)?;
        Ok(y)
    }
}

/// `1 / sqrt(n + 2)`.
pub fn probe_epsilon(n: usize) -> f64 {
    1.0 / ((n + 2) as f64).sqrt()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Violation {
    /// `m(-x) != -m(x)` at an endpoint.
    Antipodality,
    /// Inputs closer than the declared delta, outputs at least the declared epsilon apart.
    Continuity,
    /// Same-coloured outputs farther apart than the colour cells allow.
    CellDiameter,
}

/// A monochromatic edge of the embedded graph under `simplex_colouring(m(g(.)))` and the
/// inequality it breaks. The verdict holds only under the map's declared modulus.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub map: String,
    pub n: usize,
    pub epsilon: f64,
    pub modulus: Modulus,
    pub spec: MycielskiSpec,
    pub graph_order: usize,
    pub edge: (usize, usize),
    pub edge_names: (String, String),
    pub colour: u32,
    pub points: (Vec<f64>, Vec<f64>),
    pub values: (Vec<f64>, Vec<f64>),
    pub sum_norm: f64,
    pub diff_norm: f64,
    pub violation: Violation,
    /// How far past the broken inequality the measurement lies.
    pub margin: f64,
    pub detail: String,
}

/// Refutes `m` as a continuous antipodal map with its declared modulus.
pub fn probe_map(m: &CandidateMap, n: usize) -> Result<ProbeReport> {
    if n == 0 || m.n != n {
        return Err(Error::domain(format!("map {} is declared on S^{}, probe asked for S^{n}", m.name, m.n)));
    }
    let eps = probe_epsilon(n);
    if m.modulus.epsilon > 2.0 * eps + 1e-15 {
        return Err(Error::domain(format!(
            "declared modulus bounds outputs by {}, the probe needs {}",
            m.modulus.epsilon,
            2.0 * eps
        )));
    }
    let delta = m.modulus.delta.min(2.0 - 1e-9);
    let spec = choose_rs(n, delta)?;
    let e = embed_family(&spec)?;
    let report = verify_embedding(&e, delta);
    if !report.passed() {
        return Err(Error::contract("embedding misses its target defect", report));
    }

    let simplex = regular_simplex(n);
    let values = e.coords.iter().map(|x| m.eval(x)).collect::<Result<Vec<_>>>()?;
    let colours: Vec<u32> = values.iter().map(|y| argmax_colour(&simplex, y)).collect();
    let Some(&(u, v)) = e.graph.edges().iter().find(|&&(u, v)| colours[u] == colours[v]) else {
        return Err(Error::TheoremViolation(format!(
            "no monochromatic edge in an ({})-colouring of build_family({spec}) ({} vertices)",
            n + 1,
            e.graph.order()
        )));
    };

    let (gu, gv) = (&e.coords[u], &e.coords[v]);
    let (fu, fv) = (&values[u], &values[v]);
    let neg = |x: &[f64]| x.iter().map(|a| -a).collect::<Vec<f64>>();
    let f_neg_v = m.eval(&neg(gv))?;
    let f_neg_u = m.eval(&neg(gu))?;

    let anti_v = sum_norm(&f_neg_v, fv);
    let anti_u = sum_norm(&f_neg_u, fu);
    let cont = diff_norm(fu, &f_neg_v);
    let dist = diff_norm(fu, fv);
    let cell_bound = 2.0 * (1.0 - eps * eps).sqrt();

    let (violation, margin, detail) = if anti_v.max(anti_u) > UNIT_TOL {
        let (x, a) = if anti_v >= anti_u { (e.graph.name(v), anti_v) } else { (e.graph.name(u), anti_u) };
        (Violation::Antipodality, a, format!("|m(-g({x})) + m(g({x}))| = {a}, expected 0"))
    } else if cont >= m.modulus.epsilon {
        (
            Violation::Continuity,
            cont - m.modulus.epsilon,
            format!(
                "|g(u) - (-g(v))| = {} < delta = {delta}, but |m(g(u)) - m(-g(v))| = {cont} >= {}",
                sum_norm(gu, gv),
                m.modulus.epsilon
            ),
        )
    } else {
        (
            Violation::CellDiameter,
            dist - cell_bound,
            format!("colour {} holds outputs {dist} apart; cells have diameter at most {cell_bound}", colours[u]),
        )
    };

    Ok(ProbeReport {
        map: m.name.clone(),
        n,
        epsilon: eps,
        modulus: Modulus { epsilon: m.modulus.epsilon, delta },
        spec,
        graph_order: e.graph.order(),
        edge: (u, v),
        edge_names: (e.graph.name(u).to_string(), e.graph.name(v).to_string()),
        colour: colours[u],
        points: (gu.clone(), gv.clone()),
        values: (fu.clone(), fv.clone()),
        sum_norm: sum_norm(fu, fv),
        diff_norm: dist,
        violation,
        margin,
        detail,
    })
}
