//! Antisymmetric labellings of symmetric spheres: alternating-facet counts,
//! balanced edges, and the refutation of `(n+1)`-colourings of a sphere
//! model's quotient graph.
//!
//! A labelling maps vertices to nonzero integers with `lambda(nu(v)) = -lambda(v)`.
//! A facet is positive alternating when its labels, sorted by magnitude, have
//! strictly increasing magnitudes and signs `+, -, +, ...`. An edge is balanced
//! when its labels sum to zero. On a sphere aligned with hemispheres, a
//! labelling in `±{1..k}` without balanced edges has an odd number of positive
//! alternating facets, and so needs `k >= n + 1`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::chromatic::{verify_colouring, KColouring};
use crate::error::{Error, Result};
use crate::lift::ColouredSphere;
use crate::report::Report;
use crate::simplicial::{quotient_graph, Colour, ComplexFile, Simplex, SymmetricComplex, TwoColouring};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labelling {
    pub k: u32,
    pub labels: Vec<i32>,
}

impl Labelling {
    /// Checks nonzero labels with magnitude at most `k`.
    pub fn new(labels: Vec<i32>, k: u32) -> Result<Self> {
        if let Some(v) = labels.iter().position(|&l| l == 0 || l.unsigned_abs() > k) {
            return Err(Error::domain(format!("label {} at vertex {v} is not in ±{{1..{k}}}", labels[v])));
        }
        Ok(Labelling { k, labels })
    }

    pub fn label(&self, v: usize) -> i32 {
        self.labels[v]
    }

    /// Full validity on `complex`: coverage, range, antisymmetry.
    pub fn check_on(&self, complex: &SymmetricComplex) -> Result<()> {
        if self.labels.len() != complex.vertex_count() {
            return Err(Error::domain(format!(
                "labelling has {} labels for {} vertices",
                self.labels.len(),
                complex.vertex_count()
            )));
        }
        Labelling::new(self.labels.clone(), self.k)?;
        match (0..self.labels.len()).find(|&v| self.labels[complex.nu(v)] != -self.labels[v]) {
            Some(v) => Err(Error::domain(format!(
                "labelling is not antisymmetric at {} ({} vs {})",
                complex.name(v),
                self.labels[v],
                self.labels[complex.nu(v)]
            ))),
            None => Ok(()),
        }
    }

    pub fn negated(&self) -> Labelling {
        Labelling {
            k: self.k,
            labels: self.labels.iter().map(|l| -l).collect(),
        }
    }

    /// Number of distinct magnitudes used.
    pub fn magnitudes_used(&self) -> usize {
        let mut m: Vec<u32> = self.labels.iter().map(|l| l.unsigned_abs()).collect();
        m.sort_unstable();
        m.dedup();
        m.len()
    }
}

/// `mu(v) = (-1)^|lambda(v)| * lambda(v)`.
pub fn mu_transform(lam: &Labelling) -> Labelling {
    Labelling {
        k: lam.k,
        labels: lam
            .labels
            .iter()
            .map(|&l| if l.unsigned_abs() % 2 == 1 { -l } else { l })
            .collect(),
    }
}

/// Which sign the smallest magnitude must carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leading {
    Positive,
    Negative,
}

/// Strictly increasing magnitudes with alternating signs starting at `leading`.
pub fn is_alternating(labels: &[i32], leading: Leading) -> bool {
    let mut sorted = labels.to_vec();
    sorted.sort_by_key(|l| l.unsigned_abs());
    let first_positive = leading == Leading::Positive;
    sorted.windows(2).all(|w| w[0].unsigned_abs() < w[1].unsigned_abs())
        && sorted
            .iter()
            .enumerate()
            .all(|(i, &l)| (l > 0) == ((i % 2 == 0) == first_positive))
}

pub fn alternating_facets(complex: &SymmetricComplex, lam: &Labelling, leading: Leading) -> Result<Vec<Simplex>> {
    lam.check_on(complex)?;
    Ok(complex
        .facets()
        .iter()
        .filter(|f| {
            let labels: Vec<i32> = f.iter().map(|&v| lam.label(v)).collect();
            is_alternating(&labels, leading)
        })
        .cloned()
        .collect())
}

/// Count and list of positive alternating facets.
pub fn positive_alternating_count(complex: &SymmetricComplex, lam: &Labelling) -> Result<(usize, Vec<Simplex>)> {
    let facets = alternating_facets(complex, lam, Leading::Positive)?;
    Ok((facets.len(), facets))
}

/// First edge (in canonical order) with `lambda(u) + lambda(v) = 0`.
pub fn find_balanced_edge(complex: &SymmetricComplex, lam: &Labelling) -> Option<(usize, usize)> {
    complex.edges().into_iter().find(|&(a, b)| lam.label(a) + lam.label(b) == 0)
}

/// `lambda(v) = +c(p(v))` for black `v` and `-c(p(v))` for white `v`.
pub fn labelling_from_colouring(
    complex: &SymmetricComplex,
    kappa: &TwoColouring,
    c: &KColouring,
    projection: &[usize],
) -> Result<Labelling> {
    if projection.len() != complex.vertex_count() {
        return Err(Error::domain("projection must cover every vertex of the complex"));
    }
    c.validate()?;
    let labels = (0..complex.vertex_count())
        .map(|v| {
            let colour = *c
                .colours
                .get(projection[v])
                .ok_or_else(|| Error::domain(format!("colouring misses quotient vertex {}", projection[v])))?;
            let colour = colour as i32;
            Ok(match kappa.colour(v) {
                Colour::Black => colour,
                Colour::White => -colour,
            })
        })
        .collect::<Result<Vec<i32>>>()?;
    Labelling::new(labels, c.palette)
}

/// A monochromatic edge of the quotient graph, traced back to a balanced edge of the sphere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonochromeEdgeCert {
    pub g_edge: (usize, usize),
    pub colour: u32,
    pub lifted_edge: (usize, usize),
    pub labels: (i32, i32),
}

impl MonochromeEdgeCert {
    /// Rechecks the certificate against the model and colouring it came from.
    pub fn verify(&self, sphere: &ColouredSphere, c: &KColouring) -> Result<Report> {
        let mut r = Report::new("certificate");
        let q = quotient_graph(&sphere.complex, &sphere.kappa)?;
        let lam = labelling_from_colouring(&sphere.complex, &sphere.kappa, c, &q.projection)?;
        let (u, v) = self.lifted_edge;
        r.record(
            "lifted-edge-in-complex",
            (u >= sphere.complex.vertex_count() || v >= sphere.complex.vertex_count() || !sphere.complex.contains(&[u.min(v), u.max(v)]))
                .then(|| format!("{:?} is not an edge", self.lifted_edge)),
        );
        if r.passed() {
            r.record(
                "labels",
                (self.labels != (lam.label(u), lam.label(v))).then(|| "stored labels differ from the recomputed labelling".to_string()),
            );
            r.record(
                "balanced",
                (self.labels.0 + self.labels.1 != 0).then(|| format!("labels {:?} do not cancel", self.labels)),
            );
            let (pu, pv) = (q.projection[u], q.projection[v]);
            r.record(
                "projection",
                ((pu.min(pv), pu.max(pv)) != self.g_edge).then(|| format!("p(lifted edge) = ({pu}, {pv})")),
            );
            let mono = verify_colouring(&q.graph, c)?;
            r.record(
                "monochromatic",
                (!mono.contains(&self.g_edge) || c.colour(self.g_edge.0) != self.colour)
                    .then(|| format!("{:?} is not a monochromatic edge of colour {}", self.g_edge, self.colour)),
            );
        }
        Ok(r)
    }
}

/// Refutes a colouring of `G(K, kappa)` with at most `dim(K) + 1` colours by
/// exhibiting a monochromatic edge through a balanced edge of the labelling.
///
/// A missing balanced edge on a verified input is reported as
/// [`Error::TheoremViolation`] carrying the complex, flag and labelling.
pub fn refute_colouring(sphere: &ColouredSphere, c: &KColouring) -> Result<MonochromeEdgeCert> {
    let report = sphere.verify();
    if !report.passed() {
        return Err(Error::contract("refute_colouring needs a verified coloured sphere", report));
    }
    let dim = sphere.dim() as u32;
    if c.palette > dim + 1 {
        return Err(Error::domain(format!(
            "palette {} exceeds dim + 1 = {} for this sphere",
            c.palette,
            dim + 1
        )));
    }
    let q = quotient_graph(&sphere.complex, &sphere.kappa)?;
    if c.len() != q.graph.order() {
        return Err(Error::domain(format!(
            "colouring covers {} vertices, the quotient graph has {}",
            c.len(),
            q.graph.order()
        )));
    }
    let lam = labelling_from_colouring(&sphere.complex, &sphere.kappa, c, &q.projection)?;
    let Some((u, v)) = find_balanced_edge(&sphere.complex, &lam) else {
        let file = ComplexFile::new(&sphere.complex, Some(&sphere.flag), Some(&sphere.kappa));
        return Err(Error::TheoremViolation(format!(
            "no balanced edge for an antisymmetric labelling with both signs on every facet; complex+flag = {}, labelling = {}",
            serde_json::to_string(&file)?,
            serde_json::to_string(&lam)?
        )));
    };
    let (pu, pv) = (q.projection[u], q.projection[v]);
    Ok(MonochromeEdgeCert {
        g_edge: (pu.min(pv), pu.max(pv)),
        colour: c.colour(pu),
        lifted_edge: (u, v),
        labels: (lam.label(u), lam.label(v)),
    })
}

pub const DEFAULT_MAX_RETRIES: u64 = 100_000;

/// Uniform antisymmetric labelling in `±{1..k}`.
pub fn random_labelling<R: Rng>(complex: &SymmetricComplex, k: u32, rng: &mut R) -> Labelling {
    let mut labels = vec![0i32; complex.vertex_count()];
    for v in 0..labels.len() {
        if labels[v] == 0 {
            let m = rng.gen_range(1..=k) as i32;
            let l = if rng.gen::<bool>() { m } else { -m };
            labels[v] = l;
            labels[complex.nu(v)] = -l;
        }
    }
    Labelling { k, labels }
}

/// Rejection-samples an antisymmetric labelling with no balanced edge.
pub fn sample_balanced_free<R: Rng>(
    complex: &SymmetricComplex,
    k: u32,
    rng: &mut R,
    max_retries: u64,
) -> Result<Labelling> {
    let edges = complex.edges();
    for _ in 0..max_retries {
        let lam = random_labelling(complex, k, rng);
        if edges.iter().all(|&(a, b)| lam.label(a) + lam.label(b) != 0) {
            return Ok(lam);
        }
    }
    Err(Error::SamplingExhausted { attempts: max_retries })
}

/// Outcome of a parity survey over sampled balanced-edge-free labellings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParitySurvey {
    pub samples: usize,
    pub odd: usize,
    /// Labellings with fewer than `dim + 1` magnitudes.
    pub short_palettes: usize,
    /// First even-count labelling, if any.
    pub counterexample: Option<Labelling>,
}

pub fn parity_survey<R: Rng>(complex: &SymmetricComplex, samples: usize, rng: &mut R) -> Result<ParitySurvey> {
    let k = complex.dim() as u32 + 1;
    let mut out = ParitySurvey::default();
    for _ in 0..samples {
        let lam = sample_balanced_free(complex, k, rng, DEFAULT_MAX_RETRIES)?;
        let (count, _) = positive_alternating_count(complex, &lam)?;
        out.samples += 1;
        if count % 2 == 1 {
            out.odd += 1;
        } else if out.counterexample.is_none() {
            out.counterexample = Some(lam.clone());
        }
        if lam.magnitudes_used() < k as usize {
            out.short_palettes += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lift::{general_lift, sphere_model, suspend};
    use crate::simplicial::{circle_complex, cross_polytope};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn octahedron_labels(sign: i32) -> Labelling {
        // Vertex 2j is +e_{j+1}, 2j+1 is -e_{j+1}.
        let labels = (0..6).map(|v| if v % 2 == 0 { sign * (v / 2 + 1) } else { -sign * (v / 2 + 1) }).collect();
        Labelling::new(labels, 3).unwrap()
    }

    #[test]
    fn mu_examples() {
        let m = |l: i32| mu_transform(&Labelling::new(vec![l], 3).unwrap()).labels[0];
        assert_eq!(m(1), -1);
        assert_eq!(m(-2), -2);
        assert_eq!(m(3), -3);
    }

    #[test]
    fn mu_is_an_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let (k, _) = cross_polytope(3).unwrap();
        for _ in 0..200 {
            let lam = random_labelling(&k, 6, &mut rng);
            let mu = mu_transform(&lam);
            mu.check_on(&k).unwrap();
            assert_eq!(mu_transform(&mu), lam);
            assert_eq!(find_balanced_edge(&k, &lam).is_some(), find_balanced_edge(&k, &mu).is_some());
        }
    }

    #[test]
    fn octahedron_counts_by_hand() {
        let (k, _) = cross_polytope(2).unwrap();
        // Hand oracle: the facet {+e1, -e2, +e3} is the only one labelled 1, -2, 3.
        let (count, facets) = positive_alternating_count(&k, &octahedron_labels(1)).unwrap();
        assert_eq!((count, facets), (1, vec![vec![0, 3, 4]]));
        // Global negation: {-e1, +e2, -e3} carries 1, -2, 3.
        let (count, facets) = positive_alternating_count(&k, &octahedron_labels(-1)).unwrap();
        assert_eq!((count, facets), (1, vec![vec![1, 2, 5]]));
    }

    #[test]
    fn c6_edge_scan() {
        let (k, _, _) = circle_complex(1).unwrap();
        let lam = Labelling::new(vec![1, 2, -1, -1, -2, 1], 2).unwrap();
        let (count, facets) = positive_alternating_count(&k, &lam).unwrap();
        assert_eq!((count, facets), (1, vec![vec![4, 5]]));
        assert_eq!(find_balanced_edge(&k, &lam), None);
    }

    #[test]
    fn balanced_edges() {
        let (k, _, _) = circle_complex(1).unwrap();
        let lam = Labelling::new(vec![1, 2, 1, -1, -2, -1], 2).unwrap();
        // {v2, v3} is balanced, but {v0, v5} comes first in canonical edge order.
        assert_eq!(find_balanced_edge(&k, &lam), Some((0, 5)));
        assert_eq!(lam.label(2) + lam.label(3), 0);
        let (oct, _) = cross_polytope(2).unwrap();
        assert_eq!(find_balanced_edge(&oct, &octahedron_labels(1)), None);
    }

    #[test]
    fn invalid_labellings() {
        assert!(Labelling::new(vec![0, 1], 2).is_err());
        assert!(Labelling::new(vec![3, 1], 2).is_err());
        let (k, _, _) = circle_complex(1).unwrap();
        let lam = Labelling::new(vec![1, 1, 1, 1, 1, 1], 2).unwrap();
        assert!(lam.check_on(&k).is_err());
        assert!(positive_alternating_count(&k, &lam).is_err());
    }

    #[test]
    fn labelling_from_colourings() {
        let (k, kappa, _) = circle_complex(1).unwrap();
        let q = quotient_graph(&k, &kappa).unwrap();
        let c = KColouring::new(vec![1, 1, 1], 1).unwrap();
        let lam = labelling_from_colouring(&k, &kappa, &c, &q.projection).unwrap();
        assert_eq!(lam.labels, vec![1, -1, 1, -1, 1, -1]);

        let (k, kappa, _) = circle_complex(2).unwrap();
        let q = quotient_graph(&k, &kappa).unwrap();
        // Find a proper 3-colouring of the quotient C_5 in its own vertex order.
        let c = crate::chromatic::chi_exact(&q.graph, &Default::default()).unwrap().exact().unwrap().optimal_colouring.clone();
        let lam = labelling_from_colouring(&k, &kappa, &c, &q.projection).unwrap();
        lam.check_on(&k).unwrap();
        assert_eq!(find_balanced_edge(&k, &lam), None);
        for v in 0..10 {
            assert_eq!(lam.label(v) > 0, v % 2 == 0);
        }

        let c = KColouring::new(vec![7; 5], 7).unwrap();
        let lam = labelling_from_colouring(&k, &kappa, &c, &q.projection).unwrap();
        assert!(lam.labels.iter().all(|l| l.abs() == 7));
        assert_eq!(find_balanced_edge(&k, &lam), Some(k.edges()[0]));

        let short = KColouring::new(vec![1, 2], 2).unwrap();
        assert!(labelling_from_colouring(&k, &kappa, &short, &q.projection).is_err());
    }

    #[test]
    fn refutes_two_colourings_of_odd_cycles() {
        let sphere = ColouredSphere::circle(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let c = KColouring::new((0..7).map(|_| rng.gen_range(1..=2)).collect(), 2).unwrap();
            let cert = refute_colouring(&sphere, &c).unwrap();
            assert!(cert.verify(&sphere, &c).unwrap().passed());
        }
    }

    #[test]
    fn palette_too_large_is_rejected() {
        let sphere = ColouredSphere::circle(2).unwrap();
        let c = KColouring::new(vec![1, 2, 1, 2, 3], 3).unwrap();
        assert!(matches!(refute_colouring(&sphere, &c), Err(Error::Domain(_))));
    }

    #[test]
    fn refutes_on_the_m3_c5_sphere() {
        let model = sphere_model(&"2,3".parse().unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let c = KColouring::new((0..16).map(|_| rng.gen_range(1..=3)).collect(), 3).unwrap();
            let cert = refute_colouring(&model.sphere, &c).unwrap();
            assert!(cert.verify(&model.sphere, &c).unwrap().passed());
        }
    }

    #[test]
    fn tampered_certificates_fail() {
        let sphere = ColouredSphere::circle(3).unwrap();
        let c = KColouring::new(vec![1, 2, 1, 2, 1, 2, 2], 2).unwrap();
        let cert = refute_colouring(&sphere, &c).unwrap();
        let mut bad = cert.clone();
        bad.labels.1 = -bad.labels.1;
        assert!(!bad.verify(&sphere, &c).unwrap().passed());
        let mut bad = cert.clone();
        bad.colour = 3 - cert.colour;
        assert!(!bad.verify(&sphere, &c).unwrap().passed());
    }

    #[test]
    fn negation_swaps_leading_sign() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let (k, _) = cross_polytope(3).unwrap();
        let lifted = general_lift(&ColouredSphere::circle(2).unwrap(), 2).unwrap();
        for complex in [&k, &lifted.complex] {
            for _ in 0..100 {
                let lam = random_labelling(complex, complex.dim() as u32 + 1, &mut rng);
                let pos = alternating_facets(complex, &lam, Leading::Positive).unwrap();
                let neg = alternating_facets(complex, &lam.negated(), Leading::Negative).unwrap();
                assert_eq!(pos, neg);
            }
        }
    }

    #[test]
    fn parity_on_small_spheres() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let (k, flag) = cross_polytope(2).unwrap();
        let (s, _) = suspend(&k, &flag).unwrap();
        for complex in [k, s, circle_complex(2).unwrap().0] {
            let survey = parity_survey(&complex, 100, &mut rng).unwrap();
            assert_eq!(survey.odd, 100);
            assert_eq!(survey.short_palettes, 0);
        }
    }

    #[test]
    fn sampling_gives_up_distinctly() {
        // With a single magnitude every edge of the octahedron joining non-antipodal
        // vertices of opposite sign is balanced, so no sample survives.
        let (k, _) = cross_polytope(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(
            sample_balanced_free(&k, 1, &mut rng, 1000),
            Err(Error::SamplingExhausted { attempts: 1000 })
        ));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(48))]

        #[test]
        fn parity_and_magnitude_bound(n in 1usize..=3, extra in 0u32..=2, seed in 0u64..1_000) {
            let (k, _) = cross_polytope(n).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let lam = sample_balanced_free(&k, n as u32 + 1 + extra, &mut rng, DEFAULT_MAX_RETRIES).unwrap();
            let (count, _) = positive_alternating_count(&k, &lam).unwrap();
            proptest::prop_assert_eq!(count % 2, 1);
            proptest::prop_assert!(lam.magnitudes_used() > n);
        }

        #[test]
        fn parity_on_circles(r in 1usize..=5, extra in 0u32..=3, seed in 0u64..1_000) {
            let (k, _, _) = circle_complex(r).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let lam = sample_balanced_free(&k, 2 + extra, &mut rng, DEFAULT_MAX_RETRIES).unwrap();
            let (count, _) = positive_alternating_count(&k, &lam).unwrap();
            proptest::prop_assert_eq!(count % 2, 1);
        }
    }
}
