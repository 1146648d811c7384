//! Lifting a coloured symmetric sphere one dimension up so that the antipodal
//! quotient graph becomes `M_r` of the old one, and sphere models of members
//! of the families `M_k` built by iterating the lift.
//!
//! # Construction
//!
//! The new sphere is `U ∪ nu'(U)` glued along the old sphere `K`, where `U` is
//! an `(n+1)`-ball with boundary `K`. `U` is grown from `K` by repeatedly
//! replacing a vertex `x` of the current top sphere with a fresh vertex `x'`
//! and adding the cone `x' * star(x)`; the top sphere stays isomorphic to `K`.
//!
//! Level `i` (for `1 <= i < r`) lifts every vertex of colour `c_i` (white for
//! odd `i`, black for even `i`) from level `max(i - 2, 0)` to level `i`, and a
//! final apex `z+` is coned over the top sphere. Lifted vertices keep their
//! colour, so:
//! - edges inside one level above 0 join equal colours and vanish from the quotient;
//! - edges between levels `i` and `i + 1` join `(u, i)` to `(w, i + 1)` exactly
//!   when `{u, w}` is an edge of `K` with opposite colours;
//! - `z+` takes the colour opposite to `c_{r-1}` and is bichromatic exactly to level `r - 1`.
//!
//! The antipode of `(v, i)` is `(nu(v), i)`, and `z+` swaps with `z-`.
//! `r = 1` is the suspension with `z+` black.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_family, is_isomorphic, mycielski, verify_isomorphism, Graph, MycielskiSpec};
use crate::report::Report;
use crate::simplicial::{
    circle_complex, quotient_graph, verify_flag, verify_sphere_necessary, verify_symmetric, verify_two_colouring,
    Colour, ComplexFile, HemisphereFlag, Quotient, Simplex, SymmetricComplex, TwoColouring,
};

/// A symmetric sphere with a proper antisymmetric 2-colouring and a hemisphere flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredSphere {
    pub complex: SymmetricComplex,
    pub kappa: TwoColouring,
    pub flag: HemisphereFlag,
}

impl ColouredSphere {
    pub fn circle(r: usize) -> Result<Self> {
        let (complex, kappa, flag) = circle_complex(r)?;
        Ok(ColouredSphere { complex, kappa, flag })
    }

    pub fn dim(&self) -> usize {
        self.complex.dim()
    }

    /// Every verifier: symmetry, sphere consistency, flag, colouring.
    pub fn verify(&self) -> Report {
        let mut r = Report::new("coloured-sphere");
        r.merge(verify_symmetric(&self.complex));
        r.merge(verify_sphere_necessary(&self.complex));
        r.merge(verify_flag(&self.complex, &self.flag));
        r.merge(verify_two_colouring(&self.complex, &self.kappa));
        r
    }

    pub fn quotient(&self) -> Result<Quotient> {
        quotient_graph(&self.complex, &self.kappa)
    }
}

fn apex_names(n: usize) -> (String, String) {
    (format!("z{}+", n + 1), format!("z{}-", n + 1))
}

/// Join of `k` with two antipodal apexes; `H_{n+1}` is the cone on `z+`.
/// Needs no colouring, so it also lifts cross-polytopes.
pub fn suspend(k: &SymmetricComplex, flag: &HemisphereFlag) -> Result<(SymmetricComplex, HemisphereFlag)> {
    let n = k.vertex_count();
    let (zp, zm) = (n, n + 1);
    let (np, nm) = apex_names(k.dim());
    let mut names = k.names().to_vec();
    names.extend([np, nm]);
    let mut nu = k.involution().to_vec();
    nu.extend([zm, zp]);
    let with = |z: usize| k.facets().iter().map(move |f| with_vertex(f, z));
    let upper: Vec<Simplex> = with(zp).collect();
    let facets = upper.iter().cloned().chain(with(zm)).collect();
    let complex = SymmetricComplex::new(names, nu, facets)?;
    let mut h = flag.h.clone();
    h.push(upper);
    Ok((complex, HemisphereFlag::new(h)))
}

fn with_vertex(f: &[usize], v: usize) -> Simplex {
    let mut s = f.to_vec();
    s.push(v);
    s.sort_unstable();
    s
}

fn require_valid(input: &ColouredSphere) -> Result<()> {
    let report = input.verify();
    if report.passed() {
        Ok(())
    } else {
        Err(Error::contract("lift input failed verification", report))
    }
}

/// `r = 1` lift: the suspension, with `z+` black and `z-` white.
pub fn suspension_lift(input: &ColouredSphere) -> Result<ColouredSphere> {
    require_valid(input)?;
    let (complex, flag) = suspend(&input.complex, &input.flag)?;
    let mut kappa = input.kappa.clone();
    kappa.kappa.extend([Colour::Black, Colour::White]);
    let out = ColouredSphere { complex, kappa, flag };
    enforce_contract(input, &out, 1)?;
    Ok(out)
}

fn level_colour(i: usize) -> Colour {
    if i % 2 == 1 {
        Colour::White
    } else {
        Colour::Black
    }
}

/// Lifts `(K, kappa, flag)` on `S^n` to `S^{n+1}` with quotient `M_r(G(K, kappa))`.
///
/// The output is verified before it is returned: all verifiers pass and the
/// quotient is isomorphic to `M_r` of the input quotient. Any failure is an error.
pub fn general_lift(input: &ColouredSphere, r: usize) -> Result<ColouredSphere> {
    if r < 1 {
        return Err(Error::domain("general_lift needs r >= 1"));
    }
    require_valid(input)?;
    let k = &input.complex;
    let n = k.vertex_count();
    let at = |v: usize, i: usize| i * n + v;
    let (zp, zm) = (r * n, r * n + 1);

    let mut names = Vec::with_capacity(r * n + 2);
    names.extend(k.names().iter().cloned());
    for i in 1..r {
        names.extend(k.names().iter().map(|s| format!("{s}.{i}")));
    }
    let (np, nm) = apex_names(k.dim());
    names.extend([np, nm]);

    let mut nu: Vec<usize> = (0..r).flat_map(|i| (0..n).map(move |v| at(k.nu(v), i))).collect();
    nu.extend([zm, zp]);

    let mut kappa: Vec<Colour> = (0..r).flat_map(|_| input.kappa.kappa.iter().copied()).collect();
    let top_colour = if r == 1 { Colour::Black } else { level_colour(r - 1).opposite() };
    kappa.extend([top_colour, top_colour.opposite()]);

    // Grow the upper ball U by vertex lifts.
    let mut top: Vec<Simplex> = k.facets().to_vec();
    let mut upper: Vec<Simplex> = Vec::new();
    for i in 1..r {
        let from = i.saturating_sub(2);
        for v in (0..n).filter(|&v| input.kappa.colour(v) == level_colour(i)) {
            let (old, new) = (at(v, from), at(v, i));
            for f in top.iter_mut().filter(|f| f.binary_search(&old).is_ok()) {
                upper.push(with_vertex(f, new));
                let pos = f.binary_search(&old).unwrap();
                f.remove(pos);
                let ins = f.binary_search(&new).unwrap_err();
                f.insert(ins, new);
            }
        }
    }
    upper.extend(top.iter().map(|f| with_vertex(f, zp)));

    let lower = upper.iter().map(|f| {
        let mut g: Simplex = f.iter().map(|&v| nu[v]).collect();
        g.sort_unstable();
        g
    });
    let facets: Vec<Simplex> = upper.iter().cloned().chain(lower).collect();
    let complex = SymmetricComplex::from_raw(names, nu, facets)?;
    let mut h = input.flag.h.clone();
    h.push(upper);
    let out = ColouredSphere {
        complex,
        kappa: TwoColouring { kappa },
        flag: HemisphereFlag::new(h),
    };
    enforce_contract(input, &out, r)?;
    Ok(out)
}

/// Full post-condition of a lift as a report: verifiers on the output, and the
/// quotient isomorphic to `M_r` of the input quotient.
pub fn check_lift(input: &ColouredSphere, output: &ColouredSphere, r: usize) -> Result<Report> {
    let mut report = output.verify();
    let mut dim = Report::new("dimension");
    dim.record(
        "raised-by-one",
        (output.dim() != input.dim() + 1).then(|| format!("{} -> {}", input.dim(), output.dim())),
    );
    report.merge(dim);
    if !report.passed() {
        return Ok(report);
    }
    let before = input.quotient()?;
    let after = output.quotient()?;
    let target = mycielski(&before.graph, r)?;
    let mut iso = Report::new("quotient");
    let map = level_witness(&before, &after, input.complex.vertex_count(), r);
    let ok = verify_isomorphism(&after.graph, &target, &map) || is_isomorphic(&after.graph, &target)?.is_some();
    iso.record("isomorphic-to-mycielski", (!ok).then(|| format!("G(K', kappa') is not M_{r}(G(K, kappa))")));
    report.merge(iso);
    Ok(report)
}

/// The class of `(v, i)` goes to `(p(v), i)` and the apex class to `z`.
fn level_witness(before: &Quotient, after: &Quotient, n: usize, r: usize) -> Vec<usize> {
    let order = before.graph.order();
    let mut map = vec![usize::MAX; after.graph.order()];
    for (x, &class) in after.projection.iter().enumerate() {
        map[class] = if x >= r * n { r * order } else { (x / n) * order + before.projection[x % n] };
    }
    map
}

fn enforce_contract(input: &ColouredSphere, output: &ColouredSphere, r: usize) -> Result<()> {
    let report = check_lift(input, output, r)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Error::contract(format!("lift with r = {r} broke its post-condition"), report))
    }
}

/// Sphere model of a member of `M_k`: a coloured sphere of dimension `k - 2`
/// whose quotient is the family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereModel {
    pub sphere: ColouredSphere,
    pub graph: Graph,
    pub projection: Vec<usize>,
    pub spec: MycielskiSpec,
}

impl SphereModel {
    fn assemble(sphere: ColouredSphere, spec: MycielskiSpec) -> Result<Self> {
        let q = sphere.quotient()?;
        let model = SphereModel {
            sphere,
            graph: q.graph,
            projection: q.projection,
            spec,
        };
        let report = model.verify()?;
        if !report.passed() {
            return Err(Error::contract("sphere model failed verification", report));
        }
        Ok(model)
    }

    /// Sphere verifiers, quotient consistency, dimension and family membership.
    pub fn verify(&self) -> Result<Report> {
        let mut report = self.sphere.verify();
        if !report.passed() {
            return Ok(report);
        }
        let mut r = Report::new("model");
        let q = self.sphere.quotient()?;
        r.record(
            "quotient-matches",
            (q.graph != self.graph || q.projection != self.projection).then(|| "stored graph or projection differs from G(K, kappa)".to_string()),
        );
        r.record(
            "dimension",
            (self.sphere.dim() != self.spec.rs.len())
                .then(|| format!("dimension {} for a member of M_{}", self.sphere.dim(), self.spec.family_index())),
        );
        let family = build_family(&self.spec)?;
        r.record(
            "family-member",
            is_isomorphic(&self.graph, &family)?
                .is_none()
                .then(|| format!("quotient is not isomorphic to build_family({})", self.spec)),
        );
        report.merge(r);
        Ok(report)
    }

    pub fn to_file(&self) -> SphereModelFile {
        SphereModelFile {
            complex: ComplexFile::new(&self.sphere.complex, Some(&self.sphere.flag), Some(&self.sphere.kappa)),
            graph: self.graph.clone(),
            projection: self.projection.clone(),
            spec: self.spec.clone(),
        }
    }

    /// Loads and fully verifies a model file.
    pub fn from_file(file: SphereModelFile) -> Result<Self> {
        let complex = file.complex.complex()?;
        let (Some(flag), Some(kappa)) = (file.complex.flag, file.complex.kappa) else {
            return Err(Error::Parse("sphere model file needs both flag and kappa".into()));
        };
        let model = SphereModel {
            sphere: ColouredSphere { complex, kappa, flag },
            graph: file.graph,
            projection: file.projection,
            spec: file.spec,
        };
        let report = model.verify()?;
        if !report.passed() {
            return Err(Error::contract("sphere model file failed verification", report));
        }
        Ok(model)
    }

    /// Lifts the model with one more Mycielski iteration.
    pub fn lift(&self, r: usize) -> Result<SphereModel> {
        let sphere = general_lift(&self.sphere, r)?;
        SphereModel::assemble(sphere, self.spec.then(r)?)
    }
}

/// Complex file plus `{graph, projection, spec}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SphereModelFile {
    #[serde(flatten)]
    pub complex: ComplexFile,
    pub graph: Graph,
    pub projection: Vec<usize>,
    pub spec: MycielskiSpec,
}

/// Starts from the circle model of `C_{2 r_1 + 1}` and lifts with `r_2, r_3, ...`.
pub fn sphere_model(spec: &MycielskiSpec) -> Result<SphereModel> {
    let Some((&first, rest)) = spec.rs.split_first() else {
        return Err(Error::domain("sphere_model needs at least one r (members of M_3 and beyond)"));
    };
    let mut sphere = ColouredSphere::circle(first)?;
    for &r in rest {
        sphere = general_lift(&sphere, r)?;
    }
    SphereModel::assemble(sphere, spec.clone())
}
