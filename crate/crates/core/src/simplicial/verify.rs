use std::collections::{BTreeMap, BTreeSet};

use super::{all_faces, is_face, Colour, HemisphereFlag, Simplex, SymmetricComplex, TwoColouring};
use crate::report::Report;

fn show(k: &SymmetricComplex, s: &[usize]) -> String {
    let names: Vec<&str> = s.iter().map(|&v| k.name(v)).collect();
    format!("{{{}}}", names.join(", "))
}

/// Involution, freeness, closure under `nu`, and no antipodal pair inside a facet.
pub fn verify_symmetric(k: &SymmetricComplex) -> Report {
    let mut r = Report::new("symmetric");
    let n = k.vertex_count();
    r.record(
        "involution",
        (0..n).find(|&v| k.nu(k.nu(v)) != v).map(|v| format!("nu(nu({})) != {}", k.name(v), k.name(v))),
    );
    r.record(
        "free",
        (0..n).find(|&v| k.nu(v) == v).map(|v| format!("nu fixes {}", k.name(v))),
    );
    r.record(
        "closed-under-nu",
        k.facets()
            .iter()
            .find(|f| !k.contains(&k.antipode(f)))
            .map(|f| format!("antipode of {} is missing", show(k, f))),
    );
    r.record(
        "antipodal-pair-free",
        k.facets()
            .iter()
            .find(|f| f.iter().any(|&v| f.binary_search(&k.nu(v)).is_ok()))
            .map(|f| format!("{} contains an antipodal pair", show(k, f))),
    );
    r
}

/// Ridges of a pure complex with the number of facets containing each.
fn ridge_degrees(facets: &[Simplex]) -> BTreeMap<Simplex, usize> {
    let mut deg = BTreeMap::new();
    for f in facets {
        for i in 0..f.len() {
            let mut ridge = f.clone();
            ridge.remove(i);
            *deg.entry(ridge).or_insert(0) += 1;
        }
    }
    deg
}

/// Necessary conditions for the complex to be an `n`-sphere: purity, every
/// ridge in exactly two facets, connected facet adjacency, and Euler
/// characteristic `1 + (-1)^n`. Passing is consistency, not a proof.
pub fn verify_sphere_necessary(k: &SymmetricComplex) -> Report {
    let mut r = Report::new("sphere-necessary");
    let n = k.dim();
    let facets = k.facets();
    r.record(
        "pure",
        facets
            .iter()
            .find(|f| f.len() != n + 1)
            .map(|f| format!("{} has dimension {} but the complex has dimension {n}", show(k, f), f.len() - 1)),
    );

    let deg = ridge_degrees(facets);
    r.record(
        "ridge-degree-2",
        deg.iter()
            .find(|(ridge, &d)| d != 2 && ridge.len() == n)
            .map(|(ridge, d)| format!("ridge {} lies in {d} facets", show(k, ridge))),
    );

    // Union-find over facets glued along shared ridges.
    let mut parent: Vec<usize> = (0..facets.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut first_holder: BTreeMap<Simplex, usize> = BTreeMap::new();
    for (i, f) in facets.iter().enumerate() {
        for j in 0..f.len() {
            let mut ridge = f.clone();
            ridge.remove(j);
            match first_holder.get(&ridge) {
                Some(&other) => {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, other));
                    parent[a] = b;
                }
                None => {
                    first_holder.insert(ridge, i);
                }
            }
        }
    }
    let roots: BTreeSet<usize> = (0..facets.len()).map(|i| find(&mut parent, i)).collect();
    r.record(
        "connected",
        (roots.len() > 1).then(|| format!("facet adjacency graph has {} components", roots.len())),
    );

    let chi = k.euler_characteristic();
    let want = if n.is_multiple_of(2) { 2 } else { 0 };
    r.record(
        "euler-characteristic",
        (chi != want).then(|| format!("Euler characteristic {chi}, expected {want}")),
    );
    r
}

/// Antisymmetry and properness of a 2-colouring.
pub fn verify_two_colouring(k: &SymmetricComplex, kappa: &TwoColouring) -> Report {
    let mut r = Report::new("two-colouring");
    if kappa.kappa.len() != k.vertex_count() {
        r.fail(
            "covers-vertices",
            format!("{} colours for {} vertices", kappa.kappa.len(), k.vertex_count()),
        );
        return r;
    }
    r.record(
        "antisymmetric",
        (0..k.vertex_count())
            .find(|&v| kappa.colour(v) == kappa.colour(k.nu(v)))
            .map(|v| format!("{} and its antipode {} share a colour", k.name(v), k.name(k.nu(v)))),
    );
    r.record(
        "proper",
        k.facets()
            .iter()
            .find(|f| f.iter().all(|&v| kappa.colour(v) == kappa.colour(f[0])))
            .map(|f| {
                let c = if kappa.colour(f[0]) == Colour::Black { "black" } else { "white" };
                format!("facet {} is entirely {c}", show(k, f))
            }),
    );
    r
}

/// Boundary of a pure complex: ridges lying in exactly one facet. The second
/// value is a ridge in more than two facets, if any.
fn boundary(facets: &[Simplex]) -> (BTreeSet<Simplex>, Option<Simplex>) {
    let deg = ridge_degrees(facets);
    let branching = deg.iter().find(|(_, &d)| d > 2).map(|(s, _)| s.clone());
    let bd = deg.into_iter().filter(|(_, d)| *d == 1).map(|(s, _)| s).collect();
    (bd, branching)
}

/// Maximal elements of a downward-closed face set.
fn maximal(faces: &BTreeSet<Simplex>) -> BTreeSet<Simplex> {
    faces
        .iter()
        .filter(|f| !faces.iter().any(|g| g.len() > f.len() && is_face(f, g)))
        .cloned()
        .collect()
}

/// Checks every hemisphere-flag condition combinatorially.
pub fn verify_flag(k: &SymmetricComplex, flag: &HemisphereFlag) -> Report {
    let mut r = Report::new("flag");
    let n = k.dim();
    if flag.h.len() != n + 1 {
        r.fail("flag-length", format!("{} hemispheres for a {n}-dimensional complex", flag.h.len()));
        return r;
    }
    r.pass("flag-length");

    let anti = |facets: &[Simplex]| -> Vec<Simplex> {
        let mut out: Vec<Simplex> = facets.iter().map(|f| k.antipode(f)).collect();
        out.sort();
        out
    };

    let h0 = &flag.h[0];
    r.record(
        "h0-single-vertex",
        match h0.as_slice() {
            [v] if v.len() == 1 && v[0] < k.vertex_count() && k.nu(v[0]) != v[0] => None,
            _ => Some(format!("H_0 is {h0:?}")),
        },
    );

    let mut skeleton = None;
    let mut chain = None;
    let mut bdry = None;
    let mut inter = None;
    for (d, hd) in flag.h.iter().enumerate() {
        if skeleton.is_none() {
            skeleton = hd.iter().find(|f| f.len() != d + 1 || !k.contains(f)).map(|f| {
                format!("H_{d} facet {f:?} is not a {d}-face of the complex")
            });
        }
        if d == 0 {
            continue;
        }
        let prev = &flag.h[d - 1];
        if chain.is_none() {
            chain = prev
                .iter()
                .find(|f| !hd.iter().any(|g| is_face(f, g)))
                .map(|f| format!("H_{} facet {f:?} is not in H_{d}", d - 1));
        }
        let (bd, branching) = boundary(hd);
        let mut expected: BTreeSet<Simplex> = prev.iter().cloned().collect();
        expected.extend(anti(prev));
        if bdry.is_none() {
            bdry = match branching {
                Some(s) => Some(format!("H_{d} ridge {s:?} lies in more than two facets")),
                None if bd != expected => Some(format!(
                    "boundary of H_{d} has {} ridges, H_{} ∪ -H_{} has {} facets",
                    bd.len(),
                    d - 1,
                    d - 1,
                    expected.len()
                )),
                None => None,
            };
        }
        if inter.is_none() {
            let mine = all_faces(hd);
            let theirs = all_faces(&anti(hd));
            let common: BTreeSet<Simplex> = mine.intersection(&theirs).cloned().collect();
            if maximal(&common) != bd {
                inter = Some(format!("H_{d} ∩ -H_{d} differs from the boundary of H_{d}"));
            }
        }
    }
    r.record("pure-skeleton", skeleton);
    r.record("chain", chain);
    r.record("boundary", bdry);
    r.record("self-intersection", inter);

    let top = &flag.h[n];
    let mut union: BTreeSet<Simplex> = top.iter().cloned().collect();
    union.extend(anti(top));
    let all: BTreeSet<Simplex> = k.facets().iter().cloned().collect();
    r.record(
        "cover",
        (union != all).then(|| format!("H_n ∪ -H_n has {} facets, the complex has {}", union.len(), all.len())),
    );
    r
}
