//! Symmetric triangulations of spheres, hemisphere flags, and the antipodal
//! quotient graph of a properly 2-coloured complex.
//!
//! Complexes are stored by their facets; lower faces are derived on demand.
//! A simplex is a sorted `Vec<usize>` of vertex indices, and complex equality
//! is equality of the canonically sorted facet lists.

mod io;
mod quotient;
mod verify;

pub use io::ComplexFile;
pub use quotient::{quotient_graph, Quotient};
pub use verify::{verify_flag, verify_sphere_necessary, verify_symmetric, verify_two_colouring};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Simplex = Vec<usize>;

/// Abstract simplicial complex with a free antipodal involution `nu`, given by facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricComplex {
    names: Vec<String>,
    nu: Vec<usize>,
    facets: Vec<Simplex>,
}

fn canonical(mut facets: Vec<Simplex>) -> Vec<Simplex> {
    for f in &mut facets {
        f.sort_unstable();
        f.dedup();
    }
    facets.sort();
    facets.dedup();
    facets
}

impl SymmetricComplex {
    /// Shape checks only (index ranges, non-empty facets). Use
    /// [`verify_symmetric`] to inspect the antipodal invariants.
    pub fn from_raw(names: Vec<String>, nu: Vec<usize>, facets: Vec<Simplex>) -> Result<Self> {
        let n = names.len();
        if nu.len() != n {
            return Err(Error::domain(format!("nu lists {} images for {n} vertices", nu.len())));
        }
        if let Some(v) = nu.iter().position(|&w| w >= n) {
            return Err(Error::domain(format!("nu({v}) = {} is not a vertex", nu[v])));
        }
        for f in &facets {
            if f.is_empty() {
                return Err(Error::domain("empty facet"));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::domain(format!("facet {f:?} mentions missing vertex {v}")));
            }
        }
        Ok(SymmetricComplex {
            names,
            nu,
            facets: canonical(facets),
        })
    }

    /// Builds a complex and rejects it unless every symmetric invariant holds.
    pub fn new(names: Vec<String>, nu: Vec<usize>, facets: Vec<Simplex>) -> Result<Self> {
        let k = SymmetricComplex::from_raw(names, nu, facets)?;
        let report = verify_symmetric(&k);
        if !report.passed() {
            return Err(Error::contract("complex is not symmetric", report));
        }
        Ok(k)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn nu(&self, v: usize) -> usize {
        self.nu[v]
    }

    pub fn involution(&self) -> &[usize] {
        &self.nu
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// Largest facet dimension.
    pub fn dim(&self) -> usize {
        self.facets.iter().map(Vec::len).max().unwrap_or(1) - 1
    }

    pub fn antipode(&self, s: &[usize]) -> Simplex {
        let mut out: Simplex = s.iter().map(|&v| self.nu[v]).collect();
        out.sort_unstable();
        out
    }

    /// True when `s` (sorted) is a face of some facet.
    pub fn contains(&self, s: &[usize]) -> bool {
        self.facets.binary_search_by(|f| f.as_slice().cmp(s)).is_ok()
            || self.facets.iter().any(|f| is_face(s, f))
    }

    /// All faces with `k + 1` vertices, sorted.
    pub fn faces_of_dim(&self, k: usize) -> BTreeSet<Simplex> {
        faces_of_dim(&self.facets, k)
    }

    /// Canonically sorted edges of the 1-skeleton.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.faces_of_dim(1).into_iter().map(|e| (e[0], e[1])).collect()
    }

    /// Face counts `f_0, ..., f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dim()).map(|k| self.faces_of_dim(k).len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

/// `a` and `b` sorted; true when every vertex of `a` is in `b`.
pub(crate) fn is_face(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

pub(crate) fn faces_of_dim(facets: &[Simplex], k: usize) -> BTreeSet<Simplex> {
    let mut out = BTreeSet::new();
    for f in facets {
        if f.len() < k + 1 {
            continue;
        }
        let mut idx: Vec<usize> = (0..=k).collect();
        loop {
            out.insert(idx.iter().map(|&i| f[i]).collect());
            // Next combination in lexicographic order.
            let mut i = k + 1;
            while i > 0 && idx[i - 1] == f.len() - (k + 1) + (i - 1) {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..=k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    out
}

/// Every face (of every dimension) of the complex generated by `facets`.
pub(crate) fn all_faces(facets: &[Simplex]) -> BTreeSet<Simplex> {
    let mut out = BTreeSet::new();
    for f in facets {
        for mask in 1u64..(1u64 << f.len()) {
            out.insert(f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect());
        }
    }
    out
}

/// Hemisphere flag `H_0 ⊂ H_1 ⊂ ... ⊂ H_n`, each given by its facets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HemisphereFlag {
    #[serde(rename = "H")]
    pub h: Vec<Vec<Simplex>>,
}

impl HemisphereFlag {
    pub fn new(h: Vec<Vec<Simplex>>) -> Self {
        HemisphereFlag {
            h: h.into_iter().map(canonical).collect(),
        }
    }

    pub fn top(&self) -> usize {
        self.h.len().saturating_sub(1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Black,
    White,
}

impl Colour {
    pub fn opposite(self) -> Colour {
        match self {
            Colour::Black => Colour::White,
            Colour::White => Colour::Black,
        }
    }
}

/// Black/white vertex colouring of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TwoColouring {
    pub kappa: Vec<Colour>,
}

impl TwoColouring {
    pub fn colour(&self, v: usize) -> Colour {
        self.kappa[v]
    }
}

/// Boundary of the `(n+1)`-dimensional cross-polytope, with the coordinate flag.
///
/// Vertex `2j` is `+e_{j+1}` and `2j+1` is `-e_{j+1}`. `H_d` is the cone with
/// apex `+e_{d+1}` over the cross-polytope sphere on `±e_1, ..., ±e_d`.
pub fn cross_polytope(n: usize) -> Result<(SymmetricComplex, HemisphereFlag)> {
    if n < 1 {
        return Err(Error::domain("cross_polytope needs n >= 1"));
    }
    let coords = n + 1;
    let names = (0..coords).flat_map(|j| [format!("+e{}", j + 1), format!("-e{}", j + 1)]).collect();
    let nu = (0..2 * coords).map(|v| v ^ 1).collect();
    let signed = |mask: u64, d: usize| -> Simplex { (0..d).map(|j| 2 * j + (mask >> j & 1) as usize).collect() };
    let facets = (0..1u64 << coords).map(|m| signed(m, coords)).collect();
    let k = SymmetricComplex::new(names, nu, facets)?;
    let h = (0..=n)
        .map(|d| {
            (0..1u64 << d)
                .map(|m| {
                    let mut s = signed(m, d);
                    s.push(2 * d);
                    s
                })
                .collect()
        })
        .collect();
    Ok((k, HemisphereFlag::new(h)))
}

/// The cycle `C_{4r+2}` as a symmetric triangulation of the circle.
///
/// `nu(v_i) = v_{i+2r+1}`, colours alternate starting with black at `v_0`,
/// `H_0 = {v_0}` and `H_1` is the path `v_0 ... v_{2r+1}`.
pub fn circle_complex(r: usize) -> Result<(SymmetricComplex, TwoColouring, HemisphereFlag)> {
    if r < 1 {
        return Err(Error::domain("circle_complex needs r >= 1"));
    }
    let n = 4 * r + 2;
    let names = (0..n).map(|i| format!("v{i}")).collect();
    let nu = (0..n).map(|i| (i + 2 * r + 1) % n).collect();
    let facets = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
    let k = SymmetricComplex::new(names, nu, facets)?;
    let kappa = TwoColouring {
        kappa: (0..n).map(|i| if i % 2 == 0 { Colour::Black } else { Colour::White }).collect(),
    };
    let flag = HemisphereFlag::new(vec![vec![vec![0]], (0..=2 * r).map(|i| vec![i, i + 1]).collect()]);
    Ok((k, kappa, flag))
}
