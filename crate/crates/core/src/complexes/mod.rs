//! Pure simplicial complexes given by their maximal simplices.

mod build;
mod graph;
mod iso;

use std::collections::{BTreeMap, HashMap, HashSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use build::{build_600_cell, grid_complex, icosahedron, octahedron, simplex_complex};
pub use graph::{k_cliques, Graph};
pub use iso::is_isomorphic;

/// A pure simplicial complex.
///
/// Every maximal simplex is a sorted list of vertex indices, all of the same
/// size, and the list of simplices is sorted lexicographically. Every vertex
/// lies in at least one simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    labels: Vec<String>,
    simplices: Vec<Vec<usize>>,
}

impl Complex {
    pub fn new(labels: Vec<String>, simplices: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        let mut simplices: Vec<Vec<usize>> = simplices
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s
            })
            .collect();
        simplices.sort();
        simplices.dedup();
        let size = simplices.first().map_or(0, Vec::len);
        let mut used = vec![false; n];
        for s in &simplices {
            if s.len() != size || s.is_empty() {
                return Err(Error::InvalidComplex(format!(
                    "maximal simplices have sizes {} and {}",
                    size,
                    s.len()
                )));
            }
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidComplex(format!("repeated vertex in {s:?}")));
            }
            for &v in s {
                if v >= n {
                    return Err(Error::InvalidComplex(format!(
                        "vertex {v} out of range {n}"
                    )));
                }
                used[v] = true;
            }
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(Error::InvalidComplex(format!(
                "vertex {v} is in no maximal simplex"
            )));
        }
        Ok(Complex { labels, simplices })
    }

    /// Complex with labels `"0"`, `"1"`, ...
    pub fn from_simplices(vertex_count: usize, simplices: Vec<Vec<usize>>) -> Result<Self> {
        Complex::new(
            (0..vertex_count).map(|i| i.to_string()).collect(),
            simplices,
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.len()
    }

    /// Number of vertices in each maximal simplex.
    pub fn simplex_size(&self) -> usize {
        self.simplices.first().map_or(0, Vec::len)
    }

    /// Dimension, or -1 for the empty complex.
    pub fn dimension(&self) -> isize {
        self.simplex_size() as isize - 1
    }

    /// The 1-skeleton.
    pub fn graph(&self) -> Graph {
        let mut g = Graph::new(self.vertex_count());
        for s in &self.simplices {
            for (a, b) in s.iter().tuple_combinations() {
                g.add_edge(*a, *b);
            }
        }
        g
    }

    /// For each vertex, indices of the maximal simplices containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count()];
        for (i, s) in self.simplices.iter().enumerate() {
            for &v in s {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn simplex_set(&self) -> HashSet<Vec<usize>> {
        self.simplices.iter().cloned().collect()
    }

    pub fn contains_simplex(&self, sorted: &[usize]) -> bool {
        self.simplices
            .binary_search_by(|s| s.as_slice().cmp(sorted))
            .is_ok()
    }

    pub fn f_vector(&self) -> Vec<u64> {
        (1..=self.simplex_size())
            .map(|k| {
                let faces: HashSet<Vec<usize>> = self
                    .simplices
                    .iter()
                    .flat_map(|s| s.iter().copied().combinations(k))
                    .collect();
                faces.len() as u64
            })
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// The subcomplex spanned by the given simplices (each a sorted vertex list
    /// in this complex), with vertices renumbered in increasing original order.
    /// Returns the complex and the original index of each new vertex.
    pub fn spanned_by(&self, simplices: &[Vec<usize>]) -> Result<(Complex, Vec<usize>)> {
        let originals: Vec<usize> = simplices
            .iter()
            .flatten()
            .copied()
            .sorted()
            .dedup()
            .collect();
        let pos: HashMap<usize, usize> =
            originals.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = originals.iter().map(|&v| self.labels[v].clone()).collect();
        let relabeled = simplices
            .iter()
            .map(|s| s.iter().map(|v| pos[v]).collect())
            .collect();
        Ok((Complex::new(labels, relabeled)?, originals))
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            dimension: self.dimension(),
            vertex_labels: self.labels.clone(),
            maximal_simplices: self.simplices.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("complex serializes")
    }

    pub fn from_json(text: &str) -> Result<Complex> {
        let file: ComplexFile = serde_json::from_str(text)?;
        let c = Complex::new(file.vertex_labels, file.maximal_simplices)?;
        if c.dimension() != file.dimension {
            return Err(Error::InvalidComplex(format!(
                "declared dimension {} but simplices have dimension {}",
                file.dimension,
                c.dimension()
            )));
        }
        Ok(c)
    }
}

/// On-disk form of a [`Complex`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub dimension: isize,
    pub vertex_labels: Vec<String>,
    pub maximal_simplices: Vec<Vec<usize>>,
}

/// A vertex assignment between two complexes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMap {
    pub assignment: Vec<usize>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap {
            assignment: (0..n).collect(),
        }
    }

    pub fn apply(&self, simplex: &[usize]) -> Vec<usize> {
        let mut img: Vec<usize> = simplex.iter().map(|&v| self.assignment[v]).collect();
        img.sort_unstable();
        img
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = HashSet::new();
        self.assignment.iter().all(|v| seen.insert(*v))
    }

    /// True when the image of every maximal simplex of `source` lies inside
    /// some maximal simplex of `target`.
    pub fn is_simplicial(&self, source: &Complex, target: &Complex) -> bool {
        if self.assignment.len() != source.vertex_count() {
            return false;
        }
        let inc = target.incidence();
        source.simplices().iter().all(|s| {
            let img = self.apply(s);
            img.iter().all(|&v| v < target.vertex_count())
                && inc[img[0]].iter().any(|&t| {
                    img.iter()
                        .all(|v| target.simplices()[t].binary_search(v).is_ok())
                })
        })
    }

    /// True when the map is a bijection on vertices carrying the maximal
    /// simplices of `source` exactly onto those of `target`.
    pub fn is_isomorphism(&self, source: &Complex, target: &Complex) -> bool {
        if self.assignment.len() != source.vertex_count()
            || source.vertex_count() != target.vertex_count()
            || source.simplex_count() != target.simplex_count()
            || self.assignment.iter().any(|&v| v >= target.vertex_count())
            || !self.is_injective()
        {
            return false;
        }
        let targets = target.simplex_set();
        let images: HashSet<Vec<usize>> =
            source.simplices().iter().map(|s| self.apply(s)).collect();
        images.len() == targets.len() && images.iter().all(|s| targets.contains(s))
    }
}

/// Link of vertex `v`: the complex of `σ \ {v}` over maximal simplices σ ∋ v.
pub fn link(x: &Complex, v: usize) -> Result<Complex> {
    if v >= x.vertex_count() {
        return Err(Error::InvalidComplex(format!("vertex {v} out of range")));
    }
    let faces: Vec<Vec<usize>> = x
        .simplices()
        .iter()
        .filter(|s| s.contains(&v))
        .map(|s| s.iter().copied().filter(|&u| u != v).collect())
        .collect();
    if faces.is_empty() || faces[0].is_empty() {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(x.spanned_by(&faces)?.0)
}

pub fn f_vector(x: &Complex) -> Vec<u64> {
    x.f_vector()
}

/// Quotient of a complex by a fixed-point-free simplicial involution.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub complex: Complex,
    /// Orbit index of each source vertex.
    pub orbit_of: Vec<usize>,
    /// Smallest source vertex of each orbit.
    pub representatives: Vec<usize>,
}

pub fn quotient(x: &Complex, involution: &[usize]) -> Result<Quotient> {
    let n = x.vertex_count();
    if involution.len() != n {
        return Err(Error::BadInvolution(format!(
            "length {} for {} vertices",
            involution.len(),
            n
        )));
    }
    for v in 0..n {
        let w = involution[v];
        if w >= n || involution[w] != v {
            return Err(Error::BadInvolution(format!(
                "not an involution at vertex {v}"
            )));
        }
        if w == v {
            return Err(Error::BadInvolution(format!("fixed point at vertex {v}")));
        }
    }
    let swap = VertexMap {
        assignment: involution.to_vec(),
    };
    let mut orbit_of = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for v in 0..n {
        if orbit_of[v] == usize::MAX {
            orbit_of[v] = representatives.len();
            orbit_of[involution[v]] = representatives.len();
            representatives.push(v);
        }
    }
    // image simplex -> the source simplex orbit {σ, ισ} that produced it
    let mut images: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for s in x.simplices() {
        let partner = swap.apply(s);
        if !x.contains_simplex(&partner) {
            return Err(Error::BadInvolution(format!(
                "image of {s:?} is not a simplex"
            )));
        }
        let mut img: Vec<usize> = s.iter().map(|&v| orbit_of[v]).collect();
        img.sort_unstable();
        if img.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DegenerateQuotient(format!(
                "simplex {s:?} meets an orbit twice"
            )));
        }
        let key = std::cmp::min(s.clone(), partner);
        match images.get(&img) {
            Some(prev) if *prev != key => {
                return Err(Error::DegenerateQuotient(format!(
                    "simplices {prev:?} and {key:?} collapse to the same image"
                )))
            }
            _ => {
                images.insert(img, key);
            }
        }
    }
    let labels = representatives
        .iter()
        .map(|&r| format!("{}|{}", x.labels()[r], x.labels()[involution[r]]))
        .collect();
    let complex = Complex::new(labels, images.into_keys().collect())?;
    Ok(Quotient {
        complex,
        orbit_of,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_vector_of_a_simplex() {
        let s = simplex_complex(5);
        assert_eq!(s.f_vector(), vec![5, 10, 10, 5, 1]);
        assert_eq!(s.euler_characteristic(), 1);
    }

    #[test]
    fn link_of_a_simplex_vertex() {
        let s = simplex_complex(5);
        let l = link(&s, 2).unwrap();
        assert_eq!(l.vertex_count(), 4);
        assert_eq!(l.simplices(), &[vec![0, 1, 2, 3]]);
        assert_eq!(l.labels(), &["0", "1", "3", "4"]);
    }

    #[test]
    fn link_of_a_lone_vertex_fails() {
        let c = Complex::from_simplices(1, vec![vec![0]]).unwrap();
        assert!(matches!(link(&c, 0), Err(Error::IsolatedVertex(0))));
    }

    #[test]
    fn rejects_impure_and_unused() {
        assert!(Complex::from_simplices(3, vec![vec![0, 1], vec![2]]).is_err());
        assert!(Complex::from_simplices(3, vec![vec![0, 1]]).is_err());
        assert!(Complex::from_simplices(2, vec![vec![0, 0]]).is_err());
    }

    #[test]
    fn grid_f_vector() {
        // 25 cells, 2·5·C(5,2) = 100 edges, 2·5·C(5,3) = 100 triangles, ...
        assert_eq!(grid_complex(5).f_vector(), vec![25, 100, 100, 50, 10]);
    }

    #[test]
    fn octahedron_antipodal_quotient_degenerates() {
        let o = octahedron();
        let inv: Vec<usize> = (0..6).map(|v| v ^ 1).collect();
        assert!(matches!(
            quotient(&o, &inv),
            Err(Error::DegenerateQuotient(_))
        ));
    }

    #[test]
    fn quotient_rejects_fixed_points() {
        let o = octahedron();
        let mut inv: Vec<usize> = (0..6).map(|v| v ^ 1).collect();
        inv[0] = 0;
        inv[1] = 1;
        assert!(matches!(quotient(&o, &inv), Err(Error::BadInvolution(_))));
    }

    #[test]
    fn json_round_trip() {
        let g = grid_complex(3);
        let back = Complex::from_json(&g.to_json()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn json_dimension_mismatch() {
        let text = r#"{"dimension": 3, "vertex_labels": ["a","b"], "maximal_simplices": [[0,1]]}"#;
        assert!(Complex::from_json(text).is_err());
    }

    #[test]
    fn vertex_map_checks() {
        let s = simplex_complex(3);
        let id = VertexMap::identity(3);
        assert!(id.is_isomorphism(&s, &s));
        let collapse = VertexMap {
            assignment: vec![0, 0, 1],
        };
        assert!(!collapse.is_injective());
        assert!(collapse.is_simplicial(&s, &s));
    }
}
