use itertools::Itertools;

use super::{k_cliques, Complex, Graph};
use crate::error::{Error, Result};
use crate::golden::{GoldenScalar, IcosianGroup};

/// The 600-cell on the elements of the icosian group: `u ~ v` iff
/// `⟨u, v⟩ = φ/2`, and the tetrahedra are the 4-cliques of that graph.
pub fn build_600_cell(group: &IcosianGroup) -> Result<Complex> {
    let n = group.len();
    let half_phi = GoldenScalar::phi().half();
    let mut g = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if group.element(a).dot(group.element(b)) == half_phi {
                g.add_edge(a, b);
            }
        }
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) != 12) {
        return Err(Error::Construction(format!(
            "vertex {v} has degree {} instead of 12",
            g.degree(v)
        )));
    }
    let cells = k_cliques(&g, 4);
    if cells.len() != 600 {
        return Err(Error::Construction(format!(
            "found {} tetrahedra instead of 600",
            cells.len()
        )));
    }
    let labels = group.elements().iter().map(|q| q.label()).collect();
    Complex::new(labels, cells)
}

/// Boundary of the regular icosahedron, built from the twelve points
/// `(0, ±1, ±φ)` and their cyclic shifts; edges join points at squared
/// distance 4.
pub fn icosahedron() -> Complex {
    let one = GoldenScalar::one();
    let phi = GoldenScalar::phi();
    let zero = GoldenScalar::zero();
    let mut points: Vec<[GoldenScalar; 3]> = Vec::new();
    for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        let a = if s1 > 0 { one.clone() } else { -&one };
        let b = if s2 > 0 { phi.clone() } else { -&phi };
        points.push([zero.clone(), a.clone(), b.clone()]);
        points.push([a.clone(), b.clone(), zero.clone()]);
        points.push([b, zero.clone(), a]);
    }
    points.sort();
    let four = GoldenScalar::from_int(4);
    let dist2 = |p: &[GoldenScalar; 3], q: &[GoldenScalar; 3]| {
        p.iter().zip(q).fold(GoldenScalar::zero(), |acc, (x, y)| {
            let d = x - y;
            &acc + &(&d * &d)
        })
    };
    let g = Graph::from_edges(
        12,
        (0..12)
            .tuple_combinations()
            .filter(|&(a, b)| dist2(&points[a], &points[b]) == four),
    );
    let labels = points
        .iter()
        .map(|p| p.iter().map(|c| c.to_string()).join(","))
        .collect();
    Complex::new(labels, k_cliques(&g, 3)).expect("icosahedron is pure")
}

/// The `n × n` grid whose maximal simplices are its rows and columns.
/// Cell `(i, j)` has index `n·i + j`.
pub fn grid_complex(n: usize) -> Complex {
    let rows = (0..n).map(|i| (0..n).map(|j| n * i + j).collect());
    let cols = (0..n).map(|j| (0..n).map(|i| n * i + j).collect());
    let labels = (0..n)
        .flat_map(|i| (0..n).map(move |j| format!("({i},{j})")))
        .collect();
    Complex::new(labels, rows.chain(cols).collect()).expect("grid is pure")
}

/// A single simplex on `k` vertices.
pub fn simplex_complex(k: usize) -> Complex {
    Complex::from_simplices(k, vec![(0..k).collect()]).expect("simplex is pure")
}

/// Boundary of the octahedron; vertices `2a` and `2a+1` are `±e_a`.
pub fn octahedron() -> Complex {
    let tris = (0..8)
        .map(|m: usize| (0..3).map(|a| 2 * a + ((m >> a) & 1)).collect())
        .collect();
    Complex::from_simplices(6, tris).expect("octahedron is pure")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn icosahedron_counts() {
        let ico = icosahedron();
        assert_eq!(ico.f_vector(), vec![12, 30, 20]);
        assert_eq!(ico.euler_characteristic(), 2);
        let g = ico.graph();
        assert!((0..12).all(|v| g.degree(v) == 5));
    }

    #[test]
    fn octahedron_counts() {
        assert_eq!(octahedron().f_vector(), vec![6, 12, 8]);
    }
}
