//! The colouring-space functor `B` and the natural map `φ: X → B²(X)`.
//!
//! The vertices of `B(X)` are the colour classes occurring in colourings of
//! `X`; each colouring contributes the simplex formed by its classes.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::chroma::{enumerate_colorings, enumerate_colorings_by_class_cover, ColoringPartition};
use crate::complexes::{is_isomorphic, Complex, Quotient, VertexMap};
use crate::error::{Error, Result};

/// `B(X)` together with the data it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BComplex {
    pub complex: Complex,
    /// Vertex `i` of `complex` is the class `classes[i]` of source vertices.
    pub classes: Vec<Vec<usize>>,
    /// `colorings[k]` produced maximal simplex `k` of `complex`.
    pub colorings: Vec<ColoringPartition>,
    pub colors: usize,
}

impl BComplex {
    pub fn class_index(&self, class: &[usize]) -> Option<usize> {
        self.classes
            .binary_search_by(|c| c.as_slice().cmp(class))
            .ok()
    }

    pub fn vertex_count(&self) -> usize {
        self.classes.len()
    }
}

fn class_label(class: &[usize]) -> String {
    format!("{{{}}}", class.iter().join(","))
}

/// Builds `B(X)` from a complete list of colourings of `X`.
pub fn build_b(colorings: &[ColoringPartition], colors: usize) -> Result<BComplex> {
    let classes: Vec<Vec<usize>> = colorings
        .iter()
        .flat_map(|c| c.classes().iter().cloned())
        .sorted()
        .dedup()
        .collect();
    let index: HashMap<&[usize], usize> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.as_slice(), i))
        .collect();
    let mut by_simplex: BTreeMap<Vec<usize>, ColoringPartition> = BTreeMap::new();
    for c in colorings {
        let simplex: Vec<usize> = c
            .classes()
            .iter()
            .map(|cl| index[cl.as_slice()])
            .sorted()
            .collect();
        if by_simplex.insert(simplex.clone(), c.clone()).is_some() {
            return Err(Error::DuplicateColoring(format!("{simplex:?}")));
        }
    }
    let labels = classes.iter().map(|c| class_label(c)).collect();
    let (simplices, colorings): (Vec<_>, Vec<_>) = by_simplex.into_iter().unzip();
    let complex = Complex::new(labels, simplices)?;
    Ok(BComplex {
        complex,
        classes,
        colorings,
        colors,
    })
}

/// `B(X)` with colourings found by backtracking.
pub fn compute_b(x: &Complex, colors: usize) -> Result<BComplex> {
    build_b(&enumerate_colorings(x, colors), colors)
}

/// `B(X)` and `B²(X) = B(B(X))`.
pub fn build_b2(x: &Complex, colors: usize) -> Result<(BComplex, BComplex)> {
    let b = compute_b(x, colors)?;
    let b2 = compute_b(&b.complex, colors)?;
    Ok((b, b2))
}

/// The map `φ: X → B²(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiMap {
    /// `assignment[p]` is the vertex of `B²(X)` hit by `p`.
    pub assignment: Vec<usize>,
    /// `fiber_sizes[p]` counts the vertices of `X` with the same image as `p`.
    pub fiber_sizes: Vec<usize>,
}

impl PhiMap {
    pub fn vertex_map(&self) -> VertexMap {
        VertexMap {
            assignment: self.assignment.clone(),
        }
    }

    /// Image vertex -> its preimages, ascending.
    pub fn fibers(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut f: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (p, &img) in self.assignment.iter().enumerate() {
            f.entry(img).or_default().push(p);
        }
        f
    }

    pub fn image_size(&self) -> usize {
        self.fibers().len()
    }
}

/// `φ(p)` is the set of `B(X)`-vertices (classes) that contain `p`; it must be
/// a vertex of `B²(X)`.
pub fn phi(x: &Complex, b: &BComplex, b2: &BComplex) -> Result<PhiMap> {
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); x.vertex_count()];
    for (i, class) in b.classes.iter().enumerate() {
        for &p in class {
            containing[p].push(i);
        }
    }
    let assignment = containing
        .iter()
        .enumerate()
        .map(|(p, set)| b2.class_index(set).ok_or(Error::PhiNotVertex(p)))
        .collect::<Result<Vec<usize>>>()?;
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &a in &assignment {
        *counts.entry(a).or_default() += 1;
    }
    let fiber_sizes = assignment.iter().map(|a| counts[a]).collect();
    Ok(PhiMap {
        assignment,
        fiber_sizes,
    })
}

/// Checked isomorphism between two complexes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoCertificate {
    pub map: Option<Vec<usize>>,
    pub verified: bool,
}

impl IsoCertificate {
    pub fn between(source: &Complex, target: &Complex) -> Self {
        match is_isomorphic(source, target) {
            Some(m) => {
                let verified = m.is_isomorphism(source, target);
                IsoCertificate {
                    map: Some(m.assignment),
                    verified,
                }
            }
            None => IsoCertificate {
                map: None,
                verified: false,
            },
        }
    }

    pub fn holds(&self) -> bool {
        self.map.is_some() && self.verified
    }
}

#[derive(Clone, Debug)]
pub struct B3Certificate {
    pub b3: BComplex,
    /// Independent sets of the forced class size found in `B²(X)`.
    pub independent_sets: usize,
    pub b3_to_b: IsoCertificate,
    pub b4_to_b2: IsoCertificate,
}

impl B3Certificate {
    pub fn holds(&self) -> bool {
        self.b3_to_b.holds() && self.b4_to_b2.holds()
    }
}

/// Computes `B³(X) = B(B²(X))` with the class-cover strategy and certifies
/// `B³(X) ≅ B(X)` and `B⁴(X) ≅ B²(X)`.
pub fn verify_b3_fixed_point(b: &BComplex, b2: &BComplex) -> Result<B3Certificate> {
    let n = b2.colors;
    let class_size = b2.vertex_count() / n;
    let colorings = enumerate_colorings_by_class_cover(&b2.complex, n, class_size)?;
    let independent_sets =
        crate::chroma::independent_sets_of_size(&b2.complex.graph(), class_size).len();
    let b3 = build_b(&colorings, n)?;
    let b3_to_b = IsoCertificate::between(&b3.complex, &b.complex);
    let b4 = compute_b(&b3.complex, n)?;
    let b4_to_b2 = IsoCertificate::between(&b4.complex, &b2.complex);
    Ok(B3Certificate {
        b3,
        independent_sets,
        b3_to_b,
        b4_to_b2,
    })
}

#[derive(Clone, Debug)]
pub struct QuotientBCertificate {
    pub bq: BComplex,
    pub iso: IsoCertificate,
    /// Every class of `B(X)` is a union of involution orbits.
    pub classes_stable: bool,
    /// Every colouring of the quotient lifts to a colouring of `X`.
    pub lifts_are_colorings: bool,
}

impl QuotientBCertificate {
    pub fn holds(&self) -> bool {
        self.iso.holds() && self.classes_stable && self.lifts_are_colorings
    }
}

/// Compares `B(X)` with `B(X/ι)` computed independently on the quotient.
pub fn verify_quotient_b_equality(
    b: &BComplex,
    q: &Quotient,
    involution: &[usize],
) -> Result<QuotientBCertificate> {
    let bq = compute_b(&q.complex, b.colors)?;
    let iso = IsoCertificate::between(&b.complex, &bq.complex);
    let classes_stable = b.classes.iter().all(|c| {
        let mut img: Vec<usize> = c.iter().map(|&v| involution[v]).collect();
        img.sort_unstable();
        img == *c
    });
    let known: std::collections::HashSet<&ColoringPartition> = b.colorings.iter().collect();
    let lifts_are_colorings = bq.colorings.iter().all(|c| {
        let mut lifted: Vec<Vec<usize>> = vec![Vec::new(); c.class_count()];
        for (v, &o) in q.orbit_of.iter().enumerate() {
            lifted[c.class_of(o).expect("orbit is coloured")].push(v);
        }
        known.contains(&ColoringPartition::new(lifted))
    });
    Ok(QuotientBCertificate {
        bq,
        iso,
        classes_stable,
        lifts_are_colorings,
    })
}

#[derive(Clone, Debug)]
pub struct PhiQuotientCertificate {
    /// `φ(v) = φ(ι v)` for every vertex, so `φ` factors through the quotient.
    pub factors: bool,
    pub injective: bool,
    /// For each maximal simplex of the quotient, the unique maximal simplex
    /// of `B²` containing its image (`None` if not unique).
    pub containing_simplex: Vec<Option<usize>>,
    pub distinct_simplices: usize,
    pub image: Complex,
    pub iso: IsoCertificate,
}

impl PhiQuotientCertificate {
    pub fn holds(&self) -> bool {
        self.factors
            && self.injective
            && self.containing_simplex.iter().all(Option::is_some)
            && self.distinct_simplices == self.containing_simplex.len()
            && self.iso.holds()
    }
}

/// Checks that the map induced by `φ` on `X/ι` is injective, that distinct
/// quotient cells land in distinct maximal simplices of `B²`, and that the
/// image is a copy of the quotient.
pub fn verify_phi_injective_on_quotient(
    q: &Quotient,
    phi: &PhiMap,
    b2: &BComplex,
) -> Result<PhiQuotientCertificate> {
    let induced: Vec<usize> = q
        .representatives
        .iter()
        .map(|&r| phi.assignment[r])
        .collect();
    let factors = q
        .orbit_of
        .iter()
        .enumerate()
        .all(|(v, &o)| phi.assignment[v] == induced[o]);
    let injective = induced.iter().sorted().dedup().count() == induced.len();

    let inc = b2.complex.incidence();
    let containing_simplex: Vec<Option<usize>> = q
        .complex
        .simplices()
        .iter()
        .map(|cell| {
            let img: Vec<usize> = cell.iter().map(|&o| induced[o]).collect();
            let hits: Vec<usize> = inc[img[0]]
                .iter()
                .copied()
                .filter(|&s| {
                    img.iter()
                        .all(|v| b2.complex.simplices()[s].binary_search(v).is_ok())
                })
                .collect();
            (hits.len() == 1).then(|| hits[0])
        })
        .collect();
    let distinct_simplices = containing_simplex.iter().flatten().sorted().dedup().count();

    let image_cells: Vec<Vec<usize>> = q
        .complex
        .simplices()
        .iter()
        .map(|cell| cell.iter().map(|&o| induced[o]).sorted().collect())
        .collect();
    let (image, _) = b2.complex.spanned_by(&image_cells)?;
    let iso = IsoCertificate::between(&q.complex, &image);
    Ok(PhiQuotientCertificate {
        factors,
        injective,
        containing_simplex,
        distinct_simplices,
        image,
        iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{grid_complex, icosahedron, simplex_complex};

    #[test]
    fn b_of_a_simplex_is_a_simplex() {
        let s = simplex_complex(5);
        let (b, b2) = build_b2(&s, 5).unwrap();
        assert_eq!(b.complex.vertex_count(), 5);
        assert_eq!(b.complex.simplex_count(), 1);
        assert_eq!(b2.complex.simplex_count(), 1);
        let f = phi(&s, &b, &b2).unwrap();
        assert!(f.fiber_sizes.iter().all(|&k| k == 1));
        assert_eq!(f.image_size(), 5);
    }

    #[test]
    fn b_of_icosahedron() {
        let ico = icosahedron();
        let b = compute_b(&ico, 4).unwrap();
        assert_eq!(b.complex.simplex_count(), 10);
        // oracle: distinct classes over the ten colourings
        let distinct: std::collections::BTreeSet<Vec<usize>> = enumerate_colorings(&ico, 4)
            .iter()
            .flat_map(|c| c.classes().to_vec())
            .collect();
        assert_eq!(b.vertex_count(), distinct.len());
    }

    #[test]
    fn b_of_the_grid_is_the_latin_square_space() {
        let b = compute_b(&grid_complex(5), 5).unwrap();
        assert_eq!(b.complex.simplex_count(), 1344);
        assert_eq!(b.vertex_count(), 120);
        assert!(b.classes.iter().all(|c| c.len() == 5));
    }

    #[test]
    fn duplicate_colorings_are_rejected() {
        let c = ColoringPartition::new(vec![vec![0], vec![1]]);
        assert!(matches!(
            build_b(&[c.clone(), c], 2),
            Err(Error::DuplicateColoring(_))
        ));
    }
}
