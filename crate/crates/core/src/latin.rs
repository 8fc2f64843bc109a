//! Order-5 Latin squares as unordered 5-sets of pairwise discordant
//! permutations, the labelling of `B²` vertices by permutations, and the
//! block decomposition of the square space.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bspace::{BComplex, IsoCertificate};
use crate::complexes::{is_isomorphic, k_cliques, link, Complex, Graph};
use crate::error::{Error, Result};
use crate::golden::DoubleCosetGrid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// A bijection of `{1..5}`, stored 0-based; serialized 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[u8; 5]", try_from = "[u8; 5]")]
pub struct Permutation([u8; 5]);

impl From<Permutation> for [u8; 5] {
    fn from(p: Permutation) -> Self {
        p.0.map(|x| x + 1)
    }
}

impl TryFrom<[u8; 5]> for Permutation {
    type Error = String;
    fn try_from(one_based: [u8; 5]) -> std::result::Result<Self, String> {
        Permutation::from_one_based(&one_based)
            .ok_or_else(|| format!("not a permutation: {one_based:?}"))
    }
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation([0, 1, 2, 3, 4])
    }

    pub fn from_images(images: &[u8]) -> Option<Self> {
        if images.len() != 5 {
            return None;
        }
        let mut seen = [false; 5];
        let mut out = [0u8; 5];
        for (i, &x) in images.iter().enumerate() {
            if x >= 5 || seen[x as usize] {
                return None;
            }
            seen[x as usize] = true;
            out[i] = x;
        }
        Some(Permutation(out))
    }

    pub fn from_one_based(images: &[u8]) -> Option<Self> {
        let zero: Vec<u8> = images
            .iter()
            .map(|&x| x.checked_sub(1))
            .collect::<Option<_>>()?;
        Self::from_images(&zero)
    }

    /// The cycle `(c0 c1 ... )` given 1-based.
    pub fn cycle(one_based: &[u8]) -> Option<Self> {
        let mut images = [0, 1, 2, 3, 4];
        for (k, &a) in one_based.iter().enumerate() {
            let b = one_based[(k + 1) % one_based.len()];
            *images.get_mut(a.checked_sub(1)? as usize)? = b.checked_sub(1)?;
        }
        Self::from_images(&images)
    }

    pub fn images(&self) -> [u8; 5] {
        self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.map(|x| self.0[x as usize]))
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = [0u8; 5];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u8;
        }
        Permutation(out)
    }

    pub fn parity(&self) -> Parity {
        let inversions = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .filter(|&(a, b)| self.0[a] > self.0[b])
            .count();
        if inversions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    pub fn is_discordant(&self, other: &Permutation) -> bool {
        (0..5).all(|i| self.0[i] != other.0[i])
    }

    /// All 120 permutations in lexicographic order of their images.
    pub fn all() -> &'static [Permutation] {
        static ALL: OnceLock<Vec<Permutation>> = OnceLock::new();
        ALL.get_or_init(|| {
            (0u8..5)
                .permutations(5)
                .map(|v| Permutation::from_images(&v).expect("permutation"))
                .collect()
        })
    }

    /// Position in [`Permutation::all`].
    pub fn rank(&self) -> usize {
        Self::all()
            .binary_search(self)
            .expect("every permutation is listed")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in self.0 {
            write!(f, "{}", x + 1)?;
        }
        Ok(())
    }
}

/// An unlabelled Latin square: five pairwise discordant permutations, sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SquareSimplex([Permutation; 5]);

impl SquareSimplex {
    pub fn new(perms: &[Permutation]) -> Option<Self> {
        let mut arr: [Permutation; 5] = perms.try_into().ok()?;
        arr.sort_unstable();
        let ok = arr
            .iter()
            .tuple_combinations()
            .all(|(a, b)| a.is_discordant(b));
        ok.then_some(SquareSimplex(arr))
    }

    pub fn perms(&self) -> &[Permutation; 5] {
        &self.0
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.0.binary_search(p).is_ok()
    }

    /// Every grid cell `(i, σ(i))` is covered by exactly one permutation.
    pub fn tiles_grid(&self) -> bool {
        let mut seen = [[false; 5]; 5];
        for p in &self.0 {
            for (i, row) in seen.iter_mut().enumerate() {
                let j = p.apply(i);
                if row[j] {
                    return false;
                }
                row[j] = true;
            }
        }
        true
    }

    pub fn eta(&self) -> SquareSimplex {
        Self::new(&self.0.map(|p| p.inverse()))
            .expect("inverses of discordant permutations are discordant")
    }

    pub fn translate(&self, tau: &Permutation) -> SquareSimplex {
        translate(tau, self)
    }

    pub fn parity(&self) -> Option<Parity> {
        let first = self.0[0].parity();
        self.0.iter().all(|p| p.parity() == first).then_some(first)
    }
}

pub fn eta(p: &Permutation) -> Permutation {
    p.inverse()
}

/// Left composition `σ ↦ τ∘σ` applied to each permutation of the square.
pub fn translate(tau: &Permutation, s: &SquareSimplex) -> SquareSimplex {
    SquareSimplex::new(&s.0.map(|p| tau.compose(&p))).expect("translation preserves discordance")
}

/// The unique square containing four pairwise discordant permutations.
pub fn complete_square(four: &[Permutation]) -> Option<SquareSimplex> {
    if four.len() != 4 {
        return None;
    }
    let mut missing = [0u8; 5];
    for (i, m) in missing.iter_mut().enumerate() {
        let used: BTreeSet<usize> = four.iter().map(|p| p.apply(i)).collect();
        if used.len() != 4 {
            return None;
        }
        *m = (0..5).find(|j| !used.contains(j))? as u8;
    }
    let fifth = Permutation::from_images(&missing)?;
    let mut all = four.to_vec();
    all.push(fifth);
    SquareSimplex::new(&all)
}

pub fn discordance_graph() -> Graph {
    let all = Permutation::all();
    let mut g = Graph::new(all.len());
    for (a, b) in (0..all.len()).tuple_combinations() {
        if all[a].is_discordant(&all[b]) {
            g.add_edge(a, b);
        }
    }
    g
}

/// All unlabelled 5×5 Latin squares, as 5-cliques of the discordance graph.
pub fn enumerate_latin_squares() -> Vec<SquareSimplex> {
    let all = Permutation::all();
    k_cliques(&discordance_graph(), 5)
        .into_iter()
        .map(|c| {
            SquareSimplex::new(&c.iter().map(|&i| all[i]).collect_vec())
                .expect("clique is a square")
        })
        .sorted()
        .collect()
}

/// Permutations occurring in at least one square, ascending.
pub fn vertex_set(squares: &[SquareSimplex]) -> Vec<Permutation> {
    squares.iter().flat_map(|s| s.0).sorted().dedup().collect()
}

/// `S₅` as a complex: vertex `k` is `Permutation::all()[k]`.
pub fn s5_complex(squares: &[SquareSimplex]) -> Result<Complex> {
    let labels = Permutation::all().iter().map(|p| p.to_string()).collect();
    let simplices = squares
        .iter()
        .map(|s| s.0.iter().map(|p| p.rank()).sorted().collect())
        .collect();
    Complex::new(labels, simplices)
}

/// Whether the five permutations, stacked as rows in some order, have five
/// even column permutations `r ↦ σ_r(i)`.
pub fn has_even_arrangement(s: &SquareSimplex) -> bool {
    (0..5).permutations(5).any(|order| {
        (0..5).all(|i| {
            let column: Vec<u8> = order.iter().map(|&r| s.0[r].0[i]).collect();
            Permutation::from_images(&column).is_some_and(|c| c.is_even())
        })
    })
}

/// Reading of `B` and `B²` vertices through the double-coset grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationLabeling {
    /// Grid cell `(row, column)` of each `B` vertex.
    pub b_cells: Vec<(usize, usize)>,
    /// Permutation of each `B²` vertex.
    pub b2_perms: Vec<Permutation>,
}

impl PermutationLabeling {
    /// Labels `B` vertices by grid cells and `B²` vertices by the permutation
    /// matrix their cells form, read row → column (or column → row when
    /// `transposed`).
    pub fn new(
        b: &BComplex,
        b2: &BComplex,
        grid: &DoubleCosetGrid,
        transposed: bool,
    ) -> Result<Self> {
        let mut where_is: HashMap<&[usize], (usize, usize)> = HashMap::new();
        for i in 0..5 {
            for j in 0..5 {
                let cell = if transposed { (j, i) } else { (i, j) };
                where_is.insert(grid.cell(i, j), cell);
            }
        }
        let b_cells = b
            .classes
            .iter()
            .map(|c| {
                where_is.get(c.as_slice()).copied().ok_or_else(|| {
                    Error::Construction(format!("class of size {} is not a grid cell", c.len()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let b2_perms = b2
            .classes
            .iter()
            .map(|c| {
                let mut images = [u8::MAX; 5];
                for &v in c {
                    let (i, j) = b_cells[v];
                    images[i] = j as u8;
                }
                Permutation::from_images(&images)
                    .filter(|_| c.len() == 5)
                    .ok_or_else(|| {
                        Error::Construction(format!("B² vertex {c:?} is not a permutation matrix"))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PermutationLabeling { b_cells, b2_perms })
    }

    /// Maximal simplices of `B²` read as squares, sorted.
    pub fn squares(&self, b2: &BComplex) -> Result<Vec<SquareSimplex>> {
        b2.complex
            .simplices()
            .iter()
            .map(|s| {
                let perms = s.iter().map(|&v| self.b2_perms[v]).collect_vec();
                SquareSimplex::new(&perms).ok_or_else(|| {
                    Error::Construction(format!("B² simplex {s:?} is not a Latin square"))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(|v| v.into_iter().sorted().collect())
    }
}

/// The 25 sets `{σ : σ(i) = j}`, sorted.
pub fn stabilizer_sets() -> Vec<Vec<Permutation>> {
    (0..5)
        .cartesian_product(0..5)
        .map(|(i, j)| {
            Permutation::all()
                .iter()
                .copied()
                .filter(|p| p.apply(i) == j)
                .collect()
        })
        .sorted()
        .collect()
}

/// A labelled copy of a pure 3-complex whose tetrahedra land on four
/// discordant permutations; each tetrahedron picks out the square completing it.
#[derive(Clone, Debug)]
pub struct Block {
    pub name: String,
    pub images: Vec<Permutation>,
    /// Square of each tetrahedron of the base complex.
    pub squares: Vec<SquareSimplex>,
}

impl Block {
    pub fn new(name: &str, base: &Complex, images: Vec<Permutation>) -> Result<Self> {
        let squares = base
            .simplices()
            .iter()
            .map(|cell| {
                let four = cell.iter().map(|&v| images[v]).collect_vec();
                complete_square(&four).ok_or_else(|| {
                    Error::Construction(format!(
                        "{name}: image of {cell:?} does not extend to a square"
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Block {
            name: name.to_string(),
            images,
            squares,
        })
    }

    pub fn square_set(&self) -> BTreeSet<SquareSimplex> {
        self.squares.iter().copied().collect()
    }

    pub fn is_injective(&self) -> bool {
        self.images.iter().sorted().dedup().count() == self.images.len()
    }

    /// The complex of image tetrahedra (vertices relabelled ascending).
    pub fn image_complex(&self, base: &Complex) -> Result<Complex> {
        let perms: Vec<Permutation> = self.images.iter().copied().sorted().dedup().collect();
        let labels = perms.iter().map(|p| p.to_string()).collect();
        let simplices = base
            .simplices()
            .iter()
            .map(|cell| {
                cell.iter()
                    .map(|&v| perms.binary_search(&self.images[v]).expect("image listed"))
                    .sorted()
                    .dedup()
                    .collect()
            })
            .sorted()
            .dedup()
            .collect();
        Complex::new(labels, simplices)
    }

    pub fn vertex_parities(&self) -> BTreeMap<Parity, usize> {
        let mut m = BTreeMap::new();
        for p in self.images.iter().sorted().dedup() {
            *m.entry(p.parity()).or_default() += 1;
        }
        m
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSummary {
    pub name: String,
    pub injective: bool,
    pub distinct_squares: usize,
    pub vertex_parities: BTreeMap<Parity, usize>,
    pub isomorphic_to_base: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSummary {
    pub squares: usize,
    pub vertices: usize,
    /// `Some` when every vertex has this parity.
    pub vertex_parity: Option<Parity>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub blocks: Vec<BlockSummary>,
    /// Shared squares for each pair of blocks.
    pub overlaps: Vec<(String, String, usize)>,
    pub remainder: Vec<SquareSimplex>,
    /// Components of the remainder under "share a vertex", largest first.
    pub components: Vec<ComponentSummary>,
    /// Components of the remainder under "share a 3-face".
    pub three_face_components: usize,
    pub remainder_all_even: usize,
    pub remainder_all_odd: usize,
    pub remainder_mixed: usize,
    pub components_isomorphic: bool,
    #[serde(skip)]
    pub block_squares: Vec<Vec<SquareSimplex>>,
    #[serde(skip)]
    pub component_squares: Vec<Vec<SquareSimplex>>,
}

impl Decomposition {
    /// Reasons the four-block decomposition does not hold; empty when it does.
    pub fn failures(&self, base_cells: usize, total: usize) -> Vec<String> {
        let mut out = Vec::new();
        for b in &self.blocks {
            if b.distinct_squares != base_cells {
                out.push(format!(
                    "{} has {} distinct squares",
                    b.name, b.distinct_squares
                ));
            }
            if !b.injective {
                out.push(format!("{} is not injective on vertices", b.name));
            }
            if !b.isomorphic_to_base {
                out.push(format!("{} is not isomorphic to the base", b.name));
            }
        }
        for (a, b, k) in &self.overlaps {
            if *k > 0 {
                out.push(format!("{a} and {b} share {k} squares"));
            }
        }
        let expected = total.saturating_sub(4 * base_cells);
        if self.remainder.len() != expected {
            out.push(format!(
                "remainder has {} squares, expected {expected}",
                self.remainder.len()
            ));
        }
        if self.components.len() != 2 {
            out.push(format!(
                "remainder has {} components",
                self.components.len()
            ));
        } else if self.components[0].squares != self.components[1].squares {
            out.push("remainder components have different sizes".into());
        }
        if !self.components_isomorphic {
            out.push("remainder components are not isomorphic".into());
        }
        if !self
            .components
            .iter()
            .any(|c| c.vertex_parity == Some(Parity::Even))
        {
            out.push("no remainder component has an all-even vertex set".into());
        }
        if self.components.iter().any(|c| c.vertex_parity.is_none()) {
            out.push("component split disagrees with the parity split".into());
        }
        out
    }

    /// Squares of the remainder component whose vertices are all even.
    pub fn even_component(&self) -> Option<&[SquareSimplex]> {
        self.components
            .iter()
            .position(|c| c.vertex_parity == Some(Parity::Even))
            .map(|k| self.component_squares[k].as_slice())
    }
}

fn components_by<F: Fn(&SquareSimplex, &SquareSimplex) -> bool>(
    squares: &[SquareSimplex],
    linked: F,
) -> Vec<Vec<SquareSimplex>> {
    let n = squares.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for (a, b) in (0..n).tuple_combinations() {
        if linked(&squares[a], &squares[b]) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: BTreeMap<usize, Vec<SquareSimplex>> = BTreeMap::new();
    for (k, s) in squares.iter().enumerate() {
        let r = find(&mut parent, k);
        groups.entry(r).or_default().push(*s);
    }
    groups
        .into_values()
        .sorted_by_key(|g| (std::cmp::Reverse(g.len()), g[0]))
        .collect()
}

fn shared(a: &SquareSimplex, b: &SquareSimplex) -> usize {
    a.0.iter().filter(|p| b.contains(p)).count()
}

fn squares_complex(squares: &[SquareSimplex]) -> Result<Complex> {
    let perms = vertex_set(squares);
    let labels = perms.iter().map(|p| p.to_string()).collect();
    let simplices = squares
        .iter()
        .map(|s| {
            s.0.iter()
                .map(|p| perms.binary_search(p).expect("listed"))
                .collect()
        })
        .collect();
    Complex::new(labels, simplices)
}

/// Splits `all` into the four blocks generated from `images` (a labelling of
/// `base` by permutations) by `η` and by left translation with `tau`, plus the
/// remainder.
pub fn decompose(
    all: &[SquareSimplex],
    base: &Complex,
    images: &[Permutation],
    tau: &Permutation,
) -> Result<Decomposition> {
    let with = |f: &dyn Fn(Permutation) -> Permutation| images.iter().map(|&p| f(p)).collect_vec();
    let blocks = vec![
        Block::new("phi", base, images.to_vec())?,
        Block::new("eta_phi", base, with(&|p| p.inverse()))?,
        Block::new("tau_phi", base, with(&|p| tau.compose(&p)))?,
        Block::new("tau_eta_phi", base, with(&|p| tau.compose(&p.inverse())))?,
    ];
    let sets: Vec<BTreeSet<SquareSimplex>> = blocks.iter().map(Block::square_set).collect();
    let summaries = blocks
        .par_iter()
        .zip(&sets)
        .map(|(b, set)| {
            let isomorphic_to_base = b
                .image_complex(base)
                .map(|img| is_isomorphic(base, &img).is_some())
                .unwrap_or(false);
            BlockSummary {
                name: b.name.clone(),
                injective: b.is_injective(),
                distinct_squares: set.len(),
                vertex_parities: b.vertex_parities(),
                isomorphic_to_base,
            }
        })
        .collect::<Vec<_>>();
    let overlaps = (0..4)
        .tuple_combinations()
        .map(|(a, b)| {
            (
                blocks[a].name.clone(),
                blocks[b].name.clone(),
                sets[a].intersection(&sets[b]).count(),
            )
        })
        .collect();
    let used: BTreeSet<SquareSimplex> = sets.iter().flatten().copied().collect();
    let remainder: Vec<SquareSimplex> = all
        .iter()
        .filter(|s| !used.contains(s))
        .copied()
        .sorted()
        .collect();

    let component_squares = components_by(&remainder, |a, b| shared(a, b) > 0);
    let three_face_components = components_by(&remainder, |a, b| shared(a, b) >= 4).len();
    let components = component_squares
        .iter()
        .map(|c| {
            let verts = vertex_set(c);
            let first = verts[0].parity();
            ComponentSummary {
                squares: c.len(),
                vertices: verts.len(),
                vertex_parity: verts.iter().all(|p| p.parity() == first).then_some(first),
            }
        })
        .collect();
    let components_isomorphic = match component_squares.as_slice() {
        [a, b] => is_isomorphic(&squares_complex(a)?, &squares_complex(b)?).is_some(),
        _ => false,
    };
    let count = |want: Option<Parity>| remainder.iter().filter(|s| s.parity() == want).count();
    Ok(Decomposition {
        blocks: summaries,
        overlaps,
        remainder_all_even: count(Some(Parity::Even)),
        remainder_all_odd: count(Some(Parity::Odd)),
        remainder_mixed: count(None),
        remainder,
        components,
        three_face_components,
        components_isomorphic,
        block_squares: sets.iter().map(|s| s.iter().copied().collect()).collect(),
        component_squares,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenCharacterization {
    /// Squares whose five permutations are all even.
    pub all_even_squares: usize,
    pub in_even_component: usize,
    pub with_even_arrangement: usize,
    /// All-even squares where membership and the arrangement test disagree.
    pub mismatches: usize,
}

impl EvenCharacterization {
    pub fn holds(&self) -> bool {
        self.mismatches == 0 && self.in_even_component > 0
    }
}

/// For every all-even square: it lies in the even remainder component iff
/// some row order of its permutations has all five columns even.
pub fn verify_even_square_characterization(
    all: &[SquareSimplex],
    d: &Decomposition,
) -> EvenCharacterization {
    let even_component: BTreeSet<SquareSimplex> =
        d.even_component().unwrap_or(&[]).iter().copied().collect();
    let rows: Vec<(bool, bool)> = all
        .par_iter()
        .filter(|s| s.parity() == Some(Parity::Even))
        .map(|s| (even_component.contains(s), has_even_arrangement(s)))
        .collect();
    EvenCharacterization {
        all_even_squares: rows.len(),
        in_even_component: rows.iter().filter(|r| r.0).count(),
        with_even_arrangement: rows.iter().filter(|r| r.1).count(),
        mismatches: rows.iter().filter(|r| r.0 != r.1).count(),
    }
}

#[derive(Clone, Debug)]
pub struct LinkCertificate {
    pub link_vertices: usize,
    pub link_simplices: usize,
    /// Vertices whose link is not isomorphic to the identity's.
    pub non_isomorphic: Vec<usize>,
    pub to_b2_icosahedron: IsoCertificate,
}

impl LinkCertificate {
    pub fn holds(&self) -> bool {
        self.non_isomorphic.is_empty() && self.to_b2_icosahedron.holds()
    }
}

/// Compares every vertex link of `s5` with the link at `base_vertex`, and
/// that link with `target`.
pub fn verify_link_regularity(
    s5: &Complex,
    base_vertex: usize,
    target: &Complex,
) -> Result<LinkCertificate> {
    let base = link(s5, base_vertex)?;
    let links = (0..s5.vertex_count())
        .into_par_iter()
        .map(|v| link(s5, v).map(|l| (v, l)))
        .collect::<Result<Vec<_>>>()?;
    let non_isomorphic = links
        .par_iter()
        .filter(|(_, l)| is_isomorphic(&base, l).is_none())
        .map(|(v, _)| *v)
        .collect();
    Ok(LinkCertificate {
        link_vertices: base.vertex_count(),
        link_simplices: base.simplex_count(),
        non_isomorphic,
        to_b2_icosahedron: IsoCertificate::between(&base, target),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(one_based: [u8; 5]) -> Permutation {
        Permutation::from_one_based(&one_based).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let c = Permutation::cycle(&[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(c, p([2, 3, 4, 5, 1]));
        assert_eq!(c.inverse(), Permutation::cycle(&[1, 5, 4, 3, 2]).unwrap());
        assert_eq!(c.compose(&c.inverse()), Permutation::identity());
        assert_eq!(eta(&Permutation::identity()), Permutation::identity());
        assert_eq!(c.parity(), Parity::Even);
        assert_eq!(Permutation::cycle(&[1, 2]).unwrap().parity(), Parity::Odd);
        assert_eq!(Permutation::all().len(), 120);
        assert_eq!(
            Permutation::all().iter().filter(|q| q.is_even()).count(),
            60
        );
        assert!(Permutation::from_images(&[0, 0, 1, 2, 3]).is_none());
        assert_eq!(serde_json::to_string(&c).unwrap(), "[2,3,4,5,1]");
        assert_eq!(
            serde_json::from_str::<Permutation>("[2,3,4,5,1]").unwrap(),
            c
        );
        assert!(serde_json::from_str::<Permutation>("[2,2,4,5,1]").is_err());
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Permutation::cycle(&[1, 2]).unwrap();
        let b = Permutation::cycle(&[2, 3]).unwrap();
        // (1 2)∘(2 3) sends 2 -> 3, 3 -> 2 -> 1, 1 -> 2
        assert_eq!(a.compose(&b), Permutation::cycle(&[1, 2, 3]).unwrap());
    }

    #[test]
    fn cyclic_square() {
        let c = Permutation::cycle(&[1, 2, 3, 4, 5]).unwrap();
        let powers = (0..5)
            .map(|k| (0..k).fold(Permutation::identity(), |acc, _| c.compose(&acc)))
            .collect_vec();
        let s = SquareSimplex::new(&powers).expect("cyclic square");
        assert!(s.tiles_grid());
        assert_eq!(complete_square(&powers[1..]), Some(s));
        assert_eq!(s.translate(&Permutation::identity()), s);
    }

    #[test]
    fn squares_and_their_symmetries() {
        let squares = enumerate_latin_squares();
        assert_eq!(squares.len(), 1344);
        assert!(squares.iter().all(SquareSimplex::tiles_grid));
        let verts = vertex_set(&squares);
        assert_eq!(verts.len(), 120);
        for v in [Permutation::identity(), p([3, 1, 5, 2, 4])] {
            assert_eq!(squares.iter().filter(|s| s.contains(&v)).count(), 56);
        }
        let set: BTreeSet<_> = squares.iter().copied().collect();
        let etas: BTreeSet<_> = squares.iter().map(SquareSimplex::eta).collect();
        assert_eq!(etas, set);
        let tau = Permutation::cycle(&[1, 2]).unwrap();
        for s in &squares {
            assert!(set.contains(&s.translate(&tau)));
            assert_eq!(s.translate(&tau.inverse()).translate(&tau), *s);
        }
    }

    #[test]
    fn even_arrangement() {
        let c = Permutation::cycle(&[1, 2, 3, 4, 5]).unwrap();
        let powers = (0..5)
            .map(|k| (0..k).fold(Permutation::identity(), |acc, _| c.compose(&acc)))
            .collect_vec();
        let s = SquareSimplex::new(&powers).unwrap();
        // columns of the stacked cyclic group are again 5-cycles
        assert!(has_even_arrangement(&s));
        let odd = SquareSimplex::new(
            &powers
                .iter()
                .map(|q| Permutation::cycle(&[1, 2]).unwrap().compose(q))
                .collect_vec(),
        )
        .unwrap();
        assert_eq!(odd.parity(), Some(Parity::Odd));
    }

    #[test]
    fn stabilizer_sets_partition_twice() {
        let sets = stabilizer_sets();
        assert_eq!(sets.len(), 25);
        assert!(sets.iter().all(|s| s.len() == 24));
    }

    #[test]
    fn s5_links() {
        let squares = enumerate_latin_squares();
        let s5 = s5_complex(&squares).unwrap();
        let l = link(&s5, Permutation::identity().rank()).unwrap();
        assert_eq!((l.vertex_count(), l.simplex_count()), (44, 56));
    }
}
