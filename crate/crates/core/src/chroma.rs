//! Colourings of pure complexes, counted as unordered partitions.
//!
//! A colouring with `n` colours assigns a colour to every vertex so that the
//! vertices of each maximal simplex get distinct colours, i.e. it is a proper
//! colouring of the 1-skeleton. Colourings are stored as their set of colour
//! classes, so relabelling the colours does not produce a new colouring, and
//! all `n` classes must be nonempty.

use std::sync::atomic::{AtomicBool, Ordering};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complexes::{Complex, Graph};
use crate::error::{Error, Result};

const UNCOLORED: u8 = u8::MAX;
const MAX_COLORS: usize = 31;

/// A colouring as a set of disjoint vertex classes. Each class is sorted and
/// the classes are sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColoringPartition {
    classes: Vec<Vec<usize>>,
}

impl ColoringPartition {
    pub fn new(classes: Vec<Vec<usize>>) -> Self {
        let mut classes: Vec<Vec<usize>> = classes
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        classes.sort();
        ColoringPartition { classes }
    }

    /// Partition induced by a colour label per vertex.
    pub fn from_labels(labels: &[u8]) -> Self {
        let k = labels.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in labels.iter().enumerate() {
            classes[c as usize].push(v);
        }
        ColoringPartition::new(classes)
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.binary_search(&v).is_ok())
    }

    /// True when no edge of `g` joins two vertices of the same class and the
    /// classes cover every vertex exactly once.
    pub fn is_proper(&self, g: &Graph) -> bool {
        let mut label = vec![usize::MAX; g.len()];
        for (i, c) in self.classes.iter().enumerate() {
            for &v in c {
                if v >= g.len() || label[v] != usize::MAX {
                    return false;
                }
                label[v] = i;
            }
        }
        label.iter().all(|&l| l != usize::MAX)
            && g.edges().iter().all(|&(a, b)| label[a] != label[b])
    }

    /// Keeps only the listed vertices (original indices); empty classes vanish.
    pub fn restrict(&self, keep: &FixedBitSet) -> ColoringPartition {
        ColoringPartition::new(
            self.classes
                .iter()
                .map(|c| c.iter().copied().filter(|&v| keep.contains(v)).collect())
                .collect(),
        )
    }

    /// Renames every vertex through `f`.
    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> ColoringPartition {
        ColoringPartition::new(
            self.classes
                .iter()
                .map(|c| c.iter().map(|&v| f(v)).collect())
                .collect(),
        )
    }
}

/// All colourings of `x` with exactly `n` nonempty classes, in canonical order.
pub fn enumerate_colorings(x: &Complex, n: usize) -> Vec<ColoringPartition> {
    enumerate_graph_colorings(&x.graph(), n, None)
}

/// Proper colourings of `g` with exactly `n` nonempty classes.
///
/// `precolor`, when given, fixes the colour label of some vertices; those
/// labels are only compared with each other, so any consistent numbering is
/// accepted.
pub fn enumerate_graph_colorings(
    g: &Graph,
    n: usize,
    precolor: Option<&[Option<u8>]>,
) -> Vec<ColoringPartition> {
    assert!(n <= MAX_COLORS, "at most {MAX_COLORS} colours supported");
    let engine = Engine::new(g, n);
    let Some(root) = engine.root(precolor) else {
        return Vec::new();
    };

    // Expand breadth-first into a frontier of independent subtrees.
    let mut frontier = vec![root];
    let mut done = Vec::new();
    let target = 4 * rayon::current_num_threads().max(1);
    while !frontier.is_empty() && frontier.len() < target {
        let mut next = Vec::new();
        for s in frontier {
            engine.branch(s, &mut next, &mut done);
        }
        frontier = next;
    }
    let mut out: Vec<ColoringPartition> = frontier
        .into_par_iter()
        .flat_map_iter(|s| {
            let mut found = Vec::new();
            engine.dfs(s, &mut found);
            found
        })
        .collect();
    out.extend(done);
    out.sort();
    out
}

#[derive(Clone)]
struct State {
    color: Vec<u8>,
    domain: Vec<u32>,
    used: usize,
    remaining: usize,
}

struct Engine<'a> {
    g: &'a Graph,
    n: usize,
    rank: Vec<usize>,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, n: usize) -> Self {
        // tie-break: descending degree, then index
        let mut by: Vec<usize> = (0..g.len()).collect();
        by.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut rank = vec![0; g.len()];
        for (r, &v) in by.iter().enumerate() {
            rank[v] = r;
        }
        Engine { g, n, rank }
    }

    fn root(&self, precolor: Option<&[Option<u8>]>) -> Option<State> {
        let len = self.g.len();
        let mut s = State {
            color: vec![UNCOLORED; len],
            domain: vec![(1u32 << self.n) - 1; len],
            used: 0,
            remaining: len,
        };
        if let Some(pre) = precolor {
            // renumber fixed labels by first appearance so they form a prefix
            let mut rename: Vec<Option<u8>> = vec![None; 256];
            for (v, c) in pre.iter().enumerate() {
                let Some(c) = *c else { continue };
                let c = match rename[c as usize] {
                    Some(r) => r,
                    None => {
                        if s.used == self.n {
                            return None;
                        }
                        let r = s.used as u8;
                        rename[c as usize] = Some(r);
                        s.used += 1;
                        r
                    }
                };
                if s.domain[v] & (1 << c) == 0 {
                    return None;
                }
                s = self.assign(s, v, c)?;
            }
        }
        Some(s)
    }

    fn options(&self, s: &State, v: usize) -> u32 {
        let used_mask = (1u32 << s.used) - 1;
        let mut opts = s.domain[v] & used_mask;
        if s.used < self.n {
            opts |= 1 << s.used;
        }
        opts
    }

    fn assign(&self, mut s: State, v: usize, c: u8) -> Option<State> {
        s.color[v] = c;
        s.remaining -= 1;
        if c as usize == s.used {
            s.used += 1;
        }
        let bit = 1u32 << c;
        for u in self.g.neighbors(v).ones() {
            if s.color[u] == c {
                return None;
            }
            if s.color[u] == UNCOLORED {
                s.domain[u] &= !bit;
                if self.options(&s, u) == 0 {
                    return None;
                }
            }
        }
        Some(s)
    }

    fn finished(&self, s: &State) -> Option<ColoringPartition> {
        (s.remaining == 0 && s.used == self.n).then(|| ColoringPartition::from_labels(&s.color))
    }

    fn pick(&self, s: &State) -> Option<usize> {
        (0..self.g.len())
            .filter(|&v| s.color[v] == UNCOLORED)
            .min_by_key(|&v| (self.options(s, v).count_ones(), self.rank[v]))
    }

    fn branch(&self, s: State, next: &mut Vec<State>, done: &mut Vec<ColoringPartition>) {
        if s.remaining == 0 {
            done.extend(self.finished(&s));
            return;
        }
        if self.n - s.used > s.remaining {
            return;
        }
        let v = self.pick(&s).expect("uncoloured vertex");
        let opts = self.options(&s, v);
        for c in 0..self.n as u8 {
            if opts & (1 << c) != 0 {
                next.extend(self.assign(s.clone(), v, c));
            }
        }
    }

    fn dfs(&self, s: State, out: &mut Vec<ColoringPartition>) {
        if s.remaining == 0 {
            out.extend(self.finished(&s));
            return;
        }
        if self.n - s.used > s.remaining {
            return;
        }
        let v = self.pick(&s).expect("uncoloured vertex");
        let opts = self.options(&s, v);
        for c in 0..self.n as u8 {
            if opts & (1 << c) != 0 {
                if let Some(t) = self.assign(s.clone(), v, c) {
                    self.dfs(t, out);
                }
            }
        }
    }
}

/// Greedy partition of `cand` into cliques of `g`, lowest vertex first.
fn greedy_clique_cover(g: &Graph, cand: &FixedBitSet) -> Vec<Vec<usize>> {
    let mut rest = cand.clone();
    let mut cover = Vec::new();
    while let Some(v) = rest.minimum() {
        let mut clique = vec![v];
        rest.set(v, false);
        let mut pool = rest.clone();
        pool.intersect_with(g.neighbors(v));
        while let Some(u) = pool.minimum() {
            clique.push(u);
            rest.set(u, false);
            pool.set(u, false);
            pool.intersect_with(g.neighbors(u));
        }
        cover.push(clique);
    }
    cover
}

struct IndependentSearch<'a> {
    g: &'a Graph,
    target: usize,
    first_only: bool,
    stop: AtomicBool,
}

impl IndependentSearch<'_> {
    fn run(&self, chosen: Vec<usize>, cand: FixedBitSet, depth: usize) -> Vec<Vec<usize>> {
        if self.stop.load(Ordering::Relaxed) {
            return Vec::new();
        }
        if chosen.len() == self.target {
            if self.first_only {
                self.stop.store(true, Ordering::Relaxed);
            }
            let mut s = chosen;
            s.sort_unstable();
            return vec![s];
        }
        let need = self.target - chosen.len();
        if cand.count_ones(..) < need {
            return Vec::new();
        }
        // An independent set meets each clique of a cover at most once.
        let cover = greedy_clique_cover(self.g, &cand);
        if cover.len() < need {
            return Vec::new();
        }
        let clique = cover
            .iter()
            .min_by_key(|c| c.len())
            .expect("nonempty cover")
            .clone();
        let mut branches: Vec<(Vec<usize>, FixedBitSet)> = clique
            .iter()
            .map(|&v| {
                let mut next = cand.clone();
                next.difference_with(self.g.neighbors(v));
                for &u in &clique {
                    next.set(u, false);
                }
                let mut c = chosen.clone();
                c.push(v);
                (c, next)
            })
            .collect();
        let mut without = cand;
        for &u in &clique {
            without.set(u, false);
        }
        branches.push((chosen, without));
        if depth < 3 {
            branches
                .into_par_iter()
                .flat_map_iter(|(c, next)| self.run(c, next, depth + 1))
                .collect()
        } else {
            branches
                .into_iter()
                .flat_map(|(c, next)| self.run(c, next, depth + 1))
                .collect()
        }
    }
}

/// Every independent set of exactly `size` vertices, sorted.
pub fn independent_sets_of_size(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    let search = IndependentSearch {
        g,
        target: size,
        first_only: false,
        stop: AtomicBool::new(false),
    };
    let mut all = FixedBitSet::with_capacity(g.len());
    all.insert_range(..);
    let mut sets = search.run(Vec::new(), all, 0);
    sets.sort();
    sets
}

/// Whether `g` has an independent set of `size` vertices.
pub fn has_independent_set(g: &Graph, size: usize) -> bool {
    let search = IndependentSearch {
        g,
        target: size,
        first_only: true,
        stop: AtomicBool::new(false),
    };
    let mut all = FixedBitSet::with_capacity(g.len());
    all.insert_range(..);
    !search.run(Vec::new(), all, 0).is_empty()
}

/// All ways to choose sets from `sets` that cover `0..universe` exactly once,
/// as sorted lists of set indices.
pub fn exact_covers(universe: usize, sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut containing = vec![Vec::new(); universe];
    for (i, s) in sets.iter().enumerate() {
        for &v in s {
            containing[v].push(i);
        }
    }
    let mut out = Vec::new();
    let mut covered = vec![false; universe];
    let mut chosen = Vec::new();
    cover_step(sets, &containing, &mut covered, &mut chosen, &mut out);
    out.sort();
    out
}

fn cover_step(
    sets: &[Vec<usize>],
    containing: &[Vec<usize>],
    covered: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let fits = |i: usize, covered: &[bool]| sets[i].iter().all(|&v| !covered[v]);
    // column with the fewest usable rows
    let column = (0..covered.len())
        .filter(|&v| !covered[v])
        .min_by_key(|&v| containing[v].iter().filter(|&&i| fits(i, covered)).count());
    let Some(column) = column else {
        let mut c = chosen.clone();
        c.sort_unstable();
        out.push(c);
        return;
    };
    for &i in &containing[column] {
        if !fits(i, covered) {
            continue;
        }
        for &v in &sets[i] {
            covered[v] = true;
        }
        chosen.push(i);
        cover_step(sets, containing, covered, chosen, out);
        chosen.pop();
        for &v in &sets[i] {
            covered[v] = false;
        }
    }
}

/// Colourings of `x` whose classes all have exactly `class_size` vertices,
/// found as exact covers by independent sets.
///
/// This agrees with [`enumerate_colorings`] whenever `x` has no independent
/// set larger than `class_size` and `|V| = n·class_size`; both conditions
/// are checked.
pub fn enumerate_colorings_by_class_cover(
    x: &Complex,
    n: usize,
    class_size: usize,
) -> Result<Vec<ColoringPartition>> {
    if x.vertex_count() != n * class_size {
        return Err(Error::InvalidComplex(format!(
            "{} vertices cannot split into {n} classes of {class_size}",
            x.vertex_count()
        )));
    }
    let g = x.graph();
    if has_independent_set(&g, class_size + 1) {
        return Err(Error::ClassSizeNotForced {
            class_size,
            found: class_size + 1,
        });
    }
    let sets = independent_sets_of_size(&g, class_size);
    let mut out: Vec<ColoringPartition> = exact_covers(x.vertex_count(), &sets)
        .into_iter()
        .filter(|c| c.len() == n)
        .map(|c| ColoringPartition::new(c.iter().map(|&i| sets[i].clone()).collect()))
        .collect();
    out.sort();
    Ok(out)
}

/// One step `S_k → S_{k+1}` of the shell construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellStage {
    pub from_vertices: usize,
    pub to_vertices: usize,
    pub source_colorings: usize,
    /// Number of extensions of each colouring of `S_k`, in canonical order.
    pub extension_counts: Vec<usize>,
}

impl ShellStage {
    pub fn is_unique(&self) -> bool {
        !self.extension_counts.is_empty() && self.extension_counts.iter().all(|&c| c == 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellReport {
    pub seed: usize,
    pub colors: usize,
    pub shell_vertex_counts: Vec<usize>,
    pub star_colorings: usize,
    pub stages: Vec<ShellStage>,
    pub covers_complex: bool,
}

impl ShellReport {
    /// Every colouring of every shell extends in exactly one way, and the
    /// shells exhaust the complex.
    pub fn unique_at_every_stage(&self) -> bool {
        self.covers_complex && self.stages.iter().all(ShellStage::is_unique)
    }
}

/// Grows shells `S₀ = star(v)`, `S_{k+1} = S_k ∪ {σ : σ meets S_k}` and
/// counts how each colouring of a shell extends to the next one.
pub fn verify_shell_extension(x: &Complex, v: usize, n: usize) -> Result<ShellReport> {
    if v >= x.vertex_count() {
        return Err(Error::InvalidComplex(format!("vertex {v} out of range")));
    }
    let mut in_shell = FixedBitSet::with_capacity(x.vertex_count());
    in_shell.insert(v);
    let mut shells: Vec<Vec<Vec<usize>>> = Vec::new();
    loop {
        let simplices: Vec<Vec<usize>> = x
            .simplices()
            .iter()
            .filter(|s| s.iter().any(|&u| in_shell.contains(u)))
            .cloned()
            .collect();
        if shells
            .last()
            .is_some_and(|prev| prev.len() == simplices.len())
        {
            break;
        }
        for s in &simplices {
            for &u in s {
                in_shell.insert(u);
            }
        }
        shells.push(simplices);
    }
    let parts: Vec<(Complex, Vec<usize>)> = shells
        .iter()
        .map(|s| x.spanned_by(s))
        .collect::<Result<_>>()?;

    let mut stages = Vec::new();
    let mut colorings = enumerate_colorings(&parts[0].0, n);
    let star_colorings = colorings.len();
    for k in 0..parts.len().saturating_sub(1) {
        let (from, from_orig) = &parts[k];
        let (to, to_orig) = &parts[k + 1];
        let to_graph = to.graph();
        let local: std::collections::HashMap<usize, usize> =
            to_orig.iter().enumerate().map(|(i, &o)| (o, i)).collect();
        let counts: Vec<usize> = colorings
            .iter()
            .map(|c| {
                let mut pre = vec![None; to.vertex_count()];
                for (label, class) in c.classes().iter().enumerate() {
                    for &u in class {
                        pre[local[&from_orig[u]]] = Some(label as u8);
                    }
                }
                enumerate_graph_colorings(&to_graph, n, Some(&pre)).len()
            })
            .collect();
        stages.push(ShellStage {
            from_vertices: from.vertex_count(),
            to_vertices: to.vertex_count(),
            source_colorings: colorings.len(),
            extension_counts: counts,
        });
        colorings = enumerate_colorings(to, n);
    }
    let last = parts.last().expect("at least the star");
    Ok(ShellReport {
        seed: v,
        colors: n,
        shell_vertex_counts: parts.iter().map(|p| p.0.vertex_count()).collect(),
        star_colorings,
        stages,
        covers_complex: last.0.vertex_count() == x.vertex_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{grid_complex, icosahedron, octahedron, simplex_complex};

    #[test]
    fn simplex_has_one_rainbow_coloring() {
        let c = enumerate_colorings(&simplex_complex(5), 5);
        assert_eq!(c.len(), 1);
        assert_eq!(
            c[0].classes(),
            &[vec![0], vec![1], vec![2], vec![3], vec![4]]
        );
        assert!(enumerate_colorings(&simplex_complex(5), 4).is_empty());
    }

    #[test]
    fn icosahedron_has_ten_four_colorings() {
        let ico = icosahedron();
        let c = enumerate_colorings(&ico, 4);
        assert_eq!(c.len(), 10);
        let g = ico.graph();
        assert!(c.iter().all(|p| p.is_proper(&g) && p.class_count() == 4));
    }

    #[test]
    fn octahedron_three_colorings() {
        // opposite vertices share a colour: exactly one partition
        assert_eq!(enumerate_colorings(&octahedron(), 3).len(), 1);
    }

    #[test]
    fn precolor_fixes_labels() {
        let g = simplex_complex(3).graph();
        let pre = [Some(7), None, Some(7)];
        assert!(enumerate_graph_colorings(&g, 3, Some(&pre)).is_empty());
        let pre = [Some(9), None, Some(4)];
        assert_eq!(enumerate_graph_colorings(&g, 3, Some(&pre)).len(), 1);
    }

    #[test]
    fn grid_colorings_are_latin_squares() {
        assert_eq!(enumerate_colorings(&grid_complex(5), 5).len(), 1344);
        assert_eq!(enumerate_colorings(&grid_complex(3), 3).len(), 2);
    }

    #[test]
    fn class_cover_on_the_grid() {
        // K3 x K3: independent 3-sets are the six transversals
        let g = grid_complex(3);
        let sets = independent_sets_of_size(&g.graph(), 3);
        assert_eq!(sets.len(), 6);
        let by_cover = enumerate_colorings_by_class_cover(&g, 3, 3).unwrap();
        assert_eq!(by_cover, enumerate_colorings(&g, 3));
    }

    #[test]
    fn class_cover_rejects_unforced_sizes() {
        // octahedron: independent sets have size 2, asking for size 1 classes
        // of 6 colours is fine, but size-2 classes on a 3-vertex path are not
        let path = Complex::from_simplices(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        assert!(matches!(
            enumerate_colorings_by_class_cover(&path, 4, 1),
            Err(Error::ClassSizeNotForced { .. })
        ));
        assert!(enumerate_colorings_by_class_cover(&path, 3, 1).is_err());
    }

    #[test]
    fn exact_cover_small() {
        let sets = vec![
            vec![0, 1],
            vec![2, 3],
            vec![0, 2],
            vec![1, 3],
            vec![0, 1, 2],
        ];
        assert_eq!(exact_covers(4, &sets), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn restriction_and_mapping() {
        let p = ColoringPartition::new(vec![vec![0, 3], vec![1], vec![2, 4]]);
        let mut keep = FixedBitSet::with_capacity(5);
        keep.insert(0);
        keep.insert(2);
        keep.insert(4);
        assert_eq!(p.restrict(&keep).classes(), &[vec![0], vec![2, 4]]);
        assert_eq!(p.class_of(4), Some(2));
        let q = p.map_vertices(|v| 4 - v);
        assert_eq!(q.classes(), &[vec![0, 2], vec![1, 4], vec![3]]);
    }
}
