use std::collections::{BTreeMap, HashSet};

use fixedbitset::FixedBitSet;

use super::{Complex, Graph, VertexMap};

/// Searches for an isomorphism of pure complexes.
///
/// Vertices are first split by iterated refinement on the 1-skeleton and the
/// simplex incidence structure (computed jointly on both complexes so colour
/// ids are comparable), then matched by backtracking. Any map returned has
/// been checked against the full maximal-simplex sets.
pub fn is_isomorphic(x: &Complex, y: &Complex) -> Option<VertexMap> {
    if x.vertex_count() != y.vertex_count()
        || x.simplex_count() != y.simplex_count()
        || x.simplex_size() != y.simplex_size()
    {
        return None;
    }
    let n = x.vertex_count();
    if n == 0 {
        return Some(VertexMap::identity(0));
    }
    let gx = x.graph();
    let gy = y.graph();
    let (cx, cy) = refine(x, &gx, y, &gy)?;

    let class_count = cx.iter().chain(&cy).max().map_or(0, |m| m + 1);
    let mut classes_y = vec![FixedBitSet::with_capacity(n); class_count];
    for (v, &c) in cy.iter().enumerate() {
        classes_y[c].insert(v);
    }
    let order = search_order(&gx, &cx, &classes_y);
    let mut position = vec![0; n];
    for (d, &v) in order.iter().enumerate() {
        position[v] = d;
    }
    // simplices of x that become fully mapped at each depth
    let mut completed_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, s) in x.simplices().iter().enumerate() {
        let d = s.iter().map(|&v| position[v]).max().unwrap_or(0);
        completed_at[d].push(i);
    }

    let mut search = Search {
        x,
        gx: &gx,
        gy: &gy,
        colors_x: &cx,
        classes_y: &classes_y,
        order: &order,
        completed_at: &completed_at,
        targets: y.simplex_set(),
        map: vec![usize::MAX; n],
        used: FixedBitSet::with_capacity(n),
    };
    if search.extend(0) {
        let vm = VertexMap {
            assignment: search.map,
        };
        if vm.is_isomorphism(x, y) {
            return Some(vm);
        }
    }
    None
}

fn refine(x: &Complex, gx: &Graph, y: &Complex, gy: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let ix = x.incidence();
    let iy = y.incidence();
    let initial = |g: &Graph, inc: &[Vec<usize>]| -> Vec<(usize, usize)> {
        (0..g.len()).map(|v| (g.degree(v), inc[v].len())).collect()
    };
    let (mut cx, mut cy) = relabel(initial(gx, &ix), initial(gy, &iy))?;
    let mut classes = distinct(&cx, &cy);
    loop {
        let sig = |c: &Complex,
                   g: &Graph,
                   inc: &[Vec<usize>],
                   col: &[usize]|
         -> Vec<(usize, Vec<usize>, Vec<Vec<usize>>)> {
            (0..g.len())
                .map(|v| {
                    let mut nb: Vec<usize> = g.neighbors(v).ones().map(|u| col[u]).collect();
                    nb.sort_unstable();
                    let mut simp: Vec<Vec<usize>> = inc[v]
                        .iter()
                        .map(|&s| {
                            let mut cs: Vec<usize> = c.simplices()[s]
                                .iter()
                                .filter(|&&u| u != v)
                                .map(|&u| col[u])
                                .collect();
                            cs.sort_unstable();
                            cs
                        })
                        .collect();
                    simp.sort();
                    (col[v], nb, simp)
                })
                .collect()
        };
        let (nx, ny) = relabel(sig(x, gx, &ix, &cx), sig(y, gy, &iy, &cy))?;
        let next = distinct(&nx, &ny);
        cx = nx;
        cy = ny;
        if next == classes {
            return Some((cx, cy));
        }
        classes = next;
    }
}

fn distinct(a: &[usize], b: &[usize]) -> usize {
    a.iter().chain(b).collect::<HashSet<_>>().len()
}

/// Replaces signatures by dense ids shared across both sides; fails when
/// the two sides have different signature histograms.
fn relabel<S: Ord + Clone>(sx: Vec<S>, sy: Vec<S>) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut hist: BTreeMap<S, (usize, usize)> = BTreeMap::new();
    for s in &sx {
        hist.entry(s.clone()).or_default().0 += 1;
    }
    for s in &sy {
        hist.entry(s.clone()).or_default().1 += 1;
    }
    if hist.values().any(|(a, b)| a != b) {
        return None;
    }
    let ids: BTreeMap<S, usize> = hist.into_keys().enumerate().map(|(i, s)| (s, i)).collect();
    Some((
        sx.iter().map(|s| ids[s]).collect(),
        sy.iter().map(|s| ids[s]).collect(),
    ))
}

/// Start in the smallest colour class, then always take the unplaced vertex
/// with the most placed neighbours (ties: smaller class, lower index).
fn search_order(g: &Graph, colors: &[usize], classes: &[FixedBitSet]) -> Vec<usize> {
    let n = g.len();
    let class_size = |v: usize| classes[colors[v]].count_ones(..);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size(v), v))
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for u in g.neighbors(v).ones() {
            links[u] += 1;
        }
    }
    order
}

struct Search<'a> {
    x: &'a Complex,
    gx: &'a Graph,
    gy: &'a Graph,
    colors_x: &'a [usize],
    classes_y: &'a [FixedBitSet],
    order: &'a [usize],
    completed_at: &'a [Vec<usize>],
    targets: HashSet<Vec<usize>>,
    map: Vec<usize>,
    used: FixedBitSet,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let mut cand = self.classes_y[self.colors_x[v]].clone();
        cand.difference_with(&self.used);
        for &u in &self.order[..depth] {
            let image = self.gy.neighbors(self.map[u]);
            if self.gx.has_edge(v, u) {
                cand.intersect_with(image);
            } else {
                cand.difference_with(image);
            }
        }
        for w in cand.ones() {
            self.map[v] = w;
            self.used.insert(w);
            let ok = self.completed_at[depth].iter().all(|&s| {
                let mut img: Vec<usize> =
                    self.x.simplices()[s].iter().map(|&u| self.map[u]).collect();
                img.sort_unstable();
                self.targets.contains(&img)
            });
            if ok && self.extend(depth + 1) {
                return true;
            }
            self.used.set(w, false);
            self.map[v] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{grid_complex, icosahedron, octahedron, simplex_complex};

    fn relabeled(c: &Complex, perm: &[usize]) -> Complex {
        let simplices = c
            .simplices()
            .iter()
            .map(|s| s.iter().map(|&v| perm[v]).collect())
            .collect();
        Complex::from_simplices(c.vertex_count(), simplices).unwrap()
    }

    #[test]
    fn identity_and_shuffles() {
        for c in [
            icosahedron(),
            grid_complex(5),
            octahedron(),
            simplex_complex(4),
        ] {
            let n = c.vertex_count();
            let m = is_isomorphic(&c, &c).expect("self-isomorphic");
            assert!(m.is_isomorphism(&c, &c));
            let perm: Vec<usize> = (0..n).map(|v| (v * 7 + 3) % n).collect();
            if perm.iter().collect::<HashSet<_>>().len() == n {
                let d = relabeled(&c, &perm);
                let m = is_isomorphic(&c, &d).expect("relabeled copy");
                assert!(m.is_isomorphism(&c, &d));
            }
        }
    }

    #[test]
    fn different_sizes_are_not_isomorphic() {
        assert!(is_isomorphic(&icosahedron(), &octahedron()).is_none());
    }

    #[test]
    fn same_skeleton_different_simplices() {
        // Two triangles sharing an edge versus a hollow-ish alternative with
        // identical counts but a different degree sequence.
        let a = Complex::from_simplices(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let b = Complex::from_simplices(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert!(is_isomorphic(&a, &b).is_none());
        // 6-cycle vs two triangles: same degrees, different structure
        let hex =
            Complex::from_simplices(6, (0..6).map(|i| vec![i, (i + 1) % 6]).collect()).unwrap();
        let tri2 = Complex::from_simplices(
            6,
            vec![
                vec![0, 1],
                vec![1, 2],
                vec![0, 2],
                vec![3, 4],
                vec![4, 5],
                vec![3, 5],
            ],
        )
        .unwrap();
        assert!(is_isomorphic(&hex, &tri2).is_none());
    }
}
