use fixedbitset::FixedBitSet;
use rayon::prelude::*;

/// Simple undirected graph on `0..n` with bitset adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Adds the edge `{a, b}`; loops are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a].insert(b);
            self.adj[b].insert(a);
        }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.len()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| {
                self.adj[a]
                    .ones()
                    .filter(move |&b| b > a)
                    .map(move |b| (a, b))
            })
            .collect()
    }
}

/// All `k`-cliques, each sorted ascending, in lexicographic order.
pub fn k_cliques(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return Vec::new();
    }
    let n = g.len();
    (0..n)
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut out = Vec::new();
            let mut cand = g.neighbors(v).clone();
            cand.set_range(..v + 1, false);
            let mut current = vec![v];
            extend_cliques(g, k, &mut current, &cand, &mut out);
            out
        })
        .collect()
}

fn extend_cliques(
    g: &Graph,
    k: usize,
    current: &mut Vec<usize>,
    cand: &FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    if current.len() + cand.count_ones(..) < k {
        return;
    }
    for u in cand.ones() {
        let mut next = cand.clone();
        next.intersect_with(g.neighbors(u));
        next.set_range(..u + 1, false);
        current.push(u);
        extend_cliques(g, k, current, &next, out);
        current.pop();
    }
}
