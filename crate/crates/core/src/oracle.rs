//! Deliberately naive reference implementations used to cross-check the
//! search engines.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::chroma::ColoringPartition;
use crate::complexes::{Complex, Graph};

/// Every surjective proper labelling with `n` colours, vertex by vertex in
/// index order, collapsed to partitions.
pub fn brute_force_colorings(x: &Complex, n: usize) -> Vec<ColoringPartition> {
    let g = x.graph();
    let mut labels = vec![0u8; g.len()];
    let mut out = BTreeSet::new();
    label_from(&g, n, 0, &mut labels, &mut out);
    out.into_iter().collect()
}

fn label_from(
    g: &Graph,
    n: usize,
    v: usize,
    labels: &mut [u8],
    out: &mut BTreeSet<ColoringPartition>,
) {
    if v == labels.len() {
        if labels.iter().unique().count() == n {
            out.insert(ColoringPartition::from_labels(labels));
        }
        return;
    }
    for c in 0..n as u8 {
        if (0..v).all(|u| !(g.has_edge(u, v) && labels[u] == c)) {
            labels[v] = c;
            label_from(g, n, v + 1, labels, out);
        }
    }
}

/// `k`-subsets whose pairs are all adjacent, by testing every subset.
pub fn naive_k_cliques(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return Vec::new();
    }
    (0..g.len())
        .combinations(k)
        .filter(|s| {
            s.iter()
                .tuple_combinations()
                .all(|(&a, &b)| g.has_edge(a, b))
        })
        .collect()
}

/// Number of labelled `n×n` Latin squares, built one row at a time.
pub fn labeled_latin_square_count(n: usize) -> u64 {
    let rows: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut chosen: Vec<&Vec<usize>> = Vec::new();
    count_rows(&rows, n, &mut chosen)
}

fn count_rows<'a>(rows: &'a [Vec<usize>], n: usize, chosen: &mut Vec<&'a Vec<usize>>) -> u64 {
    if chosen.len() == n {
        return 1;
    }
    let mut total = 0;
    for r in rows {
        if chosen.iter().all(|c| (0..n).all(|i| c[i] != r[i])) {
            chosen.push(r);
            total += count_rows(rows, n, chosen);
            chosen.pop();
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::simplex_complex;

    #[test]
    fn small_latin_counts() {
        assert_eq!(labeled_latin_square_count(1), 1);
        assert_eq!(labeled_latin_square_count(2), 2);
        assert_eq!(labeled_latin_square_count(3), 12);
        assert_eq!(labeled_latin_square_count(4), 576);
    }

    #[test]
    fn triangle_has_one_three_colouring() {
        assert_eq!(brute_force_colorings(&simplex_complex(3), 3).len(), 1);
        assert!(brute_force_colorings(&simplex_complex(3), 2).is_empty());
        assert!(brute_force_colorings(&simplex_complex(3), 4).is_empty());
    }

    #[test]
    fn naive_cliques_of_a_square() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]);
        assert_eq!(naive_k_cliques(&g, 3), vec![vec![0, 1, 2], vec![0, 2, 3]]);
    }
}
