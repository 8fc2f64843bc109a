use itertools::Itertools;
use num_rational::BigRational;
use proptest::prelude::*;
use veritas::chroma::enumerate_colorings;
use veritas::complexes::{is_isomorphic, k_cliques, Complex, Graph};
use veritas::golden::GoldenScalar;
use veritas::latin::Permutation;
use veritas::oracle::{brute_force_colorings, naive_k_cliques};

fn scalar() -> impl Strategy<Value = GoldenScalar> {
    (-20i64..20, 1i64..7, -20i64..20, 1i64..7)
        .prop_map(|(an, ad, bn, bd)| GoldenScalar::from_ratios(an, ad, bn, bd))
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).tuple_combinations::<(usize, usize)>();
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e))
        })
    })
}

/// Pure 2-complexes on at most 9 vertices, built from random triangles.
fn surface() -> impl Strategy<Value = Complex> {
    proptest::collection::btree_set((0usize..9, 0usize..9, 0usize..9), 1..10).prop_filter_map(
        "degenerate",
        |set| {
            let tris: Vec<Vec<usize>> = set
                .into_iter()
                .map(|(a, b, c)| vec![a, b, c].into_iter().sorted().collect::<Vec<_>>())
                .filter(|t| t[0] < t[1] && t[1] < t[2])
                .sorted()
                .dedup()
                .collect();
            let used: Vec<usize> = tris.iter().flatten().copied().sorted().dedup().collect();
            let tris = tris
                .iter()
                .map(|t| t.iter().map(|v| used.binary_search(v).unwrap()).collect())
                .collect();
            Complex::from_simplices(used.len(), tris).ok()
        },
    )
}

fn permutation() -> impl Strategy<Value = Permutation> {
    (0usize..120).prop_map(|k| Permutation::all()[k])
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, GoldenScalar::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), GoldenScalar::one());
        }
        let norm = a.norm();
        prop_assert_eq!(&a * &a.conjugate(), GoldenScalar::new(norm, BigRational::from_integer(0.into())));
    }

    #[test]
    fn signum_agrees_with_floating_point(a in scalar()) {
        let f = a.to_f64();
        if f.abs() > 1e-9 {
            prop_assert_eq!(a.signum() as f64, f.signum());
        }
    }

    #[test]
    fn cliques_match_naive_filter(g in graph(16), k in 1usize..6) {
        prop_assert_eq!(k_cliques(&g, k), naive_k_cliques(&g, k));
    }

    #[test]
    fn colourings_match_brute_force(x in surface(), n in 3usize..5) {
        prop_assert_eq!(enumerate_colorings(&x, n), brute_force_colorings(&x, n));
    }

    #[test]
    fn isomorphism_survives_relabelling(x in surface(), seed in any::<u64>()) {
        let n = x.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let y = Complex::from_simplices(
            n,
            x.simplices().iter().map(|t| t.iter().map(|&v| perm[v]).collect()).collect(),
        ).unwrap();
        let m = is_isomorphic(&x, &y);
        prop_assert!(m.is_some_and(|m| m.is_isomorphism(&x, &y)));
    }

    #[test]
    fn permutation_group_laws(a in permutation(), b in permutation(), c in permutation()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert_eq!(a.compose(&a.inverse()), Permutation::identity());
        prop_assert_eq!(a.compose(&b).inverse(), b.inverse().compose(&a.inverse()));
        prop_assert_eq!(a.compose(&b).is_even(), a.is_even() == b.is_even());
    }
}
