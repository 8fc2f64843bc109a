use std::collections::BTreeSet;

use itertools::Itertools;
use veritas::bspace::{build_b2, phi, verify_phi_injective_on_quotient};
use veritas::complexes::{
    build_600_cell, grid_complex, icosahedron, is_isomorphic, k_cliques, link, simplex_complex,
    Complex,
};
use veritas::golden::{
    alt_order5_element, find_24cell_subgroup, icosian_group, pick_order5_element, GoldenScalar,
    Icosian,
};
use veritas::latin::{
    decompose, has_even_arrangement, verify_even_square_characterization, Parity, Permutation,
};
use veritas::pipeline::{export_complex, named_complex, Choices, Stages};

#[test]
fn six_hundred_cell_examples() {
    let g = icosian_group().unwrap();
    let x = build_600_cell(&g).unwrap();
    assert!(g.elements().iter().all(|q| q.dot(q) == GoldenScalar::one()));
    assert!(k_cliques(&x.graph(), 5).is_empty());
    let l = link(&x, g.identity()).unwrap();
    assert_eq!((l.vertex_count(), l.simplex_count()), (12, 20));
    assert!(is_isomorphic(&l, &icosahedron()).is_some());
    assert_eq!(g.element(g.identity()), &Icosian::one());
}

#[test]
fn order_five_choices() {
    let g = icosian_group().unwrap();
    let t = find_24cell_subgroup(&g).unwrap();
    let p = pick_order5_element(&g, &t).unwrap();
    let q = alt_order5_element(&g, &t, p).unwrap();
    assert_eq!(g.pow(p, 5), g.identity());
    assert_eq!(g.pow(q, 5), g.identity());
    assert!((0..5).all(|k| g.pow(p, k) != q));
    let neg: Vec<usize> = t.iter().map(|&v| g.negation(v).unwrap()).sorted().collect();
    assert_eq!(neg, t);
}

#[test]
fn quotient_examples() {
    let st = Stages::new(Choices::default(), None).unwrap();
    let (x, q) = (st.x().unwrap(), st.quotient().unwrap());
    assert_eq!(q.complex.f_vector(), vec![60, 360, 600, 300]);
    assert_eq!(q.complex.euler_characteristic(), 0);
    assert!(is_isomorphic(x, &q.complex).is_none());
    for v in [0, 17, 60, 119] {
        let a = link(&q.complex, q.orbit_of[v]).unwrap();
        assert!(is_isomorphic(&a, &link(x, v).unwrap()).is_some());
    }
    let cert = verify_phi_injective_on_quotient(q, st.phi().unwrap(), st.b2().unwrap()).unwrap();
    assert!(cert.holds());
    assert_eq!(cert.distinct_simplices, 300);
}

#[test]
fn phi_on_a_lone_simplex_is_a_bijection() {
    let s = simplex_complex(5);
    let (b, b2) = build_b2(&s, 5).unwrap();
    let f = phi(&s, &b, &b2).unwrap();
    assert_eq!(f.assignment.iter().sorted().dedup().count(), 5);
    assert_eq!(b2.complex.simplex_count(), 1);
}

#[test]
fn b2_of_the_icosahedron() {
    let (_, b2) = build_b2(&icosahedron(), 4).unwrap();
    assert_eq!((b2.vertex_count(), b2.complex.simplex_count()), (44, 56));
}

#[test]
fn phi_image_is_even_and_hit_twice() {
    let st = Stages::new(Choices::default(), None).unwrap();
    let (f, lab) = (st.phi().unwrap(), st.labeling().unwrap());
    let hits = f.assignment.iter().map(|&a| lab.b2_perms[a]).counts();
    assert_eq!(hits.len(), 60);
    assert!(hits.iter().all(|(p, &n)| p.is_even() && n == 2));
}

/// With the rows of the grid relabelled by an odd permutation the four
/// blocks are disjoint and the remainder splits into an even and an odd half.
#[test]
fn decomposition_after_odd_row_relabelling() {
    let st = Stages::new(Choices::default(), None).unwrap();
    let all = st.squares().unwrap();
    let q = st.quotient().unwrap();
    let swap = Permutation::cycle(&[1, 2]).unwrap();
    let images: Vec<Permutation> = st
        .quotient_images()
        .unwrap()
        .iter()
        .map(|p| p.compose(&swap))
        .collect();
    assert!(images.iter().all(|p| !p.is_even()));
    for tau in [
        Permutation::cycle(&[1, 2]).unwrap(),
        Permutation::cycle(&[1, 2, 3, 4]).unwrap(),
    ] {
        let d = decompose(all, &q.complex, &images, &tau).unwrap();
        assert_eq!(d.failures(300, all.len()), Vec::<String>::new());
        assert_eq!(d.remainder.len(), 144);
        assert_eq!(
            (d.remainder_all_even, d.remainder_all_odd, d.remainder_mixed),
            (72, 72, 0)
        );
        assert_eq!(d.three_face_components, 144);
        let parities: BTreeSet<_> = d.components.iter().map(|c| c.vertex_parity).collect();
        assert_eq!(
            parities,
            BTreeSet::from([Some(Parity::Even), Some(Parity::Odd)])
        );
        assert!(d
            .components
            .iter()
            .all(|c| c.squares == 72 && c.vertices == 60));
        let even = verify_even_square_characterization(all, &d);
        assert!(even.holds());
        assert_eq!(
            (even.all_even_squares, even.with_even_arrangement),
            (72, 72)
        );
        for (name, block) in d.blocks.iter().zip(&d.block_squares) {
            assert!(
                block
                    .iter()
                    .all(|s| s.parity() != Some(Parity::Even) || !has_even_arrangement(s)),
                "{}",
                name.name
            );
        }
    }
}

/// Under the natural reading the even image forces the first two blocks together.
#[test]
fn natural_reading_blocks_coincide() {
    let st = Stages::new(Choices::default(), None).unwrap();
    let d = st.decomposition().unwrap();
    assert_eq!(
        d.overlaps[0],
        ("phi".to_string(), "eta_phi".to_string(), 300)
    );
    assert_eq!(d.remainder.len(), 744);
    // every square of the phi block has exactly one odd permutation
    for s in &d.block_squares[0] {
        assert_eq!(s.perms().iter().filter(|p| !p.is_even()).count(), 1);
    }
}

#[test]
fn double_coset_classes_are_antipodal() {
    let st = Stages::new(Choices::default(), None).unwrap();
    let inv = st.involution().unwrap();
    let grid = st.grid();
    for i in 0..5 {
        for j in 0..5 {
            let cell = grid.cell(i, j);
            assert_eq!(cell.len(), 24);
            assert!(cell.iter().all(|&v| cell.binary_search(&inv[v]).is_ok()));
        }
    }
}

#[test]
fn export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (name, verts, simps) in [
        ("grid", 25, 10),
        ("600cell", 120, 600),
        ("sigma3", 60, 300),
        ("B", 25, 10),
    ] {
        let path = dir.path().join(format!("{name}.json"));
        let c = export_complex(name, &path, Choices::default()).unwrap();
        assert_eq!((c.vertex_count(), c.simplex_count()), (verts, simps));
        let back = Complex::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(back, c);
    }
    assert_eq!(
        named_complex("grid", Choices::default()).unwrap(),
        grid_complex(5)
    );
}
