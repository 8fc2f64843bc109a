use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bspace::{
    verify_b3_fixed_point, verify_phi_injective_on_quotient, verify_quotient_b_equality,
    IsoCertificate,
};
use crate::chroma::{enumerate_colorings, verify_shell_extension, ColoringPartition};
use crate::complexes::{
    grid_complex, icosahedron, is_isomorphic, k_cliques, link, octahedron, simplex_complex,
    Complex, Graph, VertexMap,
};
use crate::error::Result;
use crate::latin::{
    stabilizer_sets, verify_even_square_characterization, verify_link_regularity, Parity,
    Permutation, PermutationLabeling, SquareSimplex,
};
use crate::oracle::{brute_force_colorings, labeled_latin_square_count, naive_k_cliques};

use super::stages::Stages;

/// A registered claim: stable id, what is checked, and the expected value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClaimSpec {
    pub id: &'static str,
    pub description: &'static str,
    pub expected: &'static str,
}

pub const REGISTRY: [ClaimSpec; 16] = [
    ClaimSpec {
        id: "C01_colorings_600cell",
        description: "5-colourings of the 600-cell, as partitions",
        expected: "10",
    },
    ClaimSpec {
        id: "C02_colorings_icosahedron",
        description: "4-colourings of the icosahedron, as partitions",
        expected: "10",
    },
    ClaimSpec {
        id: "C03_fvector_600cell",
        description: "f-vector of the 600-cell and icosahedral vertex links",
        expected: "(120, 720, 1200, 600); 120/120 links icosahedral",
    },
    ClaimSpec {
        id: "C04_shell_extension",
        description: "colourings extend uniquely shell by shell from two seed vertices",
        expected: "multiplicity 1 at every stage for both seeds",
    },
    ClaimSpec {
        id: "C05_b_grid",
        description: "B(600-cell) has 25 vertices, 10 simplices and is the 5x5 grid complex",
        expected: "25 vertices, 10 simplices, isomorphism",
    },
    ClaimSpec {
        id: "C06_double_cosets",
        description: "the colourings are the row and column families of double cosets p^i T p^j",
        expected: "10/10 equal",
    },
    ClaimSpec {
        id: "C07_b2_latin_squares",
        description: "B^2(600-cell) has 120 vertices and its 1344 simplices are the Latin squares",
        expected: "120 vertices, 1344 simplices, equal to the enumerated squares",
    },
    ClaimSpec {
        id: "C08_phi_two_to_one",
        description: "phi is two-to-one with fibres {v, -v} onto the 60 even permutations",
        expected: "120 fibres of size 2, 60 image vertices, all even",
    },
    ClaimSpec {
        id: "C09_quotient",
        description:
            "antipodal quotient, B(quotient) = B(600-cell), and the quotient embeds in B^2",
        expected:
            "(60, 360, 600, 300), chi 0, icosahedral links, isomorphisms, 300 distinct squares",
    },
    ClaimSpec {
        id: "C10_b3_fixed_point",
        description: "B^3(600-cell) is isomorphic to B(600-cell) with stabiliser classes",
        expected: "10 colourings, 25 classes {s : s(i) = j}, isomorphism",
    },
    ClaimSpec {
        id: "C11_decomposition",
        description:
            "four disjoint copies of the quotient plus two isomorphic 72-square components",
        expected:
            "4 x 300 disjoint, remainder 144 = 72 + 72, one even component, characterization exact",
    },
    ClaimSpec {
        id: "C12_eta",
        description: "inversion is an automorphism of S5 and moves the phi block off itself",
        expected: "automorphism, 0 shared squares",
    },
    ClaimSpec {
        id: "C13_link_regularity",
        description: "all vertex links of S5 agree and match B^2(icosahedron)",
        expected: "120/120 links isomorphic, 44 vertices, 56 simplices, isomorphism",
    },
    ClaimSpec {
        id: "C14_oracles",
        description: "search engines agree with brute-force oracles",
        expected: "all colouring and clique cases agree; 161280 labelled squares",
    },
    ClaimSpec {
        id: "C15_determinism",
        description: "records are identical across runs, cache use and thread counts",
        expected: "identical",
    },
    ClaimSpec {
        id: "C16_choice_invariance",
        description: "C01-C13 hold under the other choice of p and tau",
        expected: "13/13 pass",
    },
];

pub fn spec(id: &str) -> Option<&'static ClaimSpec> {
    REGISTRY.iter().find(|c| c.id == id)
}

/// Result of evaluating one claim.
pub struct Outcome {
    pub observed: String,
    pub pass: bool,
    pub witness: Option<Value>,
}

impl Outcome {
    fn new(observed: String, pass: bool) -> Self {
        Outcome {
            observed,
            pass,
            witness: None,
        }
    }

    fn with(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }
}

fn cert_json(c: &IsoCertificate) -> Value {
    json!({ "map": c.map, "verified": c.verified })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Evaluates claims C01 to C14; the run-level claims live in the parent module.
pub fn evaluate(id: &str, st: &Stages) -> Result<Outcome> {
    match id {
        "C01_colorings_600cell" => {
            let n = st.colorings()?.len();
            Ok(Outcome::new(n.to_string(), n == 10))
        }
        "C02_colorings_icosahedron" => {
            let n = enumerate_colorings(&icosahedron(), 4).len();
            Ok(Outcome::new(n.to_string(), n == 10))
        }
        "C03_fvector_600cell" => c03(st),
        "C04_shell_extension" => c04(st),
        "C05_b_grid" => {
            let b = st.b()?;
            let cert = IsoCertificate::between(&b.complex, &grid_complex(5));
            let (v, s) = (b.vertex_count(), b.complex.simplex_count());
            Ok(Outcome::new(
                format!(
                    "{v} vertices, {s} simplices, isomorphism {}",
                    yes(cert.holds())
                ),
                v == 25 && s == 10 && cert.holds(),
            )
            .with(cert_json(&cert)))
        }
        "C06_double_cosets" => {
            let found: BTreeSet<&ColoringPartition> = st.colorings()?.iter().collect();
            let cosets: BTreeSet<ColoringPartition> = st
                .grid()
                .colorings()
                .into_iter()
                .map(ColoringPartition::new)
                .collect();
            let equal = cosets.iter().filter(|c| found.contains(c)).count();
            let pass = equal == 10 && found.len() == 10 && cosets.len() == 10;
            Ok(Outcome::new(format!("{equal}/{} equal", found.len()), pass))
        }
        "C07_b2_latin_squares" => {
            let b2 = st.b2()?;
            let squares = st.labeling()?.squares(b2)?;
            let same = &squares == st.squares()?;
            let (v, s) = (b2.vertex_count(), b2.complex.simplex_count());
            Ok(Outcome::new(
                format!(
                    "{v} vertices, {s} simplices, {} enumerated squares, equal {}",
                    st.squares()?.len(),
                    yes(same)
                ),
                v == 120 && s == 1344 && same,
            ))
        }
        "C08_phi_two_to_one" => c08(st),
        "C09_quotient" => c09(st),
        "C10_b3_fixed_point" => c10(st),
        "C11_decomposition" => c11(st),
        "C12_eta" => c12(st),
        "C13_link_regularity" => {
            let cert = verify_link_regularity(
                st.s5()?,
                Permutation::identity().rank(),
                &st.icosahedron_b2()?.1.complex,
            )?;
            let same = 120 - cert.non_isomorphic.len();
            Ok(Outcome::new(
                format!(
                    "{same}/120 links isomorphic, {} vertices, {} simplices, isomorphism {}",
                    cert.link_vertices,
                    cert.link_simplices,
                    yes(cert.to_b2_icosahedron.holds())
                ),
                cert.holds() && cert.link_vertices == 44 && cert.link_simplices == 56,
            )
            .with(json!({ "non_isomorphic": cert.non_isomorphic, "to_b2_icosahedron": cert_json(&cert.to_b2_icosahedron) })))
        }
        "C14_oracles" => c14(st),
        other => Err(crate::Error::UnknownClaim(other.to_string())),
    }
}

fn icosahedral_links(x: &Complex) -> Result<usize> {
    let ico = icosahedron();
    let links = (0..x.vertex_count())
        .map(|v| link(x, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(links
        .par_iter()
        .filter(|l| is_isomorphic(l, &ico).is_some())
        .count())
}

fn c03(st: &Stages) -> Result<Outcome> {
    let x = st.x()?;
    let f = x.f_vector();
    let ok_links = icosahedral_links(x)?;
    let fs = format!("({})", f.iter().join(", "));
    Ok(Outcome::new(
        format!("{fs}; {ok_links}/{} links icosahedral", x.vertex_count()),
        f == [120, 720, 1200, 600] && ok_links == 120,
    ))
}

fn c04(st: &Stages) -> Result<Outcome> {
    let x = st.x()?;
    let seeds = [st.group.identity(), 0];
    let mut parts = Vec::new();
    let mut pass = true;
    let mut witness = Vec::new();
    for seed in seeds {
        let r = verify_shell_extension(x, seed, 5)?;
        let mults: Vec<usize> = r
            .stages
            .iter()
            .map(|s| s.extension_counts.iter().copied().max().unwrap_or(0))
            .collect();
        pass &= r.unique_at_every_stage() && r.covers_complex;
        parts.push(format!(
            "seed {seed}: shells {:?}, max multiplicity {:?}",
            r.shell_vertex_counts, mults
        ));
        witness.push(serde_json::to_value(&r)?);
    }
    Ok(Outcome::new(parts.join("; "), pass).with(Value::Array(witness)))
}

fn c08(st: &Stages) -> Result<Outcome> {
    let f = st.phi()?;
    let inv = st.involution()?;
    let lab = st.labeling()?;
    let fibers = f.fibers();
    let antipodal = fibers.values().all(|v| v.len() == 2 && inv[v[0]] == v[1]);
    let image: Vec<Permutation> = fibers.keys().map(|&k| lab.b2_perms[k]).collect();
    let even = image.iter().filter(|p| p.is_even()).count();
    let sizes: BTreeSet<usize> = f.fiber_sizes.iter().copied().collect();
    Ok(Outcome::new(
        format!(
            "fibre sizes {:?}, antipodal {}, {} image vertices, {} even",
            sizes,
            yes(antipodal),
            image.len(),
            even
        ),
        antipodal && sizes == BTreeSet::from([2]) && image.len() == 60 && even == 60,
    )
    .with(json!({ "phi": f.assignment, "image": image })))
}

fn c09(st: &Stages) -> Result<Outcome> {
    let x = st.x()?;
    let q = st.quotient()?;
    let b = st.b()?;
    let f = q.complex.f_vector();
    let chi = q.complex.euler_characteristic();
    let ico_links = icosahedral_links(&q.complex)?;
    let compatible = (0..x.vertex_count())
        .into_par_iter()
        .map(|v| Ok(is_isomorphic(&link(&q.complex, q.orbit_of[v])?, &link(x, v)?).is_some()))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);
    let qb = verify_quotient_b_equality(b, q, st.involution()?)?;
    let pq = verify_phi_injective_on_quotient(q, st.phi()?, st.b2()?)?;
    let q_colorings = qb.bq.complex.simplex_count();
    let observed = format!(
        "({}), chi {chi}, {ico_links}/{} links icosahedral, covering links {}, {q_colorings} colourings, B iso {}, classes antipodal {}, injective {}, {} distinct squares, image iso {}",
        f.iter().join(", "),
        q.complex.vertex_count(),
        yes(compatible),
        yes(qb.iso.holds()),
        yes(qb.classes_stable),
        yes(pq.injective),
        pq.distinct_simplices,
        yes(pq.iso.holds()),
    );
    let pass = f == [60, 360, 600, 300]
        && chi == 0
        && ico_links == 60
        && compatible
        && q_colorings == 10
        && qb.holds()
        && pq.holds()
        && pq.distinct_simplices == 300;
    Ok(Outcome::new(observed, pass).with(json!({
        "b_isomorphism": cert_json(&qb.iso),
        "image_isomorphism": cert_json(&pq.iso),
        "squares": pq.containing_simplex,
    })))
}

fn c10(st: &Stages) -> Result<Outcome> {
    let (b, b2) = (st.b()?, st.b2()?);
    let cert = verify_b3_fixed_point(b, b2)?;
    let lab: &PermutationLabeling = st.labeling()?;
    let classes: Vec<Vec<Permutation>> = cert
        .b3
        .classes
        .iter()
        .map(|c| c.iter().map(|&v| lab.b2_perms[v]).sorted().collect())
        .sorted()
        .collect();
    let stabilizers = classes == stabilizer_sets();
    let n = cert.b3.complex.simplex_count();
    Ok(Outcome::new(
        format!(
            "{n} colourings, {} classes, {} independent 24-sets, stabiliser classes {}, B3 iso {}, B4 iso {}",
            cert.b3.vertex_count(),
            cert.independent_sets,
            yes(stabilizers),
            yes(cert.b3_to_b.holds()),
            yes(cert.b4_to_b2.holds())
        ),
        n == 10 && stabilizers && cert.holds(),
    )
    .with(json!({ "b3_to_b": cert_json(&cert.b3_to_b), "b4_to_b2": cert_json(&cert.b4_to_b2) })))
}

fn square_indices(all: &[SquareSimplex], some: &[SquareSimplex]) -> Vec<usize> {
    some.iter()
        .filter_map(|s| all.binary_search(s).ok())
        .collect()
}

fn c11(st: &Stages) -> Result<Outcome> {
    let all = st.squares()?;
    let d = st.decomposition()?;
    let failures = d.failures(300, all.len());
    let even = verify_even_square_characterization(all, d);

    let transposed = PermutationLabeling::new(st.b()?, st.b2()?, &st.grid(), true)?;
    let (q, f) = (st.quotient()?, st.phi()?);
    let t_images: Vec<Permutation> = q
        .representatives
        .iter()
        .map(|&r| transposed.b2_perms[f.assignment[r]])
        .collect();
    let td = crate::latin::decompose(all, &q.complex, &t_images, &st.tau)?;
    let transposed_agrees = td.failures(300, all.len()) == failures
        && td.remainder == d.remainder
        && td.components == d.components;

    let overlaps = d
        .overlaps
        .iter()
        .map(|(a, b, k)| format!("{a}/{b} {k}"))
        .join(", ");
    let components = d
        .components
        .iter()
        .map(|c| {
            let parity = match c.vertex_parity {
                Some(Parity::Even) => "even",
                Some(Parity::Odd) => "odd",
                None => "mixed",
            };
            format!("{}sq/{}v/{parity}", c.squares, c.vertices)
        })
        .join(" + ");
    let observed = format!(
        "blocks {}; overlaps {overlaps}; remainder {} = [{components}]; characterization mismatches {}/{}; transposed reading agrees {}",
        d.blocks.iter().map(|b| b.distinct_squares).join("/"),
        d.remainder.len(),
        even.mismatches,
        even.all_even_squares,
        yes(transposed_agrees),
    );
    let pass = failures.is_empty() && even.holds() && transposed_agrees;
    let blocks: serde_json::Map<String, Value> = d
        .blocks
        .iter()
        .zip(&d.block_squares)
        .map(|(b, s)| (b.name.clone(), json!(square_indices(all, s))))
        .collect();
    Ok(Outcome::new(observed, pass).with(json!({
        "blocks": blocks,
        "remainder": square_indices(all, &d.remainder),
        "components": d.components,
        "block_summaries": d.blocks,
        "failures": failures,
        "even_characterization": even,
    })))
}

fn c12(st: &Stages) -> Result<Outcome> {
    let s5 = st.s5()?;
    let all = Permutation::all();
    let eta = VertexMap {
        assignment: all.iter().map(|p| p.inverse().rank()).collect(),
    };
    let automorphism = eta.is_isomorphism(s5, s5);
    let d = st.decomposition()?;
    let shared = d
        .overlaps
        .iter()
        .find(|(a, b, _)| a == "phi" && b == "eta_phi")
        .map_or(usize::MAX, |o| o.2);
    Ok(Outcome::new(
        format!(
            "automorphism {}, {shared} shared squares",
            yes(automorphism)
        ),
        automorphism && shared == 0,
    ))
}

fn circulant(n: usize, steps: &[usize]) -> Graph {
    Graph::from_edges(
        n,
        (0..n).flat_map(|a| steps.iter().map(move |&s| (a, (a + s) % n))),
    )
}

fn c14(st: &Stages) -> Result<Outcome> {
    let x = st.x()?;
    let q = st.quotient()?;
    let coloring_cases: Vec<(String, Complex, usize)> = vec![
        ("simplex3".into(), simplex_complex(3), 3),
        ("simplex4".into(), simplex_complex(4), 4),
        ("simplex5".into(), simplex_complex(5), 5),
        ("octahedron/3".into(), octahedron(), 3),
        ("octahedron/4".into(), octahedron(), 4),
        ("icosahedron/4".into(), icosahedron(), 4),
        ("grid3".into(), grid_complex(3), 3),
        ("grid4".into(), grid_complex(4), 4),
        ("600cell-link/4".into(), link(x, st.group.identity())?, 4),
        ("quotient-link/4".into(), link(&q.complex, 0)?, 4),
    ];
    let coloring_bad: Vec<String> = coloring_cases
        .par_iter()
        .filter(|(_, c, n)| enumerate_colorings(c, *n) != brute_force_colorings(c, *n))
        .map(|(name, _, _)| name.clone())
        .collect();

    let clique_cases: Vec<(String, Graph, usize)> = vec![
        ("icosahedron".into(), icosahedron().graph(), 3),
        ("icosahedron".into(), icosahedron().graph(), 4),
        ("octahedron".into(), octahedron().graph(), 3),
        ("grid5".into(), grid_complex(5).graph(), 5),
        ("grid5".into(), grid_complex(5).graph(), 6),
        (
            "600cell-link".into(),
            link(x, st.group.identity())?.graph(),
            3,
        ),
        ("circulant30".into(), circulant(30, &[1, 2, 3, 5, 8]), 3),
        ("circulant30".into(), circulant(30, &[1, 2, 3, 5, 8]), 4),
        (
            "circulant29".into(),
            circulant(29, &[1, 4, 5, 6, 7, 9, 13]),
            4,
        ),
        (
            "circulant29".into(),
            circulant(29, &[1, 4, 5, 6, 7, 9, 13]),
            5,
        ),
        ("empty20".into(), Graph::new(20), 2),
        ("complete8".into(), circulant(8, &[1, 2, 3, 4]), 5),
    ];
    let clique_bad: Vec<String> = clique_cases
        .par_iter()
        .filter(|(_, g, k)| k_cliques(g, *k) != naive_k_cliques(g, *k))
        .map(|(name, _, k)| format!("{name}/{k}"))
        .collect();

    let labeled = labeled_latin_square_count(5);
    let unlabeled = st.squares()?.len() as u64;
    let observed = format!(
        "colourings {}/{} agree, cliques {}/{} agree, labelled squares {labeled} = {unlabeled} x 120 {}",
        coloring_cases.len() - coloring_bad.len(),
        coloring_cases.len(),
        clique_cases.len() - clique_bad.len(),
        clique_cases.len(),
        yes(labeled == unlabeled * 120),
    );
    let pass = coloring_bad.is_empty()
        && clique_bad.is_empty()
        && labeled == 161_280
        && labeled == unlabeled * 120;
    Ok(Outcome::new(observed, pass)
        .with(json!({ "colouring_mismatches": coloring_bad, "clique_mismatches": clique_bad })))
}
