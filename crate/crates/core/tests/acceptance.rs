//! One test per acceptance criterion. Each prints a single
//! `<id>: PASS|FAIL  expected ... / observed ...` line.

use veritas::pipeline::{run_claims, spec, Choices};

fn check(id: &'static str) {
    let (_, records) = run_claims(&[id], Choices::default(), None, None).expect("pipeline runs");
    let r = &records[0];
    let status = if r.passed() { "PASS" } else { "FAIL" };
    println!(
        "{id}: {status}  expected {} / observed {}",
        r.expected, r.observed
    );
    assert_eq!(r.expected, spec(id).unwrap().expected);
    assert!(r.passed(), "{id} failed: observed {}", r.observed);
}

macro_rules! criteria {
    ($($name:ident => $id:literal),* $(,)?) => {
        $(
            #[test]
            fn $name() {
                check($id);
            }
        )*
    };
}

criteria! {
    c01_colorings_600cell => "C01_colorings_600cell",
    c02_colorings_icosahedron => "C02_colorings_icosahedron",
    c03_fvector_600cell => "C03_fvector_600cell",
    c04_shell_extension => "C04_shell_extension",
    c05_b_grid => "C05_b_grid",
    c06_double_cosets => "C06_double_cosets",
    c07_b2_latin_squares => "C07_b2_latin_squares",
    c08_phi_two_to_one => "C08_phi_two_to_one",
    c09_quotient => "C09_quotient",
    c10_b3_fixed_point => "C10_b3_fixed_point",
    c11_decomposition => "C11_decomposition",
    c12_eta => "C12_eta",
    c13_link_regularity => "C13_link_regularity",
    c14_oracles => "C14_oracles",
    c15_determinism => "C15_determinism",
    c16_choice_invariance => "C16_choice_invariance",
}
