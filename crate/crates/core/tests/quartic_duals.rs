//! The two tricuspidal-quartic pairs shipped under scripts/: a quartic
//! with three real cusps versus one with a real cusp and a conjugate
//! pair, each together with the cuspidal tangent line and a three-step
//! twig over their transverse intersection point.
//!
//! The two pairs have the same complex shadow but different real
//! structures, so they separate the real invariant from the complex one.

use std::collections::BTreeMap;
use std::path::Path;

use kappar::docs::{replay, ScriptDocument};
use kappar::homology::{fake_plane_checklist, homology_report};
use kappar::kodaira::{kappa, kappa_real, KappaValue};
use kappar::pair::RealSNCPair;

fn load(name: &str) -> RealSNCPair {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../scripts")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path:?}: {e}"));
    let doc: ScriptDocument = serde_json::from_str(&text).expect("script parses");
    replay(&doc).expect("script replays")
}

/// Multiset of (weight, genus, in_boundary) triples: the part of the graph
/// that ignores the real structure.
fn complex_shadow(pair: &RealSNCPair) -> BTreeMap<(i64, i64, bool), usize> {
    let mut out = BTreeMap::new();
    for c in pair.component_ids() {
        let comp = pair.component(c);
        *out.entry((comp.self_intersection, comp.genus, comp.in_boundary))
            .or_insert(0) += 1;
    }
    out
}

#[test]
fn both_scripts_replay_to_valid_snc_pairs() {
    for name in [
        "quartic_dual_real_cusps.json",
        "quartic_dual_conjugate_cusps.json",
    ] {
        let pair = load(name);
        assert_eq!(pair.validate(), Vec::<String>::new(), "{name}");
        assert!(pair.is_snc(), "{name}");
        assert_eq!(pair.component_count(), 14, "{name}");
        assert_eq!(pair.boundary().len(), 13, "{name}");
        assert_eq!(pair.picard_rank, 13, "{name}");
    }
}

#[test]
fn the_two_pairs_share_their_complex_shadow() {
    let real = load("quartic_dual_real_cusps.json");
    let conj = load("quartic_dual_conjugate_cusps.json");
    assert_eq!(complex_shadow(&real), complex_shadow(&conj));
    assert_eq!(real.k_self, conj.k_self);
}

#[test]
fn both_complements_are_z_acyclic() {
    for name in [
        "quartic_dual_real_cusps.json",
        "quartic_dual_conjugate_cusps.json",
    ] {
        let h = homology_report(&load(name)).unwrap();
        assert!(h.z_acyclic, "{name}");
        assert_eq!(h.torsion, vec![], "{name}");
        assert_eq!(h.determinant_cross_check, Some(true), "{name}");
    }
}

#[test]
fn the_all_real_pair_has_a_tree_boundary_and_real_kodaira_two() {
    let pair = load("quartic_dual_real_cusps.json");
    let checklist = fake_plane_checklist(&pair).unwrap();
    assert!(
        checklist.boundary_is_real_rational_tree,
        "{:?}",
        checklist.tree_defects
    );
    assert!(checklist.is_candidate);
    // A real rational tree boundary has no imaginary loops, so the real
    // value coincides with the complex one.
    let k = kappa(&pair);
    let kr = kappa_real(&pair).unwrap();
    assert_eq!(kr.elimination.loops.len(), 0);
    assert_eq!(kr.result.value, k.value);
    assert_eq!(kr.result.value, KappaValue::Two);
}

#[test]
fn the_conjugate_pair_boundary_is_not_a_real_tree() {
    let pair = load("quartic_dual_conjugate_cusps.json");
    let checklist = fake_plane_checklist(&pair).unwrap();
    assert!(!checklist.boundary_is_real_rational_tree);
    assert!(checklist
        .tree_defects
        .iter()
        .any(|d| d.contains("not a real curve")));
}
