//! Integral homology invariants of the boundary complement.
//!
//! The classes of the boundary components span a sublattice of the Picard
//! lattice; the Smith normal form of that class matrix controls the first
//! homology of the complement of the boundary in the complex surface: full
//! rank with as many boundary curves as the Picard rank means rational
//! acyclicity, and the invariant factors above one are the torsion. As an
//! independent route, the determinant of the boundary intersection matrix
//! (read off edges and weights alone) must equal the squared product of the
//! invariant factors whenever the counts match.

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::birational::BirationalError;
use crate::kodaira::{kappa, kappa_real, KodairaResult};
use crate::lattice::{smith_normal_form, IntMatrix};
use crate::pair::{PointReality, Reality, RealSNCPair};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("components without Picard classes: {}", components.join(", "))]
    MissingClasses { components: Vec<String> },
}

/// Homology facts computed from the class matrix and the boundary graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyReport {
    pub picard_rank: usize,
    pub boundary_count: usize,
    /// Rank of the matrix whose columns are the boundary classes.
    pub class_matrix_rank: usize,
    /// Invariant factors above one: the torsion of the first homology of
    /// the boundary complement.
    pub torsion: Vec<BigInt>,
    /// The boundary classes span the Picard lattice rationally.
    pub q_acyclic: bool,
    /// They span it integrally: rational acyclicity without torsion.
    pub z_acyclic: bool,
    /// The boundary curves form a connected subgraph.
    pub boundary_connected: bool,
    /// When the boundary count matches the rank: whether the absolute
    /// determinant of the boundary Gram matrix equals the squared product
    /// of all invariant factors. The two sides come from independent data
    /// (edges and weights versus classes), so this cross-checks both.
    pub determinant_cross_check: Option<bool>,
}

fn class_matrix(pair: &RealSNCPair) -> Result<IntMatrix, HomologyError> {
    let boundary = pair.boundary();
    let missing: Vec<String> = boundary
        .iter()
        .filter(|&&c| pair.component(c).picard_class.is_none())
        .map(|&c| pair.component(c).name.clone())
        .collect();
    if !missing.is_empty() {
        return Err(HomologyError::MissingClasses {
            components: missing,
        });
    }
    let mut m = IntMatrix::zeros(pair.picard_rank, boundary.len());
    for (j, &c) in boundary.iter().enumerate() {
        let class = pair.component(c).picard_class.as_ref().unwrap();
        for (i, &v) in class.iter().enumerate() {
            m.set(i, j, BigInt::from(v));
        }
    }
    Ok(m)
}

fn boundary_is_connected(pair: &RealSNCPair) -> bool {
    let boundary = pair.boundary();
    if boundary.is_empty() {
        return true;
    }
    let mut seen = vec![false; pair.component_count()];
    let mut stack = vec![boundary[0]];
    seen[boundary[0]] = true;
    while let Some(c) = stack.pop() {
        for e in pair.edges_at(c) {
            let other = e.other_end(c);
            if !seen[other] && pair.component(other).in_boundary {
                seen[other] = true;
                stack.push(other);
            }
        }
    }
    boundary.iter().all(|&c| seen[c])
}

/// Computes the homology invariants. Every boundary component must carry a
/// Picard class.
pub fn homology_report(pair: &RealSNCPair) -> Result<HomologyReport, HomologyError> {
    let boundary = pair.boundary();
    let m = class_matrix(pair)?;
    let snf = smith_normal_form(&m);
    let rank = snf.rank();
    let torsion = snf.torsion();
    let q_acyclic = rank == pair.picard_rank && boundary.len() == pair.picard_rank;
    let z_acyclic = q_acyclic && torsion.is_empty();
    let determinant_cross_check = (boundary.len() == pair.picard_rank).then(|| {
        let gram_det = pair.intersection_matrix(&boundary).determinant().abs();
        let factor_product: BigInt = snf.diagonal().into_iter().product();
        gram_det == (&factor_product * &factor_product).abs()
    });
    Ok(HomologyReport {
        picard_rank: pair.picard_rank,
        boundary_count: boundary.len(),
        class_matrix_rank: rank,
        torsion,
        q_acyclic,
        z_acyclic,
        boundary_connected: boundary_is_connected(pair),
        determinant_cross_check,
    })
}

#[derive(Debug, Error)]
pub enum ChecklistError {
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Birational(#[from] BirationalError),
}

/// The computable side of the fake real plane criteria: a rationally
/// acyclic complement whose boundary is a tree of real rational curves,
/// with the two Kodaira dimensions as context. Topological properties of
/// the real locus itself are beyond the graph model and are not claimed.
#[derive(Debug, Clone)]
pub struct FakePlaneChecklist {
    pub homology: HomologyReport,
    /// Every boundary curve is real with infinite real locus and genus 0,
    /// all boundary-internal points are real and transverse, and the
    /// boundary graph is a tree.
    pub boundary_is_real_rational_tree: bool,
    /// Reasons the tree condition failed, empty when it holds.
    pub tree_defects: Vec<String>,
    pub kappa: KodairaResult,
    pub kappa_real: KodairaResult,
    pub loops_eliminated: usize,
    /// All computable graph-side criteria hold.
    pub is_candidate: bool,
}

fn boundary_tree_defects(pair: &RealSNCPair) -> Vec<String> {
    let boundary = pair.boundary();
    let mut defects = Vec::new();
    if boundary.is_empty() {
        defects.push("the boundary is empty".to_string());
        return defects;
    }
    for &c in &boundary {
        let comp = pair.component(c);
        if comp.reality != Reality::RealInfinite {
            defects.push(format!("{} is not a real curve", comp.name));
        }
        if comp.genus != 0 {
            defects.push(format!("{} has genus {}", comp.name, comp.genus));
        }
    }
    let mut internal_edges = 0usize;
    for e in pair.edges() {
        let both = pair.component(e.ends.0).in_boundary && pair.component(e.ends.1).in_boundary;
        if !both {
            continue;
        }
        internal_edges += 1;
        if e.multiplicity != 1 || e.is_self_edge() {
            defects.push(format!("{} is not transverse", pair.describe_edge(e)));
        }
        if e.point != PointReality::Real {
            defects.push(format!("{} is a non-real point", pair.describe_edge(e)));
        }
    }
    if !boundary_is_connected(pair) {
        defects.push("the boundary is disconnected".to_string());
    } else if internal_edges + 1 != boundary.len() {
        defects.push(format!(
            "the boundary has {} internal points for {} curves, so it carries a cycle",
            internal_edges,
            boundary.len()
        ));
    }
    defects
}

/// Runs the full checklist on a pair with classes.
pub fn fake_plane_checklist(pair: &RealSNCPair) -> Result<FakePlaneChecklist, ChecklistError> {
    let homology = homology_report(pair)?;
    let tree_defects = boundary_tree_defects(pair);
    let boundary_is_real_rational_tree = tree_defects.is_empty();
    let kappa = kappa(pair);
    let real = kappa_real(pair)?;
    let is_candidate = homology.q_acyclic && boundary_is_real_rational_tree;
    Ok(FakePlaneChecklist {
        homology,
        boundary_is_real_rational_tree,
        tree_defects,
        kappa,
        kappa_real: real.result,
        loops_eliminated: real.elimination.loops.len(),
        is_candidate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::PointReality;

    #[test]
    fn a_line_boundary_on_the_plane_is_integrally_acyclic() {
        let mut p = RealSNCPair::plane("a2");
        p.add_component("L", 1, 0, Reality::RealInfinite, true, Some(vec![1]));
        let r = homology_report(&p).unwrap();
        assert_eq!(r.class_matrix_rank, 1);
        assert!(r.q_acyclic);
        assert!(r.z_acyclic);
        assert!(r.torsion.is_empty());
        assert_eq!(r.determinant_cross_check, Some(true));
    }

    #[test]
    fn torsion_is_read_off_the_invariant_factors() {
        // Synthetic data: one boundary class divisible by 3 in a rank-2
        // lattice leaves index-3 torsion and a rank defect.
        let mut p = RealSNCPair::new("synthetic", 2, 8);
        p.add_component("T", -9, 0, Reality::RealInfinite, true, Some(vec![0, 3]));
        let r = homology_report(&p).unwrap();
        assert_eq!(r.class_matrix_rank, 1);
        assert!(!r.q_acyclic);
        assert_eq!(r.torsion, vec![BigInt::from(3)]);
        assert_eq!(r.determinant_cross_check, None);
    }

    #[test]
    fn missing_classes_are_an_error() {
        let mut p = RealSNCPair::new("shadow", 2, 8);
        p.add_component("C", -2, 0, Reality::RealInfinite, true, None);
        assert_eq!(
            homology_report(&p),
            Err(HomologyError::MissingClasses {
                components: vec!["C".into()]
            })
        );
    }

    #[test]
    fn disconnected_boundary_is_detected() {
        let mut p = RealSNCPair::new("two-islands", 4, 6);
        p.add_component("A", -2, 0, Reality::RealInfinite, true, None);
        p.add_component("B", -2, 0, Reality::RealInfinite, true, None);
        assert!(!boundary_is_connected(&p));
        let defects = boundary_tree_defects(&p);
        assert!(defects.iter().any(|d| d.contains("disconnected")));
    }

    #[test]
    fn cycles_in_the_boundary_defeat_the_tree_condition() {
        let mut p = RealSNCPair::new("triangle", 3, 7);
        let a = p.add_component("A", -1, 0, Reality::RealInfinite, true, None);
        let b = p.add_component("B", -1, 0, Reality::RealInfinite, true, None);
        let c = p.add_component("C", -1, 0, Reality::RealInfinite, true, None);
        p.add_edge(a, b, 1, PointReality::Real, None);
        p.add_edge(b, c, 1, PointReality::Real, None);
        p.add_edge(a, c, 1, PointReality::Real, None);
        let defects = boundary_tree_defects(&p);
        assert!(defects.iter().any(|d| d.contains("cycle")));
    }
}
