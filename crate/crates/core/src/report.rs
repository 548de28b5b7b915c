//! Assembles the JSON analysis report. The command line tool and the C
//! bindings both print what this module builds, so the schema lives in
//! exactly one place.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::homology::{fake_plane_checklist, homology_report};
use crate::kodaira::{
    kappa, kappa_real, Certification, KappaValue, KodairaResult, ObstructionKind,
    ZariskiDecomposition, ZariskiObstruction,
};
use crate::lattice::Rat;
use crate::pair::RealSNCPair;

/// Integers that are almost always small but may not fit a machine word.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum IntJson {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for IntJson {
    fn from(b: &BigInt) -> Self {
        i64::try_from(b)
            .map(IntJson::Small)
            .unwrap_or_else(|_| IntJson::Big(b.to_string()))
    }
}

fn rat_string(r: &Rat) -> String {
    r.to_string()
}

#[derive(Debug, Clone, Serialize)]
pub struct ZariskiJson {
    /// Coefficients of the negative part, by component name.
    pub negative_part: BTreeMap<String, String>,
    pub support: Vec<String>,
    pub p_squared: String,
    /// P . C for every tracked component.
    pub p_dot: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_class: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_is_zero_class: Option<bool>,
    pub rounds: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionJson {
    pub kind: ObstructionKind,
    pub support: Vec<String>,
    pub message: String,
}

/// One Kodaira dimension verdict with its evidence.
#[derive(Debug, Clone, Serialize)]
pub struct KappaJson {
    pub value: KappaValue,
    pub certification: Certification,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub witness: String,
    pub divisor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zariski: Option<ZariskiJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<ObstructionJson>,
}

fn zariski_json(pair: &RealSNCPair, z: &ZariskiDecomposition) -> ZariskiJson {
    let name = |id| pair.component(id).name.clone();
    ZariskiJson {
        negative_part: z
            .negative_part
            .iter()
            .map(|(&c, v)| (name(c), rat_string(v)))
            .collect(),
        support: z.support.iter().map(|&c| name(c)).collect(),
        p_squared: rat_string(&z.p_squared),
        p_dot: z
            .p_dot
            .iter()
            .map(|(&c, v)| (name(c), rat_string(v)))
            .collect(),
        p_class: z
            .p_class
            .as_ref()
            .map(|v| v.iter().map(rat_string).collect()),
        p_is_zero_class: z.p_is_zero_class,
        rounds: z.rounds,
    }
}

fn obstruction_json(o: &ZariskiObstruction) -> ObstructionJson {
    ObstructionJson {
        kind: o.kind,
        support: o.support.clone(),
        message: o.message.clone(),
    }
}

pub fn kappa_json(pair: &RealSNCPair, r: &KodairaResult) -> KappaJson {
    KappaJson {
        value: r.value,
        certification: r.certification,
        witness: r.witness.clone(),
        divisor: r.divisor.clone(),
        zariski: r.zariski.as_ref().map(|z| zariski_json(pair, z)),
        obstruction: r.obstruction.as_ref().map(obstruction_json),
    }
}

/// One imaginary loop removed during elimination: the two boundary
/// components it joined, the conjugate point labels, and the names of the
/// exceptional pair that replaced it.
#[derive(Debug, Clone, Serialize)]
pub struct LoopJson {
    pub components: (String, String),
    pub points: (String, String),
    pub exceptionals: (String, String),
}

#[derive(Debug, Clone, Serialize)]
pub struct RealKappaJson {
    /// K + B_R classified on the input as handed in. Only emitted on
    /// request; the defining value is the one after elimination.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub before_elimination: Option<KappaJson>,
    pub eliminated_loops: Vec<LoopJson>,
    pub elimination_rounds: usize,
    pub result: KappaJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct HomologyJson {
    pub picard_rank: usize,
    pub boundary_component_count: usize,
    pub class_matrix_rank: usize,
    pub torsion_invariants: Vec<IntJson>,
    pub q_acyclic: bool,
    pub z_acyclic: bool,
    pub boundary_connected: bool,
    /// Gram determinant against squared invariant factors; absent when the
    /// boundary count differs from the rank.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinant_cross_check: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FakePlaneJson {
    pub q_acyclic: bool,
    pub boundary_is_real_rational_tree: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tree_defects: Vec<String>,
    pub kappa: KappaValue,
    pub kappa_real: KappaValue,
    pub loops_eliminated: usize,
    pub is_candidate: bool,
    /// The topological half of the definition (real locus homeomorphic to
    /// the plane) is outside what graph data can see; always false.
    pub real_locus_verified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    /// Violations from the structural validator; empty when well formed.
    pub validate: Vec<String>,
    pub is_snc: bool,
    pub kappa: KappaJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa_real: Option<RealKappaJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa_real_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<HomologyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fake_plane: Option<FakePlaneJson>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn homology_json(h: &crate::homology::HomologyReport) -> HomologyJson {
    HomologyJson {
        picard_rank: h.picard_rank,
        boundary_component_count: h.boundary_count,
        class_matrix_rank: h.class_matrix_rank,
        torsion_invariants: h.torsion.iter().map(IntJson::from).collect(),
        q_acyclic: h.q_acyclic,
        z_acyclic: h.z_acyclic,
        boundary_connected: h.boundary_connected,
        determinant_cross_check: h.determinant_cross_check,
    }
}

/// Runs every analysis on the pair and bundles the results. With
/// `show_raw` the real Kodaira section also reports the value before loop
/// elimination, which is not the real Kodaira dimension but explains it.
pub fn analyze(pair: &RealSNCPair, show_raw: bool) -> AnalysisReport {
    let validate = pair.validate();
    let k = kappa(pair);
    let (kappa_real_json, kappa_real_error) = match kappa_real(pair) {
        Ok(rk) => (
            Some(RealKappaJson {
                before_elimination: show_raw.then(|| kappa_json(pair, &rk.raw)),
                eliminated_loops: rk
                    .elimination
                    .loops
                    .iter()
                    .map(|l| LoopJson {
                        components: l.components.clone(),
                        points: l.points.clone(),
                        exceptionals: l.exceptionals.clone(),
                    })
                    .collect(),
                elimination_rounds: rk.elimination.rounds,
                result: kappa_json(&rk.eliminated, &rk.result),
            }),
            None,
        ),
        Err(e) => (None, Some(e.to_string())),
    };
    let (homology, homology_error) = match homology_report(pair) {
        Ok(h) => (Some(homology_json(&h)), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let fake_plane = fake_plane_checklist(pair).ok().map(|c| FakePlaneJson {
        q_acyclic: c.homology.q_acyclic,
        boundary_is_real_rational_tree: c.boundary_is_real_rational_tree,
        tree_defects: c.tree_defects,
        kappa: c.kappa.value,
        kappa_real: c.kappa_real.value,
        loops_eliminated: c.loops_eliminated,
        is_candidate: c.is_candidate,
        real_locus_verified: false,
    });
    AnalysisReport {
        name: pair.name.clone(),
        validate,
        is_snc: pair.is_snc(),
        kappa: kappa_json(pair, &k),
        kappa_real: kappa_real_json,
        kappa_real_error,
        homology,
        homology_error,
        fake_plane,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{build, GallerySpec};

    #[test]
    fn affine_plane_report_has_the_advertised_fields() {
        let pair = build(&GallerySpec::AffinePlane).unwrap();
        let report = analyze(&pair, false);
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["kappa"]["value"], "-inf");
        assert_eq!(v["kappa"]["certification"], "certified");
        assert_eq!(v["kappa_real"]["result"]["value"], "-inf");
        assert_eq!(v["validate"], serde_json::json!([]));
        assert_eq!(v["is_snc"], true);
        assert_eq!(v["homology"]["torsion_invariants"], serde_json::json!([]));
        assert_eq!(v["homology"]["z_acyclic"], true);
        assert!(v.get("kappa_real_error").is_none());
    }

    #[test]
    fn line_conic_report_traces_the_eliminated_loop() {
        let pair = build(&GallerySpec::LineConic).unwrap();
        let report = analyze(&pair, true);
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["kappa_real"]["before_elimination"]["value"], "0");
        assert_eq!(v["kappa_real"]["result"]["value"], "-inf");
        assert_eq!(v["kappa_real"]["eliminated_loops"].as_array().unwrap().len(), 1);
        let l = &v["kappa_real"]["eliminated_loops"][0];
        assert_eq!(l["components"], serde_json::json!(["L", "C"]));
    }

    #[test]
    fn zariski_details_use_names_and_exact_fractions() {
        let pair = build(&GallerySpec::SAb { a: 2, b: 3 }).unwrap();
        let report = analyze(&pair, false);
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["kappa"]["value"], "1");
        let z = &v["kappa"]["zariski"];
        assert_eq!(z["p_squared"], "0");
        assert_eq!(z["negative_part"]["E1"], "1/3");
        assert_eq!(z["p_dot"]["C0"], "1/6");
        let y = build(&GallerySpec::Y333).unwrap();
        let ry = analyze(&y, false);
        let vy: serde_json::Value = serde_json::from_str(&ry.to_json()).unwrap();
        assert_eq!(vy["homology"]["torsion_invariants"], serde_json::json!([9]));
        assert_eq!(vy["kappa"]["zariski"]["p_is_zero_class"], true);
    }
}
