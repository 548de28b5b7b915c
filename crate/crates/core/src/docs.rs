//! JSON documents: serialized surfaces and replayable blow-up scripts.
//!
//! A surface document is a plain dump of a pair's graph. A script document
//! instead records how to build one: plane curves with their declared
//! intersections and cusps, followed by blow-up steps that reference
//! curves by name and points by edge label. New edges are labeled
//! `{curve}_{exceptional}` by the engine, so later steps can name them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::birational::{blow_up, BirationalError, BlowUpRequest, BoundaryPolicy, Center};
use crate::pair::{EdgeId, PointReality, Reality, RealSNCPair};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocError {
    #[error("component ids must equal their positions; found {found} at {position}")]
    NonSequentialIds { found: usize, position: usize },
    #[error("edge endpoint {0} is not a component id")]
    UnknownComponent(usize),
    #[error("conjugate_of {0} is not an edge index")]
    UnknownEdgeIndex(usize),
    #[error("conjugate_of {0} is not a component id")]
    UnknownComponentRef(usize),
    #[error("only the plane base \"P2\" is supported, found {0:?}")]
    UnsupportedBase(String),
    #[error("no curve named {0:?}")]
    UnknownCurve(String),
    #[error("no point labeled {0:?}")]
    UnknownPoint(String),
    #[error("curve {0:?} declared twice")]
    DuplicateCurve(String),
    #[error("conjugate curve {of:?} for {name:?} must be declared first")]
    ConjugateBeforeDeclaration { name: String, of: String },
    #[error("meet point {label:?} cannot be the conjugate of {of:?}")]
    BadMeetConjugate { label: String, of: String },
    #[error("blow-up at a multiplicity-{multiplicity} point of {curve} has no matching declared cusp")]
    CuspNotDeclared { curve: String, multiplicity: i64 },
    #[error("boundary list names unknown component {0:?}")]
    UnknownBoundaryName(String),
    #[error(transparent)]
    Engine(#[from] BirationalError),
}

// ---------------------------------------------------------------------------
// Surface documents

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceDocument {
    pub name: String,
    pub picard_rank: usize,
    pub k_self: i64,
    pub components: Vec<ComponentDoc>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDoc {
    pub id: usize,
    pub name: String,
    pub weight: i64,
    pub genus: i64,
    pub reality: Reality,
    pub in_boundary: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub a: usize,
    pub b: usize,
    pub mult: i64,
    pub point: PointDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// Point reality with conjugates referenced by position in the edges array
/// rather than by internal edge id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointDoc {
    Real,
    ConjugateOf(usize),
}

/// Dumps a pair as a document. Edge ids are renumbered to positions, so
/// pairs that went through surgery serialize cleanly.
pub fn to_document(pair: &RealSNCPair) -> SurfaceDocument {
    let index_of = |id: EdgeId| pair.edges().position(|e| e.id == id).unwrap();
    SurfaceDocument {
        name: pair.name.clone(),
        picard_rank: pair.picard_rank,
        k_self: pair.k_self,
        components: pair
            .components()
            .map(|c| ComponentDoc {
                id: c.id,
                name: c.name.clone(),
                weight: c.self_intersection,
                genus: c.genus,
                reality: c.reality,
                in_boundary: c.in_boundary,
                class: c.picard_class.clone(),
            })
            .collect(),
        edges: pair
            .edges()
            .map(|e| EdgeDoc {
                a: e.ends.0,
                b: e.ends.1,
                mult: e.multiplicity,
                point: match e.point {
                    PointReality::Real => PointDoc::Real,
                    PointReality::ConjugateOf(other) => PointDoc::ConjugateOf(index_of(other)),
                },
                label: e.label.clone(),
            })
            .collect(),
    }
}

/// Rebuilds a pair from a document. Structural references are checked
/// here; geometric consistency is the caller's `validate()` call.
pub fn from_document(doc: &SurfaceDocument) -> Result<RealSNCPair, DocError> {
    let mut pair = RealSNCPair::new(doc.name.clone(), doc.picard_rank, doc.k_self);
    let n = doc.components.len();
    for (position, c) in doc.components.iter().enumerate() {
        if c.id != position {
            return Err(DocError::NonSequentialIds {
                found: c.id,
                position,
            });
        }
        if let Reality::ConjugateOf(other) = c.reality {
            if other >= n {
                return Err(DocError::UnknownComponentRef(other));
            }
        }
        pair.add_component(
            c.name.clone(),
            c.weight,
            c.genus,
            c.reality,
            c.in_boundary,
            c.class.clone(),
        );
    }
    for e in &doc.edges {
        if e.a >= n {
            return Err(DocError::UnknownComponent(e.a));
        }
        if e.b >= n {
            return Err(DocError::UnknownComponent(e.b));
        }
        pair.add_edge(e.a, e.b, e.mult, PointReality::Real, e.label.clone());
    }
    // Second pass: conjugate references become edge ids, which coincide
    // with positions in a freshly built pair.
    for (i, e) in doc.edges.iter().enumerate() {
        if let PointDoc::ConjugateOf(other) = e.point {
            if other >= doc.edges.len() {
                return Err(DocError::UnknownEdgeIndex(other));
            }
            pair.edge_mut(i).unwrap().point = PointReality::ConjugateOf(other);
        }
    }
    Ok(pair)
}

// ---------------------------------------------------------------------------
// Script documents

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScriptDocument {
    pub name: String,
    /// Base surface; only the plane `"P2"` is understood.
    pub base: String,
    pub curves: Vec<CurveDoc>,
    #[serde(default)]
    pub ops: Vec<OpDoc>,
    /// Names of the components of the final boundary; authoritative for
    /// every component, base curves included.
    pub boundary: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDoc {
    pub name: String,
    pub degree: i64,
    #[serde(default)]
    pub reality: CurveReality,
    /// Multiplicities of the declared singular points, in the order the
    /// ops resolve them; entries are consumed by blow-ups of multiplicity
    /// at least two.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cusps: Vec<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub meets: Vec<MeetDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveReality {
    #[default]
    RealInfinite,
    RealFinite,
    /// Names an earlier-declared curve; the pairing is made mutual.
    ConjugateOf(String),
}

/// One declared intersection with an earlier curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeetDoc {
    pub with: String,
    #[serde(default = "one")]
    pub mult: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "MeetPoint::is_real")]
    pub point: MeetPoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeetPoint {
    #[default]
    Real,
    /// Label of an earlier-declared meet; both points must be labeled.
    ConjugateOf(String),
}

impl MeetPoint {
    fn is_real(&self) -> bool {
        matches!(self, MeetPoint::Real)
    }
}

fn one() -> i64 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpDoc {
    pub center: CenterDoc,
    pub policy: BoundaryPolicy,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugate_name: Option<String>,
}

/// Blow-up centers with curves referenced by name and points by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CenterDoc {
    FreeReal,
    OnComponent {
        component: String,
        multiplicity: i64,
    },
    OnEdge {
        point: String,
        #[serde(default = "one")]
        m1: i64,
        #[serde(default = "one")]
        m2: i64,
    },
    OnPoint {
        components: Vec<(String, i64)>,
        points: Vec<String>,
    },
    ConjugatePair {
        inner: Box<CenterDoc>,
    },
}

fn arithmetic_genus(degree: i64) -> i64 {
    (degree - 1) * (degree - 2) / 2
}

struct CuspLedger {
    /// Remaining declared multiplicities per base curve name.
    remaining: Vec<(String, Vec<i64>)>,
}

impl CuspLedger {
    fn consume(&mut self, curve: &str, multiplicity: i64) -> Result<(), DocError> {
        if multiplicity < 2 {
            return Ok(());
        }
        if let Some((_, list)) = self.remaining.iter_mut().find(|(n, _)| n == curve) {
            if let Some(at) = list.iter().position(|&m| m == multiplicity) {
                list.remove(at);
                return Ok(());
            }
        }
        Err(DocError::CuspNotDeclared {
            curve: curve.to_string(),
            multiplicity,
        })
    }
}

fn resolve_center(
    pair: &RealSNCPair,
    doc: &CenterDoc,
    cusps: &mut CuspLedger,
) -> Result<Center, DocError> {
    Ok(match doc {
        CenterDoc::FreeReal => Center::FreeReal,
        CenterDoc::OnComponent {
            component,
            multiplicity,
        } => {
            let c = pair
                .component_by_name(component)
                .ok_or_else(|| DocError::UnknownCurve(component.clone()))?;
            cusps.consume(component, *multiplicity)?;
            Center::OnComponent {
                component: c.id,
                multiplicity: *multiplicity,
            }
        }
        CenterDoc::OnEdge { point, m1, m2 } => {
            let e = pair
                .edge_by_label(point)
                .ok_or_else(|| DocError::UnknownPoint(point.clone()))?;
            if *m1 >= 2 {
                cusps.consume(&pair.component(e.ends.0).name.clone(), *m1)?;
            }
            if *m2 >= 2 {
                cusps.consume(&pair.component(e.ends.1).name.clone(), *m2)?;
            }
            Center::OnEdge {
                edge: e.id,
                m1: *m1,
                m2: *m2,
            }
        }
        CenterDoc::OnPoint { components, points } => {
            let mut incidences = Vec::new();
            for (name, m) in components {
                let c = pair
                    .component_by_name(name)
                    .ok_or_else(|| DocError::UnknownCurve(name.clone()))?;
                cusps.consume(name, *m)?;
                incidences.push((c.id, *m));
            }
            let mut through_edges = Vec::new();
            for label in points {
                let e = pair
                    .edge_by_label(label)
                    .ok_or_else(|| DocError::UnknownPoint(label.clone()))?;
                through_edges.push(e.id);
            }
            Center::OnPoint {
                incidences,
                through_edges,
            }
        }
        CenterDoc::ConjugatePair { inner } => {
            Center::ConjugatePairOf(Box::new(resolve_center(pair, inner, cusps)?))
        }
    })
}

/// Replays a script into a pair: declares the base curves and their
/// intersections, runs the blow-ups, then applies the boundary list.
pub fn replay(script: &ScriptDocument) -> Result<RealSNCPair, DocError> {
    if script.base != "P2" {
        return Err(DocError::UnsupportedBase(script.base.clone()));
    }
    let mut pair = RealSNCPair::plane(script.name.clone());
    for curve in &script.curves {
        if pair.component_by_name(&curve.name).is_some() {
            return Err(DocError::DuplicateCurve(curve.name.clone()));
        }
        let reality = match &curve.reality {
            CurveReality::RealInfinite => Reality::RealInfinite,
            CurveReality::RealFinite => Reality::RealFinite,
            CurveReality::ConjugateOf(other) => {
                let o = pair.component_by_name(other).ok_or_else(|| {
                    DocError::ConjugateBeforeDeclaration {
                        name: curve.name.clone(),
                        of: other.clone(),
                    }
                })?;
                Reality::ConjugateOf(o.id)
            }
        };
        let d = curve.degree;
        let id = pair.add_component(
            curve.name.clone(),
            d * d,
            arithmetic_genus(d),
            reality,
            false,
            Some(vec![d]),
        );
        if let Reality::ConjugateOf(o) = reality {
            pair.component_mut(o).reality = Reality::ConjugateOf(id);
        }
        for meet in &curve.meets {
            let other = pair
                .component_by_name(&meet.with)
                .ok_or_else(|| DocError::UnknownCurve(meet.with.clone()))?
                .id;
            let e = pair.add_edge(
                other,
                id,
                meet.mult,
                PointReality::Real,
                meet.label.clone(),
            );
            if let MeetPoint::ConjugateOf(label) = &meet.point {
                let partner = pair
                    .edge_by_label(label)
                    .ok_or_else(|| DocError::UnknownPoint(label.clone()))?
                    .id;
                if partner == e {
                    return Err(DocError::BadMeetConjugate {
                        label: meet.label.clone().unwrap_or_default(),
                        of: label.clone(),
                    });
                }
                pair.edge_mut(e).unwrap().point = PointReality::ConjugateOf(partner);
                pair.edge_mut(partner).unwrap().point = PointReality::ConjugateOf(e);
            }
        }
    }
    let mut cusps = CuspLedger {
        remaining: script
            .curves
            .iter()
            .map(|c| (c.name.clone(), c.cusps.clone()))
            .collect(),
    };
    for op in &script.ops {
        let center = resolve_center(&pair, &op.center, &mut cusps)?;
        let mut request = BlowUpRequest::new(center, op.policy, op.name.clone());
        if let Some(conj) = &op.conjugate_name {
            request = request.with_conjugate_name(conj.clone());
        }
        let (next, _) = blow_up(&pair, &request)?;
        pair = next;
    }
    for name in &script.boundary {
        if pair.component_by_name(name).is_none() {
            return Err(DocError::UnknownBoundaryName(name.clone()));
        }
    }
    for id in pair.component_ids() {
        let in_boundary = script.boundary.contains(&pair.component(id).name);
        pair.component_mut(id).in_boundary = in_boundary;
    }
    Ok(pair)
}

/// Structural equality of two pairs: same components in order, same edge
/// multiset with conjugate points matched by partner shape. Edge insertion
/// order and endpoint order are not significant, component order is.
pub fn same_graph(a: &RealSNCPair, b: &RealSNCPair) -> bool {
    if a.picard_rank != b.picard_rank || a.k_self != b.k_self {
        return false;
    }
    let comps = |p: &RealSNCPair| -> Vec<_> {
        p.components()
            .map(|c| {
                (
                    c.id,
                    c.name.clone(),
                    c.self_intersection,
                    c.genus,
                    c.reality,
                    c.in_boundary,
                    c.picard_class.clone(),
                )
            })
            .collect()
    };
    if comps(a) != comps(b) {
        return false;
    }
    type EdgeKey = ((usize, usize), i64, Option<String>);
    let key = |p: &RealSNCPair, id: EdgeId| -> EdgeKey {
        let e = p.edge(id).unwrap();
        let ends = if e.ends.0 <= e.ends.1 {
            e.ends
        } else {
            (e.ends.1, e.ends.0)
        };
        (ends, e.multiplicity, e.label.clone())
    };
    let edges = |p: &RealSNCPair| -> Vec<(EdgeKey, Option<EdgeKey>)> {
        let mut out: Vec<_> = p
            .edges()
            .map(|e| {
                let partner = match e.point {
                    PointReality::Real => None,
                    PointReality::ConjugateOf(other) => Some(key(p, other)),
                };
                (key(p, e.id), partner)
            })
            .collect();
        out.sort();
        out
    };
    edges(a) == edges(b)
}
