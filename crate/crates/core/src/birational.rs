//! Blow-up surgery on decorated dual graphs.
//!
//! Blowing up a point of the surface rewrites the graph locally: a new
//! exceptional component of weight -1 appears, every curve through the
//! center loses the square of its multiplicity there from its weight and
//! m(m-1)/2 from its arithmetic genus, each point concentrated at the
//! center loses the product of the branch multiplicities, and the Picard
//! data shifts by one (or two, for a conjugate pair of centers). The same
//! primitive drives singularity resolution, base point clusters, the link
//! moves, and the elimination of imaginary loops in the real boundary.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pair::{ComponentId, EdgeId, PointReality, Reality, RealSNCPair};

/// Where to blow up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Center {
    /// A real point on none of the tracked curves.
    FreeReal,
    /// A real point on one tracked curve, with the multiplicity of the
    /// curve there (2 for a node or simple cusp, 1 for a smooth point).
    OnComponent {
        component: ComponentId,
        multiplicity: i64,
    },
    /// The point of a tracked edge; `m1` and `m2` are the multiplicities of
    /// the two curve germs (in edge endpoint order) at the point.
    OnEdge { edge: EdgeId, m1: i64, m2: i64 },
    /// A point where several tracked curves meet at once: each incidence is
    /// a component with its multiplicity there, and every edge whose point
    /// is this very point must be listed in `through_edges`.
    OnPoint {
        incidences: Vec<(ComponentId, i64)>,
        through_edges: Vec<EdgeId>,
    },
    /// A non-real point together with its conjugate; both are blown up and
    /// the two exceptional curves become a conjugate pair.
    ConjugatePairOf(Box<Center>),
}

/// What happens to the boundary flag of the exceptional curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryPolicy {
    /// Boundary becomes the reduced total transform: the exceptional curve
    /// joins the boundary exactly when the center lies on it.
    TotalTransformReduced,
    /// Boundary becomes the strict transform: the exceptional curve stays
    /// out of the boundary.
    StrictTransform,
}

/// A single blow-up instruction.
#[derive(Debug, Clone)]
pub struct BlowUpRequest {
    pub center: Center,
    pub policy: BoundaryPolicy,
    /// Name of the exceptional component.
    pub name: String,
    /// Name of the conjugate exceptional for pair centers; defaults to the
    /// primary name with `_bar` appended.
    pub conjugate_name: Option<String>,
}

impl BlowUpRequest {
    pub fn new(center: Center, policy: BoundaryPolicy, name: impl Into<String>) -> Self {
        BlowUpRequest {
            center,
            policy,
            name: name.into(),
            conjugate_name: None,
        }
    }

    pub fn with_conjugate_name(mut self, name: impl Into<String>) -> Self {
        self.conjugate_name = Some(name.into());
        self
    }
}

/// Components created by one blow-up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlowUpOutcome {
    pub exceptional: ComponentId,
    pub conjugate_exceptional: Option<ComponentId>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BirationalError {
    #[error("unknown component id {0}")]
    UnknownComponent(ComponentId),
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("multiplicity must be at least 1: {detail}")]
    InvalidMultiplicity { detail: String },
    #[error("component {component} listed twice at one center")]
    DuplicateIncidence { component: String },
    #[error("center is not conjugation-symmetric: {detail}")]
    CenterNotSymmetric { detail: String },
    #[error("a real center lies on real points only, but {detail}")]
    EdgeNotReal { detail: String },
    #[error("a conjugate-pair center lies on non-real points only, but {detail}")]
    EdgeNotImaginary { detail: String },
    #[error("components {a} and {b} meet at the center but no edge between them is listed")]
    MissingThroughEdge { a: String, b: String },
    #[error("more than one edge between {a} and {b} is listed for a single point")]
    AmbiguousThroughEdge { a: String, b: String },
    #[error("edge {detail} does not lie at the center (an endpoint is not incident)")]
    EdgeNotAtCenter { detail: String },
    #[error("edge {detail} has smaller multiplicity than the center consumes")]
    InsufficientMultiplicity { detail: String },
    #[error("blowing up would drop the genus of {component} below zero")]
    GenusUnderflow { component: String },
    #[error("conjugate-pair centers cannot nest")]
    NestedConjugatePair,
    #[error("self-edges are not supported here: {detail}")]
    SelfEdgeUnsupported { detail: String },
    #[error("the two conjugate centers are not disjoint: {detail}")]
    ConjugateCentersNotDisjoint { detail: String },
    #[error("component name {0} is already taken")]
    DuplicateName(String),
    #[error("link move requires a real boundary point, but no incident component is in the boundary")]
    CenterNotOnBoundary,
    #[error("wrong center kind for this move: {detail}")]
    WrongMoveKind { detail: String },
    #[error("the pair is not simple normal crossing: {detail}")]
    NotSimpleNormalCrossing { detail: String },
    #[error("relabeling is not a permutation: {detail}")]
    InvalidPermutation { detail: String },
}

/// One point of the surface, resolved to incidence data against the
/// current graph: which curves pass through it with which multiplicities,
/// and how much each listed edge loses.
#[derive(Debug, Clone)]
struct ResolvedPoint {
    /// Sorted by component id, no duplicates.
    incidences: Vec<(ComponentId, i64)>,
    edge_deltas: Vec<(EdgeId, i64)>,
    /// One entry per curve germ at the point, in a fixed order: the germ's
    /// component and its multiplicity, which is the local intersection of
    /// its strict transform with the exceptional curve. This differs from
    /// `incidences` only at a self-edge, where one component contributes
    /// two germs with separate tangent directions.
    germs: Vec<(ComponentId, i64)>,
}

enum Normalized {
    Real(ResolvedPoint),
    Pair {
        inner: ResolvedPoint,
        image: ResolvedPoint,
    },
}

fn resolve_point(pair: &RealSNCPair, center: &Center) -> Result<ResolvedPoint, BirationalError> {
    match center {
        Center::FreeReal => Ok(ResolvedPoint {
            incidences: Vec::new(),
            edge_deltas: Vec::new(),
            germs: Vec::new(),
        }),
        Center::OnComponent {
            component,
            multiplicity,
        } => {
            if *component >= pair.component_count() {
                return Err(BirationalError::UnknownComponent(*component));
            }
            if *multiplicity < 1 {
                return Err(BirationalError::InvalidMultiplicity {
                    detail: format!("component multiplicity {multiplicity}"),
                });
            }
            Ok(ResolvedPoint {
                incidences: vec![(*component, *multiplicity)],
                edge_deltas: Vec::new(),
                germs: vec![(*component, *multiplicity)],
            })
        }
        Center::OnEdge { edge, m1, m2 } => {
            let e = pair
                .edge(*edge)
                .ok_or(BirationalError::UnknownEdge(*edge))?;
            if *m1 < 1 || *m2 < 1 {
                return Err(BirationalError::InvalidMultiplicity {
                    detail: format!("edge branch multiplicities {m1}, {m2}"),
                });
            }
            let delta = m1 * m2;
            if e.is_self_edge() {
                // Two crossing germs of one curve: the strict transform
                // meets the exceptional curve at two separate points.
                Ok(ResolvedPoint {
                    incidences: vec![(e.ends.0, m1 + m2)],
                    edge_deltas: vec![(*edge, delta)],
                    germs: vec![(e.ends.0, *m1), (e.ends.0, *m2)],
                })
            } else {
                let mut incidences = vec![(e.ends.0, *m1), (e.ends.1, *m2)];
                incidences.sort_by_key(|&(c, _)| c);
                Ok(ResolvedPoint {
                    incidences: incidences.clone(),
                    edge_deltas: vec![(*edge, delta)],
                    germs: incidences,
                })
            }
        }
        Center::OnPoint {
            incidences,
            through_edges,
        } => {
            let mut inc = incidences.clone();
            inc.sort_by_key(|&(c, _)| c);
            for &(c, m) in &inc {
                if c >= pair.component_count() {
                    return Err(BirationalError::UnknownComponent(c));
                }
                if m < 1 {
                    return Err(BirationalError::InvalidMultiplicity {
                        detail: format!(
                            "multiplicity {m} on {}",
                            pair.component(c).name
                        ),
                    });
                }
            }
            for w in inc.windows(2) {
                if w[0].0 == w[1].0 {
                    return Err(BirationalError::DuplicateIncidence {
                        component: pair.component(w[0].0).name.clone(),
                    });
                }
            }
            let mult_of = |c: ComponentId| inc.iter().find(|&&(x, _)| x == c).map(|&(_, m)| m);
            let mut deltas = Vec::new();
            let mut seen = BTreeSet::new();
            for &eid in through_edges {
                let e = pair.edge(eid).ok_or(BirationalError::UnknownEdge(eid))?;
                if !seen.insert(eid) {
                    return Err(BirationalError::AmbiguousThroughEdge {
                        a: pair.component(e.ends.0).name.clone(),
                        b: pair.component(e.ends.1).name.clone(),
                    });
                }
                if e.is_self_edge() {
                    return Err(BirationalError::SelfEdgeUnsupported {
                        detail: format!(
                            "{} in a multi-curve center; blow the node up on its own first",
                            pair.describe_edge(e)
                        ),
                    });
                }
                let (ma, mb) = match (mult_of(e.ends.0), mult_of(e.ends.1)) {
                    (Some(a), Some(b)) => (a, b),
                    _ => {
                        return Err(BirationalError::EdgeNotAtCenter {
                            detail: pair.describe_edge(e),
                        })
                    }
                };
                deltas.push((eid, ma * mb));
            }
            Ok(ResolvedPoint {
                incidences: inc.clone(),
                edge_deltas: deltas,
                germs: inc,
            })
        }
        Center::ConjugatePairOf(_) => Err(BirationalError::NestedConjugatePair),
    }
}

/// Shared consistency rules for one resolved point. `real_point` selects
/// whether the listed edges must sit on real or on non-real points.
fn validate_point(
    pair: &RealSNCPair,
    point: &ResolvedPoint,
    real_point: bool,
) -> Result<(), BirationalError> {
    for &(c, m) in &point.incidences {
        let comp = pair.component(c);
        if comp.genus < m * (m - 1) / 2 {
            return Err(BirationalError::GenusUnderflow {
                component: comp.name.clone(),
            });
        }
    }
    // Every pair of distinct incident curves meets at the center, so exactly
    // one listed edge must join them.
    let mut pair_edges: BTreeMap<(ComponentId, ComponentId), usize> = BTreeMap::new();
    for &(eid, delta) in &point.edge_deltas {
        let e = pair.edge(eid).ok_or(BirationalError::UnknownEdge(eid))?;
        if real_point && !e.point.is_real() {
            return Err(BirationalError::EdgeNotReal {
                detail: format!("{} sits on a non-real point", pair.describe_edge(e)),
            });
        }
        if !real_point && e.point.is_real() {
            return Err(BirationalError::EdgeNotImaginary {
                detail: format!("{} sits on a real point", pair.describe_edge(e)),
            });
        }
        if e.multiplicity < delta {
            return Err(BirationalError::InsufficientMultiplicity {
                detail: pair.describe_edge(e),
            });
        }
        if !e.is_self_edge() {
            let key = (e.ends.0.min(e.ends.1), e.ends.0.max(e.ends.1));
            *pair_edges.entry(key).or_insert(0) += 1;
        }
    }
    for (i, &(a, _)) in point.incidences.iter().enumerate() {
        for &(b, _) in point.incidences.iter().take(i) {
            let key = (a.min(b), a.max(b));
            match pair_edges.get(&key).copied().unwrap_or(0) {
                0 => {
                    return Err(BirationalError::MissingThroughEdge {
                        a: pair.component(key.0).name.clone(),
                        b: pair.component(key.1).name.clone(),
                    })
                }
                1 => {}
                _ => {
                    return Err(BirationalError::AmbiguousThroughEdge {
                        a: pair.component(key.0).name.clone(),
                        b: pair.component(key.1).name.clone(),
                    })
                }
            }
        }
    }
    if real_point {
        // A real point is fixed by conjugation, so its incidence data must
        // be sigma-invariant as a multiset.
        for &(c, m) in &point.incidences {
            let sc = pair.sigma_component(c);
            if !point.incidences.contains(&(sc, m)) {
                return Err(BirationalError::CenterNotSymmetric {
                    detail: format!(
                        "{} passes through the center but its conjugate {} does not match",
                        pair.component(c).name,
                        pair.component(sc).name
                    ),
                });
            }
        }
    }
    Ok(())
}

fn sigma_image(pair: &RealSNCPair, point: &ResolvedPoint) -> Result<ResolvedPoint, BirationalError> {
    let mut incidences: Vec<(ComponentId, i64)> = point
        .incidences
        .iter()
        .map(|&(c, m)| (pair.sigma_component(c), m))
        .collect();
    incidences.sort_by_key(|&(c, _)| c);
    let mut edge_deltas = Vec::new();
    for &(eid, delta) in &point.edge_deltas {
        let sib = pair
            .sigma_edge(eid)
            .ok_or(BirationalError::UnknownEdge(eid))?;
        if point.edge_deltas.iter().any(|&(other, _)| other == sib) {
            let e = pair.edge(eid).unwrap();
            return Err(BirationalError::ConjugateCentersNotDisjoint {
                detail: format!(
                    "{} and its conjugate are listed at one point",
                    pair.describe_edge(e)
                ),
            });
        }
        edge_deltas.push((sib, delta));
    }
    // Germ order is preserved so the two exceptional curves' new edges can
    // be matched positionally into conjugate pairs.
    let germs = point
        .germs
        .iter()
        .map(|&(c, m)| (pair.sigma_component(c), m))
        .collect();
    Ok(ResolvedPoint {
        incidences,
        edge_deltas,
        germs,
    })
}

struct ExecutedPoint {
    exceptional: ComponentId,
    /// New edges in germ order, with the old component they join.
    new_edges: Vec<(ComponentId, EdgeId)>,
}

fn execute_point(
    pair: &mut RealSNCPair,
    point: &ResolvedPoint,
    name: &str,
    policy: BoundaryPolicy,
) -> Result<ExecutedPoint, BirationalError> {
    if pair.component_by_name(name).is_some() {
        return Err(BirationalError::DuplicateName(name.to_string()));
    }
    let in_boundary = match policy {
        BoundaryPolicy::TotalTransformReduced => point
            .incidences
            .iter()
            .any(|&(c, _)| pair.component(c).in_boundary),
        BoundaryPolicy::StrictTransform => false,
    };
    let has_classes = pair.has_full_classes();
    if has_classes {
        for id in 0..pair.component_count() {
            let push = point
                .incidences
                .iter()
                .find(|&&(c, _)| c == id)
                .map(|&(_, m)| -m)
                .unwrap_or(0);
            pair.component_mut(id)
                .picard_class
                .as_mut()
                .expect("full classes")
                .push(push);
        }
    }
    for &(c, m) in &point.incidences {
        let comp = pair.component_mut(c);
        comp.self_intersection -= m * m;
        comp.genus -= m * (m - 1) / 2;
    }
    for &(eid, delta) in &point.edge_deltas {
        let e = pair.edge_mut(eid).expect("validated edge");
        e.multiplicity -= delta;
        let emptied = e.multiplicity == 0;
        if emptied {
            pair.remove_edge(eid);
        }
    }
    let class = has_classes.then(|| {
        let mut v = vec![0i64; pair.picard_rank + 1];
        v[pair.picard_rank] = 1;
        v
    });
    let exceptional = pair.add_component(name, -1, 0, Reality::RealInfinite, in_boundary, class);
    let mut new_edges = Vec::new();
    for &(c, m) in &point.germs {
        let other = pair.component(c).name.clone();
        let mut label = format!("{other}_{name}");
        while pair.edge_by_label(&label).is_some() {
            label.push('x');
        }
        let eid = pair.add_edge(c, exceptional, m, PointReality::Real, Some(label));
        new_edges.push((c, eid));
    }
    pair.picard_rank += 1;
    pair.k_self -= 1;
    Ok(ExecutedPoint {
        exceptional,
        new_edges,
    })
}

/// Blows up one center and returns the transformed pair together with the
/// ids of the exceptional component(s).
pub fn blow_up(
    pair: &RealSNCPair,
    request: &BlowUpRequest,
) -> Result<(RealSNCPair, BlowUpOutcome), BirationalError> {
    let mut out = pair.clone();
    let outcome = blow_up_in_place(&mut out, request)?;
    Ok((out, outcome))
}

fn blow_up_in_place(
    pair: &mut RealSNCPair,
    request: &BlowUpRequest,
) -> Result<BlowUpOutcome, BirationalError> {
    let normalized = match &request.center {
        Center::ConjugatePairOf(inner) => {
            let inner_point = resolve_point(pair, inner)?;
            validate_point(pair, &inner_point, false)?;
            let image = sigma_image(pair, &inner_point)?;
            validate_point(pair, &image, false)?;
            Normalized::Pair {
                inner: inner_point,
                image,
            }
        }
        other => {
            let point = resolve_point(pair, other)?;
            validate_point(pair, &point, true)?;
            Normalized::Real(point)
        }
    };
    match normalized {
        Normalized::Real(point) => {
            let run = execute_point(pair, &point, &request.name, request.policy)?;
            pair.log(format!(
                "blow up real point -> {} (policy {:?})",
                request.name, request.policy
            ));
            Ok(BlowUpOutcome {
                exceptional: run.exceptional,
                conjugate_exceptional: None,
            })
        }
        Normalized::Pair { inner, image } => {
            let conj_name = request
                .conjugate_name
                .clone()
                .unwrap_or_else(|| format!("{}_bar", request.name));
            if conj_name == request.name {
                return Err(BirationalError::DuplicateName(conj_name));
            }
            let first = execute_point(pair, &inner, &request.name, request.policy)?;
            let second = execute_point(pair, &image, &conj_name, request.policy)?;
            pair.component_mut(first.exceptional).reality =
                Reality::ConjugateOf(second.exceptional);
            pair.component_mut(second.exceptional).reality =
                Reality::ConjugateOf(first.exceptional);
            for (&(c, e1), &(d, e2)) in first.new_edges.iter().zip(second.new_edges.iter()) {
                debug_assert_eq!(pair.sigma_component(c), d);
                pair.edge_mut(e1).expect("new edge").point = PointReality::ConjugateOf(e2);
                pair.edge_mut(e2).expect("new edge").point = PointReality::ConjugateOf(e1);
            }
            pair.log(format!(
                "blow up conjugate point pair -> {} / {} (policy {:?})",
                request.name, conj_name, request.policy
            ));
            Ok(BlowUpOutcome {
                exceptional: first.exceptional,
                conjugate_exceptional: Some(second.exceptional),
            })
        }
    }
}

/// One eliminated imaginary loop, reported by names for stable output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminatedLoop {
    pub components: (String, String),
    pub points: (String, String),
    pub exceptionals: (String, String),
}

/// What the loop elimination did.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LoopElimination {
    pub loops: Vec<EliminatedLoop>,
    /// Detection sweeps that found work; a single sweep always suffices,
    /// the loop is defensive.
    pub rounds: usize,
}

/// Blows up every conjugate point pair where two distinct real boundary
/// curves meet, with the reduced total transform as the new boundary. The
/// result carries no imaginary loops, so the real boundary locus decomposes
/// into genuine circles.
pub fn eliminate_imaginary_loops(
    pair: &RealSNCPair,
) -> Result<(RealSNCPair, LoopElimination), BirationalError> {
    if !pair.is_snc() {
        let offender = pair
            .edges()
            .find(|e| e.multiplicity != 1 || e.is_self_edge())
            .map(|e| pair.describe_edge(e))
            .unwrap_or_default();
        return Err(BirationalError::NotSimpleNormalCrossing { detail: offender });
    }
    let mut out = pair.clone();
    let mut report = LoopElimination::default();
    let mut counter = 0usize;
    loop {
        let loops = out.imaginary_loops();
        if loops.is_empty() {
            break;
        }
        report.rounds += 1;
        for lp in loops {
            let Some(edge) = out.edge(lp.edge) else {
                continue;
            };
            let point_a = edge
                .label
                .clone()
                .unwrap_or_else(|| out.describe_edge(edge));
            let point_b = out
                .edge(lp.conjugate_edge)
                .map(|e| e.label.clone().unwrap_or_else(|| out.describe_edge(e)))
                .unwrap_or_default();
            counter += 1;
            let mut base = format!("E_loop{counter}");
            while out.component_by_name(&base).is_some()
                || out.component_by_name(&format!("{base}_bar")).is_some()
            {
                counter += 1;
                base = format!("E_loop{counter}");
            }
            let request = BlowUpRequest::new(
                Center::ConjugatePairOf(Box::new(Center::OnEdge {
                    edge: lp.edge,
                    m1: 1,
                    m2: 1,
                })),
                BoundaryPolicy::TotalTransformReduced,
                base.clone(),
            );
            let names = (
                out.component(lp.components.0).name.clone(),
                out.component(lp.components.1).name.clone(),
            );
            blow_up_in_place(&mut out, &request)?;
            report.loops.push(EliminatedLoop {
                components: names,
                points: (point_a, point_b),
                exceptionals: (base.clone(), format!("{base}_bar")),
            });
        }
    }
    if !report.loops.is_empty() {
        out.log(format!(
            "eliminate {} imaginary loop(s) in the real boundary",
            report.loops.len()
        ));
    }
    Ok((out, report))
}

/// The three moves that preserve the link invariants of the pair.
#[derive(Debug, Clone)]
pub enum LinkMove {
    /// Relabel components by a permutation: `map[i]` is the new id of the
    /// component currently known as `i`.
    Relabel { map: Vec<ComponentId> },
    /// Blow up a real point of the boundary, with the reduced total
    /// transform as the new boundary.
    RealBoundaryBlowUp { center: Center, name: String },
    /// Blow up a conjugate pair of non-real points, keeping the strict
    /// transform as the boundary.
    ConjugatePairBlowUp {
        center: Center,
        name: String,
        conjugate_name: Option<String>,
    },
}

/// Applies a link move. Relabeling is an isomorphism of decorated graphs;
/// the two blow-up moves delegate to the engine with the policy the move
/// dictates.
pub fn apply_link(pair: &RealSNCPair, mv: &LinkMove) -> Result<RealSNCPair, BirationalError> {
    match mv {
        LinkMove::Relabel { map } => relabel(pair, map),
        LinkMove::RealBoundaryBlowUp { center, name } => {
            if matches!(center, Center::ConjugatePairOf(_)) {
                return Err(BirationalError::WrongMoveKind {
                    detail: "real boundary move with a conjugate-pair center".into(),
                });
            }
            let point = resolve_point(pair, center)?;
            if !point
                .incidences
                .iter()
                .any(|&(c, _)| pair.component(c).in_boundary)
            {
                return Err(BirationalError::CenterNotOnBoundary);
            }
            let request = BlowUpRequest::new(
                center.clone(),
                BoundaryPolicy::TotalTransformReduced,
                name.clone(),
            );
            Ok(blow_up(pair, &request)?.0)
        }
        LinkMove::ConjugatePairBlowUp {
            center,
            name,
            conjugate_name,
        } => {
            let inner = match center {
                Center::ConjugatePairOf(inner) => (**inner).clone(),
                other => other.clone(),
            };
            let mut request = BlowUpRequest::new(
                Center::ConjugatePairOf(Box::new(inner)),
                BoundaryPolicy::StrictTransform,
                name.clone(),
            );
            if let Some(cn) = conjugate_name {
                request = request.with_conjugate_name(cn.clone());
            }
            Ok(blow_up(pair, &request)?.0)
        }
    }
}

fn relabel(pair: &RealSNCPair, map: &[ComponentId]) -> Result<RealSNCPair, BirationalError> {
    let n = pair.component_count();
    if map.len() != n {
        return Err(BirationalError::InvalidPermutation {
            detail: format!("length {} for {} components", map.len(), n),
        });
    }
    let mut seen = vec![false; n];
    for &m in map {
        if m >= n || seen[m] {
            return Err(BirationalError::InvalidPermutation {
                detail: format!("target id {m} repeated or out of range"),
            });
        }
        seen[m] = true;
    }
    let mut out = RealSNCPair::new(pair.name.clone(), pair.picard_rank, pair.k_self);
    out.provenance = pair.provenance.clone();
    let mut slots: Vec<Option<crate::pair::Component>> = vec![None; n];
    for c in pair.components() {
        let mut moved = c.clone();
        moved.id = map[c.id];
        if let Reality::ConjugateOf(other) = moved.reality {
            moved.reality = Reality::ConjugateOf(map[other]);
        }
        slots[map[c.id]] = Some(moved);
    }
    for slot in slots {
        let c = slot.expect("permutation is onto");
        out.add_component(
            c.name,
            c.self_intersection,
            c.genus,
            c.reality,
            c.in_boundary,
            c.picard_class,
        );
    }
    // Edge ids and point conjugation references survive unchanged; only the
    // endpoint component ids move.
    out.edges.clone_from(&pair.edges);
    for e in out.edges.iter_mut() {
        e.ends = (map[e.ends.0], map[e.ends.1]);
    }
    out.next_edge_id = pair.next_edge_id;
    out.log("relabel components by permutation");
    Ok(out)
}
