//! Decorated weighted dual graphs for real surface pairs (V, B).
//!
//! A [`RealSNCPair`] records the irreducible curves we track on a smooth
//! projective real surface: vertices carry self-intersection, arithmetic
//! genus, a reality tag for the conjugation action, a boundary flag, and
//! optionally a Picard class vector; edges carry local intersection
//! multiplicities and the reality of the underlying point. Ambient data is
//! the Picard rank and the self-intersection of the canonical class.
//!
//! The graph is allowed to be non-SNC in intermediate states: an edge of
//! multiplicity m >= 2 is a point of local intersection m (a tangency or a
//! branch bundle of a singularity), and a self-edge is a node of a single
//! component. Blow-up surgery (see the birational module) resolves these.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{IntMatrix, Rat};

/// Stable index of a component. Components are never removed, so this is
/// the position in the component list.
pub type ComponentId = usize;

/// Stable handle of an edge. Edges can be consumed by blow-ups, so ids are
/// drawn from a monotone counter and looked up, not indexed.
pub type EdgeId = usize;

/// How conjugation acts on a component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reality {
    /// Fixed by conjugation with infinite real locus (a real curve).
    RealInfinite,
    /// Fixed by conjugation but with finite (possibly empty) real locus.
    RealFinite,
    /// Interchanged with the named component by conjugation.
    ConjugateOf(ComponentId),
}

impl Reality {
    pub fn is_real(&self) -> bool {
        !matches!(self, Reality::ConjugateOf(_))
    }
}

/// How conjugation acts on an intersection point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointReality {
    /// The point is real.
    Real,
    /// The point is swapped with the point of the named edge.
    ConjugateOf(EdgeId),
}

impl PointReality {
    pub fn is_real(&self) -> bool {
        matches!(self, PointReality::Real)
    }
}

/// A tracked irreducible curve on the surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub id: ComponentId,
    pub name: String,
    /// Self-intersection number (the weight of the vertex).
    pub self_intersection: i64,
    /// Arithmetic genus of the curve. For a singular curve this exceeds the
    /// geometric genus and drops by m(m-1)/2 when a point of multiplicity m
    /// is blown up, so adjunction holds in every intermediate state.
    pub genus: i64,
    pub reality: Reality,
    /// Whether the curve is part of the boundary divisor B.
    pub in_boundary: bool,
    /// Class in the Picard basis (anchored to blow-ups of the plane), when
    /// the pair tracks classes at all.
    pub picard_class: Option<Vec<i64>>,
}

/// An intersection point between tracked curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    /// Endpoint components; equal endpoints encode a node of one curve.
    pub ends: (ComponentId, ComponentId),
    /// Local intersection multiplicity at this point (1 = transverse).
    pub multiplicity: i64,
    pub point: PointReality,
    /// Optional unique name so scripts can refer to the point.
    pub label: Option<String>,
}

impl Edge {
    pub fn is_self_edge(&self) -> bool {
        self.ends.0 == self.ends.1
    }

    /// True when the edge joins `a` and `b` in either order.
    pub fn joins(&self, a: ComponentId, b: ComponentId) -> bool {
        (self.ends.0 == a && self.ends.1 == b) || (self.ends.0 == b && self.ends.1 == a)
    }

    pub fn touches(&self, c: ComponentId) -> bool {
        self.ends.0 == c || self.ends.1 == c
    }

    pub fn other_end(&self, c: ComponentId) -> ComponentId {
        if self.ends.0 == c {
            self.ends.1
        } else {
            self.ends.0
        }
    }
}

/// A pair of conjugate non-real intersection points joining two real
/// boundary curves: the combinatorial shadow of an imaginary loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImaginaryLoop {
    pub edge: EdgeId,
    pub conjugate_edge: EdgeId,
    pub components: (ComponentId, ComponentId),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairingError {
    #[error("component {name} has no Picard class but the pairing needs one")]
    MissingClass { name: String },
    #[error("class vector length {len} does not match Picard rank {rank}")]
    ClassLengthMismatch { len: usize, rank: usize },
}

/// A rational divisor supported on tracked components, an integer multiple
/// of the canonical class, and optionally an extra class vector.
///
/// Keeping K symbolic lets pairings fall back to adjunction, so divisors of
/// the form K + B are computable even when no component carries a class.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Divisor {
    pub coefficients: BTreeMap<ComponentId, Rat>,
    pub canonical_mult: i64,
    pub extra_class: Option<Vec<i64>>,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    pub fn canonical() -> Self {
        Divisor {
            canonical_mult: 1,
            ..Divisor::default()
        }
    }

    /// The reduced divisor of a single component.
    pub fn component(id: ComponentId) -> Self {
        let mut d = Divisor::default();
        d.coefficients.insert(id, Rat::from_integer(BigInt::from(1)));
        d
    }

    /// The reduced divisor of a set of components.
    pub fn reduced<I: IntoIterator<Item = ComponentId>>(ids: I) -> Self {
        let mut d = Divisor::default();
        for id in ids {
            d.coefficients.insert(id, Rat::from_integer(BigInt::from(1)));
        }
        d
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (&id, c) in &other.coefficients {
            let entry = out.coefficients.entry(id).or_insert_with(Rat::zero);
            *entry = &*entry + c;
        }
        out.coefficients.retain(|_, c| !c.is_zero());
        out.canonical_mult += other.canonical_mult;
        out.extra_class = match (out.extra_class.take(), &other.extra_class) {
            (None, None) => None,
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b.clone()),
            (Some(a), Some(b)) => {
                Some(a.iter().zip(b.iter()).map(|(x, y)| x + y).collect())
            }
        };
        out
    }

    pub fn scale(&self, factor: &Rat) -> Divisor {
        let mut out = self.clone();
        for c in out.coefficients.values_mut() {
            *c = &*c * factor;
        }
        out.coefficients.retain(|_, c| !c.is_zero());
        assert!(
            out.canonical_mult == 0 && out.extra_class.is_none() || factor.is_integer(),
            "rational scaling is only supported on pure component divisors"
        );
        if factor.is_integer() {
            let f: i64 = i64::try_from(factor.to_integer()).expect("scale factor overflow");
            out.canonical_mult *= f;
            if let Some(e) = out.extra_class.as_mut() {
                for v in e.iter_mut() {
                    *v *= f;
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Divisor) -> Divisor {
        self.add(&other.scale(&Rat::from_integer(BigInt::from(-1))))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
            && self.canonical_mult == 0
            && self.extra_class.as_ref().is_none_or(|e| e.iter().all(|v| *v == 0))
    }

    /// Human-readable form like `K + C + 2/3 L` for reports and witnesses.
    pub fn describe(&self, pair: &RealSNCPair) -> String {
        let mut parts = Vec::new();
        match self.canonical_mult {
            0 => {}
            1 => parts.push("K".to_string()),
            k => parts.push(format!("{k}K")),
        }
        for (&id, c) in &self.coefficients {
            let name = &pair.component(id).name;
            if c == &Rat::from_integer(BigInt::from(1)) {
                parts.push(name.clone());
            } else {
                parts.push(format!("{c} {name}"));
            }
        }
        if let Some(e) = &self.extra_class {
            parts.push(format!("[{}]", e.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// The decorated dual graph of a real surface pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealSNCPair {
    pub name: String,
    /// Rank of the Picard lattice of the ambient surface.
    pub picard_rank: usize,
    /// Self-intersection of the canonical class.
    pub k_self: i64,
    pub(crate) components: Vec<Component>,
    pub(crate) edges: Vec<Edge>,
    pub(crate) next_edge_id: usize,
    /// One line per construction step, oldest first.
    pub provenance: Vec<String>,
}

impl RealSNCPair {
    pub fn new(name: impl Into<String>, picard_rank: usize, k_self: i64) -> Self {
        RealSNCPair {
            name: name.into(),
            picard_rank,
            k_self,
            components: Vec::new(),
            edges: Vec::new(),
            next_edge_id: 0,
            provenance: Vec::new(),
        }
    }

    /// The projective plane: Picard rank 1, K^2 = 9.
    pub fn plane(name: impl Into<String>) -> Self {
        RealSNCPair::new(name, 1, 9)
    }

    pub fn add_component(
        &mut self,
        name: impl Into<String>,
        self_intersection: i64,
        genus: i64,
        reality: Reality,
        in_boundary: bool,
        picard_class: Option<Vec<i64>>,
    ) -> ComponentId {
        let id = self.components.len();
        self.components.push(Component {
            id,
            name: name.into(),
            self_intersection,
            genus,
            reality,
            in_boundary,
            picard_class,
        });
        id
    }

    pub fn add_edge(
        &mut self,
        a: ComponentId,
        b: ComponentId,
        multiplicity: i64,
        point: PointReality,
        label: Option<String>,
    ) -> EdgeId {
        assert!(a < self.components.len() && b < self.components.len(), "edge endpoint out of range");
        let id = self.next_edge_id;
        self.next_edge_id += 1;
        self.edges.push(Edge {
            id,
            ends: (a, b),
            multiplicity,
            point,
            label,
        });
        id
    }

    pub(crate) fn remove_edge(&mut self, id: EdgeId) {
        self.edges.retain(|e| e.id != id);
    }

    pub(crate) fn component_mut(&mut self, id: ComponentId) -> &mut Component {
        &mut self.components[id]
    }

    pub(crate) fn edge_mut(&mut self, id: EdgeId) -> Option<&mut Edge> {
        self.edges.iter_mut().find(|e| e.id == id)
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, id: ComponentId) -> &Component {
        &self.components[id]
    }

    pub fn components(&self) -> impl Iterator<Item = &Component> {
        self.components.iter()
    }

    pub fn component_ids(&self) -> impl Iterator<Item = ComponentId> {
        0..self.components.len()
    }

    pub fn component_by_name(&self, name: &str) -> Option<&Component> {
        self.components.iter().find(|c| c.name == name)
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn edge_by_label(&self, label: &str) -> Option<&Edge> {
        self.edges
            .iter()
            .find(|e| e.label.as_deref() == Some(label))
    }

    pub fn edges_at(&self, c: ComponentId) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.touches(c))
    }

    pub fn edges_between(&self, a: ComponentId, b: ComponentId) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.joins(a, b))
    }

    /// Image of a component under conjugation (itself when real).
    pub fn sigma_component(&self, id: ComponentId) -> ComponentId {
        match self.components[id].reality {
            Reality::ConjugateOf(other) => other,
            _ => id,
        }
    }

    /// Image of an edge under conjugation (itself when the point is real).
    pub fn sigma_edge(&self, id: EdgeId) -> Option<EdgeId> {
        self.edge(id).map(|e| match e.point {
            PointReality::Real => id,
            PointReality::ConjugateOf(other) => other,
        })
    }

    /// Components of the boundary divisor B, in id order.
    pub fn boundary(&self) -> Vec<ComponentId> {
        self.components
            .iter()
            .filter(|c| c.in_boundary)
            .map(|c| c.id)
            .collect()
    }

    /// Components of the real boundary B_R: boundary curves fixed by
    /// conjugation with infinite real locus.
    pub fn real_boundary(&self) -> Vec<ComponentId> {
        self.components
            .iter()
            .filter(|c| c.in_boundary && c.reality == Reality::RealInfinite)
            .map(|c| c.id)
            .collect()
    }

    /// Intersection number of two tracked components from the graph alone:
    /// the weight on the diagonal, the sum of edge multiplicities otherwise.
    pub fn intersection(&self, a: ComponentId, b: ComponentId) -> i64 {
        if a == b {
            self.components[a].self_intersection
        } else {
            self.edges_between(a, b).map(|e| e.multiplicity).sum()
        }
    }

    /// Gram matrix of the listed components.
    pub fn intersection_matrix(&self, ids: &[ComponentId]) -> IntMatrix {
        let n = ids.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, &a) in ids.iter().enumerate() {
            for (j, &b) in ids.iter().enumerate() {
                m.set(i, j, BigInt::from(self.intersection(a, b)));
            }
        }
        m
    }

    /// True when every component carries a Picard class.
    pub fn has_full_classes(&self) -> bool {
        self.components.iter().all(|c| c.picard_class.is_some())
    }

    /// Canonical class in the blow-up basis: (-3, 1, ..., 1).
    pub fn canonical_class_vector(&self) -> Vec<i64> {
        let mut k = vec![1i64; self.picard_rank];
        if self.picard_rank > 0 {
            k[0] = -3;
        }
        k
    }

    /// Intersection pairing of class vectors in the blow-up basis, which has
    /// signature (1, rank - 1): x0 y0 - x1 y1 - ... .
    pub fn class_pairing(x: &[i64], y: &[i64]) -> i64 {
        assert_eq!(x.len(), y.len(), "class length mismatch");
        x.iter()
            .zip(y.iter())
            .enumerate()
            .map(|(i, (a, b))| if i == 0 { a * b } else { -(a * b) })
            .sum()
    }

    /// Adjunction value K . C = 2g - 2 - C^2 for a tracked component.
    pub fn canonical_dot(&self, id: ComponentId) -> i64 {
        let c = &self.components[id];
        2 * c.genus - 2 - c.self_intersection
    }

    /// Class of a divisor as a rational vector, when classes are available.
    pub fn divisor_class(&self, d: &Divisor) -> Option<Vec<Rat>> {
        let mut v = vec![Rat::zero(); self.picard_rank];
        if d.canonical_mult != 0 {
            for (slot, k) in v.iter_mut().zip(self.canonical_class_vector()) {
                *slot = &*slot + Rat::from_integer(BigInt::from(k * d.canonical_mult));
            }
        }
        for (&id, c) in &d.coefficients {
            let class = self.components[id].picard_class.as_ref()?;
            if class.len() != self.picard_rank {
                return None;
            }
            for (slot, k) in v.iter_mut().zip(class) {
                *slot = &*slot + c * Rat::from_integer(BigInt::from(*k));
            }
        }
        if let Some(e) = &d.extra_class {
            if e.len() != self.picard_rank {
                return None;
            }
            for (slot, k) in v.iter_mut().zip(e) {
                *slot = &*slot + Rat::from_integer(BigInt::from(*k));
            }
        }
        Some(v)
    }

    /// Exact intersection pairing of two divisors. Component and canonical
    /// terms come from the graph (edges, weights, adjunction); only an
    /// `extra_class` needs actual class vectors.
    pub fn pairing(&self, a: &Divisor, b: &Divisor) -> Result<Rat, PairingError> {
        let mut total = Rat::from_integer(BigInt::from(
            a.canonical_mult * b.canonical_mult * self.k_self,
        ));
        for (&j, cb) in &b.coefficients {
            if a.canonical_mult != 0 {
                total = total
                    + Rat::from_integer(BigInt::from(a.canonical_mult * self.canonical_dot(j)))
                        * cb;
            }
        }
        for (&i, ca) in &a.coefficients {
            if b.canonical_mult != 0 {
                total = total
                    + Rat::from_integer(BigInt::from(b.canonical_mult * self.canonical_dot(i)))
                        * ca;
            }
            for (&j, cb) in &b.coefficients {
                let int = self.intersection(i, j);
                if int != 0 {
                    total = total + ca * cb * Rat::from_integer(BigInt::from(int));
                }
            }
        }
        let class_of = |id: ComponentId| -> Result<&Vec<i64>, PairingError> {
            let comp = &self.components[id];
            let class = comp.picard_class.as_ref().ok_or(PairingError::MissingClass {
                name: comp.name.clone(),
            })?;
            if class.len() != self.picard_rank {
                return Err(PairingError::ClassLengthMismatch {
                    len: class.len(),
                    rank: self.picard_rank,
                });
            }
            Ok(class)
        };
        let check_len = |e: &Vec<i64>| -> Result<(), PairingError> {
            if e.len() != self.picard_rank {
                Err(PairingError::ClassLengthMismatch {
                    len: e.len(),
                    rank: self.picard_rank,
                })
            } else {
                Ok(())
            }
        };
        if let Some(ea) = &a.extra_class {
            check_len(ea)?;
            if b.canonical_mult != 0 {
                let v = Self::class_pairing(ea, &self.canonical_class_vector());
                total = total + Rat::from_integer(BigInt::from(b.canonical_mult * v));
            }
            for (&j, cb) in &b.coefficients {
                let v = Self::class_pairing(ea, class_of(j)?);
                total = total + cb * Rat::from_integer(BigInt::from(v));
            }
        }
        if let Some(eb) = &b.extra_class {
            check_len(eb)?;
            if a.canonical_mult != 0 {
                let v = Self::class_pairing(eb, &self.canonical_class_vector());
                total = total + Rat::from_integer(BigInt::from(a.canonical_mult * v));
            }
            for (&i, ca) in &a.coefficients {
                let v = Self::class_pairing(eb, class_of(i)?);
                total = total + ca * Rat::from_integer(BigInt::from(v));
            }
        }
        if let (Some(ea), Some(eb)) = (&a.extra_class, &b.extra_class) {
            total = total + Rat::from_integer(BigInt::from(Self::class_pairing(ea, eb)));
        }
        Ok(total)
    }

    /// True when the tracked graph is simple normal crossing: every point
    /// transverse and no component crossing itself.
    pub fn is_snc(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.multiplicity == 1 && !e.is_self_edge())
    }

    /// Finds all imaginary loops: conjugate pairs of non-real points where
    /// two distinct real boundary curves meet.
    pub fn imaginary_loops(&self) -> Vec<ImaginaryLoop> {
        let real_inf_boundary = |id: ComponentId| {
            let c = &self.components[id];
            c.in_boundary && c.reality == Reality::RealInfinite
        };
        let mut loops = Vec::new();
        for e in &self.edges {
            if let PointReality::ConjugateOf(f) = e.point {
                if e.id < f
                    && !e.is_self_edge()
                    && real_inf_boundary(e.ends.0)
                    && real_inf_boundary(e.ends.1)
                {
                    loops.push(ImaginaryLoop {
                        edge: e.id,
                        conjugate_edge: f,
                        components: e.ends,
                    });
                }
            }
        }
        loops
    }

    pub fn describe_edge(&self, e: &Edge) -> String {
        let a = &self.components[e.ends.0].name;
        let b = &self.components[e.ends.1].name;
        let at = e
            .label
            .as_ref()
            .map(|l| format!(" at {l}"))
            .unwrap_or_default();
        format!("{a}-{b} (mult {}{at})", e.multiplicity)
    }

    /// Checks every structural invariant of the decoration and returns a
    /// list of human-readable violations; an empty list means consistent.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.components.len();
        let mut names = BTreeSet::new();
        for c in &self.components {
            if c.name.is_empty() {
                out.push(format!("component {} has an empty name", c.id));
            }
            if !names.insert(c.name.clone()) {
                out.push(format!("duplicate component name {}", c.name));
            }
            if c.genus < 0 {
                out.push(format!("component {} has negative genus {}", c.name, c.genus));
            }
            match c.reality {
                Reality::ConjugateOf(other) => {
                    if other >= n {
                        out.push(format!(
                            "component {} is conjugate to missing component {other}",
                            c.name
                        ));
                        continue;
                    }
                    if other == c.id {
                        out.push(format!("component {} is conjugate to itself", c.name));
                        continue;
                    }
                    let sib = &self.components[other];
                    if sib.reality != Reality::ConjugateOf(c.id) {
                        out.push(format!(
                            "conjugation is not an involution on components {} and {}",
                            c.name, sib.name
                        ));
                    }
                    if sib.self_intersection != c.self_intersection
                        || sib.genus != c.genus
                        || sib.in_boundary != c.in_boundary
                    {
                        out.push(format!(
                            "conjugate components {} and {} have different decorations",
                            c.name, sib.name
                        ));
                    }
                }
                Reality::RealInfinite | Reality::RealFinite => {}
            }
        }
        let mut labels = BTreeSet::new();
        for e in &self.edges {
            if e.ends.0 >= n || e.ends.1 >= n {
                out.push(format!("edge {} has an endpoint out of range", e.id));
                continue;
            }
            if e.multiplicity < 1 {
                out.push(format!(
                    "edge {} has non-positive multiplicity {}",
                    self.describe_edge(e),
                    e.multiplicity
                ));
            }
            if let Some(l) = &e.label {
                if !labels.insert(l.clone()) {
                    out.push(format!("duplicate edge label {l}"));
                }
            }
            let sa = self.sigma_component(e.ends.0);
            let sb = self.sigma_component(e.ends.1);
            match e.point {
                PointReality::Real => {
                    // A real point between C and D forces a real point between
                    // sigma(C) and sigma(D): the sigma-image of this edge. The
                    // image is this very edge when {C, D} is sigma-invariant,
                    // and must otherwise exist elsewhere with equal count.
                    let count = |x: ComponentId, y: ComponentId| {
                        self.edges
                            .iter()
                            .filter(|f| {
                                f.joins(x, y)
                                    && f.point.is_real()
                                    && f.multiplicity == e.multiplicity
                            })
                            .count()
                    };
                    if count(e.ends.0, e.ends.1) != count(sa, sb) {
                        out.push(format!(
                            "real point {} has no matching real point between the conjugate components",
                            self.describe_edge(e)
                        ));
                    }
                }
                PointReality::ConjugateOf(other) => {
                    let Some(sib) = self.edge(other) else {
                        out.push(format!(
                            "edge {} is conjugate to missing edge {other}",
                            self.describe_edge(e)
                        ));
                        continue;
                    };
                    if sib.id == e.id {
                        out.push(format!(
                            "edge {} is marked conjugate to itself",
                            self.describe_edge(e)
                        ));
                        continue;
                    }
                    if sib.point != PointReality::ConjugateOf(e.id) {
                        out.push(format!(
                            "conjugation is not an involution on edges {} and {}",
                            self.describe_edge(e),
                            self.describe_edge(sib)
                        ));
                    }
                    if sib.multiplicity != e.multiplicity {
                        out.push(format!(
                            "conjugate edges {} and {} have different multiplicities",
                            self.describe_edge(e),
                            self.describe_edge(sib)
                        ));
                    }
                    if !sib.joins(sa, sb) {
                        out.push(format!(
                            "conjugate edges {} and {} do not join conjugate components",
                            self.describe_edge(e),
                            self.describe_edge(sib)
                        ));
                    }
                }
            }
        }
        self.validate_classes(&mut out);
        out
    }

    fn validate_classes(&self, out: &mut Vec<String>) {
        let any_class = self.components.iter().any(|c| c.picard_class.is_some());
        if !any_class {
            return;
        }
        if self.k_self + self.picard_rank as i64 != 10 {
            out.push(format!(
                "classes are anchored to blow-ups of the plane but K^2 + rank = {} + {} != 10",
                self.k_self, self.picard_rank
            ));
        }
        let k = self.canonical_class_vector();
        for c in &self.components {
            let Some(class) = &c.picard_class else {
                continue;
            };
            if class.len() != self.picard_rank {
                out.push(format!(
                    "component {} has class length {} but Picard rank is {}",
                    c.name,
                    class.len(),
                    self.picard_rank
                ));
                continue;
            }
            let self_int = Self::class_pairing(class, class);
            if self_int != c.self_intersection {
                out.push(format!(
                    "component {}: class gives self-intersection {} but weight is {}",
                    c.name, self_int, c.self_intersection
                ));
            }
            let k_dot = Self::class_pairing(&k, class);
            if k_dot != self.canonical_dot(c.id) {
                out.push(format!(
                    "component {}: adjunction fails, K.class = {} but 2g-2-C^2 = {}",
                    c.name,
                    k_dot,
                    self.canonical_dot(c.id)
                ));
            }
        }
        for i in 0..self.components.len() {
            for j in 0..i {
                let (Some(ci), Some(cj)) = (
                    &self.components[i].picard_class,
                    &self.components[j].picard_class,
                ) else {
                    continue;
                };
                if ci.len() != self.picard_rank || cj.len() != self.picard_rank {
                    continue;
                }
                let by_class = Self::class_pairing(ci, cj);
                let by_edges = self.intersection(i, j);
                if by_class != by_edges {
                    out.push(format!(
                        "components {} and {}: classes give intersection {} but edges give {}",
                        self.components[i].name, self.components[j].name, by_class, by_edges
                    ));
                }
            }
        }
    }

    pub(crate) fn log(&mut self, line: impl Into<String>) {
        self.provenance.push(line.into());
    }
}

impl fmt::Display for RealSNCPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: rank {}, K^2 = {}, {} components, {} edges",
            self.name,
            self.picard_rank,
            self.k_self,
            self.components.len(),
            self.edges.len()
        )?;
        for c in &self.components {
            let tag = match c.reality {
                Reality::RealInfinite => "real",
                Reality::RealFinite => "real(finite)",
                Reality::ConjugateOf(_) => "conj",
            };
            writeln!(
                f,
                "  {} [{}] w={} g={}{}",
                c.name,
                tag,
                c.self_intersection,
                c.genus,
                if c.in_boundary { " in B" } else { "" }
            )?;
        }
        for e in &self.edges {
            writeln!(f, "  edge {}", self.describe_edge(e))?;
        }
        Ok(())
    }
}
