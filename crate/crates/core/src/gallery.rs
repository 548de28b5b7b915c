//! Built-in surface pairs with known invariants.
//!
//! Every entry is constructed from a plane base by an explicit blow-up
//! script run through the surgery engine, never by writing the final graph
//! down directly; the expected weighted graphs live in the tests as golden
//! data, so the constructions and the engine check each other.

use thiserror::Error;

use crate::birational::{blow_up, BirationalError, BlowUpRequest, BoundaryPolicy, Center};
use crate::pair::{ComponentId, EdgeId, PointReality, Reality, RealSNCPair};

/// One buildable pair family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GallerySpec {
    /// The plane with a single line as boundary; the complement is the
    /// affine plane.
    AffinePlane,
    /// A line and a conic through two conjugate points, the smallest pair
    /// with an imaginary loop.
    LineConic,
    /// Four lines with the triangle corners blown up twice; rationally
    /// acyclic complement with torsion of order 9.
    Y333,
    /// A cuspidal cubic and a conic with fifth order contact; the
    /// complement is contractible of log general type.
    Ramanujam,
    /// A degree-b curve with two cusp clusters over a coordinate triangle;
    /// the complement fibers over the line.
    SAb { a: i64, b: i64 },
    /// A degree-(s+1) curve with a multiplicity-s cusp, an order-s
    /// tangent line and a drilled chain; contractible complement of log
    /// general type.
    Ms { s: i64 },
    /// A general-position line arrangement: r real lines and p conjugate
    /// pairs.
    Arrangement { real_lines: i64, pairs: i64 },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GalleryError {
    #[error("no gallery pair named {0:?}; try `gallery list`")]
    UnknownName(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Engine(#[from] BirationalError),
}

/// A row of the `gallery list` table.
pub struct GalleryEntry {
    pub name: &'static str,
    pub parameters: &'static str,
    pub summary: &'static str,
}

pub fn entries() -> Vec<GalleryEntry> {
    vec![
        GalleryEntry {
            name: "affine_plane",
            parameters: "",
            summary: "the plane with one line as boundary",
        },
        GalleryEntry {
            name: "line_conic",
            parameters: "",
            summary: "a line and a conic meeting in two conjugate points",
        },
        GalleryEntry {
            name: "Y333",
            parameters: "",
            summary: "four lines with the triangle corners resolved twice",
        },
        GalleryEntry {
            name: "ramanujam",
            parameters: "",
            summary: "a cuspidal cubic and a conic with fifth order contact",
        },
        GalleryEntry {
            name: "S",
            parameters: "a b (coprime, 1 < a < b < 2a); default 2 3",
            summary: "a two-cusp curve over the coordinate triangle, fibered complement",
        },
        GalleryEntry {
            name: "MS",
            parameters: "s (at least 2); default 2",
            summary: "a degree-(s+1) cusp with tangent line and drilled chain",
        },
        GalleryEntry {
            name: "arrangement",
            parameters: "r p (0 <= r <= 2, r + 2p >= 1); default 1 1",
            summary: "general-position lines: r real plus p conjugate pairs",
        },
    ]
}

impl GallerySpec {
    /// Parses a gallery name with optional positional parameters, filling
    /// in the documented defaults.
    pub fn from_args(name: &str, params: &[i64]) -> Result<GallerySpec, GalleryError> {
        let want = |n: usize| {
            if params.len() == n || params.is_empty() {
                Ok(())
            } else {
                Err(GalleryError::InvalidParameters(format!(
                    "{name} takes {n} parameters, got {}",
                    params.len()
                )))
            }
        };
        let spec = match name.to_ascii_lowercase().as_str() {
            "affine_plane" => GallerySpec::AffinePlane,
            "line_conic" => GallerySpec::LineConic,
            "y333" => GallerySpec::Y333,
            "ramanujam" => GallerySpec::Ramanujam,
            "s" => {
                want(2)?;
                let (a, b) = match params {
                    [a, b] => (*a, *b),
                    _ => (2, 3),
                };
                GallerySpec::SAb { a, b }
            }
            "ms" => {
                want(1)?;
                let s = params.first().copied().unwrap_or(2);
                GallerySpec::Ms { s }
            }
            "arrangement" => {
                want(2)?;
                let (r, p) = match params {
                    [r, p] => (*r, *p),
                    _ => (1, 1),
                };
                GallerySpec::Arrangement {
                    real_lines: r,
                    pairs: p,
                }
            }
            _ => return Err(GalleryError::UnknownName(name.to_string())),
        };
        if !matches!(
            name.to_ascii_lowercase().as_str(),
            "s" | "ms" | "arrangement"
        ) && !params.is_empty()
        {
            return Err(GalleryError::InvalidParameters(format!(
                "{name} takes no parameters"
            )));
        }
        Ok(spec)
    }

    pub fn display_name(&self) -> String {
        match self {
            GallerySpec::AffinePlane => "A2".into(),
            GallerySpec::LineConic => "line-conic".into(),
            GallerySpec::Y333 => "Y(3,3,3)".into(),
            GallerySpec::Ramanujam => "Ramanujam".into(),
            GallerySpec::SAb { a, b } => format!("S({a},{b})"),
            GallerySpec::Ms { s } => format!("MS({s})"),
            GallerySpec::Arrangement { real_lines, pairs } => {
                format!("arrangement({real_lines},{pairs})")
            }
        }
    }
}

pub fn build(spec: &GallerySpec) -> Result<RealSNCPair, GalleryError> {
    match *spec {
        GallerySpec::AffinePlane => Ok(affine_plane()),
        GallerySpec::LineConic => Ok(line_conic()),
        GallerySpec::Y333 => y333(),
        GallerySpec::Ramanujam => ramanujam(),
        GallerySpec::SAb { a, b } => s_ab(a, b),
        GallerySpec::Ms { s } => ms(s),
        GallerySpec::Arrangement { real_lines, pairs } => arrangement(real_lines, pairs),
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// The unique edge joining two components; the builders only call this
/// where the construction guarantees uniqueness.
fn the_edge(pair: &RealSNCPair, a: ComponentId, b: ComponentId) -> EdgeId {
    let mut found = pair.edges_between(a, b);
    let first = found.next().expect("builder expected an edge");
    debug_assert!(found.next().is_none(), "builder expected a unique edge");
    first.id
}

fn blow(
    pair: RealSNCPair,
    center: Center,
    policy: BoundaryPolicy,
    name: &str,
) -> Result<(RealSNCPair, ComponentId), BirationalError> {
    let (next, out) = blow_up(&pair, &BlowUpRequest::new(center, policy, name))?;
    Ok((next, out.exceptional))
}

/// Resolves an order-k tangency between two curves already meeting along
/// `edge`: k blow-ups producing a chain that ends in a fork meeting both
/// curves. `names.len()` must equal the contact order.
fn resolve_tangency(
    mut pair: RealSNCPair,
    a: ComponentId,
    b: ComponentId,
    edge: EdgeId,
    names: &[String],
) -> Result<(RealSNCPair, Vec<ComponentId>), BirationalError> {
    let mut made = Vec::new();
    let mut prev: Option<ComponentId> = None;
    for name in names {
        let center = match prev {
            None => Center::OnEdge { edge, m1: 1, m2: 1 },
            Some(h) => Center::OnPoint {
                incidences: vec![(a, 1), (b, 1), (h, 1)],
                through_edges: vec![edge, the_edge(&pair, a, h), the_edge(&pair, b, h)],
            },
        };
        let (next, e) = blow(pair, center, BoundaryPolicy::TotalTransformReduced, name)?;
        pair = next;
        made.push(e);
        prev = Some(e);
    }
    Ok((pair, made))
}

/// Resolves a one-branch multiplicity-m cusp of `c`: one blow-up at the
/// singular point, then the order-m tangency of the strict transform with
/// its exceptional. `names[0]` is the first exceptional, the rest the
/// tangency chain, so `names.len()` must be m + 1.
fn resolve_cusp(
    pair: RealSNCPair,
    c: ComponentId,
    m: i64,
    names: &[String],
) -> Result<(RealSNCPair, Vec<ComponentId>), BirationalError> {
    let (pair, f) = blow(
        pair,
        Center::OnComponent {
            component: c,
            multiplicity: m,
        },
        BoundaryPolicy::TotalTransformReduced,
        &names[0],
    )?;
    let edge = the_edge(&pair, c, f);
    let (pair, mut made) = resolve_tangency(pair, c, f, edge, &names[1..])?;
    made.insert(0, f);
    Ok((pair, made))
}

fn names(prefix: &str, from: usize, to: usize) -> Vec<String> {
    (from..=to).map(|k| format!("{prefix}{k}")).collect()
}

fn affine_plane() -> RealSNCPair {
    let mut p = RealSNCPair::plane("A2");
    p.add_component("L", 1, 0, Reality::RealInfinite, true, Some(vec![1]));
    p
}

fn line_conic() -> RealSNCPair {
    let mut p = RealSNCPair::plane("line-conic");
    let l = p.add_component("L", 1, 0, Reality::RealInfinite, true, Some(vec![1]));
    let c = p.add_component("C", 4, 0, Reality::RealInfinite, true, Some(vec![2]));
    let q = p.add_edge(l, c, 1, PointReality::Real, Some("q".into()));
    let qbar = p.add_edge(l, c, 1, PointReality::ConjugateOf(q), Some("qbar".into()));
    p.edge_mut(q).unwrap().point = PointReality::ConjugateOf(qbar);
    p
}

fn y333() -> Result<RealSNCPair, GalleryError> {
    let mut p = RealSNCPair::plane("Y(3,3,3)");
    let l: Vec<ComponentId> = (0..4)
        .map(|i| {
            p.add_component(
                format!("l{i}"),
                1,
                0,
                Reality::RealInfinite,
                true,
                Some(vec![1]),
            )
        })
        .collect();
    for i in 1..4 {
        p.add_edge(l[0], l[i], 1, PointReality::Real, None);
    }
    let corners = [(1usize, 2usize), (2, 3), (1, 3)];
    let mut corner_edges = Vec::new();
    for &(i, j) in &corners {
        corner_edges.push(p.add_edge(l[i], l[j], 1, PointReality::Real, Some(format!("p{i}{j}"))));
    }
    // First round: the triangle corners, kept in the boundary.
    let mut p = p;
    let mut eij = Vec::new();
    for (k, &(i, j)) in corners.iter().enumerate() {
        let (next, e) = blow(
            p,
            Center::OnEdge {
                edge: corner_edges[k],
                m1: 1,
                m2: 1,
            },
            BoundaryPolicy::TotalTransformReduced,
            &format!("E{i}{j}"),
        )?;
        p = next;
        eij.push(e);
    }
    // Second round: one point on each new curve, dropped from the boundary;
    // the chosen line rotates so each of l1, l2, l3 is hit once.
    for (k, &i) in [1usize, 2, 3].iter().enumerate() {
        let edge = the_edge(&p, l[i], eij[k]);
        let (next, _) = blow(
            p,
            Center::OnEdge { edge, m1: 1, m2: 1 },
            BoundaryPolicy::StrictTransform,
            &format!("E{}", k + 1),
        )?;
        p = next;
    }
    Ok(p)
}

fn ramanujam() -> Result<RealSNCPair, GalleryError> {
    let mut base = RealSNCPair::plane("Ramanujam");
    let c = base.add_component("C", 9, 1, Reality::RealInfinite, true, Some(vec![3]));
    let q = base.add_component("Q", 4, 0, Reality::RealInfinite, true, Some(vec![2]));
    let p_edge = base.add_edge(c, q, 1, PointReality::Real, Some("p".into()));
    let q_edge = base.add_edge(c, q, 5, PointReality::Real, Some("q".into()));
    let (pair, _) = blow(
        base,
        Center::OnEdge {
            edge: p_edge,
            m1: 1,
            m2: 1,
        },
        BoundaryPolicy::StrictTransform,
        "Ep",
    )?;
    let cusp_names: Vec<String> = ["F", "Eii", "Eiii"].map(String::from).to_vec();
    let (pair, _) = resolve_cusp(pair, c, 2, &cusp_names)?;
    let (pair, _) = resolve_tangency(pair, c, q, q_edge, &names("T", 1, 5))?;
    Ok(pair)
}

/// Runs one cusp cluster of the S(a,b) construction: a triple point where
/// the curve meets two auxiliary sides with coprime contact orders, blown
/// up along the Euclidean algorithm until a transverse section appears.
fn euclidean_cluster(
    mut pair: RealSNCPair,
    c: ComponentId,
    mut alpha: i64,
    mut beta: i64,
    mut side_p: ComponentId,
    mut side_q: ComponentId,
    mut c_p: EdgeId,
    mut c_q: EdgeId,
    mut p_q: EdgeId,
    prefix: &str,
    section_name: &str,
) -> Result<(RealSNCPair, ComponentId), BirationalError> {
    let mut k = 0usize;
    loop {
        let m = alpha.min(beta);
        let last = alpha == 1 && beta == 1;
        k += 1;
        let name = if last {
            section_name.to_string()
        } else {
            format!("{prefix}{k}")
        };
        let center = Center::OnPoint {
            incidences: vec![(c, m), (side_p, 1), (side_q, 1)],
            through_edges: vec![c_p, c_q, p_q],
        };
        let (next, e) = blow(pair, center, BoundaryPolicy::TotalTransformReduced, &name)?;
        pair = next;
        if last {
            return Ok((pair, e));
        }
        let c_e = the_edge(&pair, c, e);
        if alpha > beta {
            // The curve stays tangent to the p side; the new curve replaces
            // the q side at the cluster point.
            alpha -= beta;
            p_q = the_edge(&pair, side_p, e);
            c_q = c_e;
            side_q = e;
        } else {
            beta -= alpha;
            p_q = the_edge(&pair, side_q, e);
            c_p = c_e;
            side_p = e;
        }
    }
}

fn s_ab(a: i64, b: i64) -> Result<RealSNCPair, GalleryError> {
    if !(1 < a && a < b && a > b - a && gcd(a, b) == 1) {
        return Err(GalleryError::InvalidParameters(format!(
            "S(a,b) needs coprime 1 < a < b < 2a, got ({a},{b})"
        )));
    }
    let mut base = RealSNCPair::plane(format!("S({a},{b})"));
    let genus = (b - 1) * (b - 2) / 2;
    let c = base.add_component("C", b * b, genus, Reality::RealInfinite, true, Some(vec![b]));
    let lx = base.add_component("Lx", 1, 0, Reality::RealInfinite, false, Some(vec![1]));
    let ly = base.add_component("Ly", 1, 0, Reality::RealInfinite, false, Some(vec![1]));
    let lz = base.add_component("Lz", 1, 0, Reality::RealInfinite, true, Some(vec![1]));
    // Everything of C concentrates on the two coordinate points: contact b
    // with Lx and a with Ly at one, contact b with Lz and b - a with Ly at
    // the other.
    let c_x = base.add_edge(c, lx, b, PointReality::Real, Some("q0_x".into()));
    let c_y0 = base.add_edge(c, ly, a, PointReality::Real, Some("q0_y".into()));
    let x_y = base.add_edge(lx, ly, 1, PointReality::Real, Some("q0_xy".into()));
    let c_z = base.add_edge(c, lz, b, PointReality::Real, Some("qi_z".into()));
    let c_y1 = base.add_edge(c, ly, b - a, PointReality::Real, Some("qi_y".into()));
    let z_y = base.add_edge(lz, ly, 1, PointReality::Real, Some("qi_zy".into()));
    base.add_edge(lx, lz, 1, PointReality::Real, Some("xz".into()));
    let (pair, _) = blow(
        base,
        Center::OnComponent {
            component: c,
            multiplicity: 1,
        },
        BoundaryPolicy::StrictTransform,
        "E",
    )?;
    let (pair, _c0) = euclidean_cluster(pair, c, b, a, lx, ly, c_x, c_y0, x_y, "E", "C0")?;
    let (pair, _c1) = euclidean_cluster(pair, c, b, b - a, lz, ly, c_z, c_y1, z_y, "G", "C1")?;
    Ok(pair)
}

fn ms(s: i64) -> Result<RealSNCPair, GalleryError> {
    if s < 2 {
        return Err(GalleryError::InvalidParameters(format!(
            "MS(s) needs s >= 2, got {s}"
        )));
    }
    let mut base = RealSNCPair::plane(format!("MS({s})"));
    let genus = s * (s - 1) / 2;
    let c = base.add_component(
        "C",
        (s + 1) * (s + 1),
        genus,
        Reality::RealInfinite,
        true,
        Some(vec![s + 1]),
    );
    let l = base.add_component("L", 1, 0, Reality::RealInfinite, true, Some(vec![1]));
    let p_edge = base.add_edge(c, l, s, PointReality::Real, Some("p".into()));
    let q_edge = base.add_edge(c, l, 1, PointReality::Real, Some("q".into()));
    // Drill a chain of s + 2 infinitely near points of C above q; only the
    // last exceptional leaves the boundary.
    let mut pair = base;
    let mut edge = q_edge;
    for i in 1..=(s + 2) {
        let policy = if i == s + 2 {
            BoundaryPolicy::StrictTransform
        } else {
            BoundaryPolicy::TotalTransformReduced
        };
        let (next, e) = blow(
            pair,
            Center::OnEdge { edge, m1: 1, m2: 1 },
            policy,
            &format!("E{i}"),
        )?;
        pair = next;
        if i < s + 2 {
            edge = the_edge(&pair, c, e);
        }
    }
    let mut cusp_names = vec!["F".to_string()];
    cusp_names.extend(names("H", 1, s as usize));
    let (pair, _) = resolve_cusp(pair, c, s, &cusp_names)?;
    let (pair, _) = resolve_tangency(pair, c, l, p_edge, &names("J", 1, s as usize))?;
    Ok(pair)
}

fn arrangement(r: i64, p: i64) -> Result<RealSNCPair, GalleryError> {
    if !(0..=2).contains(&r) || p < 0 || r + 2 * p < 1 {
        return Err(GalleryError::InvalidParameters(format!(
            "arrangement needs 0 <= r <= 2, p >= 0, r + 2p >= 1, got ({r},{p})"
        )));
    }
    let mut pr = RealSNCPair::plane(format!("arrangement({r},{p})"));
    let reals: Vec<ComponentId> = (1..=r)
        .map(|i| {
            pr.add_component(
                format!("R{i}"),
                1,
                0,
                Reality::RealInfinite,
                true,
                Some(vec![1]),
            )
        })
        .collect();
    let mut pairs = Vec::new();
    for j in 1..=p {
        let pj = pr.add_component(
            format!("P{j}"),
            1,
            0,
            Reality::RealInfinite,
            true,
            Some(vec![1]),
        );
        let pj_bar = pr.add_component(
            format!("P{j}_bar"),
            1,
            0,
            Reality::ConjugateOf(pj),
            true,
            Some(vec![1]),
        );
        pr.component_mut(pj).reality = Reality::ConjugateOf(pj_bar);
        pairs.push((pj, pj_bar));
    }
    let conj_point =
        |pr: &mut RealSNCPair, a: ComponentId, b: ComponentId, sa, sb, label: String| {
            let e = pr.add_edge(a, b, 1, PointReality::Real, Some(label.clone()));
            let ebar = pr.add_edge(sa, sb, 1, PointReality::ConjugateOf(e), Some(label + "c"));
            pr.edge_mut(e).unwrap().point = PointReality::ConjugateOf(ebar);
        };
    for i in 0..reals.len() {
        for j in i + 1..reals.len() {
            pr.add_edge(reals[i], reals[j], 1, PointReality::Real, None);
        }
    }
    for (i, &ri) in reals.iter().enumerate() {
        for (j, &(pj, pj_bar)) in pairs.iter().enumerate() {
            conj_point(&mut pr, ri, pj, ri, pj_bar, format!("R{}P{}", i + 1, j + 1));
        }
    }
    for (i, &(pi, pi_bar)) in pairs.iter().enumerate() {
        // Two conjugate lines always meet in a real point.
        pr.add_edge(pi, pi_bar, 1, PointReality::Real, None);
        for (j, &(pj, pj_bar)) in pairs.iter().enumerate().skip(i + 1) {
            conj_point(&mut pr, pi, pj, pi_bar, pj_bar, format!("P{}P{}", i + 1, j + 1));
            conj_point(
                &mut pr,
                pi,
                pj_bar,
                pi_bar,
                pj,
                format!("P{}P{}x", i + 1, j + 1),
            );
        }
    }
    Ok(pr)
}

// ---------------------------------------------------------------------------
// Script emission

use crate::docs::{
    CenterDoc, CurveDoc, CurveReality, MeetDoc, MeetPoint, OpDoc, ScriptDocument,
};

fn curve(name: &str, degree: i64) -> CurveDoc {
    CurveDoc {
        name: name.into(),
        degree,
        reality: CurveReality::RealInfinite,
        cusps: Vec::new(),
        meets: Vec::new(),
    }
}

fn meet(with: &str, mult: i64, label: Option<&str>) -> MeetDoc {
    MeetDoc {
        with: with.into(),
        mult,
        label: label.map(Into::into),
        point: MeetPoint::Real,
    }
}

fn conj_meet(with: &str, mult: i64, label: &str, of: &str) -> MeetDoc {
    MeetDoc {
        with: with.into(),
        mult,
        label: Some(label.into()),
        point: MeetPoint::ConjugateOf(of.into()),
    }
}

fn op(center: CenterDoc, policy: BoundaryPolicy, name: &str) -> OpDoc {
    OpDoc {
        center,
        policy,
        name: name.into(),
        conjugate_name: None,
    }
}

fn on_edge(point: &str) -> CenterDoc {
    CenterDoc::OnEdge {
        point: point.into(),
        m1: 1,
        m2: 1,
    }
}

fn on_curve(component: &str, multiplicity: i64) -> CenterDoc {
    CenterDoc::OnComponent {
        component: component.into(),
        multiplicity,
    }
}

fn on_point(components: Vec<(String, i64)>, points: Vec<String>) -> CenterDoc {
    CenterDoc::OnPoint { components, points }
}

const TT: BoundaryPolicy = BoundaryPolicy::TotalTransformReduced;
const ST: BoundaryPolicy = BoundaryPolicy::StrictTransform;

/// Script form of one tangency resolution; mirrors `resolve_tangency`.
fn tangency_ops(a: &str, b: &str, edge_label: &str, prefix: &str, steps: i64) -> Vec<OpDoc> {
    let mut ops = vec![op(on_edge(edge_label), TT, &format!("{prefix}1"))];
    for k in 2..=steps {
        let h = format!("{prefix}{}", k - 1);
        ops.push(op(
            on_point(
                vec![(a.into(), 1), (b.into(), 1), (h.clone(), 1)],
                vec![
                    edge_label.into(),
                    format!("{a}_{h}"),
                    format!("{b}_{h}"),
                ],
            ),
            TT,
            &format!("{prefix}{k}"),
        ));
    }
    ops
}

/// Script form of one Euclidean cusp cluster; mirrors `euclidean_cluster`.
/// Returns the ops and the multiplicity sequence the curve's cusp marker
/// must declare.
#[allow(clippy::too_many_arguments)]
fn cluster_ops(
    c: &str,
    mut alpha: i64,
    mut beta: i64,
    p_name: &str,
    q_name: &str,
    c_p: &str,
    c_q: &str,
    p_q: &str,
    prefix: &str,
    section: &str,
) -> (Vec<OpDoc>, Vec<i64>) {
    let mut p_name = p_name.to_string();
    let mut q_name = q_name.to_string();
    let mut c_p = c_p.to_string();
    let mut c_q = c_q.to_string();
    let mut p_q = p_q.to_string();
    let mut ops = Vec::new();
    let mut mults = Vec::new();
    let mut k = 0usize;
    loop {
        let m = alpha.min(beta);
        if m >= 2 {
            mults.push(m);
        }
        let last = alpha == 1 && beta == 1;
        k += 1;
        let name = if last {
            section.to_string()
        } else {
            format!("{prefix}{k}")
        };
        ops.push(op(
            on_point(
                vec![(c.into(), m), (p_name.clone(), 1), (q_name.clone(), 1)],
                vec![c_p.clone(), c_q.clone(), p_q.clone()],
            ),
            TT,
            &name,
        ));
        if last {
            return (ops, mults);
        }
        let c_e = format!("{c}_{name}");
        if alpha > beta {
            alpha -= beta;
            p_q = format!("{p_name}_{name}");
            c_q = c_e;
            q_name = name;
        } else {
            beta -= alpha;
            p_q = format!("{q_name}_{name}");
            c_p = c_e;
            p_name = name;
        }
    }
}

/// Emits the blow-up script behind a gallery pair. Replaying the script
/// rebuilds the same graph as `build`; past the shared surgery engine the
/// two routes are independent, so they check each other.
pub fn script(spec: &GallerySpec) -> Result<ScriptDocument, GalleryError> {
    let built = build(spec)?;
    let boundary: Vec<String> = built
        .boundary()
        .iter()
        .map(|&c| built.component(c).name.clone())
        .collect();
    let (curves, ops) = match *spec {
        GallerySpec::AffinePlane => (vec![curve("L", 1)], Vec::new()),
        GallerySpec::LineConic => {
            let mut c = curve("C", 2);
            c.meets = vec![
                meet("L", 1, Some("q")),
                conj_meet("L", 1, "qbar", "q"),
            ];
            (vec![curve("L", 1), c], Vec::new())
        }
        GallerySpec::Y333 => {
            let mut curves = vec![curve("l0", 1)];
            for i in 1..4 {
                let mut li = curve(&format!("l{i}"), 1);
                li.meets.push(meet("l0", 1, None));
                curves.push(li);
            }
            let corners = [(1, 2), (2, 3), (1, 3)];
            for &(i, j) in &corners {
                let label = format!("p{i}{j}");
                let m = meet(&format!("l{i}"), 1, Some(&label));
                curves[j].meets.push(m);
            }
            let mut ops = Vec::new();
            for &(i, j) in &corners {
                ops.push(op(on_edge(&format!("p{i}{j}")), TT, &format!("E{i}{j}")));
            }
            for (k, (&(i, j), line)) in corners.iter().zip([1, 2, 3]).enumerate() {
                ops.push(op(
                    on_edge(&format!("l{line}_E{i}{j}")),
                    ST,
                    &format!("E{}", k + 1),
                ));
            }
            (curves, ops)
        }
        GallerySpec::Ramanujam => {
            let mut c = curve("C", 3);
            c.cusps = vec![2];
            let mut q = curve("Q", 2);
            q.meets = vec![meet("C", 1, Some("p")), meet("C", 5, Some("q"))];
            let mut ops = vec![
                op(on_edge("p"), ST, "Ep"),
                op(on_curve("C", 2), TT, "F"),
                op(on_edge("C_F"), TT, "Eii"),
                op(
                    on_point(
                        vec![("C".into(), 1), ("F".into(), 1), ("Eii".into(), 1)],
                        vec!["C_F".into(), "C_Eii".into(), "F_Eii".into()],
                    ),
                    TT,
                    "Eiii",
                ),
            ];
            ops.extend(tangency_ops("C", "Q", "q", "T", 5));
            (vec![c, q], ops)
        }
        GallerySpec::SAb { a, b } => {
            let (ops0, mults0) =
                cluster_ops("C", b, a, "Lx", "Ly", "q0_x", "q0_y", "q0_xy", "E", "C0");
            let (ops1, mults1) = cluster_ops(
                "C",
                b,
                b - a,
                "Lz",
                "Ly",
                "qi_z",
                "qi_y",
                "qi_zy",
                "G",
                "C1",
            );
            let mut c = curve("C", b);
            c.cusps = mults0.into_iter().chain(mults1).collect();
            let mut lx = curve("Lx", 1);
            lx.meets = vec![meet("C", b, Some("q0_x"))];
            let mut ly = curve("Ly", 1);
            ly.meets = vec![
                meet("C", a, Some("q0_y")),
                meet("Lx", 1, Some("q0_xy")),
                meet("C", b - a, Some("qi_y")),
            ];
            let mut lz = curve("Lz", 1);
            lz.meets = vec![
                meet("C", b, Some("qi_z")),
                meet("Ly", 1, Some("qi_zy")),
                meet("Lx", 1, Some("xz")),
            ];
            let mut ops = vec![op(on_curve("C", 1), ST, "E")];
            ops.extend(ops0);
            ops.extend(ops1);
            (vec![c, lx, ly, lz], ops)
        }
        GallerySpec::Ms { s } => {
            let mut c = curve("C", s + 1);
            c.cusps = vec![s];
            let mut l = curve("L", 1);
            l.meets = vec![meet("C", s, Some("p")), meet("C", 1, Some("q"))];
            let mut ops = vec![op(on_edge("q"), TT, "E1")];
            for i in 2..=s + 2 {
                let policy = if i == s + 2 { ST } else { TT };
                ops.push(op(
                    on_edge(&format!("C_E{}", i - 1)),
                    policy,
                    &format!("E{i}"),
                ));
            }
            ops.push(op(on_curve("C", s), TT, "F"));
            ops.extend(tangency_ops("C", "F", "C_F", "H", s));
            ops.extend(tangency_ops("C", "L", "p", "J", s));
            (vec![c, l], ops)
        }
        GallerySpec::Arrangement { real_lines, pairs } => {
            let mut curves = Vec::new();
            for i in 1..=real_lines {
                let mut r = curve(&format!("R{i}"), 1);
                for j in 1..i {
                    r.meets.push(meet(&format!("R{j}"), 1, None));
                }
                curves.push(r);
            }
            for j in 1..=pairs {
                let mut pj = curve(&format!("P{j}"), 1);
                for i in 1..=real_lines {
                    pj.meets
                        .push(meet(&format!("R{i}"), 1, Some(&format!("R{i}P{j}"))));
                }
                for i in 1..j {
                    pj.meets
                        .push(meet(&format!("P{i}"), 1, Some(&format!("P{i}P{j}"))));
                    pj.meets.push(meet(
                        &format!("P{i}_bar"),
                        1,
                        Some(&format!("P{i}P{j}xc")),
                    ));
                }
                let mut pj_bar = curve(&format!("P{j}_bar"), 1);
                pj_bar.reality = CurveReality::ConjugateOf(format!("P{j}"));
                for i in 1..=real_lines {
                    pj_bar.meets.push(conj_meet(
                        &format!("R{i}"),
                        1,
                        &format!("R{i}P{j}c"),
                        &format!("R{i}P{j}"),
                    ));
                }
                pj_bar.meets.push(meet(&format!("P{j}"), 1, None));
                for i in 1..j {
                    pj_bar.meets.push(conj_meet(
                        &format!("P{i}_bar"),
                        1,
                        &format!("P{i}P{j}c"),
                        &format!("P{i}P{j}"),
                    ));
                    pj_bar.meets.push(conj_meet(
                        &format!("P{i}"),
                        1,
                        &format!("P{i}P{j}x"),
                        &format!("P{i}P{j}xc"),
                    ));
                }
                curves.push(pj);
                curves.push(pj_bar);
            }
            (curves, Vec::new())
        }
    };
    Ok(ScriptDocument {
        name: spec.display_name(),
        base: "P2".into(),
        curves,
        ops,
        boundary,
    })
}

// ---------------------------------------------------------------------------
// Known invariants

use crate::kodaira::KappaValue;

/// Invariants a gallery construction is known to have. The gallery command
/// prints these next to freshly computed values; `None` means the family
/// makes no claim for that row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedInvariants {
    pub kappa: KappaValue,
    pub kappa_real: KappaValue,
    /// Invariant factors above one of the boundary class matrix.
    pub torsion: Option<Vec<i64>>,
    pub q_acyclic: Option<bool>,
    pub z_acyclic: Option<bool>,
    pub boundary_components: Option<usize>,
}

pub fn expected(spec: &GallerySpec) -> ExpectedInvariants {
    use KappaValue::{NegativeInfinity, One, Two, Zero};
    match *spec {
        GallerySpec::AffinePlane => ExpectedInvariants {
            kappa: NegativeInfinity,
            kappa_real: NegativeInfinity,
            torsion: Some(Vec::new()),
            q_acyclic: Some(true),
            z_acyclic: Some(true),
            boundary_components: Some(1),
        },
        GallerySpec::LineConic => ExpectedInvariants {
            kappa: Zero,
            kappa_real: NegativeInfinity,
            torsion: Some(Vec::new()),
            q_acyclic: Some(false),
            z_acyclic: Some(false),
            boundary_components: Some(2),
        },
        GallerySpec::Y333 => ExpectedInvariants {
            kappa: Zero,
            kappa_real: Zero,
            torsion: Some(vec![9]),
            q_acyclic: Some(true),
            z_acyclic: Some(false),
            boundary_components: Some(7),
        },
        GallerySpec::Ramanujam => ExpectedInvariants {
            kappa: Two,
            kappa_real: Two,
            torsion: Some(Vec::new()),
            q_acyclic: Some(true),
            z_acyclic: Some(true),
            boundary_components: Some(10),
        },
        GallerySpec::SAb { .. } => ExpectedInvariants {
            kappa: One,
            kappa_real: One,
            torsion: None,
            q_acyclic: None,
            z_acyclic: None,
            boundary_components: None,
        },
        GallerySpec::Ms { s } => ExpectedInvariants {
            kappa: Two,
            kappa_real: Two,
            torsion: Some(Vec::new()),
            q_acyclic: Some(true),
            z_acyclic: Some(true),
            boundary_components: Some((3 * s + 4) as usize),
        },
        GallerySpec::Arrangement { real_lines, pairs } => {
            let d = real_lines + 2 * pairs;
            ExpectedInvariants {
                kappa: match d {
                    ..=2 => NegativeInfinity,
                    3 => Zero,
                    _ => Two,
                },
                kappa_real: NegativeInfinity,
                torsion: Some(Vec::new()),
                q_acyclic: Some(d == 1),
                z_acyclic: Some(d == 1),
                boundary_components: Some(d as usize),
            }
        }
    }
}
