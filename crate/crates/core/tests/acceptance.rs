//! The acceptance gate: one test per headline guarantee, each printing a
//! single `PASS criterion N` line on success. A failed assertion in any of
//! them is the corresponding FAIL. Criteria 1-7 pin the gallery invariants
//! exactly; criterion 8 is the randomized property suite over interpreted
//! blow-up plans; criterion 9 cross-checks the iterative Zariski peeling
//! against an exhaustive-subset brute force written independently here.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use kappar::birational::{
    apply_link, blow_up, BlowUpRequest, BoundaryPolicy, Center, LinkMove,
};
use kappar::gallery::{build, GallerySpec};
use kappar::homology::homology_report;
use kappar::kodaira::{
    adjoint_divisor, kappa, kappa_real, kappa_real_raw, real_adjoint_divisor,
    zariski_decompose, Certification, KappaValue, ZariskiOutcome,
};
use kappar::lattice::{rat, ratio, Rat};
use kappar::pair::{ComponentId, Divisor, PointReality, RealSNCPair, Reality};

fn boundary_weights(pair: &RealSNCPair) -> Vec<i64> {
    let mut w: Vec<i64> = pair
        .boundary()
        .into_iter()
        .map(|c| pair.component(c).self_intersection)
        .collect();
    w.sort_unstable();
    w
}

fn torsion_i64(pair: &RealSNCPair) -> Vec<i64> {
    homology_report(pair)
        .expect("homology computable")
        .torsion
        .iter()
        .map(|t| t.to_i64().expect("small torsion"))
        .collect()
}

// ---------------------------------------------------------------------------
// Criteria 1-7: the gallery pairs, pinned exactly.
// ---------------------------------------------------------------------------

#[test]
fn criterion_1_affine_plane() {
    let p = build(&GallerySpec::AffinePlane).unwrap();
    let rk = kappa_real(&p).unwrap();
    assert_eq!(rk.result.value, KappaValue::NegativeInfinity);
    assert_eq!(rk.result.certification, Certification::Certified);
    assert!(
        rk.result.witness.contains('L'),
        "witness should name the line: {}",
        rk.result.witness
    );
    let l = p.component_by_name("L").unwrap().id;
    let pairing = p
        .pairing(&real_adjoint_divisor(&p), &Divisor::component(l))
        .unwrap();
    assert_eq!(pairing, rat(-2), "(K+L).L must be exactly -2");
    println!(
        "PASS criterion 1: affine-plane pair gives kappa_real = -inf Certified with witness L and (K+L).L = -2"
    );
}

#[test]
fn criterion_2_line_conic_elimination() {
    let p = build(&GallerySpec::LineConic).unwrap();
    let raw = kappa_real_raw(&p);
    assert_eq!(raw.value, KappaValue::Zero, "raw classification of K+B_R");
    let rk = kappa_real(&p).unwrap();
    assert_eq!(rk.result.value, KappaValue::NegativeInfinity);
    assert_eq!(rk.elimination.loops.len(), 1, "exactly one imaginary loop");
    let before = kappa(&p);
    let after = kappa(&rk.eliminated);
    assert_eq!(before.value, KappaValue::Zero);
    assert_eq!(before.value, after.value, "kappa unchanged by elimination");
    println!(
        "PASS criterion 2: line+conic raw value 0 becomes -inf after eliminating its loop; kappa stays 0"
    );
}

#[test]
fn criterion_3_y333() {
    let p = build(&GallerySpec::Y333).unwrap();
    assert_eq!(boundary_weights(&p), vec![-2, -2, -2, -2, -2, -2, 1]);
    assert_eq!(kappa(&p).value, KappaValue::Zero);
    assert_eq!(kappa_real(&p).unwrap().result.value, KappaValue::Zero);
    let h = homology_report(&p).unwrap();
    assert_eq!(h.torsion, vec![BigInt::from(9)]);
    assert!(h.q_acyclic, "rationally acyclic");
    assert!(!h.z_acyclic, "not integrally acyclic");
    println!(
        "PASS criterion 3: Y(3,3,3) boundary weights {{+1, -2 x6}}, kappa = kappa_real = 0, torsion [9], Q-acyclic but not Z-acyclic"
    );
}

#[test]
fn criterion_4_ramanujam() {
    let p = build(&GallerySpec::Ramanujam).unwrap();
    let w = boundary_weights(&p);
    assert_eq!(w.len(), 10, "ten boundary components");
    assert_eq!(w, vec![-3, -3, -2, -2, -2, -2, -2, -2, -1, -1]);
    assert_eq!(kappa(&p).value, KappaValue::Two);
    assert_eq!(kappa_real(&p).unwrap().result.value, KappaValue::Two);
    assert!(torsion_i64(&p).is_empty(), "no torsion");
    println!(
        "PASS criterion 4: Ramanujam boundary has 10 components with weights {{-3 x2, -1 x2, -2 x6}}, kappa = kappa_real = 2, torsion []"
    );
}

#[test]
fn criterion_5_s_ab_fibrations() {
    for (a, b) in [(2i64, 3i64), (3, 4), (3, 5)] {
        let p = build(&GallerySpec::SAb { a, b }).unwrap();
        let k = kappa(&p);
        assert_eq!(k.value, KappaValue::One, "kappa of S({a},{b})");
        assert_eq!(
            kappa_real(&p).unwrap().result.value,
            KappaValue::One,
            "kappa_real of S({a},{b})"
        );
        let z = k.zariski.as_ref().expect("peeling ran");
        assert!(z.p_squared.is_zero(), "P^2 = 0 for S({a},{b})");
        assert_eq!(
            z.p_is_zero_class,
            Some(false),
            "P is a nonzero class for S({a},{b})"
        );
        if (a, b) == (2, 3) {
            let c0 = p.component_by_name("C0").unwrap().id;
            assert_eq!(
                z.p_dot[&c0],
                ratio(1, 6),
                "P.C0 = 1/6 exactly for S(2,3)"
            );
        }
    }
    println!(
        "PASS criterion 5: S(2,3), S(3,4), S(3,5) all have kappa = kappa_real = 1 with P^2 = 0, P != 0; S(2,3) has P.C0 = 1/6"
    );
}

#[test]
fn criterion_6_drilled_cuspidal_families() {
    let golden: [(i64, Vec<i64>); 2] = [
        (2, vec![-3, -3, -2, -2, -2, -2, -2, -2, -1, -1]),
        (3, vec![-4, -4, -3, -2, -2, -2, -2, -2, -2, -2, -2, -1, -1]),
    ];
    for (s, weights) in golden {
        let p = build(&GallerySpec::Ms { s }).unwrap();
        let w = boundary_weights(&p);
        assert_eq!(w.len() as i64, 3 * s + 4, "boundary count 3s+4 for s={s}");
        assert_eq!(w, weights, "boundary weight multiset for s={s}");
        let k = kappa(&p);
        assert_eq!(k.value, KappaValue::Two);
        assert_eq!(kappa_real(&p).unwrap().result.value, KappaValue::Two);
        assert!(
            k.zariski.as_ref().expect("peeling ran").p_squared.is_positive(),
            "P^2 > 0 for s={s}"
        );
        assert!(torsion_i64(&p).is_empty(), "no torsion for s={s}");
    }
    println!(
        "PASS criterion 6: M_s for s in {{2,3}} has 3s+4 boundary components with the charted weights, kappa = kappa_real = 2, P^2 > 0, torsion []"
    );
}

#[test]
fn criterion_7_line_arrangements() {
    for r in 0..=2i64 {
        for p in 0..=3i64 {
            let d = r + 2 * p;
            if d < 1 {
                continue;
            }
            let pair = build(&GallerySpec::Arrangement {
                real_lines: r,
                pairs: p,
            })
            .unwrap();
            let expected = match d {
                x if x < 3 => KappaValue::NegativeInfinity,
                3 => KappaValue::Zero,
                _ => KappaValue::Two,
            };
            assert_eq!(
                kappa(&pair).value,
                expected,
                "kappa of arrangement r={r}, p={p}"
            );
            assert_eq!(
                kappa_real(&pair).unwrap().result.value,
                KappaValue::NegativeInfinity,
                "kappa_real of arrangement r={r}, p={p}"
            );
        }
    }
    println!(
        "PASS criterion 7: arrangements follow the r+2p table for kappa (<3: -inf, =3: 0, >3: 2) and kappa_real = -inf throughout"
    );
}

// ---------------------------------------------------------------------------
// Criterion 8: randomized properties over interpreted blow-up plans.
//
// A plan is a base pair plus a list of coarse steps; each step is decoded
// against the current graph (component and edge picks taken modulo what is
// actually there) and skipped when nothing fits, so every generated pair is
// built from valid surgeries only.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
struct PlanStep {
    kind: u8,
    pick_a: u8,
    pick_b: u8,
    strict: bool,
}

#[derive(Debug, Clone)]
struct Plan {
    base: u8,
    steps: Vec<PlanStep>,
}

fn step_strategy() -> impl Strategy<Value = PlanStep> {
    (0u8..5, any::<u8>(), any::<u8>(), any::<bool>()).prop_map(|(kind, pick_a, pick_b, strict)| {
        PlanStep {
            kind,
            pick_a,
            pick_b,
            strict,
        }
    })
}

fn plan_strategy(max_steps: usize) -> impl Strategy<Value = Plan> {
    (
        0u8..3,
        prop::collection::vec(step_strategy(), 0..=max_steps),
    )
        .prop_map(|(base, steps)| Plan { base, steps })
}

/// Three real lines in general position: the smallest boundary with nodes.
fn three_lines() -> RealSNCPair {
    let mut p = RealSNCPair::plane("three-lines");
    let l1 = p.add_component("L1", 1, 0, Reality::RealInfinite, true, Some(vec![1]));
    let l2 = p.add_component("L2", 1, 0, Reality::RealInfinite, true, Some(vec![1]));
    let l3 = p.add_component("L3", 1, 0, Reality::RealInfinite, true, Some(vec![1]));
    p.add_edge(l1, l2, 1, PointReality::Real, None);
    p.add_edge(l1, l3, 1, PointReality::Real, None);
    p.add_edge(l2, l3, 1, PointReality::Real, None);
    p
}

/// A cuspidal cubic: arithmetic genus 1, so multiplicity-2 centers fit.
fn cuspidal_cubic() -> RealSNCPair {
    let mut p = RealSNCPair::plane("cuspidal-cubic");
    p.add_component("C", 9, 1, Reality::RealInfinite, true, Some(vec![3]));
    p
}

/// The line+conic pair (which has an imaginary loop) with one extra real
/// line meeting both transversally, so elimination stays non-trivial.
fn conic_with_lines() -> RealSNCPair {
    let mut p = build(&GallerySpec::LineConic).expect("gallery pair");
    let l = p.component_by_name("L").expect("line").id;
    let c = p.component_by_name("C").expect("conic").id;
    let l2 = p.add_component("L2", 1, 0, Reality::RealInfinite, true, Some(vec![1]));
    p.add_edge(l2, l, 1, PointReality::Real, None);
    p.add_edge(l2, c, 1, PointReality::Real, None);
    p.add_edge(l2, c, 1, PointReality::Real, None);
    p
}

fn base_pair(which: u8) -> RealSNCPair {
    match which % 3 {
        0 => three_lines(),
        1 => cuspidal_cubic(),
        _ => conic_with_lines(),
    }
}

/// Decodes one plan step against the current pair. `allow_mult` admits
/// multiplicity-2 centers (which leave a tangency edge behind); the pairs
/// meant for kappa computations keep every edge transverse instead.
fn try_step(p: &RealSNCPair, s: &PlanStep, allow_mult: bool, tag: usize) -> Option<RealSNCPair> {
    let real_components = |p: &RealSNCPair| -> Vec<ComponentId> {
        p.components()
            .filter(|c| c.reality.is_real())
            .map(|c| c.id)
            .collect()
    };
    let center = match s.kind % 5 {
        0 => Center::FreeReal,
        1 => {
            let reals = real_components(p);
            let c = reals[s.pick_a as usize % reals.len()];
            let m = if allow_mult && p.component(c).genus >= 1 && s.pick_b % 3 == 0 {
                2
            } else {
                1
            };
            Center::OnComponent {
                component: c,
                multiplicity: m,
            }
        }
        2 => {
            let real_edges: Vec<_> = p
                .edges()
                .filter(|e| e.point.is_real())
                .map(|e| e.id)
                .collect();
            if real_edges.is_empty() {
                return None;
            }
            Center::OnEdge {
                edge: real_edges[s.pick_a as usize % real_edges.len()],
                m1: 1,
                m2: 1,
            }
        }
        3 => Center::ConjugatePairOf(Box::new(Center::FreeReal)),
        _ => {
            let reals = real_components(p);
            let c = reals[s.pick_a as usize % reals.len()];
            Center::ConjugatePairOf(Box::new(Center::OnComponent {
                component: c,
                multiplicity: 1,
            }))
        }
    };
    let policy = if s.strict {
        BoundaryPolicy::StrictTransform
    } else {
        BoundaryPolicy::TotalTransformReduced
    };
    blow_up(p, &BlowUpRequest::new(center, policy, format!("X{tag}")))
        .ok()
        .map(|(q, _)| q)
}

/// Runs a plan, handing every intermediate pair to `check`.
fn apply_plan(
    plan: &Plan,
    allow_mult: bool,
    mut check: impl FnMut(&RealSNCPair),
) -> RealSNCPair {
    let mut p = base_pair(plan.base);
    check(&p);
    for (i, s) in plan.steps.iter().enumerate() {
        if let Some(next) = try_step(&p, s, allow_mult, i) {
            check(&next);
            p = next;
        }
    }
    p
}

/// The independent soundness check: weight and genus (updated by the graph
/// rules) must agree with the pushed class vectors through adjunction.
fn assert_sound(p: &RealSNCPair) {
    let violations = p.validate();
    assert!(
        violations.is_empty(),
        "validate() after blow-up: {violations:?}"
    );
    let k = p.canonical_class_vector();
    for c in p.components() {
        let class = c.picard_class.as_ref().expect("plan pairs track classes");
        let square = RealSNCPair::class_pairing(class, class);
        assert_eq!(
            square, c.self_intersection,
            "stored weight of {} disagrees with its class square",
            c.name
        );
        let k_dot = RealSNCPair::class_pairing(&k, class);
        assert_eq!(
            k_dot + square,
            2 * c.genus - 2,
            "adjunction fails on {}",
            c.name
        );
    }
}

/// Builds a link move of the requested type from whatever the pair offers:
/// type (2) blows up a real boundary point keeping the reduced total
/// transform, type (3) a conjugate pair of non-real points keeping the
/// strict transform.
fn pick_move(p: &RealSNCPair, conjugate: bool, pick: u8) -> Option<LinkMove> {
    if conjugate {
        let mut inners = vec![Center::FreeReal];
        for c in p.components().filter(|c| c.reality.is_real()) {
            inners.push(Center::OnComponent {
                component: c.id,
                multiplicity: 1,
            });
        }
        Some(LinkMove::ConjugatePairBlowUp {
            center: inners[pick as usize % inners.len()].clone(),
            name: "M".into(),
            conjugate_name: None,
        })
    } else {
        let mut centers = Vec::new();
        for c in p
            .components()
            .filter(|c| c.reality.is_real() && c.in_boundary)
        {
            centers.push(Center::OnComponent {
                component: c.id,
                multiplicity: 1,
            });
        }
        for e in p.edges().filter(|e| e.point.is_real()) {
            if p.component(e.ends.0).in_boundary || p.component(e.ends.1).in_boundary {
                centers.push(Center::OnEdge {
                    edge: e.id,
                    m1: 1,
                    m2: 1,
                });
            }
        }
        if centers.is_empty() {
            return None;
        }
        Some(LinkMove::RealBoundaryBlowUp {
            center: centers[pick as usize % centers.len()].clone(),
            name: "M".into(),
        })
    }
}

const PROPERTY_CASES: u32 = 512;

fn property_runner() -> TestRunner {
    TestRunner::new(Config {
        cases: PROPERTY_CASES,
        ..Config::default()
    })
}

#[test]
fn criterion_8a_blow_up_soundness() {
    let mut runner = property_runner();
    let result = runner.run(&plan_strategy(6), |plan| {
        apply_plan(&plan, true, assert_sound);
        Ok(())
    });
    if let Err(e) = result {
        panic!("criterion 8a failed: {e}");
    }
    println!(
        "PASS criterion 8: adjunction and validate() hold after every blow-up ({PROPERTY_CASES} random plans)"
    );
}

#[test]
fn criterion_8b_link_moves_preserve_kappa_real() {
    let mut runner = property_runner();
    let strategy = (plan_strategy(5), any::<bool>(), any::<u8>());
    let result = runner.run(&strategy, |(plan, conjugate, pick)| {
        let built = apply_plan(&plan, false, |_| {});
        // Work on the loop-free model of the pair; its classification is
        // exactly the real Kodaira dimension of the original.
        let rk = kappa_real(&built).expect("plan pairs are SNC");
        let p = rk.eliminated;
        let before = rk.result;
        let Some(mv) = pick_move(&p, conjugate, pick) else {
            return Ok(());
        };
        let moved = apply_link(&p, &mv).expect("link move applies");
        assert!(
            moved.validate().is_empty(),
            "link move output validates"
        );
        let after = kappa_real(&moved).expect("moved pair is SNC").result;
        assert_eq!(
            before.value, after.value,
            "kappa_real changed under a link move ({mv:?})"
        );
        Ok(())
    });
    if let Err(e) = result {
        panic!("criterion 8b failed: {e}");
    }
    println!(
        "PASS criterion 8: kappa_real is invariant under link moves of types (2) and (3) on loop-free pairs ({PROPERTY_CASES} random cases)"
    );
}

#[test]
fn criterion_8c_loop_elimination_monotonicity() {
    let mut runner = property_runner();
    let result = runner.run(&plan_strategy(5), |plan| {
        let p = apply_plan(&plan, false, |_| {});
        let rk = kappa_real(&p).expect("plan pairs are SNC");
        let k_before = kappa(&p);
        let k_after = kappa(&rk.eliminated);
        assert_eq!(
            k_before.value, k_after.value,
            "loop elimination changed kappa"
        );
        assert!(
            rk.result.value <= rk.raw.value,
            "loop elimination increased the real classification ({:?} -> {:?})",
            rk.raw.value,
            rk.result.value
        );
        Ok(())
    });
    if let Err(e) = result {
        panic!("criterion 8c failed: {e}");
    }
    println!(
        "PASS criterion 8: eliminating imaginary loops preserves kappa and never increases kappa_real ({PROPERTY_CASES} random cases)"
    );
}

#[test]
fn criterion_8d_kappa_real_bounded_by_kappa() {
    let mut runner = property_runner();
    let result = runner.run(&plan_strategy(5), |plan| {
        let p = apply_plan(&plan, false, |_| {});
        let k = kappa(&p).value;
        let kr = kappa_real(&p).expect("plan pairs are SNC").result.value;
        assert!(
            kr <= k,
            "kappa_real {kr:?} exceeds kappa {k:?} on {}",
            p.name
        );
        Ok(())
    });
    if let Err(e) = result {
        panic!("criterion 8d failed: {e}");
    }
    println!(
        "PASS criterion 8: kappa_real <= kappa on every generated valid pair ({PROPERTY_CASES} random cases)"
    );
}

// ---------------------------------------------------------------------------
// Criterion 9: exhaustive-subset Zariski oracle.
//
// The oracle enumerates every subset of the tracked components, keeps those
// whose Gram block is negative definite (leading-minor signs via integer
// Bareiss elimination), solves for the candidate negative part by rational
// Gaussian elimination, and keeps solutions that are coefficient-wise >= 0
// and leave D - N non-negative against every tracked curve. It shares no
// code with the iterative peeling.
// ---------------------------------------------------------------------------

fn leading_minors_alternate(gram: &[Vec<i128>], subset: &[usize]) -> bool {
    let m = subset.len();
    let mut a: Vec<Vec<i128>> = subset
        .iter()
        .map(|&i| subset.iter().map(|&j| gram[i][j]).collect())
        .collect();
    let mut prev = 1i128;
    for k in 0..m {
        let minor = a[k][k];
        if minor == 0 {
            return false;
        }
        // Negative definiteness: det of the leading k-minor has sign (-1)^k.
        if (k % 2 == 0) != (minor < 0) {
            return false;
        }
        for i in (k + 1)..m {
            for j in (k + 1)..m {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = minor;
    }
    true
}

fn gauss_solve(gram: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let m = rhs.len();
    let mut a: Vec<Vec<Rat>> = (0..m)
        .map(|r| {
            let mut row = gram[r].clone();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    for col in 0..m {
        let pivot = (col..m).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        for r in 0..m {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                for c in col..=m {
                    let delta = &f * &a[col][c];
                    a[r][c] = &a[r][c] - &delta;
                }
            }
        }
    }
    Some((0..m).map(|r| &a[r][m] / &a[r][r]).collect())
}

/// The unique valid negative part over all component subsets, or None when
/// no subset admits one.
fn brute_zariski(pair: &RealSNCPair, d: &Divisor) -> Option<BTreeMap<ComponentId, Rat>> {
    let ids: Vec<ComponentId> = pair.component_ids().collect();
    let n = ids.len();
    assert!(n <= 12, "oracle subset budget");
    let gram_rat: Vec<Vec<Rat>> = ids
        .iter()
        .map(|&i| {
            ids.iter()
                .map(|&j| {
                    pair.pairing(&Divisor::component(i), &Divisor::component(j))
                        .unwrap()
                })
                .collect()
        })
        .collect();
    let gram_int: Vec<Vec<i128>> = gram_rat
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.to_integer().to_i128().expect("small intersection numbers"))
                .collect()
        })
        .collect();
    let d_dot: Vec<Rat> = ids
        .iter()
        .map(|&i| pair.pairing(d, &Divisor::component(i)).unwrap())
        .collect();
    let mut found: Option<BTreeMap<ComponentId, Rat>> = None;
    for mask in 0u32..(1u32 << n) {
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if !leading_minors_alternate(&gram_int, &subset) {
            continue;
        }
        let g: Vec<Vec<Rat>> = subset
            .iter()
            .map(|&i| subset.iter().map(|&j| gram_rat[i][j].clone()).collect())
            .collect();
        let rhs: Vec<Rat> = subset.iter().map(|&i| d_dot[i].clone()).collect();
        let Some(x) = gauss_solve(&g, &rhs) else {
            continue;
        };
        if x.iter().any(|v| v.is_negative()) {
            continue;
        }
        let nef_after = (0..n).all(|c| {
            let mut n_dot = Rat::zero();
            for (&s, xv) in subset.iter().zip(&x) {
                n_dot = n_dot + xv * &gram_rat[c][s];
            }
            !(&d_dot[c] - n_dot).is_negative()
        });
        if !nef_after {
            continue;
        }
        let nonzero: BTreeMap<ComponentId, Rat> = subset
            .iter()
            .zip(&x)
            .filter(|(_, v)| !v.is_zero())
            .map(|(&s, v)| (ids[s], v.clone()))
            .collect();
        match &found {
            None => found = Some(nonzero),
            Some(prev) => assert_eq!(
                prev, &nonzero,
                "two subsets produced different negative parts on {}",
                pair.name
            ),
        }
    }
    found
}

fn oracle_check(pair: &RealSNCPair, d: &Divisor, label: &str) {
    let iterative = zariski_decompose(pair, d).expect("pairings computable");
    let brute = brute_zariski(pair, d);
    match (iterative, brute) {
        (ZariskiOutcome::Decomposed(z), Some(n)) => {
            let iter_n: BTreeMap<ComponentId, Rat> = z
                .negative_part
                .iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(&c, v)| (c, v.clone()))
                .collect();
            assert_eq!(iter_n, n, "negative parts differ on {label}");
            assert!(
                z.p_dot.values().all(|v| !v.is_negative()),
                "peeled part not nef on tracked curves on {label}"
            );
        }
        (ZariskiOutcome::Obstructed(_), None) => {}
        (ZariskiOutcome::Decomposed(_), None) => {
            panic!("iterative peeling decomposed {label} but the exhaustive search found nothing");
        }
        (ZariskiOutcome::Obstructed(o), Some(n)) => {
            panic!(
                "exhaustive search found a negative part {n:?} on {label} where peeling reported: {o}"
            );
        }
    }
}

fn shadow_strategy() -> impl Strategy<Value = RealSNCPair> {
    (1usize..=6).prop_flat_map(|n| {
        let weights = prop::collection::vec(-4i64..=1, n);
        let genus = prop::collection::vec(0i64..=1, n);
        let edges = prop::collection::vec(0i64..=2, n * (n - 1) / 2);
        let k_self = -5i64..=9;
        (Just(n), weights, genus, edges, k_self).prop_map(|(n, w, g, em, ks)| {
            let mut p = RealSNCPair::new("shadow", 0, ks);
            for i in 0..n {
                p.add_component(
                    format!("C{i}"),
                    w[i],
                    g[i],
                    Reality::RealInfinite,
                    true,
                    None,
                );
            }
            let mut t = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if em[t] > 0 {
                        p.add_edge(i, j, em[t], PointReality::Real, None);
                    }
                    t += 1;
                }
            }
            p
        })
    })
}

#[test]
fn criterion_9_zariski_oracle_random_graphs() {
    let cases = 256u32;
    let mut runner = TestRunner::new(Config {
        cases,
        ..Config::default()
    });
    let result = runner.run(&shadow_strategy(), |p| {
        oracle_check(&p, &adjoint_divisor(&p), "a random shadow graph");
        Ok(())
    });
    if let Err(e) = result {
        panic!("criterion 9 failed on random graphs: {e}");
    }
    println!(
        "PASS criterion 9: iterative peeling matches the exhaustive-subset oracle on {cases} random graphs (<= 6 components, weights in [-4, +1])"
    );
}

#[test]
fn criterion_9_zariski_oracle_gallery() {
    let mut specs = vec![
        GallerySpec::AffinePlane,
        GallerySpec::LineConic,
        GallerySpec::Y333,
        GallerySpec::Ramanujam,
        GallerySpec::SAb { a: 2, b: 3 },
        GallerySpec::SAb { a: 3, b: 4 },
        GallerySpec::SAb { a: 3, b: 5 },
        GallerySpec::Ms { s: 2 },
        GallerySpec::Ms { s: 3 },
    ];
    for r in 0..=2i64 {
        for p in 0..=3i64 {
            if r + 2 * p >= 1 {
                specs.push(GallerySpec::Arrangement {
                    real_lines: r,
                    pairs: p,
                });
            }
        }
    }
    let mut checked = 0usize;
    for spec in &specs {
        let pair = build(spec).unwrap();
        if pair.component_count() > 12 {
            continue;
        }
        oracle_check(&pair, &adjoint_divisor(&pair), &pair.name);
        oracle_check(&pair, &real_adjoint_divisor(&pair), &pair.name);
        checked += 1;
    }
    assert!(checked >= 12, "enough gallery pairs fit the oracle budget");
    println!(
        "PASS criterion 9: iterative peeling matches the exhaustive-subset oracle on {checked} gallery pairs (both boundary divisors)"
    );
}
