//! Logarithmic Kodaira dimension of a pair via exact Zariski decomposition.
//!
//! For the adjoint divisor D = K + B the classifier first looks for a nef
//! tracked curve pairing negatively with D, then for D vanishing exactly as
//! a class, and otherwise peels the negative part off D by iteratively
//! solving the linear system on the components where D - N is still
//! negative. The sign data of the peeled positive part P decides the
//! dimension; certifications say whether class arithmetic pins the answer
//! or whether it is conditional on the tracked curves being the only
//! relevant ones.
//!
//! The real form of the dimension uses D = K + B_R after the imaginary
//! loops of the real boundary are eliminated.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::birational::{eliminate_imaginary_loops, BirationalError, LoopElimination};
use crate::lattice::{is_negative_definite, solve_rational, Rat};
use crate::pair::{ComponentId, Divisor, PairingError, RealSNCPair};

/// The logarithmic Kodaira dimension, ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KappaValue {
    #[serde(rename = "-inf")]
    NegativeInfinity,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
}

impl fmt::Display for KappaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KappaValue::NegativeInfinity => write!(f, "-inf"),
            KappaValue::Zero => write!(f, "0"),
            KappaValue::One => write!(f, "1"),
            KappaValue::Two => write!(f, "2"),
        }
    }
}

/// How firmly the classifier stands behind its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certification {
    /// The numeric data cannot separate the candidates.
    Unknown,
    /// Correct provided every curve relevant to the peeling is tracked.
    ConditionalOnTrackedCurves,
    /// Pinned by exact class arithmetic or a nef tracked curve.
    Certified,
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certification::Unknown => write!(f, "unknown"),
            Certification::ConditionalOnTrackedCurves => {
                write!(f, "conditional on tracked curves")
            }
            Certification::Certified => write!(f, "certified"),
        }
    }
}

/// Output of the peeling: D = P + N with N supported on a negative
/// definite set of tracked curves and P orthogonal to all of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZariskiDecomposition {
    /// Coefficients of the negative part N (non-negative rationals).
    pub negative_part: BTreeMap<ComponentId, Rat>,
    /// Support of N in id order.
    pub support: Vec<ComponentId>,
    /// P . P, exactly.
    pub p_squared: Rat,
    /// P . C for every tracked component C.
    pub p_dot: BTreeMap<ComponentId, Rat>,
    /// Class vector of P when the pair tracks classes.
    pub p_class: Option<Vec<Rat>>,
    /// Whether P is the zero class; only known with classes.
    pub p_is_zero_class: Option<bool>,
    /// Number of support-growing solve rounds.
    pub rounds: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionKind {
    /// The candidate support's Gram matrix is not negative definite.
    SupportNotNegativeDefinite,
    /// The solved coefficients contain a negative entry.
    NegativeCoefficient,
}

/// Why the peeling could not produce a Zariski decomposition over the
/// tracked curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZariskiObstruction {
    pub kind: ObstructionKind,
    pub support: Vec<String>,
    pub message: String,
}

impl fmt::Display for ZariskiObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

/// Either a decomposition or the reason there is none over the tracked set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZariskiOutcome {
    Decomposed(ZariskiDecomposition),
    Obstructed(ZariskiObstruction),
}

fn dot_with_components(
    pair: &RealSNCPair,
    d: &Divisor,
) -> Result<BTreeMap<ComponentId, Rat>, PairingError> {
    let mut out = BTreeMap::new();
    for c in pair.component_ids() {
        out.insert(c, pair.pairing(d, &Divisor::component(c))?);
    }
    Ok(out)
}

/// Peels the negative part off `d` by growing the support: start with the
/// tracked curves meeting `d` negatively, solve the Gram system exactly,
/// and repeat while `d - N` is negative on a curve outside the support.
pub fn zariski_decompose(
    pair: &RealSNCPair,
    d: &Divisor,
) -> Result<ZariskiOutcome, PairingError> {
    let d_dot = dot_with_components(pair, d)?;
    let mut support: BTreeSet<ComponentId> = d_dot
        .iter()
        .filter(|(_, v)| v.is_negative())
        .map(|(&c, _)| c)
        .collect();
    let mut rounds = 0usize;
    let mut n_coeffs: BTreeMap<ComponentId, Rat> = BTreeMap::new();
    let mut p_dot = d_dot.clone();
    loop {
        if support.is_empty() {
            break;
        }
        rounds += 1;
        let ids: Vec<ComponentId> = support.iter().copied().collect();
        let names = |ids: &[ComponentId]| {
            ids.iter()
                .map(|&c| pair.component(c).name.clone())
                .collect::<Vec<_>>()
        };
        let gram = pair.intersection_matrix(&ids);
        if !is_negative_definite(&gram).expect("gram is symmetric") {
            return Ok(ZariskiOutcome::Obstructed(ZariskiObstruction {
                kind: ObstructionKind::SupportNotNegativeDefinite,
                support: names(&ids),
                message: format!(
                    "support {{{}}} is not negative definite",
                    names(&ids).join(", ")
                ),
            }));
        }
        let rhs: Vec<Rat> = ids.iter().map(|c| d_dot[c].clone()).collect();
        let sol = solve_rational(&gram, &rhs)
            .expect("shape checked")
            .expect("negative definite matrices are invertible");
        if let Some((idx, bad)) = sol.iter().enumerate().find(|(_, v)| v.is_negative()) {
            let name = pair.component(ids[idx]).name.clone();
            return Ok(ZariskiOutcome::Obstructed(ZariskiObstruction {
                kind: ObstructionKind::NegativeCoefficient,
                support: names(&ids),
                message: format!(
                    "peeling would give {name} the negative coefficient {bad}"
                ),
            }));
        }
        n_coeffs = ids.iter().cloned().zip(sol.iter().cloned()).collect();
        // P . C = D . C - sum_j n_j C_j . C for every tracked C.
        for (&c, slot) in p_dot.iter_mut() {
            let mut v = d_dot[&c].clone();
            for (&j, n) in &n_coeffs {
                let int = pair.intersection(j, c);
                if int != 0 {
                    v = v - n * Rat::from_integer(int.into());
                }
            }
            *slot = v;
        }
        let grow: Vec<ComponentId> = p_dot
            .iter()
            .filter(|(c, v)| !support.contains(c) && v.is_negative())
            .map(|(&c, _)| c)
            .collect();
        if grow.is_empty() {
            break;
        }
        support.extend(grow);
    }
    let n_div = Divisor {
        coefficients: n_coeffs.clone(),
        canonical_mult: 0,
        extra_class: None,
    };
    let p_div = d.sub(&n_div);
    let p_squared = pair.pairing(&p_div, &p_div)?;
    let p_class = pair.has_full_classes().then(|| {
        pair.divisor_class(&p_div)
            .expect("full classes make every divisor class computable")
    });
    let p_is_zero_class = p_class.as_ref().map(|v| v.iter().all(|x| x.is_zero()));
    Ok(ZariskiOutcome::Decomposed(ZariskiDecomposition {
        negative_part: n_coeffs,
        support: support.into_iter().collect(),
        p_squared,
        p_dot,
        p_class,
        p_is_zero_class,
        rounds,
    }))
}

/// A classification with its evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KodairaResult {
    pub value: KappaValue,
    pub certification: Certification,
    /// Sentence explaining what decided the value.
    pub witness: String,
    /// Description of the divisor that was classified.
    pub divisor: String,
    pub zariski: Option<ZariskiDecomposition>,
    pub obstruction: Option<ZariskiObstruction>,
}

/// Classifies the Iitaka dimension of `d` on the pair.
pub fn classify(pair: &RealSNCPair, d: &Divisor) -> Result<KodairaResult, PairingError> {
    let divisor = d.describe(pair);
    let d_dot = dot_with_components(pair, d)?;

    // A tracked irreducible curve with non-negative square is nef, so a
    // negative pairing rules out every effective multiple of d.
    for c in pair.component_ids() {
        let comp = pair.component(c);
        if comp.self_intersection >= 0 && d_dot[&c].is_negative() {
            return Ok(KodairaResult {
                value: KappaValue::NegativeInfinity,
                certification: Certification::Certified,
                witness: format!(
                    "{name} is nef ({name}^2 = {sq} >= 0) and ({divisor}).{name} = {v} < 0",
                    name = comp.name,
                    sq = comp.self_intersection,
                    v = d_dot[&c],
                ),
                divisor,
                zariski: None,
                obstruction: None,
            });
        }
    }

    if pair.has_full_classes() {
        if let Some(class) = pair.divisor_class(d) {
            if class.iter().all(|v| v.is_zero()) {
                return Ok(KodairaResult {
                    value: KappaValue::Zero,
                    certification: Certification::Certified,
                    witness: format!("{divisor} is the zero class"),
                    divisor,
                    zariski: None,
                    obstruction: None,
                });
            }
        }
    }

    match zariski_decompose(pair, d)? {
        ZariskiOutcome::Obstructed(o) => Ok(KodairaResult {
            value: KappaValue::NegativeInfinity,
            certification: Certification::ConditionalOnTrackedCurves,
            witness: format!("no Zariski decomposition over the tracked curves: {o}"),
            divisor,
            zariski: None,
            obstruction: Some(o),
        }),
        ZariskiOutcome::Decomposed(z) => Ok(classify_from_peeling(pair, divisor, z)),
    }
}

fn classify_from_peeling(
    pair: &RealSNCPair,
    divisor: String,
    z: ZariskiDecomposition,
) -> KodairaResult {
    let result = |value, certification, witness: String| KodairaResult {
        value,
        certification,
        witness,
        divisor: divisor.clone(),
        zariski: Some(z.clone()),
        obstruction: None,
    };
    if z.p_squared.is_positive() {
        if let Some(class) = &z.p_class {
            // P.H is the first coordinate in the hyperplane basis; its sign
            // picks the nappe of the positive cone P lives in.
            let p_h = class[0].clone();
            return if p_h.is_positive() {
                result(
                    KappaValue::Two,
                    Certification::Certified,
                    format!(
                        "P^2 = {} > 0 and P.H = {p_h} > 0: P is big and D >= P",
                        z.p_squared
                    ),
                )
            } else if p_h.is_negative() {
                result(
                    KappaValue::NegativeInfinity,
                    Certification::Certified,
                    format!(
                        "P^2 = {} > 0 but P.H = {p_h} < 0: -P is big, so D is not pseudo-effective",
                        z.p_squared
                    ),
                )
            } else {
                result(
                    KappaValue::Two,
                    Certification::Unknown,
                    "P^2 > 0 with P.H = 0 should not happen in a hyperbolic lattice".into(),
                )
            };
        }
        // No classes: use a nef tracked curve to orient P.
        for c in pair.component_ids() {
            let comp = pair.component(c);
            if comp.self_intersection >= 0 && z.p_dot[&c].is_positive() {
                return result(
                    KappaValue::Two,
                    Certification::Certified,
                    format!(
                        "P^2 = {} > 0 and P.{} = {} > 0 against the nef curve {}: P is big",
                        z.p_squared, comp.name, z.p_dot[&c], comp.name
                    ),
                );
            }
        }
        return result(
            KappaValue::Two,
            Certification::Unknown,
            format!(
                "P^2 = {} > 0 but no class data or nef tracked curve orients P",
                z.p_squared
            ),
        );
    }
    if z.p_squared.is_zero() {
        if z.p_is_zero_class == Some(true) {
            return result(
                KappaValue::Zero,
                Certification::Certified,
                "the peeled positive part is the zero class".into(),
            );
        }
        let p_dot_nonzero = z.p_dot.values().any(|v| !v.is_zero());
        if z.p_is_zero_class == Some(false) || p_dot_nonzero {
            return result(
                KappaValue::One,
                Certification::ConditionalOnTrackedCurves,
                format!(
                    "P^2 = 0 with P nonzero and nef on tracked curves ({})",
                    if p_dot_nonzero {
                        "it meets a tracked curve positively"
                    } else {
                        "its class is nonzero"
                    }
                ),
            );
        }
        return result(
            KappaValue::Zero,
            Certification::Unknown,
            "P is numerically trivial on every tracked curve but no classes confirm P = 0"
                .into(),
        );
    }
    result(
        KappaValue::NegativeInfinity,
        Certification::ConditionalOnTrackedCurves,
        format!(
            "the peeled positive part has P^2 = {} < 0, which no pseudo-effective divisor allows",
            z.p_squared
        ),
    )
}

/// The adjoint divisor K + B of the pair.
pub fn adjoint_divisor(pair: &RealSNCPair) -> Divisor {
    Divisor::canonical().add(&Divisor::reduced(pair.boundary()))
}

/// The real adjoint divisor K + B_R of the pair.
pub fn real_adjoint_divisor(pair: &RealSNCPair) -> Divisor {
    Divisor::canonical().add(&Divisor::reduced(pair.real_boundary()))
}

/// Logarithmic Kodaira dimension of (V, B).
pub fn kappa(pair: &RealSNCPair) -> KodairaResult {
    classify(pair, &adjoint_divisor(pair)).expect("adjoint divisors carry no extra class")
}

/// Classifies K + B_R on the pair as given, without eliminating imaginary
/// loops first. Mostly useful to exhibit why the elimination matters.
pub fn kappa_real_raw(pair: &RealSNCPair) -> KodairaResult {
    classify(pair, &real_adjoint_divisor(pair)).expect("adjoint divisors carry no extra class")
}

/// The real Kodaira dimension computation: eliminate the imaginary loops of
/// the real boundary, then classify K + B_R on the result.
#[derive(Debug, Clone)]
pub struct RealKodaira {
    /// The pair after loop elimination.
    pub eliminated: RealSNCPair,
    pub elimination: LoopElimination,
    /// K + B_R classified on the input, before elimination.
    pub raw: KodairaResult,
    /// K + B_R classified after elimination: the real Kodaira dimension.
    pub result: KodairaResult,
}

/// Computes the real Kodaira dimension. Fails only when the pair is not
/// simple normal crossing, which loop elimination requires.
pub fn kappa_real(pair: &RealSNCPair) -> Result<RealKodaira, BirationalError> {
    let raw = kappa_real_raw(pair);
    let (eliminated, elimination) = eliminate_imaginary_loops(pair)?;
    let result = kappa_real_raw(&eliminated);
    Ok(RealKodaira {
        eliminated,
        elimination,
        raw,
        result,
    })
}
