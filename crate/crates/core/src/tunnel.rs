//! Unknotting-tunnel certificates for twisted torus knots T(p,q,3,s).
//!
//! The three twisted strands carry the labels −1, 0, 1 (mod p), with the
//! middle strand labelled 0, and the remaining strands continue the
//! labelling consecutively mod p. The short arc joining strands 0 and −1
//! has two candidate copies: `gamma1` above the twist block and `gamma2`
//! below it. Following the knot from the arc endpoint on strand 0, each
//! pass through the braided part adds q (for `gamma1`) or subtracts q
//! (for `gamma2`) to the strand label. Whichever walk reaches label 1
//! strictly before labels 2 and −1 certifies its arc as an unknotting
//! tunnel, reducing the twist region to two strands. The scanner verifies
//! exhaustively that one of the two walks always qualifies and that the
//! excluded first-arrival patterns never occur.
//!
//! Labels are stored as canonical residues in `0..p`, so −1 appears as
//! p−1 throughout.

use std::time::Instant;

use num_integer::Integer;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::braid::TwistedTorusKnot;
use crate::error::{Error, Result};

/// Residue labels attached to the p strands at the twist region.
/// `labels[i] = (i − 1) mod p`, so positions 0, 1, 2 carry p−1, 0, 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandLabeling {
    p: i64,
    labels: Vec<i64>,
}

impl StrandLabeling {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }
}

/// Labels the p strands with consecutive residues mod p, middle twisted
/// strand = 0. Requires p > 3 so the three target labels 1, 2, −1 are
/// distinct.
pub fn strand_labels(p: i64) -> Result<StrandLabeling> {
    if p <= 3 {
        return Err(Error::InvalidParameter(format!(
            "strand labelling needs p > 3, got p={p}"
        )));
    }
    let labels = (0..p).map(|i| (i - 1).rem_euclid(p)).collect();
    Ok(StrandLabeling { p, labels })
}

/// Direction of the label walk: `Forward` adds q per pass through the
/// braided part, `Backward` subtracts q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

/// First arrival of a label walk in the target set {1, 2, −1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FirstHit {
    pub direction: Direction,
    /// Number of passes taken; always ≤ p−1 for coprime input.
    pub steps: i64,
    /// The label reached, as a canonical residue: 1, 2, or p−1.
    pub label: i64,
}

impl FirstHit {
    fn to_json(self) -> Value {
        json!({ "steps": self.steps, "label": self.label })
    }
}

fn check_walk_params(p: i64, q: i64) -> Result<()> {
    if p <= 3 {
        return Err(Error::InvalidParameter(format!(
            "label walk needs p > 3, got p={p}"
        )));
    }
    if q <= 0 || q >= p {
        return Err(Error::InvalidParameter(format!(
            "label walk needs 0 < q < p, got q={q}, p={p}"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidParameter(format!(
            "label walk needs gcd(p,q) = 1, got gcd({p},{q}) = {}; \
             a non-coprime walk never enters the target residues",
            p.gcd(&q)
        )));
    }
    Ok(())
}

fn mod_inverse(q: i64, p: i64) -> i64 {
    let egcd = q.extended_gcd(&p);
    debug_assert_eq!(egcd.gcd, 1);
    egcd.x.rem_euclid(p)
}

/// Closed-form first hit. With m = q⁻¹ mod p, the forward walk reaches
/// label L at time L·m mod p, so the candidates are t₁ = m, t₂ = 2m mod p
/// and t₋₁ = p − m; the backward walk mirrors them. The earliest candidate
/// wins.
pub fn first_hit(p: i64, q: i64, direction: Direction) -> Result<FirstHit> {
    check_walk_params(p, q)?;
    let m = mod_inverse(q, p);
    let double = ((2 * m as i128) % p as i128) as i64;
    let (t_one, t_two, t_minus_one) = match direction {
        Direction::Forward => (m, double, p - m),
        Direction::Backward => (p - m, p - double, m),
    };
    let mut best = FirstHit {
        direction,
        steps: t_one,
        label: 1,
    };
    if t_two < best.steps {
        best.steps = t_two;
        best.label = 2;
    }
    if t_minus_one < best.steps {
        best.steps = t_minus_one;
        best.label = p - 1;
    }
    Ok(best)
}

/// Brute-force first hit: step the label by ±q until it lands in
/// {1, 2, p−1}. Independent of the closed form; used to cross-check it.
pub fn first_hit_walk(p: i64, q: i64, direction: Direction) -> Result<FirstHit> {
    check_walk_params(p, q)?;
    let step = match direction {
        Direction::Forward => q,
        Direction::Backward => p - q,
    };
    let mut label = 0i64;
    for t in 1..p {
        label += step;
        if label >= p {
            label -= p;
        }
        if label == 1 || label == 2 || label == p - 1 {
            return Ok(FirstHit {
                direction,
                steps: t,
                label,
            });
        }
    }
    unreachable!("a coprime walk visits every nonzero residue within p-1 steps")
}

/// Label sequence visited by the walk, ending at the first target hit.
fn walk_transcript(p: i64, q: i64, direction: Direction) -> Vec<i64> {
    let step = match direction {
        Direction::Forward => q,
        Direction::Backward => p - q,
    };
    let mut label = 0i64;
    let mut out = Vec::new();
    for _ in 1..p {
        label = (label + step) % p;
        out.push(label);
        if label == 1 || label == 2 || label == p - 1 {
            break;
        }
    }
    out
}

/// Which copy of the spanning arc certifies the tunnel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TunnelArc {
    /// The copy above the twist block, walked forward.
    Gamma1,
    /// The copy below the twist block, walked backward.
    Gamma2,
}

impl std::fmt::Display for TunnelArc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TunnelArc::Gamma1 => write!(f, "gamma1"),
            TunnelArc::Gamma2 => write!(f, "gamma2"),
        }
    }
}

/// Certificate that a twisted torus knot is tunnel number one: the chosen
/// arc's walk reaches label 1 before labels 2 and −1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TunnelCertificate {
    pub knot: TwistedTorusKnot,
    pub chosen: TunnelArc,
    pub p1: FirstHit,
    pub p2: FirstHit,
    /// Set when both walks reach label 1 first; `gamma1` is then preferred.
    pub anomaly: bool,
}

impl TunnelCertificate {
    /// Stable-field-order JSON form:
    /// `{"p":…,"q":…,"r":3,"s":…,"tunnel":…,"p1":…,"p2":…,"anomaly":…}`.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("p".into(), self.knot.p().into());
        map.insert("q".into(), self.knot.q().into());
        map.insert("r".into(), self.knot.r().into());
        map.insert("s".into(), self.knot.s().into());
        map.insert("tunnel".into(), self.chosen.to_string().into());
        map.insert("p1".into(), self.p1.to_json());
        map.insert("p2".into(), self.p2.to_json());
        map.insert("anomaly".into(), self.anomaly.into());
        Value::Object(map)
    }
}

fn certify(p: i64, q: i64) -> Result<(FirstHit, FirstHit, TunnelArc, bool)> {
    let p1 = first_hit(p, q, Direction::Forward)?;
    let p2 = first_hit(p, q, Direction::Backward)?;
    match (p1.label == 1, p2.label == 1) {
        (true, both) => Ok((p1, p2, TunnelArc::Gamma1, both)),
        (false, true) => Ok((p1, p2, TunnelArc::Gamma2, false)),
        (false, false) => Err(Error::TheoremViolation {
            p,
            q,
            p1,
            p2,
            forward_walk: walk_transcript(p, q, Direction::Forward),
            backward_walk: walk_transcript(p, q, Direction::Backward),
        }),
    }
}

/// Classifies which arc copy is the unknotting tunnel. The twist count s
/// plays no role in the walk and is only embedded in the certificate;
/// s = 0 describes the torus-knot tunnel itself.
pub fn classify_tunnel(k: &TwistedTorusKnot) -> Result<TunnelCertificate> {
    let (p1, p2, chosen, anomaly) = certify(k.p(), k.q())?;
    Ok(TunnelCertificate {
        knot: *k,
        chosen,
        p1,
        p2,
        anomaly,
    })
}

/// The two excluded first-arrival patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseKind {
    /// Forward walk reaches 2 first and backward walk reaches −1 first.
    Star,
    /// Forward walk reaches −1 first and backward walk reaches 2 first.
    DoubleStar,
}

impl std::fmt::Display for CaseKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CaseKind::Star => write!(f, "star"),
            CaseKind::DoubleStar => write!(f, "doublestar"),
        }
    }
}

/// A joint solution (k, j) of the excluded equation system; finding one
/// would be a counterexample to the tunnel classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseWitness {
    pub case: CaseKind,
    pub k: i64,
    pub j: i64,
}

/// Smallest t ≤ p−1 with t·step ≡ target (mod p) such that no earlier
/// multiple lands on a blocker. Mirrors one equation chain literally.
fn scan_equation(p: i64, step: i64, target: i64, blockers: [i64; 2]) -> Option<i64> {
    let mut label = 0i64;
    for t in 1..p {
        label += step;
        if label >= p {
            label -= p;
        }
        if label == target {
            return Some(t);
        }
        if label == blockers[0] || label == blockers[1] {
            return None;
        }
    }
    None
}

/// Exhaustively searches k, j < p for a joint solution of the equation
/// system of the given case. Deliberately walks the multiples of q
/// directly rather than reusing the closed form, so it is an independent
/// refutation check. Expected to return `None` for every coprime pair.
pub fn find_case_witness(p: i64, q: i64, case: CaseKind) -> Result<Option<CaseWitness>> {
    check_walk_params(p, q)?;
    let minus_one = p - 1;
    let backward = p - q;
    let (k, j) = match case {
        CaseKind::Star => (
            scan_equation(p, q, 2, [1, minus_one]),
            scan_equation(p, backward, minus_one, [1, 2]),
        ),
        CaseKind::DoubleStar => (
            scan_equation(p, q, minus_one, [1, 2]),
            scan_equation(p, backward, 2, [1, minus_one]),
        ),
    };
    match (k, j) {
        (Some(k), Some(j)) => Ok(Some(CaseWitness { case, k, j })),
        _ => Ok(None),
    }
}

/// Confirms, by walking the multiples of q, that the closed-form claim
/// "the forward walk reaches 2 at step k" satisfies the literal prefix
/// conditions: t·q ∉ {1, −1} for all t < k and k·q ≡ 2.
fn forward_two_prefix_holds(p: i64, q: i64, k: i64) -> bool {
    let mut label = 0i64;
    for t in 1..=k {
        label += q;
        if label >= p {
            label -= p;
        }
        if t < k {
            if label == 1 || label == p - 1 {
                return false;
            }
        } else {
            return label == 2;
        }
    }
    false
}

/// Switches for [`scan_theorem`].
#[derive(Debug, Clone, Copy, Default)]
pub struct ScanOptions {
    /// Re-derive every first hit with the brute-force walk and compare.
    pub cross_check_walk: bool,
    /// Accumulate the (p1.label, p2.label) histogram and assert the
    /// equation-prefix consistency of label-2 hits.
    pub collect_stats: bool,
    /// Run the case-witness search for both excluded cases on every pair.
    pub search_witnesses: bool,
    /// Distribute the scan over threads; the report is identical either way.
    pub parallel: bool,
}

/// Why a pair was flagged by the scanner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CounterexampleKind {
    ClassifyFailure,
    StarWitness,
    DoubleStarWitness,
    WalkMismatch,
    EquationPrefixMismatch,
}

impl CounterexampleKind {
    fn as_str(self) -> &'static str {
        match self {
            CounterexampleKind::ClassifyFailure => "classify_failure",
            CounterexampleKind::StarWitness => "star_witness",
            CounterexampleKind::DoubleStarWitness => "doublestar_witness",
            CounterexampleKind::WalkMismatch => "walk_mismatch",
            CounterexampleKind::EquationPrefixMismatch => "equation_prefix_mismatch",
        }
    }
}

/// A flagged pair. The scanner records failures instead of aborting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub p: i64,
    pub q: i64,
    pub kind: CounterexampleKind,
    pub detail: String,
}

impl Counterexample {
    fn to_json(&self) -> Value {
        json!({
            "p": self.p,
            "q": self.q,
            "kind": self.kind.as_str(),
            "detail": self.detail,
        })
    }
}

const LABEL_CLASSES: [&str; 3] = ["1", "2", "-1"];

fn label_class(p: i64, label: i64) -> usize {
    match label {
        1 => 0,
        2 => 1,
        l if l == p - 1 => 2,
        other => panic!("label {other} outside the target set for p={p}"),
    }
}

/// Counts of observed (p1.label, p2.label) patterns, keyed symbolically,
/// e.g. `(1,-1)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairHistogram {
    counts: [u64; 9],
}

impl PairHistogram {
    fn record(&mut self, p: i64, p1_label: i64, p2_label: i64) {
        self.counts[3 * label_class(p, p1_label) + label_class(p, p2_label)] += 1;
    }

    fn merge(&mut self, other: &PairHistogram) {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
    }

    /// Count for a symbolic pattern; labels are given as 1, 2 or −1.
    pub fn get(&self, p1_label: i64, p2_label: i64) -> u64 {
        let class = |l: i64| match l {
            1 => 0,
            2 => 1,
            -1 => 2,
            other => panic!("symbolic label {other} must be 1, 2 or -1"),
        };
        self.counts[3 * class(p1_label) + class(p2_label)]
    }

    /// Nonzero entries in canonical order with their symbolic keys.
    pub fn entries(&self) -> Vec<(String, u64)> {
        let mut out = Vec::new();
        for (i, &n) in self.counts.iter().enumerate() {
            if n > 0 {
                out.push((
                    format!("({},{})", LABEL_CLASSES[i / 3], LABEL_CLASSES[i % 3]),
                    n,
                ));
            }
        }
        out
    }

    fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (key, n) in self.entries() {
            map.insert(key, n.into());
        }
        Value::Object(map)
    }
}

/// Outcome of an exhaustive scan over coprime pairs.
#[derive(Debug, Clone)]
pub struct ScanReport {
    pub p_max: i64,
    pub pairs: u64,
    pub counterexamples: Vec<Counterexample>,
    pub pair_histogram: PairHistogram,
    pub elapsed_ms: u64,
}

impl ScanReport {
    /// Stable-field-order JSON form:
    /// `{"p_max":…,"pairs":…,"counterexamples":…,"pair_histogram":…,"elapsed_ms":…}`.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("p_max".into(), self.p_max.into());
        map.insert("pairs".into(), self.pairs.into());
        map.insert(
            "counterexamples".into(),
            Value::Array(self.counterexamples.iter().map(|c| c.to_json()).collect()),
        );
        map.insert("pair_histogram".into(), self.pair_histogram.to_json());
        map.insert("elapsed_ms".into(), self.elapsed_ms.into());
        Value::Object(map)
    }
}

#[derive(Default)]
struct PartialScan {
    pairs: u64,
    counterexamples: Vec<Counterexample>,
    histogram: PairHistogram,
}

fn scan_single_p(p: i64, options: &ScanOptions) -> PartialScan {
    let mut out = PartialScan::default();
    for q in 1..p {
        if p.gcd(&q) != 1 {
            continue;
        }
        out.pairs += 1;
        let (p1, p2) = match certify(p, q) {
            Ok((p1, p2, _, _)) => (p1, p2),
            Err(e) => {
                out.counterexamples.push(Counterexample {
                    p,
                    q,
                    kind: CounterexampleKind::ClassifyFailure,
                    detail: e.to_string(),
                });
                continue;
            }
        };
        if options.collect_stats {
            out.histogram.record(p, p1.label, p2.label);
            if p1.label == 2 && !forward_two_prefix_holds(p, q, p1.steps) {
                out.counterexamples.push(Counterexample {
                    p,
                    q,
                    kind: CounterexampleKind::EquationPrefixMismatch,
                    detail: format!(
                        "closed form puts label 2 at step {}, literal prefix disagrees",
                        p1.steps
                    ),
                });
            }
        }
        if options.cross_check_walk {
            for (closed, direction) in [(p1, Direction::Forward), (p2, Direction::Backward)] {
                let walked =
                    first_hit_walk(p, q, direction).expect("coprimality already checked");
                if walked != closed {
                    out.counterexamples.push(Counterexample {
                        p,
                        q,
                        kind: CounterexampleKind::WalkMismatch,
                        detail: format!(
                            "{direction:?}: closed form ({}, {}), walk ({}, {})",
                            closed.steps, closed.label, walked.steps, walked.label
                        ),
                    });
                }
            }
        }
        if options.search_witnesses {
            for (case, kind) in [
                (CaseKind::Star, CounterexampleKind::StarWitness),
                (CaseKind::DoubleStar, CounterexampleKind::DoubleStarWitness),
            ] {
                if let Some(w) =
                    find_case_witness(p, q, case).expect("coprimality already checked")
                {
                    out.counterexamples.push(Counterexample {
                        p,
                        q,
                        kind,
                        detail: format!("k={}, j={}", w.k, w.j),
                    });
                }
            }
        }
    }
    out
}

/// Verifies the tunnel classification for every coprime pair
/// 0 < q < p ≤ p_max. Failures become report entries, never aborts.
/// Sequential and parallel runs produce identical reports apart from the
/// elapsed time.
pub fn scan_theorem(p_max: i64, options: &ScanOptions) -> Result<ScanReport> {
    if p_max < 4 {
        return Err(Error::InvalidParameter(format!(
            "scan needs p_max >= 4, got {p_max}"
        )));
    }
    let started = Instant::now();
    let partials: Vec<PartialScan> = if options.parallel {
        (4..=p_max)
            .into_par_iter()
            .map(|p| scan_single_p(p, options))
            .collect()
    } else {
        (4..=p_max).map(|p| scan_single_p(p, options)).collect()
    };
    let mut report = ScanReport {
        p_max,
        pairs: 0,
        counterexamples: Vec::new(),
        pair_histogram: PairHistogram::default(),
        elapsed_ms: 0,
    };
    for partial in partials {
        report.pairs += partial.pairs;
        report.counterexamples.extend(partial.counterexamples);
        report.pair_histogram.merge(&partial.histogram);
    }
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}
