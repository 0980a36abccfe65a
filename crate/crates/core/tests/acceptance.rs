//! Acceptance suite: one test per acceptance criterion, each printing a
//! pass line with the measured numbers. Run with `--nocapture` to see
//! them on success.

use std::sync::LazyLock;
use std::time::Instant;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ttk_core::{
    alexander_torus_closed_form, classify_tunnel, compare_up_to_mirror, equal_up_to_unit,
    find_case_witness, first_hit, first_hit_walk, jones, jones_torus_closed_form,
    pd_code_of_closure, random_knot_braid, scan_theorem, twisted_torus_braid,
    twisted_torus_word, BraidWord, CaseKind, Direction, PolyMatch, ScanOptions,
    TunnelArc, TwistedTorusKnot,
};

/// Closed-form scan shared by the theorem-core and histogram criteria.
static FULL_SCAN: LazyLock<ttk_core::ScanReport> = LazyLock::new(|| {
    scan_theorem(
        5000,
        &ScanOptions {
            collect_stats: true,
            ..Default::default()
        },
    )
    .expect("p_max is valid")
});

#[test]
fn criterion_1_theorem_core_scan() {
    let report = &*FULL_SCAN;
    assert_eq!(report.p_max, 5000);
    assert!(
        (7_500_000..7_700_000).contains(&report.pairs),
        "expected about 7.6M coprime pairs, scanned {}",
        report.pairs
    );
    assert!(
        report.counterexamples.is_empty(),
        "counterexamples: {:?}",
        report.counterexamples
    );
    assert!(
        report.elapsed_ms < 60_000,
        "single-threaded scan took {} ms",
        report.elapsed_ms
    );
    println!(
        "criterion 1 PASS: {} coprime pairs with p <= 5000 classified, \
         0 counterexamples, {} ms single-threaded",
        report.pairs, report.elapsed_ms
    );
}

#[test]
fn criterion_2_case_refutation() {
    let started = Instant::now();
    let mut pairs = 0u64;
    for p in 4..=2000i64 {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            pairs += 1;
            for case in [CaseKind::Star, CaseKind::DoubleStar] {
                let witness = find_case_witness(p, q, case).unwrap();
                assert_eq!(witness, None, "witness for p={p}, q={q}, {case}");
            }
        }
    }
    println!(
        "criterion 2 PASS: no star/doublestar witness on {} coprime pairs \
         with p <= 2000 ({} ms)",
        pairs,
        started.elapsed().as_millis()
    );
}

#[test]
fn criterion_3_golden_instance() {
    let k = TwistedTorusKnot::new(17, 7, -2).unwrap();
    let cert = classify_tunnel(&k).unwrap();
    assert_eq!(cert.chosen, TunnelArc::Gamma1);
    assert_eq!((cert.p1.steps, cert.p1.label), (5, 1));
    assert!(!cert.anomaly);
    let b = twisted_torus_braid(&k);
    assert_eq!(b.crossing_count(), 124);
    assert_eq!(b.writhe(), 100);
    println!(
        "criterion 3 PASS: T(17,7,3,-2) certified by gamma1 at 5 steps; \
         braid length 124, writhe 100"
    );
}

#[test]
fn criterion_4_dual_implementation_agreement() {
    let mut checked = 0u64;
    for p in 4..=300i64 {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            for direction in [Direction::Forward, Direction::Backward] {
                assert_eq!(
                    first_hit(p, q, direction).unwrap(),
                    first_hit_walk(p, q, direction).unwrap(),
                    "p={p}, q={q}, {direction:?}"
                );
                checked += 1;
            }
        }
    }
    let mut dual = 0u64;
    for p in 4..=1000i64 {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            let back = first_hit(p, q, Direction::Backward).unwrap();
            let fwd = first_hit(p, p - q, Direction::Forward).unwrap();
            assert_eq!(
                (back.steps, back.label),
                (fwd.steps, fwd.label),
                "duality failed for p={p}, q={q}"
            );
            dual += 1;
        }
    }
    println!(
        "criterion 4 PASS: closed form equals walk on {checked} hits (p <= 300); \
         direction duality holds on {dual} pairs (p <= 1000)"
    );
}

#[test]
fn criterion_5_histogram_sanity() {
    let hist = &FULL_SCAN.pair_histogram;
    assert_eq!(hist.get(2, -1), 0, "excluded pattern (2,-1) occurred");
    assert_eq!(hist.get(-1, 2), 0, "excluded pattern (-1,2) occurred");
    // recorded as evidence, not asserted
    let both_two = hist.get(2, 2);
    let both_minus = hist.get(-1, -1);
    println!(
        "criterion 5 PASS: (2,-1) and (-1,2) absent over p <= 5000; \
         observed (2,2) {both_two} times, (-1,-1) {both_minus} times; histogram {:?}",
        hist.entries()
    );
}

#[test]
fn criterion_6_invariant_oracle_agreement() {
    let started = Instant::now();
    for (p, q) in [(3i64, 2i64), (4, 3), (5, 2), (5, 3), (7, 2)] {
        let b = twisted_torus_word(p, q, 0).unwrap();
        assert!(b.crossing_count() <= 20, "T({p},{q}) exceeds the cap");
        let computed = jones(&b).unwrap();
        let oracle = jones_torus_closed_form(p, q).unwrap();
        let outcome = compare_up_to_mirror(&computed, &oracle);
        assert_ne!(
            outcome,
            PolyMatch::Different,
            "T({p},{q}): state sum {computed} vs closed form {oracle}"
        );
        assert_eq!(outcome, PolyMatch::Exact, "T({p},{q}) matched only mirrored");
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 30, "oracle agreement took {elapsed:?}");
    println!(
        "criterion 6 PASS: state-sum Jones equals the closed form exactly on \
         5 torus knots in {} ms",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_7_markov_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for case in 0..100 {
        let b = random_knot_braid(&mut rng, 4, 12);
        let expected = jones(&b).unwrap();
        let mut moved = b.clone();
        for _ in 0..rng.gen_range(1..=3) {
            if rng.gen_bool(0.5) {
                let idx = rng.gen_range(1..moved.strands()) as i32;
                let g = if rng.gen_bool(0.5) { idx } else { -idx };
                moved = moved.conjugate(g).unwrap();
            } else {
                moved = moved.stabilize();
            }
        }
        assert_eq!(
            jones(&moved).unwrap(),
            expected,
            "case {case}: {:?} -> {:?}",
            b.letters(),
            moved.letters()
        );
    }
    println!("criterion 7 PASS: Jones invariant under 100 seeded Markov move sequences");
}

#[test]
fn criterion_8_structural_invariants() {
    // full twists are pure braids
    for s in -10..=10i64 {
        let base_len = twisted_torus_word(6, 5, 0).unwrap().crossing_count();
        let word = twisted_torus_word(6, 5, s).unwrap();
        let block = BraidWord::new(6, word.letters()[base_len..].to_vec()).unwrap();
        assert!(block.permutation().is_identity(), "s={s}");
    }

    // knot closure exactly when gcd(p,q) = 1
    let mut swept = 0u64;
    for p in 4..=50i64 {
        for q in 1..p {
            for s in -2..=2i64 {
                let b = twisted_torus_word(p, q, s).unwrap();
                assert_eq!(b.is_knot(), p.gcd(&q) == 1, "p={p}, q={q}, s={s}");
                swept += 1;
            }
        }
    }

    // arc degree two on every constructed diagram
    let mut diagrams = 0u64;
    for p in 4..=10i64 {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            for s in [-2, -1, 0, 1, 2] {
                let b = twisted_torus_word(p, q, s).unwrap();
                pd_code_of_closure(&b).unwrap().validate().unwrap();
                diagrams += 1;
            }
        }
    }

    // Alexander closed form divides exactly and is symmetric
    let mut alexanders = 0u64;
    for p in 2..=12i64 {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            let delta = alexander_torus_closed_form(p, q).unwrap();
            assert!(equal_up_to_unit(&delta, &delta.reciprocal()), "T({p},{q})");
            alexanders += 1;
        }
    }

    println!(
        "criterion 8 PASS: full-twist purity, knot <=> coprime on {swept} words, \
         arc degree on {diagrams} diagrams, Alexander exactness/symmetry on \
         {alexanders} torus knots"
    );
}
