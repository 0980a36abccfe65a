//! The `selfcheck` subcommand: runs every library property at its
//! documented range and prints one line per check.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ttk_core::{
    alexander_torus_closed_form, compare_up_to_mirror, equal_up_to_unit, first_hit,
    first_hit_walk, jones, jones_torus_closed_form, pd_code_of_closure, random_knot_braid,
    scan_theorem, twisted_torus_word, BraidWord, Direction, PolyMatch, ScanOptions,
};

fn full_twist_purity() -> Result<String, String> {
    for s in -10..=10i64 {
        let base_len = twisted_torus_word(7, 3, 0).unwrap().crossing_count();
        let word = twisted_torus_word(7, 3, s).unwrap();
        let block = BraidWord::new(7, word.letters()[base_len..].to_vec()).unwrap();
        if !block.permutation().is_identity() {
            return Err(format!("twist block not pure for s={s}"));
        }
    }
    Ok("twist blocks for s in -10..=10 are pure braids".into())
}

fn knot_iff_coprime() -> Result<String, String> {
    let mut swept = 0u64;
    for p in 4..=50i64 {
        for q in 1..p {
            for s in -2..=2i64 {
                let b = twisted_torus_word(p, q, s).unwrap();
                if b.is_knot() != (p.gcd(&q) == 1) {
                    return Err(format!("knot/coprime mismatch at p={p}, q={q}, s={s}"));
                }
                swept += 1;
            }
        }
    }
    Ok(format!("knot closure iff coprime on {swept} words, p <= 50"))
}

fn pd_arc_degree() -> Result<String, String> {
    let mut diagrams = 0u64;
    for p in 4..=10i64 {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            for s in [-2, -1, 0, 1, 2] {
                let b = twisted_torus_word(p, q, s).unwrap();
                let pd = pd_code_of_closure(&b).map_err(|e| e.to_string())?;
                pd.validate().map_err(|e| e.to_string())?;
                diagrams += 1;
            }
        }
    }
    Ok(format!("arc degree two on {diagrams} constructed diagrams"))
}

fn closed_form_vs_walk() -> Result<String, String> {
    let mut hits = 0u64;
    for p in 4..=300i64 {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            for direction in [Direction::Forward, Direction::Backward] {
                let closed = first_hit(p, q, direction).unwrap();
                let walked = first_hit_walk(p, q, direction).unwrap();
                if closed != walked {
                    return Err(format!("mismatch at p={p}, q={q}, {direction:?}"));
                }
                hits += 1;
            }
        }
    }
    Ok(format!("closed form equals walk on {hits} hits, p <= 300"))
}

fn direction_duality() -> Result<String, String> {
    let mut pairs = 0u64;
    for p in 4..=1000i64 {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            let back = first_hit(p, q, Direction::Backward).unwrap();
            let fwd = first_hit(p, p - q, Direction::Forward).unwrap();
            if (back.steps, back.label) != (fwd.steps, fwd.label) {
                return Err(format!("duality broken at p={p}, q={q}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("direction duality on {pairs} pairs, p <= 1000"))
}

fn scan_small_range() -> Result<String, String> {
    let report = scan_theorem(
        100,
        &ScanOptions {
            collect_stats: true,
            cross_check_walk: true,
            search_witnesses: true,
            parallel: false,
        },
    )
    .map_err(|e| e.to_string())?;
    if !report.counterexamples.is_empty() {
        return Err(format!("{} counterexamples", report.counterexamples.len()));
    }
    for (a, b) in [(2, -1), (-1, 2), (1, 1)] {
        if report.pair_histogram.get(a, b) != 0 {
            return Err(format!("excluded pattern ({a},{b}) observed"));
        }
    }
    Ok(format!(
        "scan to p=100: {} pairs, 0 counterexamples, 0 witnesses",
        report.pairs
    ))
}

fn jones_oracle_agreement() -> Result<String, String> {
    for (p, q) in [(3i64, 2i64), (4, 3), (5, 2), (5, 3), (7, 2)] {
        let b = twisted_torus_word(p, q, 0).unwrap();
        let computed = jones(&b).map_err(|e| e.to_string())?;
        let oracle = jones_torus_closed_form(p, q).unwrap();
        match compare_up_to_mirror(&computed, &oracle) {
            PolyMatch::Exact => {}
            PolyMatch::Mirror => return Err(format!("T({p},{q}) matched only mirrored")),
            PolyMatch::Different => {
                return Err(format!("T({p},{q}): {computed} differs from {oracle}"))
            }
        }
    }
    Ok("state-sum Jones equals the closed form on 5 torus knots".into())
}

fn markov_invariance(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..100 {
        let b = random_knot_braid(&mut rng, 4, 12);
        let expected = jones(&b).map_err(|e| e.to_string())?;
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
        if jones(&moved).map_err(|e| e.to_string())? != expected {
            return Err(format!("case {case}: Jones changed under Markov moves"));
        }
    }
    Ok("Jones invariant under 100 random Markov move sequences".into())
}

fn alexander_symmetry() -> Result<String, String> {
    let mut knots = 0u64;
    for p in 2..=12i64 {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            let delta = alexander_torus_closed_form(p, q).map_err(|e| e.to_string())?;
            if !equal_up_to_unit(&delta, &delta.reciprocal()) {
                return Err(format!("Alexander of T({p},{q}) not symmetric"));
            }
            knots += 1;
        }
    }
    Ok(format!("Alexander exact and symmetric on {knots} torus knots"))
}

fn jones_span_alternating() -> Result<String, String> {
    for p in [3i64, 5, 7, 9] {
        let closed = jones_torus_closed_form(p, 2).unwrap();
        let b = BraidWord::new(2, vec![1; p as usize]).unwrap();
        let computed = jones(&b).map_err(|e| e.to_string())?;
        if closed.span() != p || computed.span() != p {
            return Err(format!("T({p},2) span != crossing number"));
        }
    }
    Ok("Jones span equals crossing number for T(p,2), p in {3,5,7,9}".into())
}

/// Runs every check, printing one line each; returns true when all pass.
pub fn run(seed: u64) -> bool {
    let checks: Vec<(&str, Box<dyn Fn() -> Result<String, String>>)> = vec![
        ("full-twist-purity", Box::new(full_twist_purity)),
        ("knot-iff-coprime", Box::new(knot_iff_coprime)),
        ("pd-arc-degree", Box::new(pd_arc_degree)),
        ("closed-form-vs-walk", Box::new(closed_form_vs_walk)),
        ("direction-duality", Box::new(direction_duality)),
        ("scan-p100", Box::new(scan_small_range)),
        ("jones-oracle", Box::new(jones_oracle_agreement)),
        (
            "markov-invariance",
            Box::new(move || markov_invariance(seed)),
        ),
        ("alexander-symmetry", Box::new(alexander_symmetry)),
        ("jones-span", Box::new(jones_span_alternating)),
    ];
    let mut failures = 0usize;
    let total = checks.len();
    for (name, check) in checks {
        match check() {
            Ok(detail) => println!("ok   {name}: {detail}"),
            Err(detail) => {
                failures += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    if failures == 0 {
        println!("selfcheck passed ({total}/{total})");
        true
    } else {
        println!("selfcheck failed ({failures}/{total} checks)");
        false
    }
}
