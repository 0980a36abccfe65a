//! Kauffman bracket state sum and the Jones polynomial of a braid closure.
//!
//! The bracket of a diagram with c crossings is
//! `Σ_states A^(#A − #B) · δ^(loops − 1)` with `δ = −A² − A⁻²`, summed over
//! all 2^c smoothing states; the 0-crossing unknot diagram has bracket 1.
//! With the crossing tuple read counterclockwise from the incoming
//! under-strand `(a, b, c, d)`, the A-smoothing joins a–b and c–d and the
//! B-smoothing joins a–d and b–c. Normalizing by `(−A³)^(−writhe)` and
//! substituting `t = A⁻⁴` gives the Jones polynomial.

use crate::braid::BraidWord;
use crate::diagram::{pd_code_of_closure, PDCode};
use crate::error::{Error, Result};
use crate::invariants::laurent::Laurent;

/// Largest diagram the exponential state sum accepts by default.
pub const DEFAULT_CROSSING_CAP: usize = 20;

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len as u32).collect(),
        }
    }

    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            self.parent[x as usize] = self.parent[self.parent[x as usize] as usize];
            x = self.parent[x as usize];
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra as usize] = rb;
        }
    }
}

/// Kauffman bracket of `pd` with the default crossing cap.
pub fn kauffman_bracket(pd: &PDCode) -> Result<Laurent<'A'>> {
    kauffman_bracket_capped(pd, DEFAULT_CROSSING_CAP)
}

/// Kauffman bracket of `pd`, refusing diagrams with more than `cap`
/// crossings instead of attempting the 2^c state enumeration.
pub fn kauffman_bracket_capped(pd: &PDCode, cap: usize) -> Result<Laurent<'A'>> {
    let c = pd.crossing_count();
    if c > cap {
        return Err(Error::CrossingCapExceeded { crossings: c, cap });
    }
    if c == 0 {
        return Ok(Laurent::one());
    }
    pd.validate()?;

    let arcs = 2 * c;
    // counts[num_a][loops] = number of states with that A-smoothing count
    // and loop count; loops never exceeds c + 1
    let mut counts = vec![vec![0u64; c + 2]; c + 1];
    let mut uf = UnionFind::new(arcs);
    for state in 0u64..(1u64 << c) {
        uf.reset();
        let mut num_a = 0usize;
        for (idx, x) in pd.crossings().iter().enumerate() {
            let [a, b, cc, d] = x.map(|v| (v - 1) as u32);
            if state & (1 << idx) == 0 {
                num_a += 1;
                uf.union(a, b);
                uf.union(cc, d);
            } else {
                uf.union(a, d);
                uf.union(b, cc);
            }
        }
        let mut loops = 0usize;
        for arc in 0..arcs as u32 {
            if uf.find(arc) == arc {
                loops += 1;
            }
        }
        counts[num_a][loops] += 1;
    }

    let delta = Laurent::<'A'>::from_terms(&[(2, -1), (-2, -1)]);
    let mut delta_pow = Vec::with_capacity(c + 1);
    delta_pow.push(Laurent::one());
    for i in 1..=c {
        delta_pow.push(&delta_pow[i - 1] * &delta);
    }

    let mut bracket = Laurent::zero();
    for (num_a, row) in counts.iter().enumerate() {
        for (loops, &n) in row.iter().enumerate().skip(1) {
            if n == 0 {
                continue;
            }
            let exp = 2 * num_a as i64 - c as i64;
            let term = Laurent::term(n as i64, exp);
            bracket += &(&term * &delta_pow[loops - 1]);
        }
    }
    Ok(bracket)
}

/// Jones polynomial of the closure of `b` with the default crossing cap.
pub fn jones(b: &BraidWord) -> Result<Laurent<'t'>> {
    jones_capped(b, DEFAULT_CROSSING_CAP)
}

/// Jones polynomial via the bracket: `(−A³)^(−writhe) · ⟨closure⟩` with
/// `t = A⁻⁴`. The closure must be a knot, which makes all t-exponents
/// integers.
pub fn jones_capped(b: &BraidWord, cap: usize) -> Result<Laurent<'t'>> {
    let pd = pd_code_of_closure(b)?;
    let bracket = kauffman_bracket_capped(&pd, cap)?;
    let w = b.writhe();
    let mut normalized = bracket.shift(-3 * w);
    if w.rem_euclid(2) == 1 {
        normalized = -&normalized;
    }
    let mut out = Laurent::zero();
    for (e, c) in normalized.terms() {
        if e % 4 != 0 {
            return Err(Error::InexactDivision(format!(
                "normalized bracket exponent {e} not divisible by 4"
            )));
        }
        out.add_term(-e / 4, c);
    }
    Ok(out)
}

/// Outcome of comparing two polynomials up to the mirror substitution
/// `t → 1/t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyMatch {
    Exact,
    Mirror,
    Different,
}

/// Compares `a` against `b` and against `b` mirrored. Chirality
/// disagreements with external tables show up as `Mirror`.
pub fn compare_up_to_mirror<const V: char>(a: &Laurent<V>, b: &Laurent<V>) -> PolyMatch {
    if a == b {
        PolyMatch::Exact
    } else if *a == b.reciprocal() {
        PolyMatch::Mirror
    } else {
        PolyMatch::Different
    }
}
