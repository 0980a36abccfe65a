//! Planar diagram and Gauss codes for braid closures.
//!
//! Arcs of the closure are numbered `1..=2c` (c = crossing count) starting
//! at the top of strand 1 and following the orientation; the label
//! increments at every crossing pass, over or under. Each crossing is
//! recorded as the 4-tuple of its incident arc labels read
//! counterclockwise from the incoming under-strand, so the under-strand
//! occupies entries 1 and 3 of the tuple.
//!
//! A positive letter puts the strand arriving from the right on top; with
//! strands oriented downward this makes positive letters positive
//! crossings.

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Crossing list of a knot diagram. `crossings[m]` holds the arc labels
/// around crossing `m` counterclockwise from the incoming under-strand;
/// `signs[m]` is the crossing sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PDCode {
    crossings: Vec<[usize; 4]>,
    signs: Vec<i8>,
}

impl PDCode {
    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Checks that every arc label in `1..=2c` occurs exactly twice.
    pub fn validate(&self) -> Result<()> {
        if self.signs.len() != self.crossings.len() {
            return Err(Error::InvalidParameter(
                "sign list and crossing list differ in length".into(),
            ));
        }
        let arcs = 2 * self.crossings.len();
        let mut degree = vec![0usize; arcs + 1];
        for x in &self.crossings {
            for &a in x {
                if a == 0 || a > arcs {
                    return Err(Error::InvalidParameter(format!(
                        "arc label {a} outside 1..={arcs}"
                    )));
                }
                degree[a] += 1;
            }
        }
        for (a, &d) in degree.iter().enumerate().skip(1) {
            if d != 2 {
                return Err(Error::InvalidParameter(format!(
                    "arc label {a} occurs {d} times, expected 2"
                )));
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for PDCode {
    /// One crossing per line as `X[a,b,c,d]`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for x in &self.crossings {
            writeln!(f, "X[{},{},{},{}]", x[0], x[1], x[2], x[3])?;
        }
        Ok(())
    }
}

/// The four arc ends of one crossing in the braid diagram.
#[derive(Debug, Clone, Copy, Default)]
struct CrossingEnds {
    top_left: usize,
    top_right: usize,
    bottom_left: usize,
    bottom_right: usize,
}

/// One pass of the closure walk through a crossing.
#[derive(Debug, Clone, Copy)]
struct Pass {
    letter: usize,
    under: bool,
}

/// Walks the closure of `b` once, assigning arc labels to all crossing
/// ends and recording the pass sequence in orientation order.
fn closure_walk(b: &BraidWord) -> Result<(Vec<CrossingEnds>, Vec<Pass>)> {
    let components = b.permutation().cycle_count();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    let letters = b.letters();
    let c = letters.len();
    let mut ends = vec![CrossingEnds::default(); c];
    let mut passes = Vec::with_capacity(2 * c);
    if c == 0 {
        return Ok((ends, passes));
    }

    // rows_at[pos] = sorted letter indices whose crossing touches strand
    // position pos (1-based)
    let mut rows_at: Vec<Vec<usize>> = vec![Vec::new(); b.strands() + 1];
    for (row, &g) in letters.iter().enumerate() {
        let i = g.unsigned_abs() as usize;
        rows_at[i].push(row);
        rows_at[i + 1].push(row);
    }

    let total_arcs = 2 * c;
    let mut arc = 1usize;
    let mut pos = 1usize;
    let mut row = 0usize; // next crossing must lie at this row or below

    for _ in 0..total_arcs {
        // next crossing on this strand position, wrapping through the closure
        let next = loop {
            let list = &rows_at[pos];
            let idx = list.partition_point(|&r| r < row);
            match list.get(idx) {
                Some(&r) => break r,
                None => row = 0, // off the bottom; closure returns to the top
            }
        };
        let g = letters[next];
        let i = g.unsigned_abs() as usize;
        let entered_left = pos == i;
        let positive = g > 0;

        // the strand arriving from the left goes under exactly when the
        // letter is positive
        passes.push(Pass {
            letter: next,
            under: entered_left == positive,
        });

        if entered_left {
            ends[next].top_left = arc;
            arc = arc % total_arcs + 1;
            ends[next].bottom_right = arc;
            pos = i + 1;
        } else {
            ends[next].top_right = arc;
            arc = arc % total_arcs + 1;
            ends[next].bottom_left = arc;
            pos = i;
        }
        row = next + 1;
    }
    Ok((ends, passes))
}

/// PD code of the closure of `b`. Fails unless the closure is a knot.
pub fn pd_code_of_closure(b: &BraidWord) -> Result<PDCode> {
    let (ends, _) = closure_walk(b)?;
    let mut crossings = Vec::with_capacity(ends.len());
    let mut signs = Vec::with_capacity(ends.len());
    for (e, &g) in ends.iter().zip(b.letters()) {
        // counterclockwise from the incoming under-strand; the under-strand
        // enters top-left for positive letters, top-right for negative ones
        let tuple = if g > 0 {
            [e.top_left, e.bottom_left, e.bottom_right, e.top_right]
        } else {
            [e.top_right, e.top_left, e.bottom_left, e.bottom_right]
        };
        crossings.push(tuple);
        signs.push(g.signum() as i8);
    }
    let pd = PDCode { crossings, signs };
    pd.validate()?;
    Ok(pd)
}

/// Gauss code of the closure of `b`: one `O±k`/`U±k` token per crossing
/// pass in orientation order, crossings numbered by first visit.
pub fn gauss_code(b: &BraidWord) -> Result<String> {
    let (_, passes) = closure_walk(b)?;
    let mut number = vec![0usize; b.letters().len()];
    let mut next_number = 0usize;
    let mut tokens = Vec::with_capacity(passes.len());
    for pass in &passes {
        if number[pass.letter] == 0 {
            next_number += 1;
            number[pass.letter] = next_number;
        }
        let kind = if pass.under { 'U' } else { 'O' };
        let sign = if b.letters()[pass.letter] > 0 { '+' } else { '-' };
        tokens.push(format!("{kind}{sign}{}", number[pass.letter]));
    }
    Ok(tokens.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{torus_braid, twisted_torus_word, BraidWord};

    #[test]
    fn single_positive_kink() {
        let b = BraidWord::new(2, vec![1]).unwrap();
        let pd = pd_code_of_closure(&b).unwrap();
        assert_eq!(pd.crossings(), &[[1, 1, 2, 2]]);
        assert_eq!(pd.signs(), &[1]);
    }

    #[test]
    fn single_negative_kink() {
        let b = BraidWord::new(2, vec![-1]).unwrap();
        let pd = pd_code_of_closure(&b).unwrap();
        assert_eq!(pd.crossings(), &[[2, 1, 1, 2]]);
        assert_eq!(pd.signs(), &[-1]);
    }

    #[test]
    fn two_strand_trefoil_tuples() {
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let pd = pd_code_of_closure(&b).unwrap();
        assert_eq!(
            pd.crossings(),
            &[[1, 5, 2, 4], [5, 3, 6, 2], [3, 1, 4, 6]]
        );
    }

    #[test]
    fn torus_closures() {
        let pd = pd_code_of_closure(&torus_braid(3, 2).unwrap()).unwrap();
        assert_eq!(pd.crossing_count(), 4);
        let mut seen: Vec<usize> = pd.crossings().iter().flatten().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen, (1..=8).collect::<Vec<_>>());

        let pd = pd_code_of_closure(&torus_braid(5, 2).unwrap()).unwrap();
        assert_eq!(pd.crossing_count(), 8);
    }

    #[test]
    fn arc_degree_holds_on_twisted_constructions() {
        for p in 4..=8i64 {
            for q in 1..p {
                for s in [-2, 0, 1] {
                    let b = twisted_torus_word(p, q, s).unwrap();
                    if b.is_knot() {
                        pd_code_of_closure(&b).unwrap().validate().unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_links() {
        let two_components = BraidWord::new(2, vec![]).unwrap();
        assert!(matches!(
            pd_code_of_closure(&two_components),
            Err(Error::NotAKnot { components: 2 })
        ));
        let b = twisted_torus_word(6, 4, 1).unwrap();
        assert!(matches!(
            pd_code_of_closure(&b),
            Err(Error::NotAKnot { components: 2 })
        ));
    }

    #[test]
    fn unknot_diagram_is_empty() {
        let b = BraidWord::new(1, vec![]).unwrap();
        let pd = pd_code_of_closure(&b).unwrap();
        assert_eq!(pd.crossing_count(), 0);
        pd.validate().unwrap();
    }

    #[test]
    fn pd_text_form() {
        let b = BraidWord::new(2, vec![1]).unwrap();
        let pd = pd_code_of_closure(&b).unwrap();
        assert_eq!(pd.to_string(), "X[1,1,2,2]\n");
    }

    #[test]
    fn gauss_codes() {
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(gauss_code(&b).unwrap(), "U+1 O+2 U+3 O+1 U+2 O+3");

        let b = BraidWord::new(2, vec![-1, -1, -1]).unwrap();
        assert_eq!(gauss_code(&b).unwrap(), "O-1 U-2 O-3 U-1 O-2 U-3");

        // each crossing shows up exactly once as O and once as U
        let b = torus_braid(5, 3).unwrap();
        let code = gauss_code(&b).unwrap();
        let tokens: Vec<&str> = code.split(' ').collect();
        assert_eq!(tokens.len(), 24);
        for k in 1..=12 {
            let overs = tokens.iter().filter(|t| **t == format!("O+{k}")).count();
            let unders = tokens.iter().filter(|t| **t == format!("U+{k}")).count();
            assert_eq!((overs, unders), (1, 1), "crossing {k}");
        }
    }
}
