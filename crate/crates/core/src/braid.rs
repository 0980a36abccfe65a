//! Braid words for torus and twisted torus knots.
//!
//! A braid on `n` strands is stored as a word in the Artin generators:
//! the letter `g` with `1 <= |g| <= n-1` denotes the generator crossing
//! strand positions `|g|` and `|g|+1`, with the sign of `g` giving the
//! crossing sign. Strands are oriented top to bottom and positions are
//! counted from 1 on the left.

use num_integer::Integer;
use rand::Rng;

use crate::error::{Error, Result};

/// A word in the Artin generators of the braid group on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Builds a braid word, rejecting letters outside `1 <= |g| <= strands-1`.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidParameter(
                "braid needs at least one strand".into(),
            ));
        }
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize > strands - 1 {
                return Err(Error::InvalidParameter(format!(
                    "letter {g} is not a generator index on {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Number of crossings in the induced closure diagram.
    pub fn crossing_count(&self) -> usize {
        self.letters.len()
    }

    /// Sum of crossing signs of the closure diagram.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&g| g.signum() as i64).sum()
    }

    /// Permutation induced on strand positions, top to bottom.
    pub fn permutation(&self) -> Permutation {
        // occupant[j] = which top strand currently sits at position j
        let mut occupant: Vec<usize> = (0..self.strands).collect();
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize - 1;
            occupant.swap(i, i + 1);
        }
        let mut images = vec![0usize; self.strands];
        for (bottom, &top) in occupant.iter().enumerate() {
            images[top] = bottom;
        }
        Permutation { images }
    }

    /// True iff the closure of this braid is a single-component knot.
    pub fn is_knot(&self) -> bool {
        self.permutation().cycle_count() == 1
    }

    /// Conjugation by the generator letter `g`: returns `g · w · g⁻¹`.
    /// Markov move; preserves the closure up to isotopy.
    pub fn conjugate(&self, g: i32) -> Result<BraidWord> {
        if g == 0 || g.unsigned_abs() as usize > self.strands - 1 {
            return Err(Error::InvalidParameter(format!(
                "cannot conjugate by {g} on {} strands",
                self.strands
            )));
        }
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        letters.push(-g);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Positive Markov stabilization: one extra strand, `σ_n` appended.
    pub fn stabilize(&self) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(self.strands as i32);
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }
}

/// Permutation of strand positions `0..n`, induced by reading a braid
/// top to bottom. `images[i]` is the bottom position of the strand that
/// starts at top position `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image vector, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &j in &images {
            if j >= n || seen[j] {
                return Err(Error::InvalidParameter(
                    "images do not form a bijection".into(),
                ));
            }
            seen[j] = true;
        }
        Ok(Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Number of cycles; the closure of the source braid has this many
    /// components.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut cycles = 0;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
            }
        }
        cycles
    }
}

/// Validated parameters (p, q, 3, s) of a twisted torus knot: coprime
/// p > q > 0 with p > 3 so the three twisted strands fit, and any
/// number s of full twists (negative s twists the other way).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwistedTorusKnot {
    p: i64,
    q: i64,
    s: i64,
}

impl TwistedTorusKnot {
    pub fn new(p: i64, q: i64, s: i64) -> Result<Self> {
        if p <= 3 {
            return Err(Error::InvalidParameter(format!(
                "p must exceed 3 (three adjacent strands are twisted), got p={p}"
            )));
        }
        if q <= 0 || q >= p {
            return Err(Error::InvalidParameter(format!(
                "q must satisfy 0 < q < p, got q={q}, p={p}"
            )));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidParameter(format!(
                "p and q must be coprime, got gcd({p},{q}) = {}",
                p.gcd(&q)
            )));
        }
        Ok(TwistedTorusKnot { p, q, s })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Number of adjacent strands receiving the full twists; fixed at 3.
    pub fn r(&self) -> i64 {
        3
    }

    pub fn s(&self) -> i64 {
        self.s
    }
}

impl std::fmt::Display for TwistedTorusKnot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "T({},{},3,{})", self.p, self.q, self.s)
    }
}

fn word_len(p: i64, q: i64, s: i64) -> Result<usize> {
    (p - 1)
        .checked_mul(q)
        .and_then(|n| n.checked_add(6 * s.abs()))
        .and_then(|n| usize::try_from(n).ok())
        .filter(|&n| n <= (1 << 31))
        .ok_or_else(|| {
            Error::InvalidParameter(format!(
                "braid word for p={p}, q={q}, s={s} is too long to materialize"
            ))
        })
}

/// The torus braid `(σ₁σ₂…σ_{p−1})^q` on `p` strands. Its closure is the
/// (p,q) torus link, a knot iff gcd(p,q) = 1; coprimality is not required
/// here.
pub fn torus_braid(p: i64, q: i64) -> Result<BraidWord> {
    if p <= 1 {
        return Err(Error::InvalidParameter(format!(
            "torus braid needs p > 1, got p={p}"
        )));
    }
    if q <= 0 || q >= p {
        return Err(Error::InvalidParameter(format!(
            "torus braid needs 0 < q < p, got q={q}, p={p}"
        )));
    }
    let mut letters = Vec::with_capacity(word_len(p, q, 0)?);
    for _ in 0..q {
        for i in 1..p {
            letters.push(i as i32);
        }
    }
    Ok(BraidWord {
        strands: p as usize,
        letters,
    })
}

/// The standard diagram word for parameters (p, q, 3, s): the torus braid
/// followed by `(σ₁σ₂)^{3s}` on the first three strands. Does not require
/// gcd(p,q) = 1, so closures may be links; use [`TwistedTorusKnot`] plus
/// [`twisted_torus_braid`] for validated knots.
pub fn twisted_torus_word(p: i64, q: i64, s: i64) -> Result<BraidWord> {
    if p <= 2 {
        return Err(Error::InvalidParameter(format!(
            "the twist block needs at least 3 strands, got p={p}"
        )));
    }
    let mut word = torus_braid(p, q)?;
    word.letters.reserve(6 * s.unsigned_abs() as usize);
    if s >= 0 {
        for _ in 0..3 * s {
            word.letters.push(1);
            word.letters.push(2);
        }
    } else {
        for _ in 0..3 * (-s) {
            word.letters.push(-2);
            word.letters.push(-1);
        }
    }
    Ok(word)
}

/// Braid word whose closure is the given twisted torus knot.
pub fn twisted_torus_braid(k: &TwistedTorusKnot) -> BraidWord {
    // k is validated, so the parameter checks cannot fail
    twisted_torus_word(k.p(), k.q(), k.s()).expect("validated parameters")
}

/// Draws pseudo-random braid words until one closes up to a knot.
/// Strand count is sampled from `2..=max_strands` and the length from
/// `1..=max_crossings`.
pub fn random_knot_braid<R: Rng>(rng: &mut R, max_strands: usize, max_crossings: usize) -> BraidWord {
    assert!(max_strands >= 2 && max_crossings >= 1);
    loop {
        let n = rng.gen_range(2..=max_strands);
        let len = rng.gen_range(1..=max_crossings);
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let idx = rng.gen_range(1..n) as i32;
                if rng.gen_bool(0.5) {
                    idx
                } else {
                    -idx
                }
            })
            .collect();
        let word = BraidWord {
            strands: n,
            letters,
        };
        if word.is_knot() {
            return word;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_braid_definitional() {
        let b = torus_braid(3, 2).unwrap();
        assert_eq!(b.strands(), 3);
        assert_eq!(b.letters(), &[1, 2, 1, 2]);

        let b = torus_braid(2, 1).unwrap();
        assert_eq!(b.letters(), &[1]);

        let b = torus_braid(17, 7).unwrap();
        assert_eq!(b.strands(), 17);
        assert_eq!(b.crossing_count(), 112);
    }

    #[test]
    fn torus_braid_domain_errors() {
        assert!(torus_braid(1, 1).is_err());
        assert!(torus_braid(0, 1).is_err());
        assert!(torus_braid(5, 0).is_err());
        assert!(torus_braid(5, -2).is_err());
        assert!(torus_braid(5, 5).is_err());
        assert!(torus_braid(5, 7).is_err());
    }

    #[test]
    fn twisted_word_lengths_and_signs() {
        let k = TwistedTorusKnot::new(17, 7, -2).unwrap();
        let b = twisted_torus_braid(&k);
        assert_eq!(b.crossing_count(), 124);
        let tail = &b.letters()[112..];
        assert_eq!(tail.len(), 12);
        assert!(tail.iter().all(|&g| g < 0 && (g == -1 || g == -2)));

        let k = TwistedTorusKnot::new(5, 2, 0).unwrap();
        assert_eq!(twisted_torus_braid(&k), torus_braid(5, 2).unwrap());

        let k = TwistedTorusKnot::new(4, 3, 1).unwrap();
        let b = twisted_torus_braid(&k);
        assert_eq!(b.crossing_count(), 15);
        let tail = &b.letters()[9..];
        assert!(tail.iter().all(|&g| g == 1 || g == 2));
    }

    #[test]
    fn knot_parameter_validation() {
        assert!(TwistedTorusKnot::new(3, 2, 1).is_err());
        assert!(TwistedTorusKnot::new(6, 4, 1).is_err());
        assert!(TwistedTorusKnot::new(5, 5, 1).is_err());
        assert!(TwistedTorusKnot::new(5, 0, 1).is_err());
        assert!(TwistedTorusKnot::new(5, -2, 1).is_err());
        assert!(TwistedTorusKnot::new(4, 3, -100).is_ok());
    }

    #[test]
    fn full_twist_block_is_pure() {
        for s in -5..=5i64 {
            let base = torus_braid(5, 2).unwrap();
            let twisted = twisted_torus_word(5, 2, s).unwrap();
            let block = BraidWord::new(5, twisted.letters()[base.crossing_count()..].to_vec())
                .unwrap();
            assert!(block.permutation().is_identity(), "s = {s}");
        }
    }

    #[test]
    fn permutation_of_torus_braid_is_single_cycle() {
        let b = torus_braid(3, 2).unwrap();
        let perm = b.permutation();
        assert_eq!(perm.images(), &[1, 2, 0]);
        assert_eq!(perm.cycle_count(), 1);

        let empty = BraidWord::new(4, vec![]).unwrap();
        assert!(empty.permutation().is_identity());
    }

    #[test]
    fn knot_detection() {
        let k = TwistedTorusKnot::new(17, 7, -2).unwrap();
        assert!(twisted_torus_braid(&k).is_knot());

        // gcd(6,4) = 2 gives a 2-component closure
        assert!(!twisted_torus_word(6, 4, 1).unwrap().is_knot());

        assert!(torus_braid(2, 1).unwrap().is_knot());
    }

    #[test]
    fn writhe_and_crossing_count() {
        let k = TwistedTorusKnot::new(17, 7, -2).unwrap();
        let b = twisted_torus_braid(&k);
        assert_eq!(b.writhe(), 100);
        assert_eq!(b.crossing_count(), 124);

        assert_eq!(BraidWord::new(3, vec![]).unwrap().writhe(), 0);

        let b = torus_braid(3, 2).unwrap();
        assert_eq!(b.writhe(), 4);
        assert_eq!(b.crossing_count(), 4);
    }

    #[test]
    fn markov_moves() {
        let b = BraidWord::new(2, vec![1]).unwrap();
        let st = b.stabilize();
        assert_eq!(st.strands(), 3);
        assert_eq!(st.letters(), &[1, 2]);
        assert!(st.is_knot());

        let conj = b.conjugate(1).unwrap();
        assert_eq!(conj.letters(), &[1, 1, -1]);
        assert!(conj.is_knot());

        assert!(b.conjugate(0).is_err());
        assert!(b.conjugate(2).is_err());
        assert!(b.conjugate(-2).is_err());
    }

    #[test]
    fn letter_validation() {
        assert!(BraidWord::new(3, vec![1, 2, -2]).is_ok());
        assert!(BraidWord::new(3, vec![3]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(1, vec![]).is_ok());
        assert!(BraidWord::new(0, vec![]).is_err());
    }

    #[test]
    fn permutation_image_validation() {
        assert!(Permutation::from_images(vec![2, 0, 1]).is_ok());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert_eq!(Permutation::from_images(vec![1, 2, 0]).unwrap().cycle_count(), 1);
        assert_eq!(Permutation::from_images(vec![1, 0, 2]).unwrap().cycle_count(), 2);
    }

    #[test]
    fn knot_iff_coprime_sweep() {
        for p in 4..=50i64 {
            for q in 1..p {
                for s in -2..=2i64 {
                    let b = twisted_torus_word(p, q, s).unwrap();
                    assert_eq!(
                        b.is_knot(),
                        p.gcd(&q) == 1,
                        "p={p}, q={q}, s={s}"
                    );
                }
            }
        }
    }
}
