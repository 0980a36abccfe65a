//! Diagram-level knot invariants used as independent oracles for the
//! braid constructions.

mod bracket;
mod laurent;
mod torus;

pub use bracket::{
    compare_up_to_mirror, jones, jones_capped, kauffman_bracket,
    kauffman_bracket_capped, PolyMatch, DEFAULT_CROSSING_CAP,
};
pub use laurent::Laurent;
pub use torus::{alexander_torus_closed_form, equal_up_to_unit, jones_torus_closed_form};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{twisted_torus_word, BraidWord};

    /// The zero-twist construction must reproduce the torus knot oracle
    /// through the whole braid → PD → state-sum pipeline.
    #[test]
    fn state_sum_agrees_with_closed_form() {
        for (p, q) in [(3, 2), (4, 3), (5, 2), (5, 3), (7, 2)] {
            let b = twisted_torus_word(p, q, 0).unwrap();
            let computed = jones(&b).unwrap();
            let oracle = jones_torus_closed_form(p, q).unwrap();
            assert_eq!(
                compare_up_to_mirror(&computed, &oracle),
                PolyMatch::Exact,
                "T({p},{q})"
            );
        }
    }

    /// For the alternating torus knots T(p,2) the Jones span equals the
    /// crossing number p.
    #[test]
    fn jones_span_of_alternating_torus_knots() {
        for p in [3i64, 5, 7, 9] {
            let closed = jones_torus_closed_form(p, 2).unwrap();
            assert_eq!(closed.span(), p, "closed form T({p},2)");
            // same knot as the closure of σ₁^p on two strands
            let b = BraidWord::new(2, vec![1; p as usize]).unwrap();
            assert_eq!(jones(&b).unwrap().span(), p, "state sum T({p},2)");
        }
    }
}
