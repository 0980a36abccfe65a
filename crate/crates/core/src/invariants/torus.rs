//! Closed-form Jones and Alexander polynomials of torus knots, used as
//! independent oracles for the diagram pipeline.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::invariants::laurent::Laurent;

fn check_torus_params(p: i64, q: i64) -> Result<()> {
    if !(p > q && q > 0) {
        return Err(Error::InvalidParameter(format!(
            "torus knot parameters need p > q > 0, got p={p}, q={q}"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidParameter(format!(
            "torus knot parameters must be coprime, got gcd({p},{q}) = {}",
            p.gcd(&q)
        )));
    }
    Ok(())
}

/// Jones polynomial of the (p,q) torus knot:
/// `t^((p−1)(q−1)/2) · (1 − t^(p+1) − t^(q+1) + t^(p+q)) / (1 − t²)`.
/// The quotient is exact; a remainder signals a bug.
pub fn jones_torus_closed_form(p: i64, q: i64) -> Result<Laurent<'t'>> {
    check_torus_params(p, q)?;
    let numerator =
        Laurent::from_terms(&[(0, 1), (p + 1, -1), (q + 1, -1), (p + q, 1)]);
    let denominator = Laurent::from_terms(&[(0, 1), (2, -1)]);
    let quotient = numerator.exact_div(&denominator)?;
    Ok(quotient.shift((p - 1) * (q - 1) / 2))
}

/// Alexander polynomial of the (p,q) torus knot:
/// `(t^(pq) − 1)(t − 1) / ((t^p − 1)(t^q − 1))`, exact over the integers.
pub fn alexander_torus_closed_form(p: i64, q: i64) -> Result<Laurent<'t'>> {
    check_torus_params(p, q)?;
    let numerator = &Laurent::from_terms(&[(p * q, 1), (0, -1)])
        * &Laurent::from_terms(&[(1, 1), (0, -1)]);
    let step = numerator.exact_div(&Laurent::from_terms(&[(p, 1), (0, -1)]))?;
    step.exact_div(&Laurent::from_terms(&[(q, 1), (0, -1)]))
}

/// True when `a` equals `b` up to sign and a power of the variable,
/// the equivalence under which Alexander polynomials are defined.
pub fn equal_up_to_unit<const V: char>(a: &Laurent<V>, b: &Laurent<V>) -> bool {
    match (a.min_exp(), b.min_exp()) {
        (None, None) => true,
        (Some(la), Some(lb)) => {
            let shifted = b.shift(la - lb);
            *a == shifted || *a == -&shifted
        }
        _ => false,
    }
}
