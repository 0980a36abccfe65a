//! Exact integer Laurent polynomials in one variable.
//!
//! The variable name is part of the type (`Laurent<'A'>`, `Laurent<'t'>`),
//! so bracket-variable and Jones-variable polynomials cannot be mixed by
//! accident; the only bridge is an explicit exponent substitution.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Integer-coefficient polynomial in one variable with exponents of either
/// sign. Zero coefficients are never stored, so map equality is polynomial
/// equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laurent<const V: char> {
    coeffs: BTreeMap<i64, i64>,
}

impl<const V: char> Laurent<V> {
    pub fn zero() -> Self {
        Laurent {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::term(1, 0)
    }

    /// The monomial `coeff · v^exp`.
    pub fn term(coeff: i64, exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, coeff);
        }
        Laurent { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut poly = Self::zero();
        for &(exp, coeff) in terms {
            poly.add_term(exp, coeff);
        }
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Difference between the largest and smallest exponent; 0 for the
    /// zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    /// Multiplies by `v^delta`.
    pub fn shift(&self, delta: i64) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + delta, c)).collect(),
        }
    }

    /// Substitutes `v → 1/v`.
    pub fn reciprocal(&self) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`; a nonzero remainder is an error.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // An exact Laurent quotient has exponents in
        // [min(self) - min(div), max(self) - max(div)].
        let min_quot_exp = self.min_exp().unwrap() - divisor.min_exp().unwrap();
        let dlead = divisor.max_exp().unwrap();
        let dcoeff = divisor.coeff(dlead);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rlead) = rem.max_exp() {
            let e = rlead - dlead;
            if e < min_quot_exp {
                return Err(Error::InexactDivision("nonzero remainder".into()));
            }
            let rcoeff = rem.coeff(rlead);
            if rcoeff % dcoeff != 0 {
                return Err(Error::InexactDivision(format!(
                    "leading coefficient {rcoeff} not divisible by {dcoeff}"
                )));
            }
            let c = rcoeff / dcoeff;
            quot.add_term(e, c);
            for (de, dc) in divisor.terms() {
                rem.add_term(de + e, -dc * c);
            }
        }
        Ok(quot)
    }

    /// JSON object mapping exponent to coefficient, exponents ascending.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (e, c) in self.terms() {
            map.insert(e.to_string(), serde_json::Value::from(c));
        }
        serde_json::Value::Object(map)
    }
}

impl<const V: char> Add for &Laurent<V> {
    type Output = Laurent<V>;
    fn add(self, rhs: Self) -> Laurent<V> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl<const V: char> Sub for &Laurent<V> {
    type Output = Laurent<V>;
    fn sub(self, rhs: Self) -> Laurent<V> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl<const V: char> Mul for &Laurent<V> {
    type Output = Laurent<V>;
    fn mul(self, rhs: Self) -> Laurent<V> {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl<const V: char> Neg for &Laurent<V> {
    type Output = Laurent<V>;
    fn neg(self) -> Laurent<V> {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl<const V: char> AddAssign<&Laurent<V>> for Laurent<V> {
    fn add_assign(&mut self, rhs: &Laurent<V>) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl<const V: char> fmt::Display for Laurent<V> {
    /// Terms ascending by exponent, e.g. `t^1 + t^3 - t^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, coeff)) in self.terms().enumerate() {
            if i == 0 {
                if coeff < 0 {
                    write!(f, "-")?;
                }
            } else if coeff < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.unsigned_abs();
            if exp == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}")?;
                }
                write!(f, "{V}^{exp}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type T = Laurent<'t'>;

    #[test]
    fn display_matches_fixed_form() {
        let p = T::from_terms(&[(1, 1), (3, 1), (4, -1)]);
        assert_eq!(p.to_string(), "t^1 + t^3 - t^4");
        assert_eq!(T::zero().to_string(), "0");
        assert_eq!(T::one().to_string(), "1");
        assert_eq!(T::term(-1, -3).to_string(), "-t^-3");
        assert_eq!(
            T::from_terms(&[(0, 2), (-2, 1), (5, -3)]).to_string(),
            "t^-2 + 2 - 3t^5"
        );
    }

    #[test]
    fn arithmetic_basics() {
        let a = T::from_terms(&[(0, 1), (2, -1)]); // 1 - t^2
        let b = T::from_terms(&[(0, 1), (2, 1)]); // 1 + t^2
        assert_eq!(&a * &b, T::from_terms(&[(0, 1), (4, -1)]));
        assert_eq!(&a + &b, T::term(2, 0));
        assert_eq!(&a - &a, T::zero());
        assert_eq!((-&a).coeff(2), 1);
        assert_eq!(a.pow(2), T::from_terms(&[(0, 1), (2, -2), (4, 1)]));
    }

    #[test]
    fn shift_and_reciprocal() {
        let p = T::from_terms(&[(1, 1), (3, -2)]);
        assert_eq!(p.shift(-2), T::from_terms(&[(-1, 1), (1, -2)]));
        assert_eq!(p.reciprocal(), T::from_terms(&[(-1, 1), (-3, -2)]));
        assert_eq!(p.span(), 2);
    }

    #[test]
    fn exact_division() {
        let num = T::from_terms(&[(0, 1), (4, -1)]); // 1 - t^4
        let den = T::from_terms(&[(0, 1), (2, -1)]); // 1 - t^2
        assert_eq!(num.exact_div(&den).unwrap(), T::from_terms(&[(0, 1), (2, 1)]));

        // 1 + t is not divisible by 1 - t^2
        let num = T::from_terms(&[(0, 1), (1, 1)]);
        assert!(num.exact_div(&den).is_err());

        // Laurent shifts divide out exactly
        let num = T::from_terms(&[(-3, 2), (1, -2)]);
        let den = T::term(2, -1);
        assert_eq!(
            num.exact_div(&den).unwrap(),
            T::from_terms(&[(-2, 1), (2, -1)])
        );
    }

    #[test]
    fn json_keys_ascend() {
        let p = T::from_terms(&[(10, 1), (-4, -1), (3, 2)]);
        assert_eq!(
            serde_json::to_string(&p.to_json()).unwrap(),
            r#"{"-4":-1,"3":2,"10":1}"#
        );
    }
}
