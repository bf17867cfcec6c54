//! Sparse Laurent polynomials in one variable t with rational coefficients.
//!
//! Terms are kept in a sorted map exponent -> coefficient with no zero
//! coefficients stored, so equality is structural. Exponents may be negative.
//! The zero polynomial has no terms; its top degree is `None`, which plays the
//! role of "minus infinity" (it is absorbing for products and compares below
//! every finite degree).

use super::{forward_binop, NumError, Rational, Ring};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    // invariant: no value is zero
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    /// c * t^e (the zero polynomial when c = 0).
    pub fn monomial(coeff: Rational, exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        Self { terms }
    }

    /// The variable t.
    pub fn variable() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(value: Rational) -> Self {
        Self::monomial(value, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest exponent, or `None` for the zero polynomial (minus infinity).
    pub fn top_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent, or `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// Coefficient of t^e (zero when the term is absent).
    pub fn coeff(&self, exponent: i64) -> Rational {
        self.terms
            .get(&exponent)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// The polynomial minus its leading term (zero input stays zero).
    pub fn without_leading_term(&self) -> Self {
        let mut terms = self.terms.clone();
        if let Some(top) = self.top_degree() {
            terms.remove(&top);
        }
        Self { terms }
    }

    fn insert_add(terms: &mut BTreeMap<i64, Rational>, exponent: i64, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// Exact quotient in the Laurent ring. Errors: rhs zero; or rhs does not
    /// divide self exactly ([`NumError::InexactDivision`]).
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, NumError> {
        if rhs.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Long division from the top. Monomials t^k are units, so exactness
        // in the Laurent ring is exactness of the shifted ordinary division.
        let mut remainder = self.clone();
        let mut quotient = BTreeMap::new();
        let divisor_top = rhs.top_degree().expect("rhs is nonzero");
        let divisor_lead = rhs.leading_coeff().expect("rhs is nonzero").clone();
        let low_bound =
            self.low_degree().expect("self is nonzero") - rhs.low_degree().expect("rhs is nonzero");
        while let Some(top) = remainder.top_degree() {
            let shift = top - divisor_top;
            if shift < low_bound {
                return Err(NumError::InexactDivision);
            }
            let factor = remainder
                .leading_coeff()
                .expect("remainder is nonzero")
                .checked_div(&divisor_lead)?;
            Self::insert_add(&mut quotient, shift, factor.clone());
            let correction = rhs.shift(shift) * Self::monomial(factor, 0);
            remainder = &remainder - &correction;
        }
        Ok(Self { terms: quotient })
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if idx == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                1 if mag == Rational::one() => write!(f, "t")?,
                1 => write!(f, "{mag}*t")?,
                _ if mag == Rational::one() => write!(f, "t^{e}")?,
                _ => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            LaurentPoly::insert_add(&mut terms, *e, c.clone());
        }
        LaurentPoly { terms }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            LaurentPoly::insert_add(&mut terms, *e, -c);
        }
        LaurentPoly { terms }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                LaurentPoly::insert_add(&mut terms, e1 + e2, c1 * c2);
            }
        }
        LaurentPoly { terms }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

forward_binop!(LaurentPoly, Add, add);
forward_binop!(LaurentPoly, Sub, sub);
forward_binop!(LaurentPoly, Mul, mul);

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(value: &Rational) -> Self {
        LaurentPoly::constant(value.clone())
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self, NumError> {
        self.checked_div(rhs)
    }
}
