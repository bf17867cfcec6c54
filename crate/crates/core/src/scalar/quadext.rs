//! Elements a + b*sqrt(d) of a quadratic extension of the rationals.
//!
//! The discriminant d is a squarefree integer other than 0 and 1, stored per
//! value. An element is rational exactly when b = 0; such elements are
//! discriminant-agnostic — they compare equal across discriminants and
//! combine arithmetically with any d. Two operands that both have b != 0 must
//! agree on d: the checked methods report this as an error, the operator
//! impls (and hence [`Ring`]) treat it as a caller bug and panic.
//!
//! The crate works in the extension by sqrt(-15) throughout: the number
//! sqrt(-3/5), a squared edge length that appears in the equal-areas catalog,
//! normalizes to (1/5)*sqrt(-15). This is the [`DEFAULT_DISCRIMINANT`].

use super::{forward_binop, NumError, Rational, Ring};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Discriminant of the quadratic extension the catalog lives in.
pub const DEFAULT_DISCRIMINANT: i64 = -15;

/// Largest |d| accepted; keeps squarefreeness checkable by trial division.
const MAX_DISCRIMINANT_MAGNITUDE: i64 = 1_000_000_000_000;

#[derive(Clone, Eq)]
pub struct QuadExtScalar {
    a: Rational,
    b: Rational,
    d: i64,
}

fn is_squarefree(d: i64) -> bool {
    let mut m = d.unsigned_abs();
    let mut p: u64 = 2;
    while p * p <= m {
        if m.is_multiple_of(p * p) {
            return false;
        }
        while m.is_multiple_of(p) {
            m /= p;
        }
        p += 1;
    }
    true
}

fn validate_discriminant(d: i64) -> Result<(), NumError> {
    if d == 0 || d == 1 || d.abs() > MAX_DISCRIMINANT_MAGNITUDE || !is_squarefree(d) {
        return Err(NumError::InvalidDiscriminant(d));
    }
    Ok(())
}

impl QuadExtScalar {
    /// a + b*sqrt(d). Errors when d is 0, 1, not squarefree, or too large to
    /// check (|d| > 10^12).
    pub fn new(a: Rational, b: Rational, d: i64) -> Result<Self, NumError> {
        validate_discriminant(d)?;
        Ok(Self { a, b, d })
    }

    pub fn from_rational_parts(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            d: DEFAULT_DISCRIMINANT,
        }
    }

    /// Exact square root of a rational number, normalized to a squarefree
    /// discriminant: sqrt(p/q) = (m/q) * sqrt(d) where p*q = m^2 * d.
    /// A perfect square yields a rational element (b = 0); zero yields zero.
    /// Errors when |p*q| exceeds the factorization bound 10^12.
    pub fn sqrt_rational(r: &Rational) -> Result<Self, NumError> {
        use num::traits::{Signed, ToPrimitive};
        if r.is_zero() {
            return Ok(Self::from_rational_parts(Rational::zero()));
        }
        let pq = r.numer() * r.denom();
        let magnitude = pq
            .abs()
            .to_i64()
            .filter(|&v| v <= MAX_DISCRIMINANT_MAGNITUDE)
            .ok_or(NumError::InvalidDiscriminant(i64::MAX))?;
        let negative = pq < num::BigInt::from(0);
        // strip the largest square factor: |pq| = m^2 * core
        let (mut m, mut core, mut p) = (1i64, magnitude, 2i64);
        while p * p <= core {
            while core % (p * p) == 0 {
                core /= p * p;
                m *= p;
            }
            p += 1;
        }
        let b = Rational::new(m.into(), r.denom().clone()).expect("reduced denominator is nonzero");
        if core == 1 && !negative {
            return Ok(Self::from_rational_parts(b));
        }
        let d = if negative { -core } else { core };
        Self::new(Rational::zero(), b, d)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    pub fn discriminant(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value when b = 0.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }

    /// Field norm a^2 - d*b^2; zero only for the zero element, because d is
    /// not a perfect square.
    pub fn norm(&self) -> Rational {
        &(&self.a * &self.a) - &(&Rational::from_integer(self.d) * &(&self.b * &self.b))
    }

    /// Shared discriminant of two operands, if one exists.
    fn join_discriminant(&self, rhs: &Self) -> Result<i64, NumError> {
        if self.b.is_zero() {
            Ok(rhs.d)
        } else if rhs.b.is_zero() || self.d == rhs.d {
            Ok(self.d)
        } else {
            Err(NumError::MixedDiscriminants(self.d, rhs.d))
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, NumError> {
        let d = self.join_discriminant(rhs)?;
        Ok(Self {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, NumError> {
        self.checked_add(&-rhs)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, NumError> {
        let d = self.join_discriminant(rhs)?;
        let dd = Rational::from_integer(d);
        Ok(Self {
            a: &(&self.a * &rhs.a) + &(&dd * &(&self.b * &rhs.b)),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
            d,
        })
    }

    /// Multiplicative inverse: conjugate over norm.
    pub fn inverse(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let n = self.norm();
        let conj = self.conjugate();
        Ok(Self {
            a: conj.a.checked_div(&n)?,
            b: conj.b.checked_div(&n)?,
            d: self.d,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, NumError> {
        self.checked_mul(&rhs.inverse()?)
    }

    /// Embedding into the complex numbers as (re, im): for d < 0 this is
    /// a + i*b*sqrt(|d|), for d > 0 the real number a + b*sqrt(d).
    pub fn to_complex_parts(&self) -> (f64, f64) {
        let root = (self.d.abs() as f64).sqrt();
        if self.d < 0 {
            (self.a.to_f64(), self.b.to_f64() * root)
        } else {
            (self.a.to_f64() + self.b.to_f64() * root, 0.0)
        }
    }
}

impl PartialEq for QuadExtScalar {
    fn eq(&self, other: &Self) -> bool {
        // rational elements compare equal regardless of stored discriminant
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl fmt::Display for QuadExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt({})", self.b, self.d);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.a, self.b.abs(), self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl fmt::Debug for QuadExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &QuadExtScalar {
    type Output = QuadExtScalar;
    fn add(self, rhs: &QuadExtScalar) -> QuadExtScalar {
        self.checked_add(rhs)
            .expect("mixed quadratic discriminants")
    }
}

impl Sub for &QuadExtScalar {
    type Output = QuadExtScalar;
    fn sub(self, rhs: &QuadExtScalar) -> QuadExtScalar {
        self.checked_sub(rhs)
            .expect("mixed quadratic discriminants")
    }
}

impl Mul for &QuadExtScalar {
    type Output = QuadExtScalar;
    fn mul(self, rhs: &QuadExtScalar) -> QuadExtScalar {
        self.checked_mul(rhs)
            .expect("mixed quadratic discriminants")
    }
}

impl Neg for &QuadExtScalar {
    type Output = QuadExtScalar;
    fn neg(self) -> QuadExtScalar {
        QuadExtScalar {
            a: -&self.a,
            b: -&self.b,
            d: self.d,
        }
    }
}

impl Neg for QuadExtScalar {
    type Output = QuadExtScalar;
    fn neg(self) -> QuadExtScalar {
        -&self
    }
}

forward_binop!(QuadExtScalar, Add, add);
forward_binop!(QuadExtScalar, Sub, sub);
forward_binop!(QuadExtScalar, Mul, mul);

impl Ring for QuadExtScalar {
    fn zero() -> Self {
        Self::from_rational_parts(Rational::zero())
    }
    fn one() -> Self {
        Self::from_rational_parts(Rational::one())
    }
    fn is_zero(&self) -> bool {
        QuadExtScalar::is_zero(self)
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
        Self::from_rational_parts(value.clone())
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self, NumError> {
        self.checked_div(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::ratio(p, d)
    }

    #[test]
    fn conjugate_product_gives_one_minus_d() {
        // (1 + sqrt(-15)) * (1 - sqrt(-15)) = 1 - (-15) = 16
        let x = QuadExtScalar::new(q(1, 1), q(1, 1), -15).unwrap();
        let product = &x * &x.conjugate();
        assert_eq!(product.to_rational(), Some(Rational::from_integer(16)));
    }

    #[test]
    fn sqrt_of_negative_three_fifths_normalizes() {
        let r = QuadExtScalar::sqrt_rational(&q(-3, 5)).unwrap();
        assert_eq!(r.rational_part(), &Rational::zero());
        assert_eq!(r.irrational_part(), &q(1, 5));
        assert_eq!(r.discriminant(), -15);
        // and it squares back to -3/5
        let sq = &r * &r;
        assert_eq!(sq.to_rational(), Some(q(-3, 5)));
    }

    #[test]
    fn sqrt_of_perfect_square_is_rational() {
        let r = QuadExtScalar::sqrt_rational(&q(9, 4)).unwrap();
        assert_eq!(r.to_rational(), Some(q(3, 2)));
    }

    #[test]
    fn discriminant_must_be_squarefree() {
        assert_eq!(
            QuadExtScalar::new(q(1, 1), q(1, 1), 12),
            Err(NumError::InvalidDiscriminant(12))
        );
        assert!(QuadExtScalar::new(q(1, 1), q(1, 1), 0).is_err());
        assert!(QuadExtScalar::new(q(1, 1), q(1, 1), 1).is_err());
        assert!(QuadExtScalar::new(q(1, 1), q(1, 1), -4).is_err());
        assert!(QuadExtScalar::new(q(1, 1), q(1, 1), -15).is_ok());
        assert!(QuadExtScalar::new(q(1, 1), q(1, 1), 10).is_ok());
    }

    #[test]
    fn mixed_discriminants_error_in_checked_ops() {
        let x = QuadExtScalar::new(q(0, 1), q(1, 1), -15).unwrap();
        let y = QuadExtScalar::new(q(0, 1), q(1, 1), -7).unwrap();
        assert_eq!(
            x.checked_mul(&y),
            Err(NumError::MixedDiscriminants(-15, -7))
        );
        assert_eq!(
            x.checked_add(&y),
            Err(NumError::MixedDiscriminants(-15, -7))
        );
    }

    #[test]
    fn rational_elements_combine_with_any_discriminant() {
        let two = QuadExtScalar::new(q(2, 1), q(0, 1), -7).unwrap();
        let root = QuadExtScalar::new(q(0, 1), q(1, 1), -15).unwrap();
        let product = two.checked_mul(&root).unwrap();
        assert_eq!(product.discriminant(), -15);
        assert_eq!(product.irrational_part(), &q(2, 1));
        // equality of rational elements ignores the stored discriminant
        let two_other = QuadExtScalar::new(q(2, 1), q(0, 1), 10).unwrap();
        assert_eq!(two, two_other);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let x = QuadExtScalar::new(q(1, 1), q(2, 1), -15).unwrap();
        assert_eq!(
            x.checked_div(&QuadExtScalar::zero()),
            Err(NumError::DivisionByZero)
        );
    }

    #[test]
    fn inverse_times_self_is_one() {
        let x = QuadExtScalar::new(q(3, 7), q(-2, 5), -15).unwrap();
        let product = &x * &x.inverse().unwrap();
        assert_eq!(product, QuadExtScalar::one());
    }

    #[test]
    fn complex_embedding_of_catalog_root() {
        let r = QuadExtScalar::sqrt_rational(&q(-3, 5)).unwrap();
        let (re, im) = r.to_complex_parts();
        assert_eq!(re, 0.0);
        assert!((im - (3.0f64 / 5.0).sqrt()).abs() < 1e-15);
    }
}
