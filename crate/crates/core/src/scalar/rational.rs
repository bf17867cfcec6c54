//! Arbitrary-precision rational numbers.
//!
//! Thin wrapper over `num`'s `BigRational` pinning down the representation
//! invariants this crate relies on: always fully reduced, denominator always
//! positive, and a canonical text form "p/q" (plain "p" when q = 1) that
//! round-trips exactly.

use super::{forward_binop, NumError, Ring};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Reduced fraction numer/denom. Errors when denom = 0.
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self, NumError> {
        if denom.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        Ok(Self(BigRational::new(numer, denom)))
    }

    /// Small-integer fraction p/q. Panics when q = 0; intended for literals.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::new(BigInt::from(p), BigInt::from(q)).expect("nonzero literal denominator")
    }

    pub fn from_integer(v: i64) -> Self {
        Self(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    /// Nearest f64 (may lose precision; infinite only for astronomically
    /// large values, which none of the algorithms here produce).
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Parse the canonical form "p/q" or "p" (optional leading sign).
    pub fn parse(text: &str) -> Result<Self, NumError> {
        let parse_int = |part: &str| -> Result<BigInt, NumError> {
            BigInt::from_str(part.trim())
                .map_err(|e| NumError::parse(text, format!("bad integer {part:?}: {e}")))
        };
        match text.split_once('/') {
            None => Ok(Self(BigRational::from_integer(parse_int(text)?))),
            Some((p, q)) => {
                let denom = parse_int(q)?;
                if denom.is_zero() {
                    return Err(NumError::parse(text, "zero denominator"));
                }
                Ok(Self(BigRational::new(parse_int(p)?, denom)))
            }
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, NumError> {
        if rhs.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        Ok(Self(&self.0 / &rhs.0))
    }

    /// Integer power with negative exponents allowed (errors on 0^negative).
    pub fn pow(&self, exp: i32) -> Result<Self, NumError> {
        if self.is_zero() && exp < 0 {
            return Err(NumError::DivisionByZero);
        }
        Ok(Self(self.0.pow(exp)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

forward_binop!(Rational, Add, add);
forward_binop!(Rational, Sub, sub);
forward_binop!(Rational, Mul, mul);

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
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
        value.clone()
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self, NumError> {
        self.checked_div(rhs)
    }
}
