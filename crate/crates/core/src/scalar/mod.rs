//! Scalar rings behind one arithmetic contract.
//!
//! Four scalar types implement [`Ring`]:
//!
//! * [`Rational`] — arbitrary-precision rationals, always reduced;
//! * [`QuadExtScalar`] — elements a + b*sqrt(d) of a quadratic extension of
//!   the rationals, with a squarefree integer d (d = -15 by default);
//! * [`ComplexScalar`] — complex numbers in f64 precision;
//! * [`LaurentPoly`] — sparse Laurent polynomials in one variable t with
//!   rational coefficients.
//!
//! Generic algorithms (face areas, bordered determinants, fraction-free
//! elimination) are written once against [`Ring`]. The trait deliberately has
//! no division method other than [`Ring::exact_div`], which must either return
//! the exact quotient or report why it does not exist; fraction-free
//! elimination only ever divides where exactness is guaranteed.

mod complex;
mod laurent;
mod quadext;
mod rational;

pub use complex::ComplexScalar;
pub use laurent::LaurentPoly;
pub use quadext::QuadExtScalar;
pub use rational::Rational;

use crate::linalg::{bareiss_det, Mat};
use thiserror::Error;

/// Errors from scalar construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exact division impossible: remainder is nonzero")]
    InexactDivision,
    #[error("operands live in different quadratic extensions (d = {0} and d = {1})")]
    MixedDiscriminants(i64, i64),
    #[error("discriminant must be a squarefree integer other than 0 and 1, got {0}")]
    InvalidDiscriminant(i64),
    #[error("value is not finite")]
    NonFinite,
    #[error("cannot parse scalar from {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

impl NumError {
    pub(crate) fn parse(input: impl Into<String>, reason: impl Into<String>) -> Self {
        NumError::Parse {
            input: input.into(),
            reason: reason.into(),
        }
    }
}

/// Common contract of the scalar rings.
///
/// `add`/`sub`/`mul`/`neg` are total. For [`QuadExtScalar`] they panic when
/// both operands carry a nonzero irrational part over *different*
/// discriminants; code that may legitimately receive such mixed operands
/// should use the type's `checked_*` methods, which report
/// [`NumError::MixedDiscriminants`] instead.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + std::fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Embed a rational constant.
    fn from_rational(value: &Rational) -> Self;

    /// Exact quotient. Errors: division by zero always; for [`LaurentPoly`]
    /// also a nonzero remainder ([`NumError::InexactDivision`]).
    fn exact_div(&self, rhs: &Self) -> Result<Self, NumError>;

    /// Determinant of a square matrix over this ring.
    ///
    /// The default is fraction-free (Bareiss) elimination, which is exact and
    /// division-safe for every exact ring here. [`ComplexScalar`] overrides it
    /// with partially pivoted floating-point elimination.
    fn det(m: Mat<Self>) -> Result<Self, NumError>
    where
        Self: Sized,
    {
        bareiss_det(m)
    }
}

/// Forward `&T op &T` implementations to the value/mixed-reference variants.
macro_rules! forward_binop {
    ($t:ty, $tr:ident, $method:ident) => {
        impl std::ops::$tr<$t> for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                std::ops::$tr::$method(&self, &rhs)
            }
        }
        impl std::ops::$tr<&$t> for $t {
            type Output = $t;
            fn $method(self, rhs: &$t) -> $t {
                std::ops::$tr::$method(&self, rhs)
            }
        }
        impl std::ops::$tr<$t> for &$t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                std::ops::$tr::$method(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn rational_strategy() -> impl Strategy<Value = Rational> {
        (-40i64..=40, 1i64..=24).prop_map(|(p, q)| Rational::ratio(p, q))
    }

    fn quadext_strategy() -> impl Strategy<Value = QuadExtScalar> {
        (rational_strategy(), rational_strategy())
            .prop_map(|(a, b)| QuadExtScalar::new(a, b, -15).unwrap())
    }

    fn laurent_strategy() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i64..=6, rational_strategy()), 0..5).prop_map(|terms| {
            let mut p = LaurentPoly::zero();
            for (e, c) in terms {
                p = &p + &LaurentPoly::monomial(c, e);
            }
            p
        })
    }

    fn complex_strategy() -> impl Strategy<Value = ComplexScalar> {
        (-50.0f64..50.0, -50.0f64..50.0).prop_map(|(re, im)| ComplexScalar::new(re, im).unwrap())
    }

    fn assert_ring_axioms_exact<R: Ring>(x: &R, y: &R, z: &R) {
        assert_eq!(x.add(y), y.add(x), "additive commutativity");
        assert_eq!(x.mul(y), y.mul(x), "multiplicative commutativity");
        assert_eq!(x.add(&y.add(z)), x.add(y).add(z), "additive associativity");
        assert_eq!(
            x.mul(&y.mul(z)),
            x.mul(y).mul(z),
            "multiplicative associativity"
        );
        assert_eq!(x.mul(&y.add(z)), x.mul(y).add(&x.mul(z)), "distributivity");
        assert_eq!(x.add(&R::zero()), x.clone(), "additive identity");
        assert_eq!(x.mul(&R::one()), x.clone(), "multiplicative identity");
        assert_eq!(x.add(&x.neg()), R::zero(), "additive inverse");
        assert_eq!(
            x.sub(y),
            x.add(&y.neg()),
            "subtraction is addition of negation"
        );
    }

    proptest! {
        #[test]
        fn rational_ring_axioms(x in rational_strategy(), y in rational_strategy(), z in rational_strategy()) {
            assert_ring_axioms_exact(&x, &y, &z);
        }

        #[test]
        fn quadext_ring_axioms(x in quadext_strategy(), y in quadext_strategy(), z in quadext_strategy()) {
            assert_ring_axioms_exact(&x, &y, &z);
        }

        #[test]
        fn laurent_ring_axioms(x in laurent_strategy(), y in laurent_strategy(), z in laurent_strategy()) {
            assert_ring_axioms_exact(&x, &y, &z);
        }

        // Floating arithmetic satisfies the axioms only approximately; check
        // them at relative tolerance 1e-12.
        #[test]
        fn complex_ring_axioms_approx(x in complex_strategy(), y in complex_strategy(), z in complex_strategy()) {
            let close = |u: &ComplexScalar, v: &ComplexScalar| {
                let scale = 1.0 + u.abs().max(v.abs());
                u.sub(v).abs() <= 1e-12 * scale
            };
            prop_assert!(close(&x.add(&y), &y.add(&x)));
            prop_assert!(close(&x.add(&y.add(&z)), &x.add(&y).add(&z)));
            prop_assert!(close(&x.mul(&y), &y.mul(&x)));
            prop_assert!(close(&x.mul(&y.mul(&z)), &x.mul(&y).mul(&z)));
            prop_assert!(close(&x.mul(&y.add(&z)), &x.mul(&y).add(&x.mul(&z))));
            prop_assert!(close(&x.add(&ComplexScalar::zero()), &x));
            prop_assert!(close(&x.mul(&ComplexScalar::one()), &x));
        }

        #[test]
        fn quadext_embeds_rational(x in rational_strategy(), y in rational_strategy()) {
            // Arithmetic on b = 0 elements must agree with plain rationals.
            let qx = QuadExtScalar::from_rational(&x);
            let qy = QuadExtScalar::from_rational(&y);
            prop_assert_eq!(qx.add(&qy), QuadExtScalar::from_rational(&(&x + &y)));
            prop_assert_eq!(qx.mul(&qy), QuadExtScalar::from_rational(&(&x * &y)));
            prop_assert_eq!(qx.sub(&qy), QuadExtScalar::from_rational(&(&x - &y)));
        }

        #[test]
        fn laurent_top_degree_of_product_adds(x in laurent_strategy(), y in laurent_strategy()) {
            let p = x.mul(&y);
            match (x.top_degree(), y.top_degree()) {
                (Some(a), Some(b)) => prop_assert_eq!(p.top_degree(), Some(a + b)),
                // zero polynomial absorbs: the product must be zero (top degree "minus infinity")
                _ => prop_assert_eq!(p.top_degree(), None),
            }
        }
    }
}
