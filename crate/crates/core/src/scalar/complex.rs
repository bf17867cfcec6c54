//! Complex numbers in f64 precision.
//!
//! Wrapper over `num`'s `Complex64` that rejects non-finite components at
//! construction and fixes the crate's numeric comparison conventions:
//! `PartialEq` is exact (bitwise on the components), while zero tests inside
//! generic algorithms and the [`ComplexScalar::approx_eq`] helper use an
//! absolute tolerance, [`DEFAULT_TOLERANCE`] unless a caller supplies one.

use super::{forward_binop, NumError, Rational, Ring};
use crate::linalg::Mat;
use num::complex::Complex64;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Absolute tolerance for zero/equality tests where none is supplied.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct ComplexScalar(pub Complex64);

impl ComplexScalar {
    /// Errors when either component is NaN or infinite.
    pub fn new(re: f64, im: f64) -> Result<Self, NumError> {
        if !re.is_finite() || !im.is_finite() {
            return Err(NumError::NonFinite);
        }
        Ok(Self(Complex64::new(re, im)))
    }

    pub fn from_f64(re: f64) -> Result<Self, NumError> {
        Self::new(re, 0.0)
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }

    pub fn abs(&self) -> f64 {
        self.0.norm()
    }

    pub fn is_finite(&self) -> bool {
        self.0.re.is_finite() && self.0.im.is_finite()
    }

    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        (self.0 - rhs.0).norm() <= tol
    }

    pub fn zero() -> Self {
        Self(Complex64::new(0.0, 0.0))
    }

    pub fn one() -> Self {
        Self(Complex64::new(1.0, 0.0))
    }
}

impl From<Complex64> for ComplexScalar {
    fn from(z: Complex64) -> Self {
        Self(z)
    }
}

impl fmt::Display for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.im >= 0.0 {
            write!(f, "{}+{}i", self.0.re, self.0.im)
        } else {
            write!(f, "{}{}i", self.0.re, self.0.im)
        }
    }
}

impl Add for &ComplexScalar {
    type Output = ComplexScalar;
    fn add(self, rhs: &ComplexScalar) -> ComplexScalar {
        ComplexScalar(self.0 + rhs.0)
    }
}

impl Sub for &ComplexScalar {
    type Output = ComplexScalar;
    fn sub(self, rhs: &ComplexScalar) -> ComplexScalar {
        ComplexScalar(self.0 - rhs.0)
    }
}

impl Mul for &ComplexScalar {
    type Output = ComplexScalar;
    fn mul(self, rhs: &ComplexScalar) -> ComplexScalar {
        ComplexScalar(self.0 * rhs.0)
    }
}

impl Neg for &ComplexScalar {
    type Output = ComplexScalar;
    fn neg(self) -> ComplexScalar {
        ComplexScalar(-self.0)
    }
}

impl Neg for ComplexScalar {
    type Output = ComplexScalar;
    fn neg(self) -> ComplexScalar {
        ComplexScalar(-self.0)
    }
}

forward_binop!(ComplexScalar, Add, add);
forward_binop!(ComplexScalar, Sub, sub);
forward_binop!(ComplexScalar, Mul, mul);

impl Ring for ComplexScalar {
    fn zero() -> Self {
        ComplexScalar::zero()
    }
    fn one() -> Self {
        ComplexScalar::one()
    }
    fn is_zero(&self) -> bool {
        self.abs() <= DEFAULT_TOLERANCE
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
        ComplexScalar(Complex64::new(value.to_f64(), 0.0))
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self, NumError> {
        if Ring::is_zero(rhs) {
            return Err(NumError::DivisionByZero);
        }
        Ok(ComplexScalar(self.0 / rhs.0))
    }

    /// Floating determinants use partially pivoted elimination; fraction-free
    /// elimination is numerically unstable here.
    fn det(m: Mat<Self>) -> Result<Self, NumError> {
        let n = m.rows();
        assert_eq!(n, m.cols(), "determinant requires a square matrix");
        let mut a: Vec<Complex64> = m.into_data().into_iter().map(|z| z.0).collect();
        let mut sign = Complex64::new(1.0, 0.0);
        for k in 0..n {
            let (mut pivot_row, mut best) = (k, a[k * n + k].norm());
            for r in (k + 1)..n {
                let mag = a[r * n + k].norm();
                if mag > best {
                    pivot_row = r;
                    best = mag;
                }
            }
            if best == 0.0 {
                return Ok(ComplexScalar::zero());
            }
            if pivot_row != k {
                for j in 0..n {
                    a.swap(k * n + j, pivot_row * n + j);
                }
                sign = -sign;
            }
            let pivot = a[k * n + k];
            for r in (k + 1)..n {
                let factor = a[r * n + k] / pivot;
                for j in k..n {
                    let sub = factor * a[k * n + j];
                    a[r * n + j] -= sub;
                }
            }
        }
        let mut det = sign;
        for k in 0..n {
            det *= a[k * n + k];
        }
        if !det.re.is_finite() || !det.im.is_finite() {
            return Err(NumError::NonFinite);
        }
        Ok(ComplexScalar(det))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite_components() {
        assert_eq!(ComplexScalar::new(f64::NAN, 0.0), Err(NumError::NonFinite));
        assert_eq!(
            ComplexScalar::new(0.0, f64::INFINITY),
            Err(NumError::NonFinite)
        );
    }

    #[test]
    fn division() {
        let x = ComplexScalar::new(1.0, 2.0).unwrap();
        let y = ComplexScalar::new(3.0, -1.0).unwrap();
        let q = x.exact_div(&y).unwrap();
        let back = q * y;
        assert!(back.approx_eq(&x, 1e-14));
        assert_eq!(
            x.exact_div(&ComplexScalar::zero()),
            Err(NumError::DivisionByZero)
        );
    }

    #[test]
    fn zero_test_uses_default_tolerance() {
        assert!(Ring::is_zero(&ComplexScalar::new(1e-12, -1e-12).unwrap()));
        assert!(!Ring::is_zero(&ComplexScalar::new(1e-9, 0.0).unwrap()));
    }

    #[test]
    fn determinant_of_known_matrix() {
        // det [[1, 2], [3, 4]] = -2
        let m = Mat::from_rows(vec![
            vec![
                ComplexScalar::from_f64(1.0).unwrap(),
                ComplexScalar::from_f64(2.0).unwrap(),
            ],
            vec![
                ComplexScalar::from_f64(3.0).unwrap(),
                ComplexScalar::from_f64(4.0).unwrap(),
            ],
        ]);
        let d = <ComplexScalar as Ring>::det(m).unwrap();
        assert!(d.approx_eq(&ComplexScalar::from_f64(-2.0).unwrap(), 1e-12));
    }

    #[test]
    fn determinant_of_singular_matrix_is_zero() {
        let one = ComplexScalar::one();
        let m = Mat::from_rows(vec![vec![one, one], vec![one, one]]);
        let d = <ComplexScalar as Ring>::det(m).unwrap();
        assert_eq!(d.abs(), 0.0);
    }
}
