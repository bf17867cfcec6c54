//! Exact and numerical invariants of n-simplices presented by squared edge lengths.
//!
//! A simplex on vertices 0..=n is described by the vector of its squared edge
//! lengths s_ij. This crate computes two derived families of invariants:
//!
//! * the squared volume W, via the bordered determinant formula
//!   W = (-1)^(n+1) / (2^n (n!)^2) * det M, where M is the (n+2)x(n+2) matrix
//!   with first row/column (0, 1, ..., 1) and s_ij in the interior, and
//! * the squared areas of the 2-faces, S_ijk = (1/16)(2 s_ij s_jk + 2 s_jk s_ik
//!   + 2 s_ik s_ij - s_ij^2 - s_jk^2 - s_ik^2), one per triple i < j < k.
//!
//! Everything is built around the map s -> S (the *area map*). The crate can
//!
//! * evaluate W and the area map over four scalar rings (arbitrary-precision
//!   rationals, a quadratic extension of the rationals, complex floats, and
//!   sparse Laurent polynomials) through one trait ([`Ring`]);
//! * enumerate the known solution set of the equation "all squared 2-face
//!   areas equal 3/16" ([`catalog`]), check it exactly, and tabulate W on it;
//! * form the Jacobian of the area map and decide exact rank and column-space
//!   equality questions by fraction-free elimination ([`jacobian`]);
//! * construct Laurent-polynomial edge curves along which all squared areas
//!   stay bounded while W grows, and certify degree bounds for products of
//!   designated polynomials in the areas against W ([`curves`]);
//! * count solutions of area_map(s) = S_target numerically by homotopy
//!   continuation from the catalog, and probe local uniqueness in higher
//!   dimensions by randomized least-squares iteration ([`tracker`]).
//!
//! The [`report`] module packages all of the above as named pass/fail checks;
//! the companion command-line binary exposes them as subcommands.

pub mod catalog;
pub mod curves;
pub mod index;
pub mod jacobian;
pub mod json;
pub mod linalg;
pub mod metrics;
pub mod report;
pub mod scalar;
pub mod tracker;

pub use crate::linalg::Mat;
pub use crate::metrics::{
    area_map, cm_volume_squared, gram_volume_squared, heron_area_squared, SquaredAreaVector,
    SquaredEdgeVector, VolumeSquared,
};
pub use crate::scalar::{ComplexScalar, LaurentPoly, NumError, QuadExtScalar, Rational, Ring};
