//! The differential of the area map and comparisons of its image.
//!
//! The area map sends the C(n+1, 2) squared edge lengths to the C(n+1, 3)
//! squared 2-face areas. Its Jacobian matrix at a point s has one row per
//! triple (i, j, k) and one column per pair, in canonical order; the entry in
//! row (i, j, k) and column (i, j) is (s_jk + s_ik - s_ij) / 8, and columns
//! for pairs outside the triple are zero.
//!
//! Ranks are computed exactly. Two Jacobians of full column rank have equal
//! column spans exactly when stacking them side by side does not raise the
//! rank; [`images_equal`] implements that test. At catalog points the column
//! span turns out to remember exactly the pairing that built the point —
//! same pairing (either sign) gives the same span, different pairings give
//! different spans — and [`image_equality_sweep`] verifies this over every
//! pair of pairing points, exhaustively for one dimension or sampled for
//! larger ones.

use crate::catalog::{self, CatalogError, CatalogPoint};
use crate::index;
use crate::linalg::{ExactScalar, Mat};
use crate::metrics::SquaredEdgeVector;
use crate::scalar::{NumError, Rational, Ring};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JacobianError {
    #[error("matrices have different shapes: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("matrix does not have full column rank (rank {rank} of {cols})")]
    RankDeficient { rank: usize, cols: usize },
    #[error("image comparison needs n >= 5: for n = {0} the Jacobian is square and full-rank, so every column span is the whole space")]
    SpanNotDiscriminating(usize),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Num(#[from] NumError),
}

/// Jacobian matrix of the area map at s: C(n+1,3) rows by C(n+1,2) columns.
pub fn jacobian<R: Ring>(s: &SquaredEdgeVector<R>) -> Mat<R> {
    let n = s.n();
    assert!(n >= 2, "the area map needs at least three vertices");
    let eighth = R::from_rational(&Rational::ratio(1, 8));
    let mut m = Mat::filled(index::triple_count(n), index::pair_count(n), R::zero());
    for (row, (i, j, k)) in index::triples(n).into_iter().enumerate() {
        // derivative with respect to each of the triangle's three edges:
        // (sum of the other two squared lengths - this one) / 8
        for (a, b, v) in [(i, j, k), (j, k, i), (i, k, j)] {
            let value = s.get(a, v).add(s.get(b, v)).sub(s.get(a, b)).mul(&eighth);
            m.set(row, index::pair_position(n, a, b), value);
        }
    }
    m
}

/// Exact rank of the Jacobian at s.
pub fn jacobian_rank<R: ExactScalar>(s: &SquaredEdgeVector<R>) -> usize {
    R::rank(&jacobian(s))
}

/// Do two full-column-rank matrices of the same shape span the same column
/// space? Exact: ranks are computed over the scalar ring itself.
pub fn images_equal<R: ExactScalar>(m1: &Mat<R>, m2: &Mat<R>) -> Result<bool, JacobianError> {
    if m1.rows() != m2.rows() || m1.cols() != m2.cols() {
        return Err(JacobianError::ShapeMismatch(
            m1.rows(),
            m1.cols(),
            m2.rows(),
            m2.cols(),
        ));
    }
    let cols = m1.cols();
    for m in [m1, m2] {
        let rank = R::rank(m);
        if rank != cols {
            return Err(JacobianError::RankDeficient { rank, cols });
        }
    }
    Ok(R::rank(&m1.hstack(m2)) == cols)
}

/// Result of comparing Jacobian images across catalog pairing points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageSweep {
    pub n: usize,
    pub points: usize,
    pub pairs_checked: usize,
    /// pairs where span equality disagreed with pairing equality
    pub mismatches: usize,
    /// points whose Jacobian failed to have full column rank
    pub rank_failures: usize,
    pub exhaustive: bool,
}

impl ImageSweep {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.rank_failures == 0
    }
}

/// Compare Jacobian column spans at the pairing points of the catalog for
/// dimension n against the prediction that two points span the same image
/// exactly when they come from the same pairing.
///
/// With `sample_pairs = None` every unordered pair of points is checked.
/// With `Some(k)`, all same-pairing pairs (the two signs of each pairing)
/// plus k pseudo-randomly chosen other pairs are checked, deterministically
/// from `seed`.
pub fn image_equality_sweep(
    n: usize,
    sample_pairs: Option<usize>,
    seed: u64,
) -> Result<ImageSweep, JacobianError> {
    if n < 5 {
        return Err(JacobianError::SpanNotDiscriminating(n));
    }
    let points: Vec<CatalogPoint> = catalog::build_catalog(n)?
        .into_iter()
        .filter(|p| matches!(p, CatalogPoint::Pairing { .. }))
        .collect();
    let jacobians: Vec<Mat<Rational>> = points
        .par_iter()
        .map(|p| match p {
            CatalogPoint::Pairing { edges, .. } => jacobian(edges),
            CatalogPoint::Cycle { .. } => unreachable!("cycle points were filtered out"),
        })
        .collect();

    let cols = index::pair_count(n);
    let rank_failures = jacobians
        .par_iter()
        .filter(|m| Rational::rank(m) != cols)
        .count();

    let pairing_label = |p: &CatalogPoint| match p {
        CatalogPoint::Pairing { pairing, .. } => pairing.label(),
        CatalogPoint::Cycle { .. } => unreachable!("cycle points were filtered out"),
    };

    let mut todo: Vec<(usize, usize)> = Vec::new();
    match sample_pairs {
        None => {
            for a in 0..points.len() {
                for b in (a + 1)..points.len() {
                    todo.push((a, b));
                }
            }
        }
        Some(k) => {
            // all same-pairing pairs, so the "equal spans" direction is
            // exercised for every pairing...
            for a in 0..points.len() {
                for b in (a + 1)..points.len() {
                    if pairing_label(&points[a]) == pairing_label(&points[b]) {
                        todo.push((a, b));
                    }
                }
            }
            // ...plus a deterministic sample of the rest
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let mut rest: Vec<(usize, usize)> = Vec::new();
            for a in 0..points.len() {
                for b in (a + 1)..points.len() {
                    if pairing_label(&points[a]) != pairing_label(&points[b]) {
                        rest.push((a, b));
                    }
                }
            }
            rest.shuffle(&mut rng);
            todo.extend(rest.into_iter().take(k));
        }
    }

    let mismatches = todo
        .par_iter()
        .map(|&(a, b)| {
            let same_pairing = pairing_label(&points[a]) == pairing_label(&points[b]);
            match images_equal(&jacobians[a], &jacobians[b]) {
                Ok(equal) => usize::from(equal != same_pairing),
                Err(_) => 1,
            }
        })
        .sum();

    Ok(ImageSweep {
        n,
        points: points.len(),
        pairs_checked: todo.len(),
        mismatches,
        rank_failures,
        exhaustive: sample_pairs.is_none(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_catalog, five_cycles, PartialPairing, Sign};
    use crate::scalar::QuadExtScalar;

    #[test]
    fn jacobian_shape_and_sparsity() {
        let s = SquaredEdgeVector::constant(4, Rational::one());
        let m = jacobian(&s);
        assert_eq!((m.rows(), m.cols()), (10, 10));
        for (row, (i, j, k)) in index::triples(4).into_iter().enumerate() {
            for (col, (a, b)) in index::pairs(4).into_iter().enumerate() {
                let in_triple = [i, j, k].contains(&a) && [i, j, k].contains(&b);
                assert_eq!(!m.get(row, col).is_zero(), in_triple);
            }
        }
    }

    #[test]
    fn jacobian_entry_formula() {
        // squared edges chosen so each derivative is distinct
        let mut s = SquaredEdgeVector::constant(2, Rational::zero());
        s.set(0, 1, Rational::from_integer(2));
        s.set(1, 2, Rational::from_integer(10));
        s.set(0, 2, Rational::from_integer(30));
        let m = jacobian(&s);
        // d/ds_01 = (s_12 + s_02 - s_01)/8 = (10 + 30 - 2)/8
        assert_eq!(m.get(0, 0), &Rational::ratio(38, 8));
        // d/ds_02 = (s_01 + s_12 - s_02)/8 = (2 + 10 - 30)/8
        assert_eq!(m.get(0, 1), &Rational::ratio(-18, 8));
        // d/ds_12 = (s_01 + s_02 - s_12)/8 = (2 + 30 - 10)/8
        assert_eq!(m.get(0, 2), &Rational::ratio(22, 8));
    }

    #[test]
    fn full_rank_at_every_catalog_point_n4() {
        for point in build_catalog(4).unwrap() {
            let rank = match &point {
                CatalogPoint::Pairing { edges, .. } => jacobian_rank(edges),
                CatalogPoint::Cycle { edges, .. } => jacobian_rank(edges),
            };
            assert_eq!(rank, 10, "{}", point.label());
        }
    }

    #[test]
    fn full_rank_at_cycle_points_over_the_extension() {
        for cycle in five_cycles() {
            let point = CatalogPoint::from_cycle(cycle);
            let CatalogPoint::Cycle { edges, .. } = &point else {
                unreachable!()
            };
            assert_eq!(QuadExtScalar::rank(&jacobian(edges)), 10);
        }
    }

    #[test]
    fn same_pairing_opposite_signs_share_an_image() {
        let pairing = PartialPairing::parse(5, "0-1,2-3").unwrap();
        let plus = CatalogPoint::from_pairing(pairing.clone(), Sign::Plus);
        let minus = CatalogPoint::from_pairing(pairing, Sign::Minus);
        let (CatalogPoint::Pairing { edges: e1, .. }, CatalogPoint::Pairing { edges: e2, .. }) =
            (&plus, &minus)
        else {
            unreachable!()
        };
        assert!(images_equal(&jacobian(e1), &jacobian(e2)).unwrap());
    }

    #[test]
    fn different_pairings_have_different_images() {
        let p1 = PartialPairing::parse(5, "0-1").unwrap();
        let p2 = PartialPairing::parse(5, "2-3").unwrap();
        let a = CatalogPoint::from_pairing(p1, Sign::Plus);
        let b = CatalogPoint::from_pairing(p2, Sign::Plus);
        let (CatalogPoint::Pairing { edges: e1, .. }, CatalogPoint::Pairing { edges: e2, .. }) =
            (&a, &b)
        else {
            unreachable!()
        };
        assert!(!images_equal(&jacobian(e1), &jacobian(e2)).unwrap());
    }

    #[test]
    fn rank_deficient_inputs_are_reported() {
        let z = Mat::filled(3, 2, Rational::zero());
        assert_eq!(
            images_equal(&z, &z),
            Err(JacobianError::RankDeficient { rank: 0, cols: 2 })
        );
        let tall = Mat::filled(4, 2, Rational::one());
        let wide = Mat::filled(4, 3, Rational::one());
        assert!(matches!(
            images_equal(&tall, &wide),
            Err(JacobianError::ShapeMismatch(4, 2, 4, 3))
        ));
    }

    #[test]
    fn sampled_sweep_at_n5_passes() {
        // all 76 sign-flip pairs plus 30 sampled cross-pairing pairs
        let sweep = image_equality_sweep(5, Some(30), 0).unwrap();
        assert_eq!(sweep.points, 152);
        assert_eq!(sweep.pairs_checked, 76 + 30);
        assert!(!sweep.exhaustive);
        assert!(sweep.passed(), "{sweep:?}");
    }

    #[test]
    fn square_jacobians_cannot_be_compared_by_span() {
        assert_eq!(
            image_equality_sweep(4, None, 0),
            Err(JacobianError::SpanNotDiscriminating(4))
        );
    }
}
