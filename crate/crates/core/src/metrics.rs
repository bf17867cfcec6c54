//! Squared edge lengths, squared 2-face areas, and squared volume.
//!
//! A simplex on vertices 0..=n is given by its squared edge lengths s_ij,
//! stored in the canonical pair order of [`crate::index`]. Two independent
//! routes compute the squared volume W:
//!
//! * [`cm_volume_squared`] — the bordered determinant: W = (-1)^(n+1) /
//!   (2^n (n!)^2) * det M where M is (n+2)x(n+2) with first row and column
//!   (0, 1, ..., 1) and M[i+1][j+1] = s_ij (zero diagonal);
//! * [`gram_volume_squared`] — W = det G / (n!)^2 with the n x n matrix
//!   G[i][j] = (s_0i + s_0j - s_ij)/2, the inner products of edge vectors
//!   from vertex 0 when the simplex is realizable.
//!
//! The two agree as polynomial identities in the s_ij, which makes the Gram
//! route an oracle for the bordered determinant (and vice versa) over every
//! scalar ring. Squared areas come from the quadratic form
//! 16 S = 2ab + 2bc + 2ca - a^2 - b^2 - c^2 in the three squared edge lengths
//! of a 2-face; [`area_map`] assembles all of them in canonical triple order.

use crate::index;
use crate::linalg::Mat;
use crate::scalar::{NumError, Rational, Ring};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error("vector for n = {n} needs {expected} entries, got {got}")]
    WrongEntryCount {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("dimension n = {got} is too small here (need n >= {min})")]
    DimensionTooSmall { min: usize, got: usize },
}

/// Squared edge lengths of a simplex on vertices 0..=n, n >= 1, in canonical
/// pair order. Entries are unconstrained scalars: degenerate, negative, and
/// non-realizable inputs are all legal.
#[derive(Clone, PartialEq, Debug)]
pub struct SquaredEdgeVector<R> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> SquaredEdgeVector<R> {
    pub fn new(n: usize, entries: Vec<R>) -> Result<Self, MetricsError> {
        if n < 1 {
            return Err(MetricsError::DimensionTooSmall { min: 1, got: n });
        }
        let expected = index::pair_count(n);
        if entries.len() != expected {
            return Err(MetricsError::WrongEntryCount {
                n,
                expected,
                got: entries.len(),
            });
        }
        Ok(Self { n, entries })
    }

    /// All edges set to the same value.
    pub fn constant(n: usize, value: R) -> Self {
        Self::new(n, vec![value; index::pair_count(n)]).expect("constant vector is well-formed")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    /// Entry s_ij; the indices may come in either order.
    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[index::pair_position(self.n, i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.entries[index::pair_position(self.n, i, j)] = value;
    }

    pub fn map<S: Ring, F: FnMut(&R) -> S>(&self, f: F) -> SquaredEdgeVector<S> {
        SquaredEdgeVector {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn negate(&self) -> Self {
        self.map(|x| x.neg())
    }

    pub fn scale(&self, factor: &R) -> Self {
        self.map(|x| x.mul(factor))
    }

    /// Relabel vertices: vertex v of the result is vertex perm[v] of self.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(
            perm.len(),
            self.n + 1,
            "permutation must cover all vertices"
        );
        let mut seen = vec![false; self.n + 1];
        for &v in perm {
            assert!(v <= self.n && !seen[v], "not a permutation of the vertices");
            seen[v] = true;
        }
        let entries = index::pairs(self.n)
            .into_iter()
            .map(|(i, j)| self.get(perm[i], perm[j]).clone())
            .collect();
        Self { n: self.n, entries }
    }

    /// Restriction to a sub-simplex: vertex v of the result is vertex
    /// subset[v] of self. The subset must be strictly increasing, length >= 2.
    pub fn restrict(&self, subset: &[usize]) -> Self {
        assert!(
            subset.len() >= 2,
            "a sub-simplex needs at least two vertices"
        );
        assert!(
            subset.windows(2).all(|w| w[0] < w[1]) && *subset.last().unwrap() <= self.n,
            "subset must be strictly increasing vertices of the simplex"
        );
        let m = subset.len() - 1;
        let entries = index::pairs(m)
            .into_iter()
            .map(|(i, j)| self.get(subset[i], subset[j]).clone())
            .collect();
        Self { n: m, entries }
    }
}

/// Squared areas of the 2-faces, canonical triple order, n >= 2.
#[derive(Clone, PartialEq, Debug)]
pub struct SquaredAreaVector<R> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> SquaredAreaVector<R> {
    pub fn new(n: usize, entries: Vec<R>) -> Result<Self, MetricsError> {
        if n < 2 {
            return Err(MetricsError::DimensionTooSmall { min: 2, got: n });
        }
        let expected = index::triple_count(n);
        if entries.len() != expected {
            return Err(MetricsError::WrongEntryCount {
                n,
                expected,
                got: entries.len(),
            });
        }
        Ok(Self { n, entries })
    }

    pub fn constant(n: usize, value: R) -> Self {
        assert!(n >= 2, "area vectors need n >= 2");
        Self {
            n,
            entries: vec![value; index::triple_count(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    /// Entry S_ijk; the indices may come in any order.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &R {
        &self.entries[index::triple_position(self.n, i, j, k)]
    }

    pub fn map<S: Ring, F: FnMut(&R) -> S>(&self, f: F) -> SquaredAreaVector<S> {
        SquaredAreaVector {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

/// Squared volume of a simplex.
#[derive(Clone, PartialEq, Debug)]
pub struct VolumeSquared<R> {
    pub value: R,
}

/// 2ab + 2bc + 2ca - a^2 - b^2 - c^2, the quadratic form whose sixteenth is
/// the squared area of a triangle with squared edge lengths a, b, c.
pub(crate) fn heron_quadratic_form<R: Ring>(a: &R, b: &R, c: &R) -> R {
    let two = R::from_rational(&Rational::from_integer(2));
    let cross = a.mul(b).add(&b.mul(c)).add(&c.mul(a)).mul(&two);
    let squares = a.mul(a).add(&b.mul(b)).add(&c.mul(c));
    cross.sub(&squares)
}

/// Squared area of a triangle from its three squared edge lengths.
pub fn heron_area_squared<R: Ring>(a: &R, b: &R, c: &R) -> R {
    let sixteenth = R::from_rational(&Rational::ratio(1, 16));
    heron_quadratic_form(a, b, c).mul(&sixteenth)
}

/// Squared areas of all 2-faces, in canonical triple order. Requires n >= 2.
pub fn area_map<R: Ring>(s: &SquaredEdgeVector<R>) -> SquaredAreaVector<R> {
    let n = s.n();
    assert!(n >= 2, "area map needs at least three vertices");
    let entries = index::triples(n)
        .into_iter()
        .map(|(i, j, k)| heron_area_squared(s.get(i, j), s.get(j, k), s.get(i, k)))
        .collect();
    SquaredAreaVector { n, entries }
}

/// Squared volume via the bordered determinant.
pub fn cm_volume_squared<R: Ring>(s: &SquaredEdgeVector<R>) -> Result<VolumeSquared<R>, NumError> {
    let n = s.n();
    let size = n + 2;
    let mut m = Mat::filled(size, size, R::zero());
    for j in 1..size {
        m.set(0, j, R::one());
        m.set(j, 0, R::one());
    }
    for i in 0..=n {
        for j in 0..=n {
            if i != j {
                m.set(i + 1, j + 1, s.get(i, j).clone());
            }
        }
    }
    let det = R::det(m)?;
    let factor = bordered_determinant_factor(n);
    Ok(VolumeSquared {
        value: det.mul(&R::from_rational(&factor)),
    })
}

/// (-1)^(n+1) / (2^n (n!)^2)
fn bordered_determinant_factor(n: usize) -> Rational {
    let mut denom = num::bigint::BigInt::from(1) << n;
    let mut factorial = num::bigint::BigInt::from(1);
    for k in 2..=n {
        factorial *= k;
    }
    denom *= &factorial * &factorial;
    let numer = num::bigint::BigInt::from(if n.is_multiple_of(2) { -1 } else { 1 });
    Rational::new(numer, denom).expect("denominator is positive")
}

/// Squared volume via the Gram determinant of edge vectors from vertex 0.
pub fn gram_volume_squared<R: Ring>(
    s: &SquaredEdgeVector<R>,
) -> Result<VolumeSquared<R>, NumError> {
    let n = s.n();
    let half = R::from_rational(&Rational::ratio(1, 2));
    let mut g = Mat::filled(n, n, R::zero());
    for i in 1..=n {
        for j in 1..=n {
            let entry = if i == j {
                s.get(0, i).clone()
            } else {
                s.get(0, i).add(s.get(0, j)).sub(s.get(i, j)).mul(&half)
            };
            g.set(i - 1, j - 1, entry);
        }
    }
    let det = R::det(g)?;
    let mut factorial = num::bigint::BigInt::from(1);
    for k in 2..=n {
        factorial *= k;
    }
    let factor = Rational::new(1.into(), &factorial * &factorial).expect("positive denominator");
    Ok(VolumeSquared {
        value: det.mul(&R::from_rational(&factor)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ones(n: usize) -> SquaredEdgeVector<Rational> {
        SquaredEdgeVector::constant(n, Rational::one())
    }

    #[test]
    fn segment_volume_is_its_squared_length() {
        let s = SquaredEdgeVector::new(1, vec![Rational::from_integer(4)]).unwrap();
        assert_eq!(
            cm_volume_squared(&s).unwrap().value,
            Rational::from_integer(4)
        );
        assert_eq!(
            gram_volume_squared(&s).unwrap().value,
            Rational::from_integer(4)
        );
    }

    #[test]
    fn unit_triangle_squared_area() {
        let s = ones(2);
        let w = cm_volume_squared(&s).unwrap().value;
        assert_eq!(w, Rational::ratio(3, 16));
        // for n = 2 the volume *is* the area of the single 2-face
        assert_eq!(&w, area_map(&s).get(0, 1, 2));
    }

    #[test]
    fn unit_four_simplex_squared_volume() {
        assert_eq!(
            cm_volume_squared(&ones(4)).unwrap().value,
            Rational::ratio(5, 9216)
        );
    }

    #[test]
    fn heron_examples() {
        let one = Rational::one();
        assert_eq!(heron_area_squared(&one, &one, &one), Rational::ratio(3, 16));
        // degenerate: one edge of squared length 0, two equal others
        let s = Rational::ratio(7, 3);
        assert_eq!(
            heron_area_squared(&Rational::zero(), &s, &s),
            Rational::zero()
        );
        // (3, 1, 1) also gives 3/16: 2*3+2*1+2*3 - 9-1-1 = 5... check: 2*3*1+2*1*1+2*1*3 - 9 - 1 - 1 = 6+2+6-11 = 3
        assert_eq!(
            heron_area_squared(&Rational::from_integer(3), &one, &one),
            Rational::ratio(3, 16)
        );
    }

    #[test]
    fn area_map_of_unit_four_simplex() {
        let areas = area_map(&ones(4));
        assert_eq!(areas.entries().len(), 10);
        for a in areas.entries() {
            assert_eq!(a, &Rational::ratio(3, 16));
        }
    }

    #[test]
    fn restriction_picks_sub_simplex_edges() {
        let mut s = ones(4);
        s.set(1, 3, Rational::from_integer(9));
        let r = s.restrict(&[0, 1, 3, 4]);
        assert_eq!(r.n(), 3);
        assert_eq!(r.get(1, 2), &Rational::from_integer(9)); // old (1,3)
        assert_eq!(r.get(0, 3), &Rational::one()); // old (0,4)
    }

    #[test]
    fn wrong_entry_count_is_an_error() {
        assert_eq!(
            SquaredEdgeVector::new(4, vec![Rational::one(); 9]),
            Err(MetricsError::WrongEntryCount {
                n: 4,
                expected: 10,
                got: 9
            })
        );
        assert!(SquaredEdgeVector::<Rational>::new(0, vec![]).is_err());
        assert!(SquaredAreaVector::<Rational>::new(1, vec![]).is_err());
    }

    fn rational_entry() -> impl Strategy<Value = Rational> {
        (-12i64..=12, 1i64..=8).prop_map(|(p, q)| Rational::ratio(p, q))
    }

    fn edge_vector(n: usize) -> impl Strategy<Value = SquaredEdgeVector<Rational>> {
        proptest::collection::vec(rational_entry(), crate::index::pair_count(n))
            .prop_map(move |entries| SquaredEdgeVector::new(n, entries).unwrap())
    }

    proptest! {
        // The two volume routes agree exactly, for every dimension in range.
        #[test]
        fn bordered_and_gram_volumes_agree(n in 1usize..=5, seed in proptest::collection::vec((-12i64..=12, 1i64..=8), 21)) {
            let entries: Vec<Rational> = seed.into_iter().take(crate::index::pair_count(n))
                .map(|(p, q)| Rational::ratio(p, q)).collect();
            let s = SquaredEdgeVector::new(n, entries).unwrap();
            prop_assert_eq!(cm_volume_squared(&s).unwrap().value, gram_volume_squared(&s).unwrap().value);
        }

        // Relabeling vertices permutes areas accordingly.
        #[test]
        fn area_map_is_permutation_equivariant(s in edge_vector(4), rot in 0usize..5) {
            let perm: Vec<usize> = (0..=4).map(|v| (v + rot) % 5).collect();
            let direct = area_map(&s.relabel(&perm));
            let reference = area_map(&s);
            for (i, j, k) in crate::index::triples(4) {
                prop_assert_eq!(direct.get(i, j, k), reference.get(perm[i], perm[j], perm[k]));
            }
        }

        // Scaling: s -> c*s multiplies areas by c^2 and W by c^n.
        #[test]
        fn scaling_laws(s in edge_vector(3), c in (-6i64..=6).prop_filter("nonzero", |c| *c != 0)) {
            let factor = Rational::from_integer(c);
            let scaled = s.scale(&factor);
            let c2 = &factor * &factor;
            let areas = area_map(&s);
            let scaled_areas = area_map(&scaled);
            for (a, b) in scaled_areas.entries().iter().zip(areas.entries()) {
                prop_assert_eq!(a.clone(), b * &c2);
            }
            let cn = factor.pow(3).unwrap();
            let w = cm_volume_squared(&s).unwrap().value;
            let w_scaled = cm_volume_squared(&scaled).unwrap().value;
            prop_assert_eq!(w_scaled, &w * &cn);
        }

        // Areas only see squares of edge entries' combinations: negating the
        // whole edge vector leaves every squared area unchanged.
        #[test]
        fn area_map_is_even(s in edge_vector(4)) {
            prop_assert_eq!(area_map(&s.negate()), area_map(&s));
        }
    }
}
