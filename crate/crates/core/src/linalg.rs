//! Dense matrices over a scalar ring, with fraction-free exact elimination.
//!
//! Determinants and ranks over the exact rings use the Bareiss scheme: the
//! one-step update m[i][j] <- (m[i][j]*p - m[i][k]*m[k][j]) / p_prev, whose
//! divisions are exact because every intermediate entry is a minor of the
//! original matrix. No magnitude comparisons are needed, only zero tests, so
//! the same code runs over rationals, quadratic extensions, and Laurent
//! polynomials. Rank computations over the rationals take a fast path through
//! scaled i128 integers (falling back to big integers on overflow), which is
//! what keeps the exhaustive Jacobian-image sweeps cheap.

use crate::scalar::{NumError, Rational, Ring};
use num::bigint::BigInt;
use num::traits::{ToPrimitive, Zero};

/// Row-major rectangular matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Clone> Mat<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "all rows must have equal length");
            data.extend(row);
        }
        Self {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn filled(rows: usize, cols: usize, value: R) -> Self {
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R] {
        assert!(i < self.rows, "row index out of bounds");
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// [self | other] side by side; the row counts must match.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack requires equal row counts");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Self {
            rows: self.rows,
            cols,
            data,
        }
    }

    pub fn map<S, F: FnMut(&R) -> S>(&self, f: F) -> Mat<S> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn into_data(self) -> Vec<R> {
        self.data
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

/// Exact determinant by fraction-free elimination with row pivoting.
pub fn bareiss_det<R: Ring>(mut m: Mat<R>) -> Result<R, NumError> {
    let n = m.rows();
    assert_eq!(n, m.cols(), "determinant requires a square matrix");
    if n == 0 {
        return Ok(R::one());
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        let Some(pivot_row) = (k..n).find(|&r| !m.get(r, k).is_zero()) else {
            return Ok(R::zero());
        };
        if pivot_row != k {
            m.swap_rows(pivot_row, k);
            negate = !negate;
        }
        let pivot = m.get(k, k).clone();
        for i in (k + 1)..n {
            let lead = m.get(i, k).clone();
            for j in (k + 1)..n {
                let num = m.get(i, j).mul(&pivot).sub(&lead.mul(m.get(k, j)));
                m.set(i, j, num.exact_div(&prev)?);
            }
        }
        prev = pivot;
    }
    let det = m.get(n - 1, n - 1).clone();
    Ok(if negate { det.neg() } else { det })
}

/// Exact rank by fraction-free elimination with full pivoting.
pub fn bareiss_rank<R: Ring>(mut m: Mat<R>) -> Result<usize, NumError> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = R::one();
    let steps = rows.min(cols);
    for step in 0..steps {
        let pivot = (step..rows)
            .flat_map(|r| (step..cols).map(move |c| (r, c)))
            .find(|&(r, c)| !m.get(r, c).is_zero());
        let Some((pr, pc)) = pivot else {
            return Ok(step);
        };
        m.swap_rows(pr, step);
        m.swap_cols(pc, step);
        let pivot = m.get(step, step).clone();
        for i in (step + 1)..rows {
            let lead = m.get(i, step).clone();
            for j in (step + 1)..cols {
                let num = m.get(i, j).mul(&pivot).sub(&lead.mul(m.get(step, j)));
                m.set(i, j, num.exact_div(&prev)?);
            }
        }
        prev = pivot;
    }
    Ok(steps)
}

/// Scalars over which exact rank computation is available.
pub trait ExactScalar: Ring {
    fn rank(m: &Mat<Self>) -> usize {
        bareiss_rank(m.clone()).expect("fraction-free elimination is exact over this scalar")
    }
}

impl ExactScalar for Rational {
    fn rank(m: &Mat<Self>) -> usize {
        rank_rational(m)
    }
}

impl ExactScalar for crate::scalar::QuadExtScalar {}
impl ExactScalar for crate::scalar::LaurentPoly {}

/// Rank of a rational matrix via row scaling to integers.
pub fn rank_rational(m: &Mat<Rational>) -> usize {
    // scale each row by the lcm of its denominators (rank is unchanged)
    let mut int_rows: Vec<Vec<BigInt>> = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut lcm = BigInt::from(1);
        for x in m.row(i) {
            lcm = num::integer::lcm(lcm, x.denom().clone());
        }
        int_rows.push(
            m.row(i)
                .iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect(),
        );
    }
    if let Some(small) = int_rows
        .iter()
        .map(|row| row.iter().map(BigInt::to_i128).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()
    {
        if let Some(rank) = rank_i128(small) {
            return rank;
        }
    }
    rank_bigint(int_rows)
}

/// Fraction-free rank over i128; `None` when an intermediate value overflows.
fn rank_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let steps = rows.min(cols);
    for step in 0..steps {
        let pivot = (step..rows)
            .flat_map(|r| (step..cols).map(move |c| (r, c)))
            .find(|&(r, c)| m[r][c] != 0);
        let Some((pr, pc)) = pivot else {
            return Some(step);
        };
        m.swap(pr, step);
        if pc != step {
            for row in m.iter_mut() {
                row.swap(pc, step);
            }
        }
        let (top, rest) = m.split_at_mut(step + 1);
        let pivot_row = &top[step];
        let p = pivot_row[step];
        for row in rest.iter_mut() {
            let lead = row[step];
            for (x, px) in row[step + 1..].iter_mut().zip(&pivot_row[step + 1..]) {
                let term1 = x.checked_mul(p)?;
                let term2 = lead.checked_mul(*px)?;
                // division by the previous pivot is exact
                *x = term1.checked_sub(term2)? / prev;
            }
        }
        prev = p;
    }
    Some(steps)
}

fn rank_bigint(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let steps = rows.min(cols);
    for step in 0..steps {
        let pivot = (step..rows)
            .flat_map(|r| (step..cols).map(move |c| (r, c)))
            .find(|&(r, c)| !m[r][c].is_zero());
        let Some((pr, pc)) = pivot else {
            return step;
        };
        m.swap(pr, step);
        if pc != step {
            for row in m.iter_mut() {
                row.swap(pc, step);
            }
        }
        let (top, rest) = m.split_at_mut(step + 1);
        let pivot_row = &top[step];
        let p = pivot_row[step].clone();
        for row in rest.iter_mut() {
            let lead = row[step].clone();
            for (x, px) in row[step + 1..].iter_mut().zip(&pivot_row[step + 1..]) {
                let num = &*x * &p - &lead * px;
                *x = num / &prev;
            }
        }
        prev = p;
    }
    steps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rmat(rows: Vec<Vec<i64>>) -> Mat<Rational> {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Rational::from_integer).collect())
                .collect(),
        )
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(
            bareiss_det(rmat(vec![vec![1, 2], vec![3, 4]])).unwrap(),
            Rational::from_integer(-2)
        );
        // needs a row swap: leading zero pivot
        assert_eq!(
            bareiss_det(rmat(vec![vec![0, 1], vec![1, 0]])).unwrap(),
            Rational::from_integer(-1)
        );
        assert_eq!(
            bareiss_det(rmat(vec![vec![1, 2], vec![2, 4]])).unwrap(),
            Rational::zero()
        );
        // 4x4 all-ones off the diagonal, zero diagonal: det = -3
        let m = rmat(vec![
            vec![0, 1, 1, 1],
            vec![1, 0, 1, 1],
            vec![1, 1, 0, 1],
            vec![1, 1, 1, 0],
        ]);
        assert_eq!(bareiss_det(m).unwrap(), Rational::from_integer(-3));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_rational(&rmat(vec![vec![1, 2], vec![2, 4]])), 1);
        assert_eq!(rank_rational(&rmat(vec![vec![1, 2], vec![3, 4]])), 2);
        assert_eq!(rank_rational(&rmat(vec![vec![0, 0, 0], vec![0, 0, 0]])), 0);
        // wide matrix with dependent third row
        let m = rmat(vec![vec![1, 0, 2, 3], vec![0, 1, 4, 5], vec![1, 1, 6, 8]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(bareiss_rank(m).unwrap(), 2);
    }

    #[test]
    fn fast_and_generic_rank_agree_on_fractional_entries() {
        let m = Mat::from_rows(vec![
            vec![
                Rational::ratio(1, 2),
                Rational::ratio(1, 3),
                Rational::ratio(1, 7),
            ],
            vec![
                Rational::ratio(3, 2),
                Rational::ratio(1, 1),
                Rational::ratio(3, 7),
            ],
            vec![
                Rational::ratio(2, 5),
                Rational::ratio(1, 5),
                Rational::ratio(1, 5),
            ],
        ]);
        assert_eq!(rank_rational(&m), bareiss_rank(m.clone()).unwrap());
    }

    #[test]
    fn bigint_fallback_matches_on_large_entries() {
        // entries big enough that the i128 fraction-free updates overflow
        let huge = i128::MAX / 4;
        let m = Mat::from_rows(vec![
            vec![
                Rational::new(BigInt::from(huge), 1.into()).unwrap(),
                Rational::new(BigInt::from(huge - 1), 1.into()).unwrap(),
                Rational::from_integer(1),
            ],
            vec![
                Rational::new(BigInt::from(huge - 2), 1.into()).unwrap(),
                Rational::new(BigInt::from(huge - 3), 1.into()).unwrap(),
                Rational::from_integer(2),
            ],
            vec![
                Rational::from_integer(5),
                Rational::from_integer(7),
                Rational::from_integer(11),
            ],
        ]);
        assert_eq!(rank_rational(&m), bareiss_rank(m.clone()).unwrap());
    }

    #[test]
    fn hstack_concatenates_columns() {
        let a = rmat(vec![vec![1, 2], vec![3, 4]]);
        let b = rmat(vec![vec![5], vec![6]]);
        let c = a.hstack(&b);
        assert_eq!(c.cols(), 3);
        assert_eq!(c.get(1, 2), &Rational::from_integer(6));
    }

    #[test]
    #[should_panic(expected = "square")]
    fn determinant_rejects_rectangular_input() {
        let _ = bareiss_det(rmat(vec![vec![1, 2, 3], vec![4, 5, 6]]));
    }
}
