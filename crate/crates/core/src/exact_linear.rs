//! Exact rational scalars and dense matrix arithmetic.
//!
//! Everything downstream runs on these primitives: Cartan matrices, their
//! symmetrizations, Gram matrices of fundamental weights, and the moment
//! matrices extracted from weight systems. Ranks never exceed eight, so
//! matrices are dense, and every operation is exact. Elimination is
//! fraction-free (Bareiss) with partial pivoting, so no intermediate value is
//! ever rounded and no spurious blow-up of numerators occurs.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;

/// Exact rational scalar, kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// The integer `n` as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d` as a [`Rational`]. Panics if `d` is zero.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Values forming a vector space over the rationals.
///
/// Linear solving is generic over this trait so the same elimination code
/// runs on plain rational right-hand sides and on vectors of formal
/// character sums.
pub trait RationalVectorSpace: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
}

impl RationalVectorSpace for Rational {
    fn zero() -> Self {
        rat(0)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

/// Dense square matrix with exact rational entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    /// The `dim` by `dim` zero matrix. `dim` must be positive.
    pub fn zero(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        RationalMatrix {
            dim,
            entries: vec![rat(0); dim * dim],
        }
    }

    /// The `dim` by `dim` identity matrix.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, rat(1));
        }
        m
    }

    /// Builds a square matrix from rows; every row must have length equal to
    /// the number of rows.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(RationalMatrix { dim, entries })
    }

    /// Builds a square matrix from integer rows. Panics on a ragged input;
    /// intended for fixed tables and tests.
    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Self {
        let converted = rows
            .iter()
            .map(|row| row.iter().map(|&v| rat(v)).collect())
            .collect();
        Self::from_rows(converted).expect("rows must form a square matrix")
    }

    /// Builds a diagonal matrix from the given entries.
    pub fn diagonal(diag: &[Rational]) -> Self {
        let mut m = Self::zero(diag.len());
        for (i, v) in diag.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        RationalMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Matrix product `self * rhs`.
    pub fn mat_mul(&self, rhs: &RationalMatrix) -> Result<RationalMatrix, Error> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: rhs.dim,
            });
        }
        let n = self.dim;
        let mut out = RationalMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = rat(0);
                for k in 0..n {
                    acc += self.get(i, k) * rhs.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self * v` for any rational vector space `V`.
    pub fn apply<V: RationalVectorSpace>(&self, v: &[V]) -> Result<Vec<V>, Error> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        let mut out = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let mut acc = V::zero();
            for (j, value) in v.iter().enumerate() {
                acc = acc.add(&value.scale(self.get(i, j)));
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Solves `self * x = rhs` by fraction-free elimination with partial
    /// pivoting, followed by exact back substitution.
    pub fn solve<V: RationalVectorSpace>(&self, rhs: &[V]) -> Result<Vec<V>, Error> {
        let mut solutions = self.solve_columns(vec![rhs.to_vec()])?;
        Ok(solutions.pop().expect("one column in, one column out"))
    }

    /// Inverse matrix, computed by solving against the identity columns.
    pub fn mat_inverse(&self) -> Result<RationalMatrix, Error> {
        let n = self.dim;
        let unit_columns: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                let mut col = vec![rat(0); n];
                col[j] = rat(1);
                col
            })
            .collect();
        let solved = self.solve_columns(unit_columns)?;
        let mut out = RationalMatrix::zero(n);
        for (j, col) in solved.iter().enumerate() {
            for (i, value) in col.iter().enumerate() {
                out.set(i, j, value.clone());
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self) -> Rational {
        let n = self.dim;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut prev = rat(1);
        let mut sign = 1i64;
        for k in 0..n {
            let Some(p) = pivot_row(&a, k) else {
                return rat(0);
            };
            if p != k {
                a.swap(k, p);
                sign = -sign;
            }
            let pivot = a[k][k].clone();
            let row_k = a[k].clone();
            for row in a.iter_mut().skip(k + 1) {
                let lead = row[k].clone();
                for j in k + 1..n {
                    let next = (&pivot * &row[j] - &lead * &row_k[j]) / &prev;
                    row[j] = next;
                }
                row[k] = rat(0);
            }
            prev = pivot;
        }
        // After full Bareiss elimination the last pivot is the determinant
        // of the unpermuted matrix.
        a[n - 1][n - 1].clone() * rat(sign)
    }

    /// Exact positive-definiteness test via leading principal minors.
    ///
    /// Runs fraction-free elimination without pivoting: after step `k` the
    /// pivot equals the determinant of the leading `(k+1)` minor, and the
    /// matrix is positive definite exactly when all of these are positive.
    pub fn is_positive_definite(&self) -> Result<bool, Error> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = self.dim;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut prev = rat(1);
        for k in 0..n {
            let pivot = a[k][k].clone();
            if !pivot.is_positive() {
                return Ok(false);
            }
            let row_k = a[k].clone();
            for row in a.iter_mut().skip(k + 1) {
                let lead = row[k].clone();
                for j in k + 1..n {
                    let next = (&pivot * &row[j] - &lead * &row_k[j]) / &prev;
                    row[j] = next;
                }
                row[k] = rat(0);
            }
            prev = pivot;
        }
        Ok(true)
    }

    /// Shared elimination backend: reduces `self` to an upper triangle with
    /// the same row operations applied to every right-hand column, then back
    /// substitutes each column.
    fn solve_columns<V: RationalVectorSpace>(
        &self,
        mut cols: Vec<Vec<V>>,
    ) -> Result<Vec<Vec<V>>, Error> {
        let n = self.dim;
        for col in &cols {
            if col.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: col.len(),
                });
            }
        }
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut prev = rat(1);
        for k in 0..n {
            let p = pivot_row(&a, k).ok_or(Error::Singular)?;
            if p != k {
                a.swap(k, p);
                for col in cols.iter_mut() {
                    col.swap(k, p);
                }
            }
            let pivot = a[k][k].clone();
            let inv_prev = prev.recip();
            let row_k = a[k].clone();
            for i in k + 1..n {
                let lead = a[i][k].clone();
                for j in k + 1..n {
                    let next = (&pivot * &a[i][j] - &lead * &row_k[j]) * &inv_prev;
                    a[i][j] = next;
                }
                a[i][k] = rat(0);
                for col in cols.iter_mut() {
                    let subtrahend = col[k].scale(&lead);
                    let next = col[i].scale(&pivot).sub(&subtrahend).scale(&inv_prev);
                    col[i] = next;
                }
            }
            prev = pivot;
        }
        for col in cols.iter_mut() {
            for i in (0..n).rev() {
                let mut acc = col[i].clone();
                for j in i + 1..n {
                    acc = acc.sub(&col[j].scale(&a[i][j]));
                }
                col[i] = acc.scale(&a[i][i].recip());
            }
        }
        Ok(cols)
    }
}

/// Row index at or below `k` holding the entry of largest absolute value in
/// column `k`; ties keep the lowest index so elimination is deterministic.
fn pivot_row(a: &[Vec<Rational>], k: usize) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (r, row) in a.iter().enumerate().skip(k) {
        if Zero::is_zero(&row[k]) {
            continue;
        }
        match best {
            None => best = Some(r),
            Some(b) => {
                if row[k].abs() > a[b][k].abs() {
                    best = Some(r);
                }
            }
        }
    }
    best
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<Vec<String>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        let mut widths = vec![0usize; self.dim];
        for row in &strings {
            for (j, s) in row.iter().enumerate() {
                widths[j] = widths[j].max(s.len());
            }
        }
        for (i, row) in strings.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, s) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{s:>width$}", width = widths[j])?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix({}x{})", self.dim, self.dim)?;
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2_symmetrization() -> RationalMatrix {
        RationalMatrix::from_integer_rows(&[vec![6, -3], vec![-3, 2]])
    }

    #[test]
    fn multiply_by_identity_is_identity_map() {
        let m = RationalMatrix::from_integer_rows(&[vec![1, 2], vec![3, 4]]);
        let id = RationalMatrix::identity(2);
        assert_eq!(m.mat_mul(&id).unwrap(), m);
        assert_eq!(id.mat_mul(&m).unwrap(), m);
    }

    #[test]
    fn product_of_g2_cartan_with_its_inverse() {
        let a = RationalMatrix::from_integer_rows(&[vec![2, -1], vec![-3, 2]]);
        let b = RationalMatrix::from_integer_rows(&[vec![2, 1], vec![3, 2]]);
        assert_eq!(a.mat_mul(&b).unwrap(), RationalMatrix::identity(2));
    }

    #[test]
    fn mismatched_dimensions_are_rejected() {
        let a = RationalMatrix::identity(2);
        let b = RationalMatrix::identity(3);
        assert_eq!(
            a.mat_mul(&b),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
        assert_eq!(
            a.apply(&[rat(1)]),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn inverse_of_identity_is_identity() {
        let id = RationalMatrix::identity(3);
        assert_eq!(id.mat_inverse().unwrap(), id);
    }

    #[test]
    fn inverse_of_g2_symmetrization() {
        let inverse = g2_symmetrization().mat_inverse().unwrap();
        let expected = RationalMatrix::from_rows(vec![
            vec![frac(2, 3), rat(1)],
            vec![rat(1), rat(2)],
        ])
        .unwrap();
        assert_eq!(inverse, expected);
        let product = g2_symmetrization().mat_mul(&inverse).unwrap();
        assert_eq!(product, RationalMatrix::identity(2));
    }

    #[test]
    fn singular_matrix_cannot_be_inverted() {
        let m = RationalMatrix::from_integer_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.mat_inverse(), Err(Error::Singular));
        assert_eq!(m.solve(&[rat(1), rat(1)]), Err(Error::Singular));
    }

    #[test]
    fn solve_against_identity_returns_rhs() {
        let id = RationalMatrix::identity(3);
        let rhs = vec![rat(5), frac(-1, 2), rat(7)];
        assert_eq!(id.solve(&rhs).unwrap(), rhs);
    }

    #[test]
    fn solve_agrees_with_inverse_application() {
        let m = RationalMatrix::from_integer_rows(&[
            vec![2, -1, 0],
            vec![-1, 2, -1],
            vec![0, -2, 2],
        ]);
        let rhs = vec![rat(1), rat(0), rat(-3)];
        let solved = m.solve(&rhs).unwrap();
        let by_inverse = m.mat_inverse().unwrap().apply(&rhs).unwrap();
        assert_eq!(solved, by_inverse);
        let reconstructed = m.apply(&solved).unwrap();
        assert_eq!(reconstructed, rhs);
    }

    #[test]
    fn solve_needs_row_exchange_when_leading_pivot_vanishes() {
        let m = RationalMatrix::from_integer_rows(&[vec![0, 1], vec![1, 0]]);
        let solved = m.solve(&[rat(3), rat(4)]).unwrap();
        assert_eq!(solved, vec![rat(4), rat(3)]);
    }

    #[test]
    fn determinant_of_triangular_and_singular_matrices() {
        let m = RationalMatrix::from_integer_rows(&[vec![2, 5], vec![0, 3]]);
        assert_eq!(m.determinant(), rat(6));
        let s = RationalMatrix::from_integer_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(s.determinant(), rat(0));
        assert_eq!(g2_symmetrization().determinant(), rat(3));
    }

    #[test]
    fn positive_definiteness_of_symmetrized_cartan_data() {
        assert!(g2_symmetrization().is_positive_definite().unwrap());
        let indefinite = RationalMatrix::from_integer_rows(&[vec![1, 2], vec![2, 1]]);
        assert!(!indefinite.is_positive_definite().unwrap());
        let negative = RationalMatrix::from_integer_rows(&[vec![-1, 0], vec![0, -1]]);
        assert!(!negative.is_positive_definite().unwrap());
        let asymmetric = RationalMatrix::from_integer_rows(&[vec![1, 2], vec![0, 1]]);
        assert_eq!(asymmetric.is_positive_definite(), Err(Error::NotSymmetric));
    }

    #[test]
    fn semi_definite_matrix_is_not_positive_definite() {
        let m = RationalMatrix::from_integer_rows(&[vec![1, 1], vec![1, 1]]);
        assert!(!m.is_positive_definite().unwrap());
    }

    #[test]
    fn rational_display_uses_lowest_terms() {
        assert_eq!(frac(2, 4).to_string(), "1/2");
        assert_eq!(frac(-6, 3).to_string(), "-2");
        assert_eq!(frac(3, -6).to_string(), "-1/2");
        assert_eq!(rat(7).to_string(), "7");
    }
}
