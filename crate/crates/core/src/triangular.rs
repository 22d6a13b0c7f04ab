//! Packed upper-triangular matrices.
//!
//! Entries on or above the diagonal are stored row-major in a single vector
//! of length `dim * (dim + 1) / 2`; row `i` starts at offset
//! `i * dim - i * (i - 1) / 2` and holds columns `i..dim`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UpperTriangular {
    dim: usize,
    packed: Vec<Rational>,
}

/// Number of stored entries for a side of `dim`.
pub const fn packed_len(dim: usize) -> usize {
    dim * (dim + 1) / 2
}

/// Position of `(row, col)` in the packed vector, `None` below the diagonal.
pub fn packed_index(dim: usize, row: usize, col: usize) -> Option<usize> {
    if row > col || col >= dim {
        return None;
    }
    Some(row * dim - row * row.saturating_sub(1) / 2 + (col - row))
}

impl UpperTriangular {
    pub fn zeros(dim: usize) -> Self {
        UpperTriangular {
            dim,
            packed: vec![Rational::zero(); packed_len(dim)],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Builds from `f(row, col)`, called only for `row <= col`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut packed = Vec::with_capacity(packed_len(dim));
        for i in 0..dim {
            for j in i..dim {
                packed.push(f(i, j));
            }
        }
        UpperTriangular { dim, packed }
    }

    /// Builds from columns; `columns[j]` must have length `dim` with zeros
    /// below row `j`.
    pub fn from_columns(columns: &[Vec<Rational>]) -> Result<Self> {
        let dim = columns.len();
        for (j, col) in columns.iter().enumerate() {
            if col.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: col.len(),
                });
            }
            if let Some(i) = (j + 1..dim).find(|&i| !col[i].is_zero()) {
                return Err(Error::NotUpperTriangular { row: i, col: j });
            }
        }
        Ok(Self::from_fn(dim, |i, j| columns[j][i].clone()))
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Result<Self> {
        let dim = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            if let Some(j) = (0..i).find(|&j| !row[j].is_zero()) {
                return Err(Error::NotUpperTriangular { row: i, col: j });
            }
        }
        Ok(Self::from_fn(dim, |i, j| rows[i][j].clone()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn packed(&self) -> &[Rational] {
        &self.packed
    }

    /// Stored entry, `None` below the diagonal or out of bounds.
    pub fn get(&self, row: usize, col: usize) -> Option<&Rational> {
        packed_index(self.dim, row, col).map(|p| &self.packed[p])
    }

    /// Logical entry; reads zero below the diagonal.
    pub fn entry(&self, row: usize, col: usize) -> Rational {
        self.get(row, col).cloned().unwrap_or_default()
    }

    pub fn diagonal(&self) -> impl Iterator<Item = &Rational> + '_ {
        (0..self.dim).map(move |i| &self.packed[packed_index(self.dim, i, i).unwrap()])
    }

    pub fn column(&self, col: usize) -> Vec<Rational> {
        (0..self.dim).map(|i| self.entry(i, col)).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn matvec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok((0..self.dim)
            .map(|i| {
                let row = self.row_slice(i);
                row.iter().zip(&x[i..]).map(|(a, b)| a * b).sum()
            })
            .collect())
    }

    /// Product of two upper-triangular matrices; entry `(i, j)` sums only
    /// over `i <= l <= j`.
    pub fn matmul(&self, rhs: &UpperTriangular) -> Result<UpperTriangular> {
        if rhs.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: rhs.dim,
            });
        }
        Ok(Self::from_fn(self.dim, |i, j| {
            (i..=j)
                .map(|l| {
                    &self.packed[packed_index(self.dim, i, l).unwrap()]
                        * &rhs.packed[packed_index(self.dim, l, j).unwrap()]
                })
                .sum()
        }))
    }

    /// Inverse by back-substitution against each unit vector. Columns are
    /// solved in parallel; the result does not depend on the schedule.
    pub fn inverse(&self) -> Result<UpperTriangular> {
        let columns: Vec<Vec<Rational>> = (0..self.dim)
            .into_par_iter()
            .map(|j| {
                let mut e = vec![Rational::zero(); self.dim];
                e[j] = Rational::one();
                tri_solve(self, &e)
            })
            .collect::<Result<_>>()?;
        UpperTriangular::from_columns(&columns)
    }

    fn row_slice(&self, row: usize) -> &[Rational] {
        let start = packed_index(self.dim, row, row).unwrap();
        &self.packed[start..start + (self.dim - row)]
    }
}

/// Solves `U x = b` by back-substitution.
pub fn tri_solve(u: &UpperTriangular, b: &[Rational]) -> Result<Vec<Rational>> {
    let dim = u.dim();
    if b.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: b.len(),
        });
    }
    let mut x = vec![Rational::zero(); dim];
    for i in (0..dim).rev() {
        let row = u.row_slice(i);
        let pivot = &row[0];
        if pivot.is_zero() {
            return Err(Error::Singular(i));
        }
        let tail: Rational = row[1..]
            .iter()
            .zip(&x[i + 1..])
            .filter(|(a, _)| !a.is_zero())
            .map(|(a, xv)| a * xv)
            .sum();
        x[i] = (&b[i] - &tail).checked_div(pivot)?;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| Rational::from(c)).collect()
    }

    fn chebyshev_to_monomial_4() -> UpperTriangular {
        UpperTriangular::from_dense(&[
            ints(&[1, 0, -1, 0]),
            ints(&[0, 1, 0, -3]),
            ints(&[0, 0, 2, 0]),
            ints(&[0, 0, 0, 4]),
        ])
        .unwrap()
    }

    #[test]
    fn packed_layout() {
        assert_eq!(packed_len(4), 10);
        let expect = [
            ((0, 0), 0),
            ((0, 3), 3),
            ((1, 1), 4),
            ((1, 3), 6),
            ((2, 2), 7),
            ((3, 3), 9),
        ];
        for ((i, j), p) in expect {
            assert_eq!(packed_index(4, i, j), Some(p), "({i},{j})");
        }
        assert_eq!(packed_index(4, 2, 1), None);
        assert_eq!(packed_index(4, 0, 4), None);
    }

    #[test]
    fn below_diagonal_reads_zero() {
        let u = chebyshev_to_monomial_4();
        assert_eq!(u.packed().len(), 10);
        assert!(u.entry(3, 0).is_zero());
        assert_eq!(u.get(3, 0), None);
        let lower = vec![ints(&[1, 0]), ints(&[1, 1])];
        assert_eq!(
            UpperTriangular::from_dense(&lower),
            Err(Error::NotUpperTriangular { row: 1, col: 0 })
        );
    }

    #[test]
    fn solve_identity() {
        let b = vec![Rational::from(5), Rational::zero(), Rational::frac(-1, 2)];
        assert_eq!(tri_solve(&UpperTriangular::identity(3), &b).unwrap(), b);
    }

    #[test]
    fn solve_chebyshev_system() {
        let u = chebyshev_to_monomial_4();
        assert_eq!(
            u.matvec(&ints(&[2, 0, -1, 1])).unwrap(),
            ints(&[3, -3, -2, 4])
        );
        assert_eq!(
            tri_solve(&u, &ints(&[3, -3, -2, 4])).unwrap(),
            ints(&[2, 0, -1, 1])
        );
    }

    #[test]
    fn singular_and_length_errors() {
        let u = UpperTriangular::from_dense(&[ints(&[1, 2]), ints(&[0, 0])]).unwrap();
        assert_eq!(tri_solve(&u, &ints(&[1, 1])), Err(Error::Singular(1)));
        assert!(matches!(
            tri_solve(&u, &ints(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inverse_of_chebyshev_matrix() {
        let u = chebyshev_to_monomial_4();
        let inv = u.inverse().unwrap();
        assert_eq!(u.matmul(&inv).unwrap(), UpperTriangular::identity(4));
        // x^2 = (T_0 + T_2) / 2
        assert_eq!(inv.entry(0, 2), Rational::frac(1, 2));
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::frac(n, d))
    }

    fn nonzero_rational() -> impl Strategy<Value = Rational> {
        small_rational().prop_filter("nonzero", |q| !q.is_zero())
    }

    proptest! {
        #[test]
        fn packed_index_is_a_bijection(dim in 1usize..40) {
            let mut seen = vec![false; packed_len(dim)];
            for i in 0..dim {
                for j in i..dim {
                    let p = packed_index(dim, i, j).unwrap();
                    prop_assert!(!seen[p]);
                    seen[p] = true;
                }
            }
            prop_assert!(seen.into_iter().all(|s| s));
        }

        #[test]
        fn solve_undoes_matvec(
            (dim, upper, diag, x) in (1usize..8).prop_flat_map(|dim| (
                Just(dim),
                proptest::collection::vec(small_rational(), packed_len(dim)),
                proptest::collection::vec(nonzero_rational(), dim),
                proptest::collection::vec(small_rational(), dim),
            ))
        ) {
            let u = UpperTriangular::from_fn(dim, |i, j| {
                if i == j { diag[i].clone() } else { upper[packed_index(dim, i, j).unwrap()].clone() }
            });
            let b = u.matvec(&x).unwrap();
            prop_assert_eq!(tri_solve(&u, &b).unwrap(), x);
        }
    }
}
