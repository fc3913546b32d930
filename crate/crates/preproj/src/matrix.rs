//! Dense matrices over exact rationals.
//!
//! Just enough linear algebra for the rest of the crate: multiplication,
//! stacking, rank, null space and inverse, all by Gaussian elimination
//! with the first nonzero pivot in column order. Matrices act on column
//! vectors, so a composition `g after f` is the product `g * f`.
//! Zero-by-k and k-by-zero matrices are first-class citizens; they
//! represent maps to and from the zero space.

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, entries }
    }

    /// Builds a matrix from integer rows; the shape comes from the data,
    /// so an empty slice gives the 0x0 matrix.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        RatMatrix::from_fn(nr, nc, |r, c| Rational::from_int(rows[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.entry(r, c).clone()).collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.entry(k, c);
                    if !b.is_zero() {
                        let cur = out.entry(r, c) + &(a * b);
                        out.set(r, c, cur);
                    }
                }
            }
        }
        out
    }

    /// `self + coeff * other`, entrywise.
    pub fn add_scaled(&self, other: &RatMatrix, coeff: &Rational) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix::from_fn(self.rows, self.cols, |r, c| {
            self.entry(r, c) + &(coeff * other.entry(r, c))
        })
    }

    pub fn vstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .chain(other.entries.iter())
                .cloned()
                .collect(),
        }
    }

    pub fn hstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        RatMatrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.entry(r, c).clone()
            } else {
                other.entry(r, c - self.cols).clone()
            }
        })
    }

    pub fn block_diag(&self, other: &RatMatrix) -> RatMatrix {
        RatMatrix::from_fn(self.rows + other.rows, self.cols + other.cols, |r, c| {
            if r < self.rows && c < self.cols {
                self.entry(r, c).clone()
            } else if r >= self.rows && c >= self.cols {
                other.entry(r - self.rows, c - self.cols).clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Reduced row echelon form together with the pivot columns.
    fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row >= a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&r| !a.entry(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..a.cols {
                    let (lo, hi) = (row.min(p), row.max(p));
                    a.entries.swap(lo * a.cols + c, hi * a.cols + c);
                }
            }
            let pivot = a.entry(row, col).clone();
            for c in col..a.cols {
                let v = a.entry(row, c) / &pivot;
                a.set(row, c, v);
            }
            for r in 0..a.rows {
                if r == row || a.entry(r, col).is_zero() {
                    continue;
                }
                let factor = a.entry(r, col).clone();
                for c in col..a.cols {
                    let v = a.entry(r, c) - &(&factor * a.entry(row, c));
                    a.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A matrix whose columns form a basis of the null space, so it has
    /// `cols()` rows and `cols() - rank()` columns.
    pub fn kernel_basis(&self) -> RatMatrix {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = RatMatrix::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, Rational::one());
            for (r, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, -rref.entry(r, fc));
            }
        }
        basis
    }

    /// True for square matrices of full rank; the 0x0 matrix is the
    /// identity of the zero space and counts as invertible.
    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let (reduced, pivots) = self.hstack(&RatMatrix::identity(self.rows)).rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(RatMatrix::from_fn(self.rows, self.rows, |r, c| {
            reduced.entry(r, self.cols + c).clone()
        }))
    }
}

impl std::fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RatMatrix({}x{})[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn kernel_of_identity_is_empty() {
        let k = RatMatrix::identity(2).kernel_basis();
        assert_eq!((k.rows(), k.cols()), (2, 0));
    }

    #[test]
    fn kernel_of_rank_one_square() {
        let m = RatMatrix::from_int_rows(&[vec![1, 1], vec![2, 2]]);
        let k = m.kernel_basis();
        assert_eq!((k.rows(), k.cols()), (2, 1));
        assert!(m.mul(&k).is_zero());
        // spans (1, -1)
        assert_eq!(k.entry(0, 0), &(-k.entry(1, 0)));
        assert!(!k.entry(0, 0).is_zero());
    }

    #[test]
    fn kernel_of_fractional_row() {
        let m = RatMatrix::from_fn(1, 2, |_, c| {
            if c == 0 {
                Rational::ratio(1, 2)
            } else {
                Rational::ratio(1, 3)
            }
        });
        let k = m.kernel_basis();
        assert_eq!((k.rows(), k.cols()), (2, 1));
        assert!(m.mul(&k).is_zero());
        // spans (2, -3): check the ratio of coordinates
        let ratio = k.entry(0, 0) / k.entry(1, 0);
        assert_eq!(ratio, Rational::ratio(-2, 3));
    }

    #[test]
    fn kernel_of_zero_row_count() {
        // 0 x 3: everything is in the kernel
        let m = RatMatrix::zeros(0, 3);
        let k = m.kernel_basis();
        assert_eq!((k.rows(), k.cols()), (3, 3));
        assert_eq!(k, RatMatrix::identity(3));
    }

    #[test]
    fn invertibility() {
        assert!(RatMatrix::identity(3).is_invertible());
        assert!(!RatMatrix::from_int_rows(&[vec![1, 1], vec![2, 2]]).is_invertible());
        assert!(RatMatrix::zeros(0, 0).is_invertible());
        assert!(!RatMatrix::zeros(2, 3).is_invertible());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = RatMatrix::from_int_rows(&[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
        assert_eq!(inv.mul(&m), RatMatrix::identity(2));
        assert!(RatMatrix::from_int_rows(&[vec![1, 1], vec![2, 2]])
            .inverse()
            .is_none());
    }

    fn arb_matrix() -> impl Strategy<Value = RatMatrix> {
        (0usize..=4, 0usize..=4).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-6i64..=6, 1i64..=3), r * c).prop_map(move |v| {
                let mut it = v.into_iter();
                RatMatrix::from_fn(r, c, |_, _| {
                    let (n, d) = it.next().unwrap();
                    Rational::ratio(n, d)
                })
            })
        })
    }

    proptest! {
        #[test]
        fn kernel_columns_are_killed_exactly(m in arb_matrix()) {
            let k = m.kernel_basis();
            prop_assert!(m.mul(&k).is_zero());
        }

        #[test]
        fn rank_nullity(m in arb_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel_basis().cols(), m.cols());
        }

        #[test]
        fn kernel_basis_is_independent(m in arb_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(k.rank(), k.cols());
        }
    }
}
