//! Dense matrices over the integers with exact, division-checked algorithms.
//!
//! Nothing here touches floating point. Determinants use Bareiss elimination,
//! inverses use fraction-free Gauss-Jordan (Montante's method), and
//! characteristic polynomials use the division-free Berkowitz recurrence.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Row-major dense matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Build from rows of machine integers.
    ///
    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), n_cols, "ragged rows");
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix {
            rows: n_rows,
            cols: n_cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> Result<BigInt> {
        self.require_square()?;
        Ok((0..self.rows).map(|i| &self[(i, i)]).sum())
    }

    /// Matrix product with shape checking.
    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix, `x · M`.
    pub fn left_mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: x.len(),
            });
        }
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (o, m) in out.iter_mut().zip(self.row(i)) {
                *o += xi * m;
            }
        }
        Ok(out)
    }

    /// Matrix times column vector, `M · y^t`.
    pub fn mul_vec(&self, y: &[BigInt]) -> Result<Vec<BigInt>> {
        if y.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: y.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(y).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// `x · M · y^t`.
    pub fn bilinear(&self, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
        let xm = self.left_mul_vec(x)?;
        if y.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: y.len(),
            });
        }
        Ok(xm.iter().zip(y).map(|(a, b)| a * b).sum())
    }

    pub fn pow(&self, mut k: u32) -> Result<IntMatrix> {
        self.require_square()?;
        let mut result = IntMatrix::identity(self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut prev = BigInt::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    debug_assert!(num.is_multiple_of(&prev));
                    a[i][j] = num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// Exact integer inverse of a matrix with determinant ±1.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        self.require_square()?;
        let n = self.rows;
        let w = 2 * n;
        // Augmented [M | I], reduced by Montante's fraction-free Gauss-Jordan:
        // every row operation divides exactly by the previous pivot, and the
        // left block ends as d·I with the right block equal to d·M^{-1}.
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                }));
                r
            })
            .collect();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => a.swap(k, r),
                    None => {
                        return Err(Error::NotUnimodular {
                            det: "0".to_string(),
                        })
                    }
                }
            }
            let pivot_row = a[k].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == k {
                    continue;
                }
                let factor = row[k].clone();
                for j in 0..w {
                    if j == k {
                        continue;
                    }
                    let num = &row[j] * &pivot_row[k] - &factor * &pivot_row[j];
                    debug_assert!(num.is_multiple_of(&prev));
                    row[j] = num / &prev;
                }
                row[k] = BigInt::zero();
            }
            prev = pivot_row[k].clone();
        }
        // All left-block diagonal entries now equal `prev` = ±det(M).
        if !prev.abs().is_one() {
            return Err(Error::NotUnimodular {
                det: self.determinant()?.to_string(),
            });
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in &a {
            for x in &row[n..] {
                entries.push(x * &prev);
            }
        }
        Ok(IntMatrix {
            rows: n,
            cols: n,
            entries,
        })
    }

    /// `det(xI - M)` via the Berkowitz recurrence; division-free.
    pub fn char_poly(&self) -> Result<Poly> {
        self.require_square()?;
        let n = self.rows;
        // Descending coefficient vector of the trailing principal submatrix,
        // grown one row/column at a time from the bottom-right corner.
        let mut desc: Vec<BigInt> = vec![BigInt::one()];
        for k in (0..n).rev() {
            let m = n - k;
            let sub = m - 1;
            // first column of the Toeplitz factor: 1, -a, -R C, -R A C, ...
            let mut t = Vec::with_capacity(m + 1);
            t.push(BigInt::one());
            t.push(-&self[(k, k)]);
            let mut v: Vec<BigInt> = (k + 1..n).map(|i| self[(i, k)].clone()).collect();
            for step in 0..sub {
                if step > 0 {
                    v = (k + 1..n)
                        .map(|i| (k + 1..n).zip(&v).map(|(j, vj)| &self[(i, j)] * vj).sum())
                        .collect();
                }
                let rv: BigInt = (k + 1..n).zip(&v).map(|(j, vj)| &self[(k, j)] * vj).sum();
                t.push(-rv);
            }
            let next: Vec<BigInt> = (0..=m)
                .map(|i| {
                    (0..=i.min(m - 1))
                        .map(|j| &t[i - j] * &desc[j])
                        .sum::<BigInt>()
                })
                .collect();
            desc = next;
        }
        desc.reverse();
        Ok(Poly::from_coeffs(desc))
    }

    /// Kronecker product: block (i, j) of the result is `self[i, j] · rhs`.
    pub fn kronecker(&self, rhs: &IntMatrix) -> IntMatrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        IntMatrix::from_fn(rows, cols, |i, j| {
            let (bi, ri) = i.div_rem(&rhs.rows);
            let (bj, rj) = j.div_rem(&rhs.cols);
            &self[(bi, bj)] * &rhs[(ri, rj)]
        })
    }

    /// `tr(M^k)`; `k = 0` gives the matrix size.
    pub fn power_trace(&self, k: u32) -> Result<BigInt> {
        self.require_square()?;
        if k == 0 {
            return Ok(BigInt::from(self.rows));
        }
        self.pow(k)?.trace()
    }

    /// `tr(M^1), ..., tr(M^k)` by repeated multiplication.
    pub fn power_traces(&self, k: usize) -> Result<Vec<BigInt>> {
        self.require_square()?;
        let mut out = Vec::with_capacity(k);
        let mut p = IntMatrix::identity(self.rows);
        for _ in 0..k {
            p = &p * self;
            out.push(p.trace()?);
        }
        Ok(out)
    }
}

/// Convenience conversion of machine integers to a `BigInt` vector.
pub fn int_vec(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    /// Panics on incompatible shapes; see [`IntMatrix::checked_mul`].
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("incompatible matrix shapes")
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        -&self
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            let cells: Vec<String> = self
                .row(i)
                .iter()
                .map(|x| format!("{:>width$}", x.to_string()))
                .collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(IntMatrix::identity(3).determinant().unwrap(), BigInt::one());
        assert_eq!(m(&[&[1, 0], &[1, 1]]).determinant().unwrap(), BigInt::one());
        assert_eq!(
            m(&[&[0, 1], &[-1, -1]]).determinant().unwrap(),
            BigInt::one()
        );
        assert_eq!(
            m(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 1]])
                .determinant()
                .unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            m(&[&[1, 2], &[2, 4]]).determinant().unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn non_square_rejected() {
        let r = IntMatrix::zeros(2, 3);
        assert!(matches!(
            r.determinant(),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        ));
        assert!(matches!(r.char_poly(), Err(Error::NonSquare { .. })));
        assert!(matches!(
            r.inverse_unimodular(),
            Err(Error::NonSquare { .. })
        ));
        assert!(matches!(r.power_trace(1), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn ragged_entries_rejected() {
        assert!(matches!(
            IntMatrix::new(2, 2, vec![BigInt::one(); 3]),
            Err(Error::DimensionMismatch {
                expected: 4,
                found: 3
            })
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            IntMatrix::identity(4).inverse_unimodular().unwrap(),
            IntMatrix::identity(4)
        );
        assert_eq!(
            m(&[&[1, 0], &[1, 1]]).inverse_unimodular().unwrap(),
            m(&[&[1, 0], &[-1, 1]])
        );
        assert_eq!(
            m(&[&[2, 0], &[0, 1]]).inverse_unimodular(),
            Err(Error::NotUnimodular { det: "2".into() })
        );
        assert_eq!(
            m(&[&[1, 1], &[1, 1]]).inverse_unimodular(),
            Err(Error::NotUnimodular { det: "0".into() })
        );
        // needs a row swap, determinant -1
        let p = m(&[&[0, 1, 0], &[1, 0, 0], &[2, 3, 1]]);
        assert_eq!(
            &p * &p.inverse_unimodular().unwrap(),
            IntMatrix::identity(3)
        );
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            IntMatrix::zeros(2, 2).char_poly().unwrap(),
            Poly::from_i64s(&[0, 0, 1])
        );
        assert_eq!(
            m(&[&[0, 1], &[-1, -1]]).char_poly().unwrap(),
            Poly::from_i64s(&[1, 1, 1])
        );
        assert_eq!(
            m(&[&[3, 2], &[-2, -1]]).char_poly().unwrap(),
            Poly::from_i64s(&[1, -2, 1])
        );
        assert_eq!(IntMatrix::zeros(0, 0).char_poly().unwrap(), Poly::one());
    }

    #[test]
    fn kronecker_examples() {
        let b = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(IntMatrix::identity(1).kronecker(&b), b);
        let k = m(&[&[1, 0], &[-1, 1]]).kronecker(&m(&[&[1, -1], &[0, 1]]));
        assert_eq!(
            k,
            m(&[
                &[1, -1, 0, 0],
                &[0, 1, 0, 0],
                &[-1, 1, 1, -1],
                &[0, -1, 0, 1]
            ])
        );
        let r = IntMatrix::zeros(2, 3).kronecker(&IntMatrix::zeros(4, 5));
        assert_eq!((r.rows(), r.cols()), (8, 15));
    }

    #[test]
    fn power_trace_examples() {
        let a = m(&[&[0, 1], &[-1, -1]]);
        assert_eq!(
            IntMatrix::zeros(5, 5).power_trace(0).unwrap(),
            BigInt::from(5)
        );
        assert_eq!(a.power_trace(1).unwrap(), BigInt::from(-1));
        assert_eq!(a.power_trace(2).unwrap(), BigInt::from(-1));
        assert_eq!(a.power_trace(3).unwrap(), BigInt::from(2));
        assert_eq!(a.power_traces(3).unwrap(), int_vec(&[-1, -1, 2]));
    }

    #[test]
    fn big_entries_do_not_overflow() {
        // [[1,1],[1,0]]^200 holds Fibonacci numbers far beyond 64 bits
        let f = m(&[&[1, 1], &[1, 0]]).pow(200).unwrap();
        assert!(f[(0, 0)].bits() > 128);
        assert_eq!(f.determinant().unwrap(), BigInt::one());
        assert_eq!(
            &f * &f.inverse_unimodular().unwrap(),
            IntMatrix::identity(2)
        );
    }
}
