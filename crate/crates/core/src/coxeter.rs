//! Coxeter matrices, Euler forms and Coxeter polynomials, together with the
//! one-point-extension formulas expressing `B[M]` in terms of `B`.
//!
//! With `C` the Cartan matrix, the Coxeter matrix is `φ = -C^{-t} C` and the
//! Euler form is `<x, y> = x C^{-t} y^t`. For a one-point extension with the
//! extension vertex placed first, the Coxeter matrix has the block form
//!
//! ```text
//! [ <m,m> - 1        -m φ_B ]
//! [ -C_B^{-t} m^t     φ_B   ]
//! ```
//!
//! and the Coxeter polynomial of `B[M]` is determined by that of `B` and the
//! twisted Euler values `<m φ_B^i, m>`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::poly::Poly;

/// Everything derived from a unimodular Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterData {
    pub cartan: IntMatrix,
    pub cartan_inv: IntMatrix,
    pub coxeter: IntMatrix,
    pub chi: Poly,
}

impl CoxeterData {
    pub fn new(cartan: IntMatrix) -> Result<Self> {
        let cartan_inv = cartan.inverse_unimodular()?;
        let coxeter = -(&cartan_inv.transpose() * &cartan);
        let chi = coxeter.char_poly()?;
        Ok(CoxeterData {
            cartan,
            cartan_inv,
            coxeter,
            chi,
        })
    }

    pub fn size(&self) -> usize {
        self.cartan.rows()
    }

    /// `tr φ`.
    pub fn trace(&self) -> BigInt {
        self.coxeter.trace().expect("Coxeter matrix is square")
    }

    /// `<x, y> = x C^{-t} y^t`.
    pub fn euler_form(&self, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
        let n = self.size();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        // x C^{-t} y^t = y C^{-1} x^t
        self.cartan_inv.bilinear(y, x)
    }
}

/// `φ = -C^{-t} C`.
pub fn coxeter_matrix(cartan: &IntMatrix) -> Result<IntMatrix> {
    let inv = cartan.inverse_unimodular()?;
    Ok(-(&inv.transpose() * cartan))
}

/// Characteristic polynomial of the Coxeter matrix.
pub fn coxeter_polynomial(cartan: &IntMatrix) -> Result<Poly> {
    coxeter_matrix(cartan)?.char_poly()
}

/// Euler form `x C^{-t} y^t`.
pub fn euler_form(cartan: &IntMatrix, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
    let inv_t = cartan.inverse_unimodular()?.transpose();
    if y.len() != cartan.rows() {
        return Err(Error::DimensionMismatch {
            expected: cartan.rows(),
            found: y.len(),
        });
    }
    inv_t.bilinear(x, y)
}

/// `<m φ_B^i, m>` for `i = 0..=len`.
pub fn twisted_euler_sequence(base: &IntMatrix, m: &[BigInt], len: usize) -> Result<Vec<BigInt>> {
    let data = CoxeterData::new(base.clone())?;
    twisted_euler_values(&data, m, len)
}

fn twisted_euler_values(data: &CoxeterData, m: &[BigInt], len: usize) -> Result<Vec<BigInt>> {
    let mut out = Vec::with_capacity(len + 1);
    let mut row = m.to_vec();
    for i in 0..=len {
        if i > 0 {
            row = data.coxeter.left_mul_vec(&row)?;
        }
        out.push(data.euler_form(&row, m)?);
    }
    Ok(out)
}

fn check_extension(base: &IntMatrix, m: &[BigInt]) -> Result<()> {
    if !base.is_square() {
        return Err(Error::NonSquare {
            rows: base.rows(),
            cols: base.cols(),
        });
    }
    if m.len() != base.rows() {
        return Err(Error::DimensionMismatch {
            expected: base.rows(),
            found: m.len(),
        });
    }
    Ok(())
}

/// Coxeter matrix of `B[M]` assembled blockwise from `φ_B`, extension vertex
/// first.
pub fn ope_coxeter_matrix(base: &IntMatrix, m: &[BigInt]) -> Result<IntMatrix> {
    check_extension(base, m)?;
    let data = CoxeterData::new(base.clone())?;
    let n = data.size();
    let corner = data.euler_form(m, m)? - BigInt::one();
    let top = data.coxeter.left_mul_vec(m)?;
    let left = data.cartan_inv.transpose().mul_vec(m)?;
    Ok(IntMatrix::from_fn(n + 1, n + 1, |i, j| match (i, j) {
        (0, 0) => corner.clone(),
        (0, _) => -&top[j - 1],
        (_, 0) => -&left[i - 1],
        _ => data.coxeter[(i - 1, j - 1)].clone(),
    }))
}

/// Coxeter polynomial of `B[M]` from the coefficients of `χ_B` and the
/// twisted Euler values, without forming the extended matrix.
///
/// With `n` the size of `B`, for `0 <= l <= n`:
///
/// `λ^A_{n+1-l} = λ^B_{n-l} - (<m,m> - 1) λ^B_{n-l+1} - Σ_{i=1}^{l-1} λ^B_{n-l+i+1} <m φ_B^i, m>`
///
/// with out-of-range `λ^B` read as zero. The constant term is 1 because
/// `χ(0) = det(-φ) = 1` for every unimodular Cartan matrix.
pub fn ope_coefficients(base: &IntMatrix, m: &[BigInt]) -> Result<Poly> {
    check_extension(base, m)?;
    let data = CoxeterData::new(base.clone())?;
    let n = data.size();
    let chi_b = &data.chi;
    let lam_b = |i: i64| chi_b.coeff_signed(i);
    let twisted = twisted_euler_values(&data, m, n.saturating_sub(1))?;
    let corner = &twisted[0] - BigInt::one();

    let n_i = n as i64;
    let mut coeffs = vec![BigInt::one(); n + 2];
    for ell in 0..=n_i {
        let mut lam = lam_b(n_i - ell) - &corner * lam_b(n_i - ell + 1);
        for i in 1..ell {
            lam -= lam_b(n_i - ell + i + 1) * &twisted[i as usize];
        }
        coeffs[(n_i + 1 - ell) as usize] = lam;
    }
    Ok(Poly::from_coeffs(coeffs))
}
