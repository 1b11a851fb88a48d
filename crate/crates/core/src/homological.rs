//! Traces of Coxeter powers expressed through Euler forms, and recovery of
//! the Coxeter polynomial from those traces.
//!
//! Over the enveloping algebra `A^e` the Cartan data is
//! `C_{A^e}^{-t} = C^{-1} ⊗ C^{-t}`. Simple `A^e`-modules `S(i, j)` are
//! ordered `e_{1,1}, ..., e_{n,1}, e_{1,2}, ..., e_{n,n}` (first index
//! fastest), so `dim A` is the concatenation of the projective dimension
//! vectors (columns of `C`) and `dim DA` that of the injective ones (rows).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coxeter::CoxeterData;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::poly::Poly;

/// `(dim_{A^e} A, dim_{A^e} DA)`: concatenated columns and rows of `C`.
pub fn bimodule_dims(cartan: &IntMatrix) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    if !cartan.is_square() {
        return Err(Error::NonSquare {
            rows: cartan.rows(),
            cols: cartan.cols(),
        });
    }
    let n = cartan.rows();
    let dim_a = (0..n).flat_map(|j| cartan.col(j)).collect();
    let dim_da = (0..n).flat_map(|i| cartan.row(i).to_vec()).collect();
    Ok((dim_a, dim_da))
}

/// Enveloping-algebra data of a unimodular Cartan matrix.
#[derive(Debug, Clone)]
pub struct EnvelopingData {
    pub env_inv_trans: IntMatrix,
    pub dim_a: Vec<BigInt>,
    pub dim_da: Vec<BigInt>,
    n: usize,
}

impl EnvelopingData {
    pub fn new(cartan: &IntMatrix) -> Result<Self> {
        let inv = cartan.inverse_unimodular()?;
        let env_inv_trans = inv.kronecker(&inv.transpose());
        let (dim_a, dim_da) = bimodule_dims(cartan)?;
        Ok(EnvelopingData {
            env_inv_trans,
            dim_a,
            dim_da,
            n: cartan.rows(),
        })
    }

    /// `x C_{A^e}^{-t} y^t`.
    pub fn euler_form(&self, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
        self.env_inv_trans.bilinear(x, y)
    }

    /// Position of the simple `S(i, j)` (0-based) in the idempotent order.
    fn simple_index(&self, i: usize, j: usize) -> usize {
        j * self.n + i
    }
}

/// Euler form of the enveloping algebra, `x · (C^{-1} ⊗ C^{-t}) · y^t`.
pub fn env_euler_form(cartan: &IntMatrix, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
    EnvelopingData::new(cartan)?.euler_form(x, y)
}

/// Which simple `A^e`-module closes the multi-index sum for `tr(φ^k)`,
/// `k >= 3`. With `v_1, ..., v_{k-1}` the summation indices, the last factor
/// is `<dim DA, e_{A^e}(·, ·)>` evaluated at either
/// `(v_{k-1}, v_{k-2})` or `(v_{k-2}, v_{k-1})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimpleIndexOrder {
    /// `e_{A^e}(v_{k-1}, v_{k-2})`.
    LastFirst,
    /// `e_{A^e}(v_{k-2}, v_{k-1})`; the reading that equals `tr(φ^k)` under
    /// the first-index-fastest idempotent order.
    LastSecond,
}

/// `tr(φ^k)` computed only from Euler forms of `A` and `A^e`:
///
/// * `k = 1`: `-<dim A, dim A>_{A^e}`;
/// * `k = 2`: `<dim DA, dim A>_{A^e}`;
/// * `k >= 3`: `(-1)^k Σ <q(v_1), p(v_{k-1})> <q(v_2), e(v_1)> ... <q(v_{k-2}), e(v_{k-3})> <dim DA, e_{A^e}(v_{k-2}, v_{k-1})>_{A^e}`.
pub fn trace_identity_rhs(cartan: &IntMatrix, k: u32) -> Result<BigInt> {
    trace_identity_with(cartan, k, SimpleIndexOrder::LastSecond)
}

pub fn trace_identity_with(cartan: &IntMatrix, k: u32, order: SimpleIndexOrder) -> Result<BigInt> {
    assert!(k >= 1, "trace identities start at k = 1");
    let env = EnvelopingData::new(cartan)?;
    match k {
        1 => return Ok(-env.euler_form(&env.dim_a, &env.dim_a)?),
        2 => return env.euler_form(&env.dim_da, &env.dim_a),
        _ => {}
    }
    let data = CoxeterData::new(cartan.clone())?;
    let n = data.size();
    let unit = |v: usize| -> Vec<BigInt> {
        (0..n)
            .map(|i| {
                if i == v {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })
            .collect()
    };
    let proj: Vec<Vec<BigInt>> = (0..n).map(|j| cartan.col(j)).collect();
    let inj: Vec<Vec<BigInt>> = (0..n).map(|i| cartan.row(i).to_vec()).collect();

    // qp[a][b] = <q(a), p(b)>, qe[a][b] = <q(a), e(b)>
    let mut qp = vec![vec![BigInt::zero(); n]; n];
    let mut qe = vec![vec![BigInt::zero(); n]; n];
    for a in 0..n {
        for b in 0..n {
            qp[a][b] = data.euler_form(&inj[a], &proj[b])?;
            qe[a][b] = data.euler_form(&inj[a], &unit(b))?;
        }
    }
    // da_simple[s] = <dim DA, e_{A^e}(s)> over all simples s
    let env_unit = |s: usize| -> Vec<BigInt> {
        (0..n * n)
            .map(|i| {
                if i == s {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })
            .collect()
    };
    let da_simple: Vec<BigInt> = (0..n * n)
        .map(|s| env.euler_form(&env.dim_da, &env_unit(s)))
        .collect::<Result<_>>()?;

    let depth = (k - 1) as usize;
    let mut idx = vec![0usize; depth];
    let mut total = BigInt::zero();
    loop {
        let first = idx[0];
        let last = idx[depth - 1];
        let second_last = idx[depth - 2];
        let mut term = qp[first][last].clone();
        for s in 1..depth - 1 {
            if term.is_zero() {
                break;
            }
            term *= &qe[idx[s]][idx[s - 1]];
        }
        if !term.is_zero() {
            let simple = match order {
                SimpleIndexOrder::LastFirst => env.simple_index(last, second_last),
                SimpleIndexOrder::LastSecond => env.simple_index(second_last, last),
            };
            total += term * &da_simple[simple];
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == depth {
                return Ok(if k.is_multiple_of(2) { total } else { -total });
            }
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// A partition `p_1 >= ... >= p_r >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// All partitions of `ell`, in reverse lexicographic order starting at `(ell)`.
pub fn partitions_of(ell: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if ell > 0 {
        rec(ell, ell, &mut Vec::new(), &mut out);
    }
    out
}

fn factorial(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// `α_p = 1 / (p_1 ⋯ p_r · Π_a m_a!)`, with `m_a` the multiplicity of part `a`.
pub fn waring_alpha(p: &Partition) -> BigRational {
    let prod: BigInt = p.parts.iter().map(|&x| BigInt::from(x)).product();
    let mut denom = prod;
    let mut i = 0;
    while i < p.parts.len() {
        let j = p.parts[i..]
            .iter()
            .take_while(|&&x| x == p.parts[i])
            .count();
        denom *= factorial(j);
        i += j;
    }
    BigRational::new(BigInt::one(), denom)
}

/// Sign attached to each partition in the Waring expansion of `λ_{N-ℓ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    /// `(-1)^r`, `r` the number of parts. Agrees with Newton's identities.
    PartCount,
    /// `(-1)^{p_1 + ... + p_r} = (-1)^ℓ`, constant over partitions of `ℓ`.
    /// Kept to document that it does not reproduce the characteristic
    /// polynomial.
    PartSum,
}

/// `Σ_p ± α_p S_{p_1} ⋯ S_{p_r}` over partitions of `ell`, where
/// `power_sums[k - 1] = S_k`.
pub fn waring_coefficient(power_sums: &[BigInt], ell: usize, sign: SignConvention) -> BigRational {
    assert!(ell <= power_sums.len(), "need power sums up to S_{ell}");
    partitions_of(ell)
        .iter()
        .map(|p| {
            let exponent = match sign {
                SignConvention::PartCount => p.len(),
                SignConvention::PartSum => p.total(),
            };
            let prod: BigInt = p.parts.iter().map(|&k| power_sums[k - 1].clone()).product();
            let term = waring_alpha(p) * BigRational::from_integer(prod);
            if exponent % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum()
}

/// Monic characteristic polynomial of degree `N = power_sums.len()`
/// reconstructed from `S_k = tr(M^k)`, `k = 1..=N`.
pub fn waring_coefficients(power_sums: &[BigInt]) -> Result<Poly> {
    let n = power_sums.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    for ell in 1..=n {
        let c = waring_coefficient(power_sums, ell, SignConvention::PartCount);
        if !c.is_integer() {
            return Err(Error::NonIntegerResult {
                degree: n - ell,
                coeff: c.to_string(),
            });
        }
        coeffs[n - ell] = c.to_integer();
    }
    Ok(Poly::from_coeffs(coeffs))
}
