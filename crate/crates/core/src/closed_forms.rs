//! Closed-form Coxeter polynomials of linear and three-branch star quivers,
//! and the predicted leading coefficients of three-branch canonical algebras.
//!
//! `T(a, b, c)` is the star with branches of `a`, `b` and `c` vertices around
//! a centre (so `a + b + c + 1` vertices in total). Its canonical algebra is
//! `C(a+1, b+1, c+1)` with `n + 1 = a + b + c + 2` vertices.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::poly::Poly;

fn sorted3(a: usize, b: usize, c: usize) -> (usize, usize, usize) {
    let mut v = [a, b, c];
    v.sort_unstable();
    (v[0], v[1], v[2])
}

/// `1 + x + ... + x^n` for the linear quiver on `n` vertices.
pub fn poly_linear_a(n: usize) -> Poly {
    Poly::geometric(n)
}

/// Boldt's product formula for the star `T(a, b, c)`:
///
/// `[a]_x [b+c+1]_x - x [a-1]_x [b]_x [c]_x`, where `[k]_x = 1 + x + ... + x^k`.
pub fn poly_boldt_t(a: usize, b: usize, c: usize) -> Poly {
    let (a, b, c) = sorted3(a, b, c);
    assert!(a >= 1, "branches need at least one vertex");
    let g = Poly::geometric;
    let first = &g(a) * &g(b + c + 1);
    let second = (&(&g(a - 1) * &g(b)) * &g(c)).shift(1);
    &first - &second
}

/// Coefficient of `x^{a+b+c-ℓ}` in the Coxeter polynomial of `T(a, b, c)`,
/// valid for `0 <= ℓ <= a`: `(1 - ℓ)(2 + ℓ) / 2`.
pub fn coeff_t_window(a: usize, b: usize, c: usize, ell: usize) -> Result<i64> {
    let (a, _, _) = sorted3(a, b, c);
    if ell > a {
        return Err(Error::OutOfWindow { ell, max: a });
    }
    let l = ell as i64;
    Ok((1 - l) * (2 + l) / 2)
}

/// Explicit Coxeter polynomial of `T(1, b, c)`, `b <= c`.
#[allow(clippy::needless_range_loop)]
pub fn poly_t_one(b: usize, c: usize) -> Poly {
    let (b, c) = if b <= c { (b, c) } else { (c, b) };
    assert!(b >= 1, "branches need at least one vertex");
    let (bi, ci) = (b as i64, c as i64);
    let mut coeffs = vec![BigInt::zero(); b + c + 3];
    coeffs[b + c + 2] = BigInt::one();
    for j in c + 1..=b + c + 1 {
        coeffs[j] += BigInt::from(j as i64 - bi - ci);
    }
    for j in b + 1..=c {
        coeffs[j] += BigInt::from(1 - bi);
    }
    for j in 1..=b {
        coeffs[j] += BigInt::from(2 - j as i64);
    }
    coeffs[0] += BigInt::one();
    Poly::from_coeffs(coeffs)
}

/// Coxeter matrix of `T(a, b, c)` assembled from the blocks `J_p` (ones on
/// the subdiagonal) and `K_{p,q}` (ones in the first row):
///
/// ```text
/// [  J_a     K_ab    K_ac    K_a1 ]
/// [  K_ba    J_b     K_bc    K_b1 ]
/// [  K_ca    K_cb    J_c     K_c1 ]
/// [ -K_1a   -K_1b   -K_1c    -1   ]
/// ```
pub fn star_coxeter_blocks(a: usize, b: usize, c: usize) -> IntMatrix {
    let offsets = [0, a, a + b, a + b + c];
    let n = a + b + c + 1;
    let block_of = |i: usize| (0..4).rev().find(|&k| i >= offsets[k]).unwrap();
    IntMatrix::from_fn(n, n, |i, j| {
        let (bi, bj) = (block_of(i), block_of(j));
        let (ri, rj) = (i - offsets[bi], j - offsets[bj]);
        let v: i64 = match (bi, bj) {
            (3, _) => -1,
            (_, _) if bi == bj => i64::from(ri == rj + 1),
            _ => i64::from(ri == 0),
        };
        BigInt::from(v)
    })
}

/// `m C_B^{-1}` for the canonical module over `T(a, b, c)`: `-1` at the
/// first vertex of each branch, `2` at the centre, zero elsewhere.
pub fn m_cinv_vector(a: usize, b: usize, c: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); a + b + c + 1];
    for start in [0, a, a + b] {
        v[start] = BigInt::from(-1);
    }
    v[a + b + c] = BigInt::from(2);
    v
}

fn delta(x: usize, y: usize) -> i64 {
    i64::from(x == y)
}

/// Predicted `λ_{n-ℓ}` of the canonical algebra `C(a+1, b+1, c+1)`, keyed by
/// `ℓ`. Offsets `-1` (leading) and `0` (minus the trace) are always 1.
///
/// Three families are covered:
/// * `(1, 2, c)`, `c >= 5`: `ℓ = 1..=4` give `0, -1, -1, 0`;
/// * `(1, b, c)`, `b >= 3`: zero for `1 <= ℓ < b`, then `-δ_bc - 1` at `ℓ = b`;
/// * `a >= 2`: one for `1 <= ℓ < a`, then `-δ_ab - δ_ac` at `ℓ = a`.
pub fn predicted_canonical_coeffs(a: usize, b: usize, c: usize) -> Result<BTreeMap<i64, i64>> {
    let (a, b, c) = sorted3(a, b, c);
    let mut map = BTreeMap::from([(-1, 1), (0, 1)]);
    if a == 1 && b == 2 && c >= 5 {
        map.extend([(1, 0), (2, -1), (3, -1), (4, 0)]);
    } else if a == 1 && b >= 3 {
        map.extend((1..b as i64).map(|r| (r, 0)));
        map.insert(b as i64, -delta(b, c) - 1);
    } else if a >= 2 {
        map.extend((1..a as i64).map(|r| (r, 1)));
        map.insert(a as i64, -delta(a, b) - delta(a, c));
    } else {
        return Err(Error::OutsideLemmaHypotheses { a, b, c });
    }
    Ok(map)
}
