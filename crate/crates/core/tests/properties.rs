use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use coxpoly::coxeter::{coxeter_matrix, coxeter_polynomial, ope_coefficients, ope_coxeter_matrix};
use coxpoly::homological::{partitions_of, waring_alpha, waring_coefficients};
use coxpoly::linalg::IntMatrix;
use coxpoly::poly::Poly;
use coxpoly::quiver::{cartan_matrix, one_point_ext_cartan, random_acyclic_quiver, Quiver};

fn matrix(max_n: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(-bound..=bound, n * n).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(n).map(<[i64]>::to_vec).collect();
            IntMatrix::from_rows(&rows)
        })
    })
}

fn same_size_pair(max_n: usize, bound: i64) -> impl Strategy<Value = (IntMatrix, IntMatrix)> {
    (1..=max_n).prop_flat_map(move |n| {
        let m = prop::collection::vec(-bound..=bound, n * n).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(n).map(<[i64]>::to_vec).collect();
            IntMatrix::from_rows(&rows)
        });
        (m.clone(), m)
    })
}

/// Seeded random acyclic quiver on 1..=max_n vertices.
fn quiver(max_n: usize) -> impl Strategy<Value = Quiver> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_acyclic_quiver(&mut rng, n, 3)
    })
}

fn t_minus(m: &IntMatrix, t: i64) -> IntMatrix {
    let n = m.rows();
    IntMatrix::from_fn(n, n, |i, j| {
        let d = if i == j {
            BigInt::from(t)
        } else {
            BigInt::zero()
        };
        d - &m[(i, j)]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn char_poly_matches_determinants(m in matrix(6, 4)) {
        let chi = m.char_poly().unwrap();
        let n = m.rows();
        prop_assert!(chi.is_monic());
        prop_assert_eq!(chi.degree(), Some(n));
        // a degree-n polynomial is pinned down by n + 1 values
        for t in 0..=n as i64 {
            prop_assert_eq!(chi.eval(&BigInt::from(t)), t_minus(&m, t).determinant().unwrap());
        }
        let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        prop_assert_eq!(chi.coeff(0), sign * m.determinant().unwrap());
        prop_assert_eq!(-chi.coeff(n - 1), m.trace().unwrap());
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in same_size_pair(5, 5)) {
        prop_assert_eq!((&a * &b).determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
        prop_assert_eq!(a.transpose().determinant().unwrap(), a.determinant().unwrap());
    }

    #[test]
    fn cartan_inverse_round_trip(q in quiver(8)) {
        let c = cartan_matrix(&q).unwrap();
        let n = c.rows();
        prop_assert!(c.determinant().unwrap().is_one());
        let inv = c.inverse_unimodular().unwrap();
        prop_assert_eq!(&c * &inv, IntMatrix::identity(n));
        prop_assert_eq!(&inv * &c, IntMatrix::identity(n));
    }

    #[test]
    fn kronecker_mixed_product((a, c) in same_size_pair(3, 4), (b, d) in same_size_pair(3, 4)) {
        let lhs = &a.kronecker(&b) * &c.kronecker(&d);
        let rhs = (&a * &c).kronecker(&(&b * &d));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.kronecker(&b).trace().unwrap(), a.trace().unwrap() * b.trace().unwrap());
    }

    #[test]
    fn newton_recovery(m in matrix(5, 3)) {
        let traces = m.power_traces(m.rows()).unwrap();
        for (k, s) in traces.iter().enumerate() {
            prop_assert_eq!(s, &m.power_trace(k as u32 + 1).unwrap());
        }
        prop_assert_eq!(waring_coefficients(&traces).unwrap(), m.char_poly().unwrap());
    }

    #[test]
    fn coxeter_polynomials_are_palindromic(q in quiver(8)) {
        let c = cartan_matrix(&q).unwrap();
        let chi = coxeter_polynomial(&c).unwrap();
        prop_assert!(chi.is_monic());
        prop_assert!(chi.is_palindromic());
        prop_assert!(chi.coeff(0).is_one());
        // φ^{-1} = C^{-1} φ^t C, the reason χ is palindromic
        let phi = coxeter_matrix(&c).unwrap();
        let inv = c.inverse_unimodular().unwrap();
        let conj = &(&inv * &phi.transpose()) * &c;
        prop_assert_eq!(&phi * &conj, IntMatrix::identity(c.rows()));
    }

    #[test]
    fn one_point_extension_routes_agree(q in quiver(7), raw in prop::collection::vec(0i64..=3, 7)) {
        let base = cartan_matrix(&q).unwrap();
        let m: Vec<BigInt> = raw[..base.rows()].iter().map(|&x| BigInt::from(x)).collect();
        let recursion = ope_coefficients(&base, &m).unwrap();
        let blocks = ope_coxeter_matrix(&base, &m).unwrap().char_poly().unwrap();
        let direct = coxeter_polynomial(&one_point_ext_cartan(&base, &m).unwrap()).unwrap();
        prop_assert_eq!(&recursion, &blocks);
        prop_assert_eq!(&blocks, &direct);
    }

    #[test]
    fn poly_ring_evaluation(a in prop::collection::vec(-9i64..=9, 0..6), b in prop::collection::vec(-9i64..=9, 0..6), x in -4i64..=4) {
        let (p, q) = (Poly::from_i64s(&a), Poly::from_i64s(&b));
        let x = BigInt::from(x);
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
        prop_assert_eq!((&p - &q).eval(&x), p.eval(&x) - q.eval(&x));
    }
}

#[test]
fn partition_weights_sum_to_one() {
    // α_p is 1/z_p, and Σ_p 1/z_p = 1 counts the permutations of ℓ letters by cycle type
    let counts = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
    for (ell, &count) in (1..=10).zip(&counts) {
        let parts = partitions_of(ell);
        assert_eq!(parts.len(), count, "p({ell})");
        let total: BigRational = parts.iter().map(waring_alpha).sum();
        assert!(total.is_one(), "ell = {ell}: {total}");
    }
}
