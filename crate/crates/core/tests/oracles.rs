//! Independent recomputations checked against the library.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use coxpoly::closed_forms::{m_cinv_vector, star_coxeter_blocks};
use coxpoly::coxeter::{coxeter_matrix, coxeter_polynomial, twisted_euler_sequence, CoxeterData};
use coxpoly::homological::{trace_identity_rhs, trace_identity_with, SimpleIndexOrder};
use coxpoly::linalg::IntMatrix;
use coxpoly::quiver::{
    all_orientations, build_star, canonical_base, canonical_form, cartan_matrix, enumerate_trees,
    random_acyclic_quiver, Quiver,
};

/// Every labelled tree on `n` vertices, one per Prüfer sequence.
fn prufer_trees(n: usize) -> Vec<Quiver> {
    if n == 1 {
        return vec![Quiver::new(1, vec![]).unwrap()];
    }
    if n == 2 {
        return vec![Quiver::new(2, vec![(1, 2)]).unwrap()];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut seq = Vec::with_capacity(len);
        for _ in 0..len {
            seq.push(code % n);
            code /= n;
        }
        let mut degree = vec![1usize; n];
        for &v in &seq {
            degree[v] += 1;
        }
        let mut arrows = Vec::with_capacity(n - 1);
        for &v in &seq {
            let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
            arrows.push((leaf + 1, v + 1));
            degree[leaf] -= 1;
            degree[v] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
        arrows.push((rest[0] + 1, rest[1] + 1));
        out.push(Quiver::new(n, arrows).unwrap());
    }
    out
}

#[test]
fn tree_classes_match_prufer_enumeration() {
    for n in 1..=8 {
        let brute: BTreeSet<String> = prufer_trees(n)
            .iter()
            .map(|q| canonical_form(q).unwrap())
            .collect();
        let listed: Vec<String> = enumerate_trees(n)
            .iter()
            .map(|q| canonical_form(q).unwrap())
            .collect();
        let listed_set: BTreeSet<String> = listed.iter().cloned().collect();
        assert_eq!(
            listed.len(),
            listed_set.len(),
            "duplicate classes at n = {n}"
        );
        assert_eq!(brute, listed_set, "n = {n}");
    }
}

#[test]
fn tree_counts() {
    let counts = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159];
    for (n, &c) in (1..=14).zip(&counts) {
        assert_eq!(enumerate_trees(n).len(), c, "n = {n}");
    }
}

/// Cartan matrix as `Σ_k A^k` with `A[i][j]` the number of arrows `j -> i`.
fn cartan_by_powers(q: &Quiver) -> IntMatrix {
    let n = q.vertex_count();
    let mut adj = IntMatrix::zeros(n, n);
    for &(s, t) in q.arrows() {
        adj[(t - 1, s - 1)] += 1;
    }
    let mut sum = IntMatrix::identity(n);
    let mut power = IntMatrix::identity(n);
    for _ in 1..n {
        power = &power * &adj;
        sum = IntMatrix::from_fn(n, n, |i, j| &sum[(i, j)] + &power[(i, j)]);
    }
    sum
}

#[test]
fn cartan_matches_adjacency_powers() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=9 {
        for _ in 0..20 {
            let q = random_acyclic_quiver(&mut rng, n, 3);
            assert_eq!(
                cartan_matrix(&q).unwrap(),
                cartan_by_powers(&q),
                "{}",
                q.to_json()
            );
        }
    }
}

#[test]
fn orientation_does_not_change_the_polynomial() {
    for n in 1..=7 {
        for tree in enumerate_trees(n) {
            let chis: BTreeSet<Vec<BigInt>> = all_orientations(&tree)
                .unwrap()
                .iter()
                .map(|q| {
                    coxeter_polynomial(&cartan_matrix(q).unwrap())
                        .unwrap()
                        .into_coeffs()
                })
                .collect();
            assert_eq!(chis.len(), 1, "{}", tree.to_json());
        }
    }
}

#[test]
fn star_blocks_equal_direct_coxeter_matrix() {
    for a in 1..=5 {
        for b in 1..=5 {
            for c in 1..=5 {
                let direct =
                    coxeter_matrix(&cartan_matrix(&build_star(&[a, b, c]).unwrap()).unwrap())
                        .unwrap();
                assert_eq!(star_coxeter_blocks(a, b, c), direct, "T({a},{b},{c})");
            }
        }
    }
}

#[test]
fn m_cinv_equals_direct_product() {
    for a in 1..=5 {
        for b in 1..=5 {
            for c in 1..=5 {
                let weights = [a as u64 + 1, b as u64 + 1, c as u64 + 1];
                let (star, m) = canonical_base(&weights).unwrap();
                let inv = cartan_matrix(&star).unwrap().inverse_unimodular().unwrap();
                assert_eq!(
                    inv.left_mul_vec(&m).unwrap(),
                    m_cinv_vector(a, b, c),
                    "T({a},{b},{c})"
                );
            }
        }
    }
}

#[test]
fn twisted_euler_values() {
    let (star, m) = canonical_base(&[2, 3, 6]).unwrap();
    let seq = twisted_euler_sequence(&cartan_matrix(&star).unwrap(), &m, 4).unwrap();
    assert_eq!(seq, [1, 0, 0, 0, -1].map(BigInt::from));
    for (a, b, c) in [(2, 2, 2), (3, 3, 4), (4, 5, 5), (5, 5, 5)] {
        let (star, m) = canonical_base(&[a + 1, b + 1, c + 1]).unwrap();
        let seq =
            twisted_euler_sequence(&cartan_matrix(&star).unwrap(), &m, a as usize - 1).unwrap();
        assert!(seq[0].is_one());
        for (r, value) in seq.iter().enumerate().skip(1) {
            assert_eq!(value, &-(BigInt::one() << (r - 1)), "({a},{b},{c}) r = {r}");
        }
    }
}

#[test]
fn trace_identity_index_reading() {
    // the last simple is e(v_{k-2}, v_{k-1}); the swapped reading already fails on A3
    let a3 = cartan_matrix(&Quiver::linear(3)).unwrap();
    let traces = CoxeterData::new(a3.clone())
        .unwrap()
        .coxeter
        .power_traces(4)
        .unwrap();
    for k in 3..=4u32 {
        let want = &traces[k as usize - 1];
        assert_eq!(
            &trace_identity_with(&a3, k, SimpleIndexOrder::LastSecond).unwrap(),
            want
        );
        assert_ne!(
            &trace_identity_with(&a3, k, SimpleIndexOrder::LastFirst).unwrap(),
            want
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut swapped_failures = 0;
    for n in 1..=5 {
        for _ in 0..10 {
            let c = cartan_matrix(&random_acyclic_quiver(&mut rng, n, 2)).unwrap();
            let traces = CoxeterData::new(c.clone())
                .unwrap()
                .coxeter
                .power_traces(4)
                .unwrap();
            for k in 3..=4u32 {
                assert_eq!(trace_identity_rhs(&c, k).unwrap(), traces[k as usize - 1]);
                if trace_identity_with(&c, k, SimpleIndexOrder::LastFirst).unwrap()
                    != traces[k as usize - 1]
                {
                    swapped_failures += 1;
                }
            }
        }
    }
    assert!(swapped_failures > 0);
}

#[test]
fn a2_trace_values() {
    let a2 = cartan_matrix(&Quiver::linear(2)).unwrap();
    let got: Vec<BigInt> = (1..=4)
        .map(|k| trace_identity_rhs(&a2, k).unwrap())
        .collect();
    assert_eq!(got, [-1, -1, 2, -1].map(BigInt::from));
    // φ has order 3 on A2
    assert_eq!(trace_identity_rhs(&a2, 6).unwrap(), BigInt::from(2));
}
