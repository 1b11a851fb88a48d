//! Quivers, their path algebras, and the Cartan matrices built from them.
//!
//! Vertices are 1-based throughout the public API. The Cartan matrix entry
//! `(i, j)` counts directed paths from `j` to `i`, so column `j` is the
//! dimension vector of the indecomposable projective at `j`.

mod trees;

pub use trees::{all_orientations, canonical_form, enumerate_trees, tree_shape, TreeShape};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Finite directed multigraph on vertices `1..=n`. Parallel arrows are
/// encoded by repeating the `(source, target)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        let q = Quiver { n, arrows };
        q.validate()?;
        Ok(q)
    }

    /// Linear quiver `1 -> 2 -> ... -> n`.
    pub fn linear(n: usize) -> Self {
        Quiver {
            n,
            arrows: (1..n).map(|i| (i, i + 1)).collect(),
        }
    }

    /// Two vertices joined by `k` parallel arrows `1 -> 2`.
    pub fn multi_arrow(k: usize) -> Self {
        Quiver {
            n: 2,
            arrows: vec![(1, 2); k],
        }
    }

    /// Parse the `{"n": .., "arrows": [[s, t], ...]}` JSON form. Vertex
    /// ranges are not checked here; see [`Quiver::validate`].
    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("quiver serialization cannot fail")
    }

    pub fn validate(&self) -> Result<()> {
        for &(s, t) in &self.arrows {
            if s == 0 || t == 0 || s > self.n || t > self.n {
                return Err(Error::VertexOutOfRange {
                    source_vertex: s,
                    target: t,
                    n: self.n,
                });
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Vertices (0-based) in an order where every arrow points forward, or
    /// `CyclicQuiver`.
    fn topological_order(&self) -> Result<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for &(s, t) in &self.arrows {
            out[s - 1].push(t - 1);
            indeg[t - 1] += 1;
        }
        let mut stack: Vec<usize> = (0..self.n).rev().filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in out[v].iter().rev() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if order.len() == self.n {
            Ok(order)
        } else {
            Err(Error::CyclicQuiver)
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.validate().is_ok() && self.topological_order().is_ok()
    }
}

/// Cartan matrix of the path algebra: entry `(i, j)` is the number of paths
/// from vertex `j` to vertex `i`, the trivial path included.
pub fn cartan_matrix(q: &Quiver) -> Result<IntMatrix> {
    q.validate()?;
    let order = q.topological_order()?;
    let n = q.n;
    let mut pos = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(s, t) in &q.arrows {
        out[s - 1].push(t - 1);
    }
    let mut c = IntMatrix::zeros(n, n);
    for j in 0..n {
        let mut count = vec![BigInt::zero(); n];
        count[j] = BigInt::one();
        for &v in &order[pos[j]..] {
            if count[v].is_zero() {
                continue;
            }
            let cv = count[v].clone();
            for &w in &out[v] {
                count[w] += &cv;
            }
        }
        for (i, x) in count.into_iter().enumerate() {
            c[(i, j)] = x;
        }
    }
    Ok(c)
}

/// Star quiver with one linear branch per entry of `branch_lengths`, every
/// branch oriented toward the centre.
///
/// Branch vertices are numbered branch by branch, each branch starting at
/// the neighbour of the centre and ending at its tip; the centre takes the
/// last index. With this labelling the Coxeter matrix is exactly the block
/// matrix of [`crate::closed_forms::star_coxeter_blocks`].
pub fn build_star(branch_lengths: &[usize]) -> Result<Quiver> {
    if branch_lengths.is_empty() {
        return Err(Error::EmptyInput("star needs at least one branch"));
    }
    if branch_lengths.contains(&0) {
        return Err(Error::EmptyInput("star branches need at least one vertex"));
    }
    let total: usize = branch_lengths.iter().sum();
    let centre = total + 1;
    let mut arrows = Vec::with_capacity(total);
    let mut next = 1;
    for &len in branch_lengths {
        for k in 0..len {
            let v = next + k;
            let w = if k == 0 { centre } else { v - 1 };
            arrows.push((v, w));
        }
        next += len;
    }
    Ok(Quiver { n: centre, arrows })
}

/// Cartan matrix of the one-point extension `B[M]`, extension vertex first:
/// `[[1, 0], [m^t, C_B]]`.
pub fn one_point_ext_cartan(base: &IntMatrix, m: &[BigInt]) -> Result<IntMatrix> {
    if !base.is_square() {
        return Err(Error::NonSquare {
            rows: base.rows(),
            cols: base.cols(),
        });
    }
    let n = base.rows();
    if m.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.len(),
        });
    }
    Ok(IntMatrix::from_fn(n + 1, n + 1, |i, j| match (i, j) {
        (0, 0) => BigInt::one(),
        (0, _) => BigInt::zero(),
        (_, 0) => m[i - 1].clone(),
        _ => base[(i - 1, j - 1)].clone(),
    }))
}

fn check_weights(weights: &[u64]) -> Result<()> {
    if weights.len() < 2 || weights.iter().any(|&p| p < 2) {
        return Err(Error::InvalidWeights {
            weights: weights.to_vec(),
        });
    }
    Ok(())
}

/// Base quiver and module dimension vector `(1, ..., 1, 2)` of the canonical
/// algebra with the given weights.
pub fn canonical_base(weights: &[u64]) -> Result<(Quiver, Vec<BigInt>)> {
    check_weights(weights)?;
    let lengths: Vec<usize> = weights.iter().map(|&p| (p - 1) as usize).collect();
    let star = build_star(&lengths)?;
    let mut m = vec![BigInt::one(); star.n];
    m[star.n - 1] = BigInt::from(2);
    Ok((star, m))
}

/// Cartan matrix of the canonical algebra `C(p_1, ..., p_t)`.
pub fn canonical_cartan(weights: &[u64]) -> Result<IntMatrix> {
    let (star, m) = canonical_base(weights)?;
    one_point_ext_cartan(&cartan_matrix(&star)?, &m)
}

/// All nondecreasing weight tuples `(p_1, ..., p_t)`, `p_i >= 2`, whose
/// canonical algebra has `size = Σ (p_i - 1) + 2` vertices.
pub fn canonical_weights(t: usize, size: usize) -> Vec<Vec<u64>> {
    fn rec(left: usize, rest: u64, min: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // each remaining weight contributes at least min - 1 vertices
        let mut p = min;
        while (p - 1) * left as u64 <= rest {
            cur.push(p);
            rec(left - 1, rest - (p - 1), p, cur, out);
            cur.pop();
            p += 1;
        }
    }
    let mut out = Vec::new();
    if t >= 2 && size >= t + 2 {
        rec(t, (size - 2) as u64, 2, &mut Vec::new(), &mut out);
    }
    out
}

/// Random acyclic quiver on `n` vertices: each pair of vertices gets up to
/// `max_parallel` arrows (usually none), oriented along a random vertex
/// order.
pub fn random_acyclic_quiver<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_parallel: usize,
) -> Quiver {
    let mut order: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.35) {
                for _ in 0..rng.gen_range(1..=max_parallel.max(1)) {
                    arrows.push((order[i], order[j]));
                }
            }
        }
    }
    Quiver { n, arrows }
}

/// Recursive description of an algebra: a path algebra, or a one-point
/// extension of another description by a module dimension vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraSpec {
    PathAlgebra(Quiver),
    OnePointExt {
        base: Box<AlgebraSpec>,
        m: Vec<BigInt>,
    },
}

impl AlgebraSpec {
    pub fn canonical(weights: &[u64]) -> Result<Self> {
        let (star, m) = canonical_base(weights)?;
        Ok(AlgebraSpec::OnePointExt {
            base: Box::new(AlgebraSpec::PathAlgebra(star)),
            m,
        })
    }

    /// Number of vertices (indecomposable projectives).
    pub fn size(&self) -> usize {
        match self {
            AlgebraSpec::PathAlgebra(q) => q.vertex_count(),
            AlgebraSpec::OnePointExt { base, .. } => base.size() + 1,
        }
    }

    pub fn cartan(&self) -> Result<IntMatrix> {
        match self {
            AlgebraSpec::PathAlgebra(q) => cartan_matrix(q),
            AlgebraSpec::OnePointExt { base, m } => {
                if let Some((index, value)) = m.iter().enumerate().find(|(_, x)| x.is_negative()) {
                    return Err(Error::NegativeDimension {
                        index,
                        value: value.to_string(),
                    });
                }
                one_point_ext_cartan(&base.cartan()?, m)
            }
        }
    }
}
