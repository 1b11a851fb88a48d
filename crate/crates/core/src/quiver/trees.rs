//! Trees: shape recognition, isomorphism-class enumeration, orientations.

use std::collections::BTreeMap;

use super::Quiver;
use crate::error::{Error, Result};

/// Shape of a tree by valency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeShape {
    /// Path on `n` vertices.
    LinearA(usize),
    /// Three branches of `a <= b <= c` vertices around one centre.
    StarT(usize, usize, usize),
    OtherTree,
}

/// Undirected adjacency lists (0-based) of a quiver whose underlying graph
/// is a tree.
fn tree_adjacency(q: &Quiver) -> Result<Vec<Vec<usize>>> {
    q.validate()?;
    let n = q.vertex_count();
    if n == 0 {
        return Err(Error::NotATree("no vertices"));
    }
    if q.arrows().len() != n - 1 {
        return Err(Error::NotATree("edge count is not n - 1"));
    }
    let mut adj = vec![Vec::new(); n];
    for &(s, t) in q.arrows() {
        let (s, t) = (s - 1, t - 1);
        if s == t {
            return Err(Error::NotATree("loop"));
        }
        if adj[s].contains(&t) {
            return Err(Error::NotATree("multiple edge"));
        }
        adj[s].push(t);
        adj[t].push(s);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().all(|&s| s) {
        Ok(adj)
    } else {
        Err(Error::NotATree("disconnected"))
    }
}

pub fn tree_shape(q: &Quiver) -> Result<TreeShape> {
    let adj = tree_adjacency(q)?;
    let n = adj.len();
    if adj.iter().all(|a| a.len() <= 2) {
        return Ok(TreeShape::LinearA(n));
    }
    let branching: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    if branching.len() != 1 || adj[branching[0]].len() != 3 {
        return Ok(TreeShape::OtherTree);
    }
    let centre = branching[0];
    let mut lens: Vec<usize> = adj[centre]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (centre, start, 1);
            while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    lens.sort_unstable();
    Ok(TreeShape::StarT(lens[0], lens[1], lens[2]))
}

/// AHU encoding of the tree rooted at `root`.
fn rooted_code(adj: &[Vec<usize>], root: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = adj[root]
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| rooted_code(adj, w, Some(root)))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

fn centres(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= leaves.len();
        let mut next = Vec::new();
        for &leaf in &leaves {
            deg[leaf] = 0;
            for &w in &adj[leaf] {
                if deg[w] > 0 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        leaves = next;
    }
    leaves
}

/// Isomorphism invariant of the underlying unoriented tree: the smallest AHU
/// code over the tree's centres.
pub fn canonical_form(q: &Quiver) -> Result<String> {
    let adj = tree_adjacency(q)?;
    Ok(canonical_code(&adj))
}

fn canonical_code(adj: &[Vec<usize>]) -> String {
    centres(adj)
        .into_iter()
        .map(|c| rooted_code(adj, c, None))
        .min()
        .expect("a tree has at least one centre")
}

/// Rebuild a tree from its AHU code, numbering vertices in preorder with the
/// root as vertex 1 and orienting each edge from parent to child.
fn quiver_from_code(code: &str) -> Quiver {
    let mut arrows = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut n = 0;
    for ch in code.chars() {
        match ch {
            '(' => {
                n += 1;
                if let Some(&p) = stack.last() {
                    arrows.push((p, n));
                }
                stack.push(n);
            }
            ')' => {
                stack.pop();
            }
            _ => unreachable!("AHU codes only contain parentheses"),
        }
    }
    Quiver { n, arrows }
}

/// One oriented representative per isomorphism class of unlabeled trees on
/// `n` vertices, sorted by canonical code.
///
/// Classes on `k + 1` vertices are grown from those on `k` by attaching a
/// leaf at every vertex and deduplicating on the canonical code.
pub fn enumerate_trees(n: usize) -> Vec<Quiver> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeMap<String, Vec<Vec<usize>>> = BTreeMap::new();
    level.insert("()".to_string(), vec![Vec::new()]);
    for _ in 1..n {
        let mut next = BTreeMap::new();
        for adj in level.values() {
            for v in 0..adj.len() {
                let mut grown = adj.clone();
                let leaf = grown.len();
                grown.push(vec![v]);
                grown[v].push(leaf);
                next.entry(canonical_code(&grown)).or_insert(grown);
            }
        }
        level = next;
    }
    level.keys().map(|code| quiver_from_code(code)).collect()
}

/// All `2^e` orientations of a tree's edges, in the order of the bitmask
/// selecting which arrows are reversed.
pub fn all_orientations(q: &Quiver) -> Result<Vec<Quiver>> {
    tree_adjacency(q)?;
    let e = q.arrows().len();
    assert!(
        e < usize::BITS as usize,
        "too many edges to enumerate orientations"
    );
    Ok((0..1usize << e)
        .map(|mask| Quiver {
            n: q.vertex_count(),
            arrows: q
                .arrows()
                .iter()
                .enumerate()
                .map(|(i, &(s, t))| if mask >> i & 1 == 1 { (t, s) } else { (s, t) })
                .collect(),
        })
        .collect())
}
