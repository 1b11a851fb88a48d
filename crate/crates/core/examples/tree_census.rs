//! Census of trees up to a given size: how many isomorphism classes, how
//! many are paths or three-branch stars, and the largest second coefficient
//! `λ_{N-2}` among the remaining ones.
//!
//! Run with `cargo run --release --example tree_census -- 12`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use coxpoly::coxeter::coxeter_polynomial;
use coxpoly::quiver::{cartan_matrix, enumerate_trees, tree_shape, TreeShape};

fn main() -> coxpoly::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    println!(
        "{:>3} {:>6} {:>5} {:>6} {:>6}  max lambda_(N-2) over other trees",
        "N", "trees", "paths", "stars", "other"
    );
    for n in 1..=max {
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        let mut worst: Option<BigInt> = None;
        let trees = enumerate_trees(n);
        for q in &trees {
            let kind = match tree_shape(q)? {
                TreeShape::LinearA(_) => "path",
                TreeShape::StarT(..) => "star",
                TreeShape::OtherTree => {
                    let lam = coxeter_polynomial(&cartan_matrix(q)?)?.coeff(n - 2);
                    worst = Some(worst.map_or(lam.clone(), |w| w.max(lam)));
                    "other"
                }
            };
            *counts.entry(kind).or_default() += 1;
        }
        let get = |k: &str| counts.get(k).copied().unwrap_or(0);
        let worst = worst.map_or("-".to_string(), |w| w.to_string());
        println!(
            "{n:>3} {:>6} {:>5} {:>6} {:>6}  {worst}",
            trees.len(),
            get("path"),
            get("star"),
            get("other")
        );
    }
    Ok(())
}
