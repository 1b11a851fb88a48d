//! Classification by trace and leading Coxeter coefficients.
//!
//! Trees and three-branch canonical algebras both have trace -1; the
//! coefficient conditions i, ii and iii are meant to tell them apart. E7 is
//! included on purpose: it is a tree, yet its coefficients satisfy
//! condition i.
//!
//! Run with `cargo run --example classify_trace_minus_one`.

use coxpoly::classify::{classify_algebra, satisfied_conditions};
use coxpoly::quiver::{build_star, AlgebraSpec, Quiver};

fn main() -> coxpoly::Result<()> {
    let paths: Vec<(&str, AlgebraSpec)> = vec![
        ("A5", AlgebraSpec::PathAlgebra(Quiver::linear(5))),
        ("D6", AlgebraSpec::PathAlgebra(build_star(&[1, 1, 3])?)),
        ("E6", AlgebraSpec::PathAlgebra(build_star(&[1, 2, 2])?)),
        ("E7", AlgebraSpec::PathAlgebra(build_star(&[1, 2, 3])?)),
        ("E8", AlgebraSpec::PathAlgebra(build_star(&[1, 2, 4])?)),
        (
            "Kronecker",
            AlgebraSpec::PathAlgebra(Quiver::multi_arrow(2)),
        ),
        (
            "3-Kronecker",
            AlgebraSpec::PathAlgebra(Quiver::multi_arrow(3)),
        ),
    ];
    for (name, spec) in &paths {
        let c = classify_algebra(spec, None)?;
        println!("{name:<12} {:<32} {c}", c.chi.to_wire());
    }
    println!();
    for w in [
        [3u64, 3, 3],
        [2, 4, 4],
        [2, 3, 6],
        [2, 3, 7],
        [3, 3, 4],
        [4, 4, 4],
    ] {
        let c = classify_algebra(&AlgebraSpec::canonical(&w)?, Some(&w))?;
        let all = satisfied_conditions(&c.chi)?;
        println!(
            "C{w:?}  {:<40} {c}  (all satisfied: {all:?})",
            c.chi.to_wire()
        );
    }
    let c = classify_algebra(&AlgebraSpec::canonical(&[2, 2, 2, 2])?, Some(&[2, 2, 2, 2]))?;
    println!("C[2, 2, 2, 2]  {c}");
    Ok(())
}
