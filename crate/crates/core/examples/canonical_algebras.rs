//! Canonical algebras C(p1, ..., pt): weight type, trace and Coxeter
//! polynomial, computed once from the block Cartan matrix and once through
//! the one-point extension recursion.
//!
//! Run with `cargo run --example canonical_algebras`.

use coxpoly::classify::weight_type;
use coxpoly::coxeter::{coxeter_polynomial, ope_coefficients};
use coxpoly::quiver::{canonical_base, canonical_cartan, cartan_matrix};

fn main() -> coxpoly::Result<()> {
    let families: [&[u64]; 9] = [
        &[2, 2],
        &[2, 2, 5],
        &[2, 3, 5],
        &[3, 3, 3],
        &[2, 4, 4],
        &[2, 3, 6],
        &[2, 2, 2, 2],
        &[3, 4, 5],
        &[2, 2, 2, 3],
    ];
    println!(
        "{:<14} {:<9} {:>6}  {:>5}  polynomial",
        "weights", "type", "delta", "size"
    );
    for w in families {
        let kind = weight_type(w)?;
        let cartan = canonical_cartan(w)?;
        let chi = coxeter_polynomial(&cartan)?;
        let (star, m) = canonical_base(w)?;
        assert_eq!(ope_coefficients(&cartan_matrix(&star)?, &m)?, chi);
        println!(
            "{:<14} {:<9} {:>6}  {:>5}  {}",
            format!("{w:?}"),
            kind.kind.to_string(),
            kind.delta.to_string(),
            cartan.rows(),
            chi
        );
    }
    Ok(())
}
